#pragma once

#include <string>
#include <vector>

#include "polartrack/driver.hpp"

namespace polartrack {

// Machine output: one JSON object per iteration with per-class user counts,
// the full and newly discovered hashtag lists, and full-precision metrics
// when present. Stable field order, no rounding.
std::string render_trace_jsonl(const std::vector<IterationTrace>& traces,
                               const ClassConfig& config);

// Human-readable per-iteration report: per-class sizes and newly discovered
// hashtags, a metrics table per iteration when available, and a final
// convergence line. Values rounded to 3 decimals for display.
std::string render_run_text(const std::vector<IterationTrace>& traces,
                            const ClassConfig& config, bool temporal);

// Same report, reconstructed from previously written machine output. For a
// trace produced by the same run this yields byte-identical text.
std::string render_run_text_from_jsonl(const std::string& trace_jsonl,
                                       const ClassConfig& config, bool temporal);

// One metrics table: per-class P/R/F rows, macro-average row, coverage footer.
std::string render_eval_text(const EvalReport& report, const ClassConfig& config);

// Full-precision JSON object for one report.
std::string render_eval_json(const EvalReport& report, const ClassConfig& config);

// Tab-separated score dump: iteration, class, hashtag, score; per class in
// descending score order.
std::string render_scores_tsv(const std::vector<std::vector<HashtagScore>>& per_iteration,
                              const ClassConfig& config);

// {"class": ["member", ...], ...} with sorted members.
std::string render_partition_json(const std::map<ClassId, std::set<std::string>>& partition);
std::map<ClassId, std::set<std::string>> parse_partition_json(const std::string& text);

}  // namespace polartrack
