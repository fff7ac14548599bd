#pragma once

#include <optional>
#include <vector>

#include "polartrack/classify.hpp"
#include "polartrack/eval.hpp"
#include "polartrack/topics.hpp"

namespace polartrack {

// State after one iteration (batch mode) or one day (temporal mode).
struct IterationTrace {
    int iteration = 0;  // 1-based; in temporal mode iteration i covers day i-1
    HashtagPartition hashtags;
    UserPartition users;
    std::optional<EvalReport> eval;
    bool converged = false;  // set on the iteration where the fixed point was detected
};

struct RunOptions {
    // When set, every iteration's user partition is evaluated against it.
    const GoldenSet* golden = nullptr;
    // Full user count of the corpus the golden set was built from; 0 means
    // "use the corpus passed to the run".
    std::size_t total_users = 0;
    int threads = 1;
    // When set, receives one score table per iteration (every candidate
    // hashtag examined by the hashtag classification step).
    std::vector<std::vector<HashtagScore>>* scores_out = nullptr;
};

// Batch fixed-point loop: starting from the seed hashtags and no classified
// users, alternates the user classification and hashtag classification steps
// until both the hashtag sets and the user sets repeat exactly, or
// max_iterations is reached. Returns one trace per completed iteration; the
// corpus should already be stripped of golden hashtags.
std::vector<IterationTrace> run_ptr(const Corpus& corpus, const ClassConfig& config,
                                    const RunOptions& options = {});

// Temporal variant: one iteration per day in ascending order, where each
// day's counts use only that day's tweets. The user partition carries over
// as the backup of the next day, and each day's output hashtags (seeds
// included) are the next day's input, so classified users accumulate.
std::vector<IterationTrace> run_tptr(const Corpus& corpus, const ClassConfig& config,
                                     const RunOptions& options = {});

}  // namespace polartrack
