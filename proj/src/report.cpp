#include "polartrack/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace polartrack {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fixed3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

std::string full_precision(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ordered_json eval_json(const EvalReport& report, const ClassConfig& config) {
    ordered_json per_class = ordered_json::object();
    for (const auto& c : config.classes) {
        const auto it = report.per_class.find(c);
        const ClassMetrics m = it == report.per_class.end() ? ClassMetrics{} : it->second;
        per_class[c] = {{"precision", m.precision}, {"recall", m.recall}, {"f", m.f_measure}};
    }
    return ordered_json{{"per_class", per_class},
                        {"macro_f", report.macro_f},
                        {"gamma", report.gamma},
                        {"big_gamma", report.big_gamma}};
}

std::set<Hashtag> set_of(const HashtagPartition& p, const ClassId& c) {
    const auto it = p.assignments.find(c);
    return it == p.assignments.end() ? std::set<Hashtag>{} : it->second;
}

std::set<Hashtag> diff(const std::set<Hashtag>& a, const std::set<Hashtag>& b) {
    std::set<Hashtag> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.begin()));
    return out;
}

}  // namespace

std::string render_trace_jsonl(const std::vector<IterationTrace>& traces,
                               const ClassConfig& config) {
    std::ostringstream out;
    HashtagPartition previous = HashtagPartition::seeds(config);
    for (const auto& trace : traces) {
        ordered_json classes = ordered_json::object();
        for (const auto& c : config.classes) {
            const std::set<Hashtag> now = set_of(trace.hashtags, c);
            const std::set<Hashtag> before = set_of(previous, c);
            const auto users_it = trace.users.assignments.find(c);
            const std::size_t user_count =
                users_it == trace.users.assignments.end() ? 0 : users_it->second.size();
            classes[c] = {{"users", user_count},
                          {"hashtags", now},
                          {"new_hashtags", diff(now, before)},
                          {"dropped_hashtags", diff(before, now)}};
        }
        ordered_json j{{"iteration", trace.iteration},
                       {"converged", trace.converged},
                       {"classes", classes}};
        if (trace.eval) j["eval"] = eval_json(*trace.eval, config);
        out << j.dump() << '\n';
        previous = trace.hashtags;
    }
    return out.str();
}

std::string render_eval_text(const EvalReport& report, const ClassConfig& config) {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof(line), "  %-16s %8s %8s %8s\n", "class", "P", "R", "F");
    out << line;
    double p_sum = 0, r_sum = 0, f_sum = 0;
    for (const auto& c : config.classes) {
        const auto it = report.per_class.find(c);
        const ClassMetrics m = it == report.per_class.end() ? ClassMetrics{} : it->second;
        p_sum += m.precision;
        r_sum += m.recall;
        f_sum += m.f_measure;
        std::snprintf(line, sizeof(line), "  %-16s %8s %8s %8s\n", c.c_str(),
                      fixed3(m.precision).c_str(), fixed3(m.recall).c_str(),
                      fixed3(m.f_measure).c_str());
        out << line;
    }
    const double n = config.classes.empty() ? 1.0 : static_cast<double>(config.classes.size());
    std::snprintf(line, sizeof(line), "  %-16s %8s %8s %8s\n", "avg",
                  fixed3(p_sum / n).c_str(), fixed3(r_sum / n).c_str(), fixed3(f_sum / n).c_str());
    out << line;
    out << "  gamma=" << fixed3(report.gamma) << "  Gamma=" << fixed3(report.big_gamma) << '\n';
    return out.str();
}

std::string render_eval_json(const EvalReport& report, const ClassConfig& config) {
    return eval_json(report, config).dump();
}

namespace {

struct IterationRow {
    int iteration = 0;
    bool converged = false;
    std::map<ClassId, std::size_t> user_counts;
    std::map<ClassId, std::size_t> hashtag_counts;
    std::map<ClassId, std::ptrdiff_t> hashtag_deltas;
    std::optional<EvalReport> eval;
};

std::string render_rows(const std::vector<IterationRow>& rows, const ClassConfig& config,
                        bool temporal) {
    std::ostringstream out;
    char line[160];
    for (const auto& row : rows) {
        if (temporal)
            out << "day " << row.iteration - 1 << '\n';
        else
            out << "iteration " << row.iteration << '\n';
        std::snprintf(line, sizeof(line), "  %-16s %8s %10s %6s\n", "class", "users",
                      "hashtags", "new");
        out << line;
        for (const auto& c : config.classes) {
            auto lookup = [&](const std::map<ClassId, std::size_t>& m) {
                const auto it = m.find(c);
                return it == m.end() ? std::size_t{0} : it->second;
            };
            const auto delta_it = row.hashtag_deltas.find(c);
            std::snprintf(line, sizeof(line), "  %-16s %8zu %10zu %+6zd\n", c.c_str(),
                          lookup(row.user_counts), lookup(row.hashtag_counts),
                          delta_it == row.hashtag_deltas.end() ? std::ptrdiff_t{0}
                                                               : delta_it->second);
            out << line;
        }
        if (row.eval) out << render_eval_text(*row.eval, config);
        out << '\n';
    }
    if (temporal) {
        out << "days processed: " << rows.size() << '\n';
    } else {
        const bool converged = !rows.empty() && rows.back().converged;
        if (converged)
            out << "converged at iteration " << rows.back().iteration << " (max "
                << config.max_iterations << ")\n";
        else
            out << "not converged within " << config.max_iterations << " iterations\n";
    }
    return out.str();
}

}  // namespace

std::string render_run_text(const std::vector<IterationTrace>& traces,
                            const ClassConfig& config, bool temporal) {
    std::vector<IterationRow> rows;
    HashtagPartition previous = HashtagPartition::seeds(config);
    for (const auto& trace : traces) {
        IterationRow row;
        row.iteration = trace.iteration;
        row.converged = trace.converged;
        row.eval = trace.eval;
        for (const auto& c : config.classes) {
            const std::set<Hashtag> now = set_of(trace.hashtags, c);
            const auto users_it = trace.users.assignments.find(c);
            row.user_counts[c] =
                users_it == trace.users.assignments.end() ? 0 : users_it->second.size();
            row.hashtag_counts[c] = now.size();
            row.hashtag_deltas[c] = static_cast<std::ptrdiff_t>(now.size()) -
                                    static_cast<std::ptrdiff_t>(set_of(previous, c).size());
        }
        previous = trace.hashtags;
        rows.push_back(std::move(row));
    }
    return render_rows(rows, config, temporal);
}

std::string render_run_text_from_jsonl(const std::string& trace_jsonl,
                                       const ClassConfig& config, bool temporal) {
    std::vector<IterationRow> rows;
    std::istringstream in(trace_jsonl);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto j = nlohmann::json::parse(line);
        IterationRow row;
        row.iteration = j.at("iteration").get<int>();
        row.converged = j.at("converged").get<bool>();
        for (const auto& [c, entry] : j.at("classes").items()) {
            row.user_counts[c] = entry.at("users").get<std::size_t>();
            row.hashtag_counts[c] = entry.at("hashtags").size();
            row.hashtag_deltas[c] =
                static_cast<std::ptrdiff_t>(entry.at("new_hashtags").size()) -
                static_cast<std::ptrdiff_t>(entry.at("dropped_hashtags").size());
        }
        if (j.contains("eval")) {
            EvalReport report;
            const auto& e = j.at("eval");
            for (const auto& [c, m] : e.at("per_class").items())
                report.per_class[c] = ClassMetrics{m.at("precision").get<double>(),
                                                   m.at("recall").get<double>(),
                                                   m.at("f").get<double>()};
            report.macro_f = e.at("macro_f").get<double>();
            report.gamma = e.at("gamma").get<double>();
            report.big_gamma = e.at("big_gamma").get<double>();
            row.eval = std::move(report);
        }
        rows.push_back(std::move(row));
    }
    return render_rows(rows, config, temporal);
}

std::string render_scores_tsv(const std::vector<std::vector<HashtagScore>>& per_iteration,
                              const ClassConfig& config) {
    std::ostringstream out;
    out << "iteration\tclass\thashtag\tscore\n";
    for (std::size_t i = 0; i < per_iteration.size(); ++i) {
        for (const auto& c : config.classes) {
            std::vector<std::pair<double, Hashtag>> rows;
            for (const auto& hs : per_iteration[i]) {
                const auto it = hs.per_class.find(c);
                if (it != hs.per_class.end()) rows.emplace_back(it->second, hs.hashtag);
            }
            std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first > b.first;
                return a.second < b.second;
            });
            for (const auto& [score, tag] : rows)
                out << i + 1 << '\t' << c << '\t' << tag << '\t' << full_precision(score) << '\n';
        }
    }
    return out.str();
}

std::string render_partition_json(const std::map<ClassId, std::set<std::string>>& partition) {
    ordered_json j = ordered_json::object();
    for (const auto& [c, members] : partition) j[c] = members;
    return j.dump(2);
}

std::map<ClassId, std::set<std::string>> parse_partition_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    std::map<ClassId, std::set<std::string>> out;
    for (const auto& [c, members] : j.items())
        out[c] = members.get<std::set<std::string>>();
    return out;
}

}  // namespace polartrack
