#include "polartrack/eval.hpp"

#include <algorithm>

#include "polartrack/classify.hpp"

namespace polartrack {

std::set<UserId> GoldenSet::all() const {
    std::set<UserId> out;
    for (const auto& [c, members] : members) out.insert(members.begin(), members.end());
    return out;
}

std::size_t GoldenSet::size() const {
    std::size_t n = 0;
    for (const auto& [c, members] : members) n += members.size();
    return n;
}

double f_measure(double precision, double recall) {
    const double sum = precision + recall;
    return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

GoldenSet build_golden(const Corpus& corpus, const ClassConfig& config) {
    GoldenSet golden;
    for (const auto& c : config.classes) golden.members[c];

    if (config.golden_rule == ClassConfig::GoldenRule::dominance) {
        HashtagPartition golden_tags;
        for (const auto& c : config.classes) {
            const auto& hs = config.golden_hashtags.at(c);
            golden_tags.assignments[c] = std::set<Hashtag>(hs.begin(), hs.end());
        }
        const UserPartition classified =
            users_class(corpus, golden_tags, UserPartition::empty(config), config.alpha);
        golden.members = classified.assignments;
        return golden;
    }

    std::map<Hashtag, ClassId> owner;
    for (const auto& c : config.classes)
        for (const auto& h : config.golden_hashtags.at(c)) owner.emplace(h, c);

    for (const auto& u : corpus.users()) {
        std::set<ClassId> touched;
        for (TweetIndex t : corpus.tweets_of_user(u))
            for (const auto& h : corpus.record(t).hashtags) {
                auto it = owner.find(h);
                if (it != owner.end()) touched.insert(it->second);
            }
        if (touched.size() == 1) golden.members[*touched.begin()].insert(u);
    }
    return golden;
}

EvalReport evaluate(const UserPartition& users, const GoldenSet& golden,
                    std::size_t total_users) {
    if (total_users == 0) throw std::invalid_argument("evaluate: total_users must be positive");

    const std::set<UserId> z = golden.all();

    std::set<ClassId> class_ids;
    for (const auto& [c, s] : golden.members) class_ids.insert(c);
    for (const auto& [c, s] : users.assignments) class_ids.insert(c);

    static const std::set<UserId> kEmpty;
    auto members_of = [](const std::map<ClassId, std::set<UserId>>& sets,
                         const ClassId& c) -> const std::set<UserId>& {
        auto it = sets.find(c);
        return it == sets.end() ? kEmpty : it->second;
    };

    EvalReport report;
    double f_sum = 0.0;
    for (const auto& c : class_ids) {
        const auto& u_c = members_of(users.assignments, c);
        const auto& z_c = members_of(golden.members, c);

        std::size_t in_z = 0, in_z_c = 0;
        for (const auto& u : u_c) {
            if (z.count(u)) ++in_z;
            if (z_c.count(u)) ++in_z_c;
        }
        ClassMetrics m;
        m.precision = in_z > 0 ? static_cast<double>(in_z_c) / static_cast<double>(in_z) : 0.0;
        m.recall = !z_c.empty() ? static_cast<double>(in_z_c) / static_cast<double>(z_c.size()) : 0.0;
        m.f_measure = f_measure(m.precision, m.recall);
        f_sum += m.f_measure;
        report.per_class[c] = m;
    }
    report.macro_f = class_ids.empty() ? 0.0 : f_sum / static_cast<double>(class_ids.size());

    const std::set<UserId> assigned = users.all_assigned();
    std::size_t assigned_in_z = 0;
    for (const auto& u : assigned)
        if (z.count(u)) ++assigned_in_z;
    report.gamma = !z.empty() ? static_cast<double>(assigned_in_z) / static_cast<double>(z.size()) : 0.0;
    report.big_gamma = static_cast<double>(assigned.size()) / static_cast<double>(total_users);
    return report;
}

}  // namespace polartrack
