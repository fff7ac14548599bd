#pragma once

#include "polartrack/corpus.hpp"
#include "polartrack/partition.hpp"

namespace polartrack {

// The reference users: for each class, the users whose golden-hashtag usage
// ties them unambiguously to that class.
struct GoldenSet {
    std::map<ClassId, std::set<UserId>> members;

    std::set<UserId> all() const;
    std::size_t size() const;

    bool operator==(const GoldenSet&) const = default;
};

struct ClassMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;

    bool operator==(const ClassMetrics&) const = default;
};

// Per-class precision/recall/F against the golden set, their macro average,
// and the two coverage ratios: gamma over the golden users, big_gamma over
// the whole user set.
struct EvalReport {
    std::map<ClassId, ClassMetrics> per_class;
    double macro_f = 0.0;
    double gamma = 0.0;
    double big_gamma = 0.0;
};

// Harmonic mean of precision and recall; 0 when both are 0.
double f_measure(double precision, double recall);

// Builds the golden set from a corpus that still contains the golden
// hashtags. Under the default exclusive rule a user belongs to Z_c iff they
// have at least one tweet mentioning a golden hashtag of class c and none
// mentioning a golden hashtag of any other class; users touching two or
// more classes' golden hashtags are excluded entirely. The dominance rule
// instead runs the user classification step with the golden sets as the
// class hashtags.
GoldenSet build_golden(const Corpus& corpus, const ClassConfig& config);

// Scores a user partition against the golden set. Precision for class c is
// |U_c ∩ Z_c| / |U_c ∩ Z| and recall is |U_c ∩ Z_c| / |Z_c|, both 0 when
// their denominator is 0. gamma = |U ∩ Z| / |Z| with U the union of the
// assigned sets; big_gamma = |U| / total_users. total_users must be the
// full user count of the evaluated corpus, zero-hashtag users included.
EvalReport evaluate(const UserPartition& users, const GoldenSet& golden,
                    std::size_t total_users);

}  // namespace polartrack
