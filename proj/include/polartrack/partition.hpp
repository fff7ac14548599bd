#pragma once

#include <map>
#include <optional>
#include <set>

#include "polartrack/corpus.hpp"

namespace polartrack {

// Disjoint per-class user sets. Users absent from every set are unassigned.
struct UserPartition {
    std::map<ClassId, std::set<UserId>> assignments;

    std::optional<ClassId> class_of(const UserId& u) const;
    std::set<UserId> all_assigned() const;
    std::size_t assigned_count() const;
    bool disjoint() const;

    // Empty set for every class id; the starting point of the iteration.
    static UserPartition empty(const ClassConfig& config);

    bool operator==(const UserPartition&) const = default;
};

// Disjoint per-class hashtag sets. Each class's set always contains that
// class's seed hashtags.
struct HashtagPartition {
    std::map<ClassId, std::set<Hashtag>> assignments;

    std::optional<ClassId> class_of(const Hashtag& h) const;
    std::set<Hashtag> all_assigned() const;
    bool disjoint() const;

    // Seed hashtags only, one set per class.
    static HashtagPartition seeds(const ClassConfig& config);

    bool operator==(const HashtagPartition&) const = default;
};

}  // namespace polartrack
