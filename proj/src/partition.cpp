#include "polartrack/partition.hpp"

namespace polartrack {

namespace {

template <typename T>
std::optional<ClassId> find_class(const std::map<ClassId, std::set<T>>& sets, const T& member) {
    for (const auto& [c, s] : sets)
        if (s.count(member)) return c;
    return std::nullopt;
}

template <typename T>
std::set<T> union_of(const std::map<ClassId, std::set<T>>& sets) {
    std::set<T> out;
    for (const auto& [c, s] : sets) out.insert(s.begin(), s.end());
    return out;
}

template <typename T>
bool sets_disjoint(const std::map<ClassId, std::set<T>>& sets) {
    std::size_t total = 0;
    for (const auto& [c, s] : sets) total += s.size();
    return union_of(sets).size() == total;
}

}  // namespace

std::optional<ClassId> UserPartition::class_of(const UserId& u) const {
    return find_class(assignments, u);
}

std::set<UserId> UserPartition::all_assigned() const { return union_of(assignments); }

std::size_t UserPartition::assigned_count() const {
    std::size_t n = 0;
    for (const auto& [c, s] : assignments) n += s.size();
    return n;
}

bool UserPartition::disjoint() const { return sets_disjoint(assignments); }

UserPartition UserPartition::empty(const ClassConfig& config) {
    UserPartition p;
    for (const auto& c : config.classes) p.assignments[c];
    return p;
}

std::optional<ClassId> HashtagPartition::class_of(const Hashtag& h) const {
    return find_class(assignments, h);
}

std::set<Hashtag> HashtagPartition::all_assigned() const { return union_of(assignments); }

bool HashtagPartition::disjoint() const { return sets_disjoint(assignments); }

HashtagPartition HashtagPartition::seeds(const ClassConfig& config) {
    HashtagPartition p;
    for (const auto& c : config.classes) {
        auto& set = p.assignments[c];
        const auto it = config.seed_hashtags.find(c);
        if (it != config.seed_hashtags.end()) set.insert(it->second.begin(), it->second.end());
    }
    return p;
}

}  // namespace polartrack
