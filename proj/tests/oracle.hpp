#pragma once

// Independent re-derivations of the two classification steps and the
// hashtag score, written literally from their definitions with naive loops
// over a raw tweet list. No inverted indexes, no shared code with the
// library: these are the reference the optimized implementations are checked
// against. Classes are combined in ascending id order everywhere, matching
// the library, so floating-point expressions agree bit for bit.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

struct Tweet {
    std::string user;
    std::set<std::string> tags;
};

using Sets = std::map<std::string, std::set<std::string>>;

// User classification: count, per user and class, the tweets whose tags
// intersect that class's hashtags and no other class's; assign the class
// whose count strictly exceeds alpha times every other; otherwise fall back
// to the previous assignment.
inline Sets users_class(const std::vector<Tweet>& tweets,
                        const std::vector<std::string>& users,
                        const std::vector<std::string>& classes,
                        const Sets& hashtag_sets,
                        const Sets& previous,
                        double alpha) {
    auto intersects = [](const std::set<std::string>& a, const std::set<std::string>& b) {
        return std::any_of(a.begin(), a.end(),
                           [&](const std::string& x) { return b.count(x) > 0; });
    };

    Sets result;
    for (const auto& c : classes) result[c];

    for (const auto& u : users) {
        std::map<std::string, std::size_t> count;
        for (const auto& c : classes) count[c] = 0;
        for (const auto& t : tweets) {
            if (t.user != u) continue;
            for (const auto& c : classes) {
                if (!intersects(t.tags, hashtag_sets.at(c))) continue;
                bool other_hit = false;
                for (const auto& c2 : classes) {
                    if (c2 == c) continue;
                    if (intersects(t.tags, hashtag_sets.at(c2))) {
                        other_hit = true;
                        break;
                    }
                }
                if (!other_hit) ++count[c];
            }
        }

        std::string assigned;
        for (const auto& c : classes) {
            bool dominant = true;
            for (const auto& c2 : classes) {
                if (c2 == c) continue;
                if (!(static_cast<double>(count[c]) > alpha * static_cast<double>(count[c2]))) {
                    dominant = false;
                    break;
                }
            }
            if (dominant) {
                assigned = c;
                break;
            }
        }
        if (assigned.empty()) {
            for (const auto& [c, members] : previous)
                if (members.count(u)) {
                    assigned = c;
                    break;
                }
        }
        if (!assigned.empty()) result[assigned].insert(u);
    }
    return result;
}

// Top-k hashtags of a tweet list: count descending, ties by ascending tag.
inline std::vector<std::string> top_k_tags(const std::vector<const Tweet*>& tweets,
                                           std::size_t k) {
    std::map<std::string, std::size_t> count;
    for (const Tweet* t : tweets)
        for (const auto& tag : t->tags) ++count[tag];
    std::vector<std::pair<std::string, std::size_t>> ranked(count.begin(), count.end());
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    std::vector<std::string> out;
    for (const auto& [tag, n] : ranked) {
        if (out.size() == k) break;
        out.push_back(tag);
    }
    return out;
}

// The score of hashtag h for every class, from the candidate hashtag sets:
// the fraction of tweets containing at least one candidate of the class that
// also contain h, times, for every other class, one minus its fraction.
// Empty own set: 0. Empty other set: factor skipped.
inline std::map<std::string, double> score(const std::vector<Tweet>& tweets,
                                           const std::string& h,
                                           const Sets& candidates) {
    std::vector<std::string> classes;
    for (const auto& [c, tags] : candidates) classes.push_back(c);

    std::map<std::string, double> denom, hits;
    for (const auto& c : classes) {
        denom[c] = 0;
        hits[c] = 0;
        for (const auto& t : tweets) {
            bool in_set = false;
            for (const auto& tag : t.tags)
                if (candidates.at(c).count(tag)) {
                    in_set = true;
                    break;
                }
            if (!in_set) continue;
            denom[c] += 1.0;
            if (t.tags.count(h)) hits[c] += 1.0;
        }
    }

    std::map<std::string, double> s;
    for (const auto& c : classes) {
        if (denom[c] <= 0.0) {
            s[c] = 0.0;
            continue;
        }
        double value = hits[c] / denom[c];
        for (const auto& c2 : classes) {
            if (c2 == c || denom[c2] <= 0.0) continue;
            value *= 1.0 - hits[c2] / denom[c2];
        }
        s[c] = value;
    }
    return s;
}

// Hashtag classification: candidate sets are the top-k tags over all tweets
// of each class's users; every non-seed candidate is scored and assigned to
// the class whose score strictly exceeds beta times every other class's;
// seeds stay with their class unconditionally.
inline Sets hashtags_class(const std::vector<Tweet>& tweets,
                           const std::vector<std::string>& classes,
                           const Sets& users,
                           const Sets& seeds,
                           std::size_t top_k,
                           double beta) {
    Sets candidates;
    for (const auto& c : classes) {
        std::vector<const Tweet*> class_tweets;
        for (const auto& t : tweets)
            if (users.at(c).count(t.user)) class_tweets.push_back(&t);
        const auto top = top_k_tags(class_tweets, top_k);
        candidates[c] = std::set<std::string>(top.begin(), top.end());
    }

    std::set<std::string> all_seeds;
    for (const auto& [c, tags] : seeds) all_seeds.insert(tags.begin(), tags.end());

    std::set<std::string> pool;
    for (const auto& [c, tags] : candidates)
        for (const auto& tag : tags)
            if (!all_seeds.count(tag)) pool.insert(tag);

    Sets result = seeds;
    for (const auto& c : classes) result[c];
    for (const auto& h : pool) {
        const auto s = score(tweets, h, candidates);
        for (const auto& c : classes) {
            bool dominant = true;
            for (const auto& c2 : classes) {
                if (c2 == c) continue;
                if (!(s.at(c) > beta * s.at(c2))) {
                    dominant = false;
                    break;
                }
            }
            if (dominant) {
                result[c].insert(h);
                break;
            }
        }
    }
    return result;
}

}  // namespace oracle
