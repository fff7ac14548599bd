#include "polartrack/classify.hpp"

#include <algorithm>

#include "polartrack/parallel.hpp"

namespace polartrack {

namespace {

// hashtag -> class index for the current partition; class indexes follow the
// partition's key order.
struct ClassLookup {
    std::vector<ClassId> classes;
    std::map<Hashtag, int> owner;

    explicit ClassLookup(const HashtagPartition& partition) {
        classes.reserve(partition.assignments.size());
        for (const auto& [c, tags] : partition.assignments) {
            const int idx = static_cast<int>(classes.size());
            classes.push_back(c);
            for (const auto& h : tags) owner.emplace(h, idx);
        }
    }
};

// The class whose hashtags a tweet mentions, or -1 for none, or -2 for a
// tweet touching two or more classes.
int tweet_class(const TweetRecord& rec, const ClassLookup& lookup) {
    int hit = -1;
    for (const auto& h : rec.hashtags) {
        auto it = lookup.owner.find(h);
        if (it == lookup.owner.end()) continue;
        if (hit == -1) {
            hit = it->second;
        } else if (hit != it->second) {
            return -2;
        }
    }
    return hit;
}

std::vector<std::uint8_t> universe_mask(const Corpus& corpus,
                                        std::span<const TweetIndex> universe) {
    std::vector<std::uint8_t> mask(corpus.size(), 0);
    for (TweetIndex t : universe) mask[t] = 1;
    return mask;
}

}  // namespace

std::map<ClassId, std::vector<TweetIndex>> polarized_tweets(
    const Corpus& corpus, const UserId& user, const HashtagPartition& hashtags) {
    const ClassLookup lookup(hashtags);
    std::map<ClassId, std::vector<TweetIndex>> out;
    for (const auto& c : lookup.classes) out[c];

    for (TweetIndex t : corpus.tweets_of_user(user)) {
        const int cls = tweet_class(corpus.record(t), lookup);
        if (cls >= 0) out[lookup.classes[cls]].push_back(t);
    }
    return out;
}

UserPartition users_class(const Corpus& corpus,
                          const HashtagPartition& hashtags,
                          const UserPartition& previous,
                          double alpha,
                          std::span<const TweetIndex> universe,
                          int threads) {
    if (!(alpha > 1.0)) throw std::invalid_argument("users_class: alpha must be > 1");

    const ClassLookup lookup(hashtags);
    const int num_classes = static_cast<int>(lookup.classes.size());
    const auto mask = universe_mask(corpus, universe);
    const auto& users = corpus.users();

    std::map<UserId, int> backup;
    for (const auto& [c, members] : previous.assignments) {
        const auto it = std::find(lookup.classes.begin(), lookup.classes.end(), c);
        if (it == lookup.classes.end()) continue;
        const int idx = static_cast<int>(it - lookup.classes.begin());
        for (const auto& u : members) backup.emplace(u, idx);
    }

    // Decided class per user, -1 for unassigned; filled independently per
    // user so any chunking yields the same result.
    std::vector<int> decision(users.size(), -1);
    parallel_chunks(users.size(), threads, [&](std::size_t begin, std::size_t end) {
        std::vector<std::uint32_t> counts(static_cast<std::size_t>(num_classes));
        for (std::size_t i = begin; i < end; ++i) {
            std::fill(counts.begin(), counts.end(), 0);
            for (TweetIndex t : corpus.tweets_of_user(users[i])) {
                if (!mask[t]) continue;
                const int cls = tweet_class(corpus.record(t), lookup);
                if (cls >= 0) ++counts[static_cast<std::size_t>(cls)];
            }

            int winner = -1;
            for (int c = 0; c < num_classes; ++c) {
                bool dominant = true;
                for (int other = 0; other < num_classes; ++other) {
                    if (other == c) continue;
                    if (!(static_cast<double>(counts[c]) >
                          alpha * static_cast<double>(counts[other]))) {
                        dominant = false;
                        break;
                    }
                }
                if (dominant) {
                    winner = c;
                    break;  // alpha > 1 makes the dominant class unique
                }
            }
            if (winner < 0) {
                auto it = backup.find(users[i]);
                if (it != backup.end()) winner = it->second;
            }
            decision[i] = winner;
        }
    });

    UserPartition result;
    for (const auto& c : lookup.classes) result.assignments[c];
    for (std::size_t i = 0; i < users.size(); ++i)
        if (decision[i] >= 0) result.assignments[lookup.classes[decision[i]]].insert(users[i]);
    return result;
}

UserPartition users_class(const Corpus& corpus,
                          const HashtagPartition& hashtags,
                          const UserPartition& previous,
                          double alpha,
                          int threads) {
    return users_class(corpus, hashtags, previous, alpha, corpus.all_tweets(), threads);
}

}  // namespace polartrack
