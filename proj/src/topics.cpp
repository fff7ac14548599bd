#include "polartrack/topics.hpp"

#include <algorithm>

#include "polartrack/parallel.hpp"

namespace polartrack {

namespace {

struct ClassCounts {
    std::vector<ClassId> classes;                       // ascending id order
    std::vector<std::vector<std::uint8_t>> membership;  // per class: tweet -> in T_{H*_c}
    std::vector<double> denom;                          // per class: |T_{H*_c}|
};

ClassCounts build_class_counts(const Corpus& corpus,
                               const std::map<ClassId, std::vector<TweetIndex>>& cand_tweets) {
    ClassCounts cc;
    for (const auto& [c, tweets] : cand_tweets) {
        cc.classes.push_back(c);
        std::vector<std::uint8_t> mask(corpus.size(), 0);
        for (TweetIndex t : tweets) {
            if (t >= corpus.size()) throw std::out_of_range("tweet index out of range");
            mask[t] = 1;
        }
        cc.membership.push_back(std::move(mask));
        cc.denom.push_back(static_cast<double>(tweets.size()));
    }
    return cc;
}

// S for one hashtag given its per-class intersection counts. Classes are
// combined in ascending id order so that independently written evaluations
// of the same expression agree bit for bit.
std::vector<double> score_from_counts(const std::vector<double>& hits, const ClassCounts& cc) {
    const std::size_t n = cc.classes.size();
    std::vector<double> fraction(n, 0.0);
    for (std::size_t c = 0; c < n; ++c)
        fraction[c] = cc.denom[c] > 0.0 ? hits[c] / cc.denom[c] : 0.0;

    std::vector<double> s(n, 0.0);
    for (std::size_t c = 0; c < n; ++c) {
        if (cc.denom[c] <= 0.0) {
            s[c] = 0.0;  // no candidate tweets for this class
            continue;
        }
        double value = fraction[c];
        for (std::size_t other = 0; other < n; ++other) {
            if (other == c) continue;
            if (cc.denom[other] <= 0.0) continue;  // empty other set: factor 1
            value *= 1.0 - fraction[other];
        }
        s[c] = value;
    }
    return s;
}

std::vector<double> intersection_counts(const Corpus& corpus, const Hashtag& h,
                                        const ClassCounts& cc) {
    std::vector<double> hits(cc.classes.size(), 0.0);
    const auto it = corpus.by_hashtag().find(h);
    if (it == corpus.by_hashtag().end()) return hits;
    for (TweetIndex t : it->second)
        for (std::size_t c = 0; c < cc.classes.size(); ++c)
            if (cc.membership[c][t]) hits[c] += 1.0;
    return hits;
}

}  // namespace

std::map<ClassId, std::set<Hashtag>> candidate_sets(const Corpus& corpus,
                                                    const UserPartition& users,
                                                    std::size_t top_k,
                                                    std::span<const TweetIndex> universe) {
    if (top_k < 1) throw std::invalid_argument("candidate_sets: top_k must be >= 1");

    std::vector<std::uint8_t> in_universe(corpus.size(), 0);
    for (TweetIndex t : universe) in_universe[t] = 1;

    std::map<ClassId, std::set<Hashtag>> out;
    for (const auto& [c, members] : users.assignments) {
        // T_c: every tweet of the class's users inside the universe, not
        // only the polarized ones.
        std::vector<TweetIndex> class_tweets;
        for (const auto& u : members)
            for (TweetIndex t : corpus.tweets_of_user(u))
                if (in_universe[t]) class_tweets.push_back(t);
        const auto top = top_hashtags(corpus, class_tweets, top_k);
        out[c] = std::set<Hashtag>(top.begin(), top.end());
    }
    return out;
}

std::map<ClassId, std::vector<TweetIndex>> candidate_tweet_sets(
    const Corpus& corpus, const std::map<ClassId, std::set<Hashtag>>& candidates,
    std::span<const TweetIndex> universe) {
    std::vector<TweetIndex> sorted_universe(universe.begin(), universe.end());
    std::sort(sorted_universe.begin(), sorted_universe.end());

    std::map<ClassId, std::vector<TweetIndex>> out;
    for (const auto& [c, tags] : candidates) {
        auto& tweets = out[c];
        for (TweetIndex t : sorted_universe) {
            const auto& rec = corpus.record(t);
            const bool any = std::any_of(rec.hashtags.begin(), rec.hashtags.end(),
                                         [&](const Hashtag& h) { return tags.count(h) > 0; });
            if (any) tweets.push_back(t);
        }
    }
    return out;
}

HashtagScore score(const Corpus& corpus, const Hashtag& h,
                   const std::map<ClassId, std::vector<TweetIndex>>& candidate_tweet_sets) {
    const ClassCounts cc = build_class_counts(corpus, candidate_tweet_sets);
    const auto s = score_from_counts(intersection_counts(corpus, h, cc), cc);

    HashtagScore out;
    out.hashtag = h;
    for (std::size_t c = 0; c < cc.classes.size(); ++c) out.per_class[cc.classes[c]] = s[c];
    return out;
}

HashtagPartition hashtags_class(const Corpus& corpus,
                                const UserPartition& users,
                                const ClassConfig& config,
                                std::span<const TweetIndex> universe,
                                int threads,
                                std::vector<HashtagScore>* scores_out) {
    const auto candidates = candidate_sets(corpus, users, static_cast<std::size_t>(config.top_k), universe);
    const auto cand_tweets = candidate_tweet_sets(corpus, candidates, universe);
    const ClassCounts cc = build_class_counts(corpus, cand_tweets);
    const std::size_t num_classes = cc.classes.size();
    const double beta = config.beta;

    // Candidate pool: every class's candidates, minus seed hashtags, which
    // stay with their own class and are never re-scored.
    const std::set<Hashtag> seeds = config.all_seeds();
    std::set<Hashtag> pool_set;
    for (const auto& [c, tags] : candidates)
        for (const auto& h : tags)
            if (!seeds.count(h)) pool_set.insert(h);
    const std::vector<Hashtag> pool(pool_set.begin(), pool_set.end());

    std::vector<int> winner(pool.size(), -1);
    std::vector<std::vector<double>> scores(pool.size());
    parallel_chunks(pool.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto s = score_from_counts(intersection_counts(corpus, pool[i], cc), cc);
            for (std::size_t c = 0; c < num_classes; ++c) {
                bool dominant = true;
                for (std::size_t other = 0; other < num_classes; ++other) {
                    if (other == c) continue;
                    if (!(s[c] > beta * s[other])) {
                        dominant = false;
                        break;
                    }
                }
                if (dominant) {
                    winner[i] = static_cast<int>(c);
                    break;  // beta >= 1 makes the dominant class unique
                }
            }
            scores[i] = s;
        }
    });

    HashtagPartition result = HashtagPartition::seeds(config);
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (winner[i] >= 0) result.assignments[cc.classes[winner[i]]].insert(pool[i]);

    if (scores_out) {
        scores_out->clear();
        scores_out->reserve(pool.size());
        for (std::size_t i = 0; i < pool.size(); ++i) {
            HashtagScore hs;
            hs.hashtag = pool[i];
            for (std::size_t c = 0; c < num_classes; ++c) hs.per_class[cc.classes[c]] = scores[i][c];
            scores_out->push_back(std::move(hs));
        }
    }
    return result;
}

HashtagPartition hashtags_class(const Corpus& corpus,
                                const UserPartition& users,
                                const ClassConfig& config,
                                int threads,
                                std::vector<HashtagScore>* scores_out) {
    return hashtags_class(corpus, users, config, corpus.all_tweets(), threads, scores_out);
}

}  // namespace polartrack
