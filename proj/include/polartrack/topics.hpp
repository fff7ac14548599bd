#pragma once

#include <span>

#include "polartrack/corpus.hpp"
#include "polartrack/partition.hpp"

namespace polartrack {

// Discriminativeness of one hashtag for every class, each value in [0, 1].
struct HashtagScore {
    Hashtag hashtag;
    std::map<ClassId, double> per_class;
};

// Candidate hashtags per class: the top_k most frequent hashtags over all
// tweets (within `universe`) written by that class's users — all their
// tweets, not only the polarized ones.
std::map<ClassId, std::set<Hashtag>> candidate_sets(
    const Corpus& corpus, const UserPartition& users, std::size_t top_k,
    std::span<const TweetIndex> universe);

// T_{H*_c}: for each class, the tweets of `universe` containing at least one
// hashtag of that class's candidate set. Indexes ascending.
std::map<ClassId, std::vector<TweetIndex>> candidate_tweet_sets(
    const Corpus& corpus, const std::map<ClassId, std::set<Hashtag>>& candidates,
    std::span<const TweetIndex> universe);

// Scores one hashtag against precomputed per-class candidate tweet sets:
// the fraction of the class's candidate tweets mentioning h, times the
// product over other classes of one minus their fraction — the probability
// of seeing h only in this class's candidate tweets under independence.
// An empty own set scores 0; an empty other set contributes factor 1.
HashtagScore score(const Corpus& corpus, const Hashtag& h,
                   const std::map<ClassId, std::vector<TweetIndex>>& candidate_tweet_sets);

// Hashtag classification step. Builds the candidate sets from the current
// user partition, scores every non-seed candidate, and assigns hashtag h to
// class c iff S_c(h) > beta * S_{c'}(h) for every other class (strict; a tie
// at the top leaves h unassigned). Seeds are excluded from scoring and each
// class's seeds are unconditionally part of its returned set. When
// scores_out is non-null it receives the score of every candidate examined.
// Deterministic for any thread count.
HashtagPartition hashtags_class(const Corpus& corpus,
                                const UserPartition& users,
                                const ClassConfig& config,
                                std::span<const TweetIndex> universe,
                                int threads = 1,
                                std::vector<HashtagScore>* scores_out = nullptr);

// Same, over the whole stream.
HashtagPartition hashtags_class(const Corpus& corpus,
                                const UserPartition& users,
                                const ClassConfig& config,
                                int threads = 1,
                                std::vector<HashtagScore>* scores_out = nullptr);

}  // namespace polartrack
