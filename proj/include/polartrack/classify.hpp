#pragma once

#include <span>

#include "polartrack/corpus.hpp"
#include "polartrack/partition.hpp"

namespace polartrack {

// For each class c, the user's tweets that mention at least one hashtag of
// H_c and no hashtag of any other class. A tweet touching two or more
// classes' hashtags lands in no set. Throws std::out_of_range for an
// unknown user.
std::map<ClassId, std::vector<TweetIndex>> polarized_tweets(
    const Corpus& corpus, const UserId& user, const HashtagPartition& hashtags);

// User classification step. Every user of the corpus is tested: a user whose
// polarized-tweet count for some class strictly exceeds alpha times the
// count of every other class is assigned that class; a user failing the test
// keeps their class from `previous` if they had one; everyone else stays
// unassigned. Only tweets inside `universe` contribute to the counts.
// Deterministic for any thread count.
UserPartition users_class(const Corpus& corpus,
                          const HashtagPartition& hashtags,
                          const UserPartition& previous,
                          double alpha,
                          std::span<const TweetIndex> universe,
                          int threads = 1);

// Same, over the whole stream.
UserPartition users_class(const Corpus& corpus,
                          const HashtagPartition& hashtags,
                          const UserPartition& previous,
                          double alpha,
                          int threads = 1);

}  // namespace polartrack
