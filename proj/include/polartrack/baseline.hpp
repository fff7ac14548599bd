#pragma once

#include <utility>
#include <vector>

#include "polartrack/corpus.hpp"
#include "polartrack/partition.hpp"

namespace polartrack {

// One user's L2-normalized hashtag frequency vector over the global top-k
// hashtag dimensions.
struct UserVector {
    UserId user_id;
    std::vector<double> features;
};

// Hashtag -> dimension mapping, in top-k order (count descending, ties by
// ascending hashtag).
struct FeatureSpace {
    std::vector<Hashtag> dims;
    std::map<Hashtag, std::size_t> index;
};

// Builds one vector per user: dimension values are the number of the user's
// tweets containing the hashtag, L2-normalized. Users whose raw vector is
// all zero (no tweet uses a top-k hashtag) are dropped. Vectors come out in
// ascending user-id order.
std::pair<std::vector<UserVector>, FeatureSpace> build_vectors(const Corpus& corpus,
                                                               std::size_t k,
                                                               int threads = 1);

// Lloyd iterations with fixed initial centroids: one centroid per class,
// a one-hot vector at the class's first seed hashtag. Assignment ties go to
// the earliest class in config order; a cluster left empty keeps its
// centroid. Stops when assignments repeat or after 100 rounds. Every
// vectorized user ends up assigned. Throws std::invalid_argument when a seed
// hashtag is outside the feature space. When wcss_out is non-null it
// receives the within-cluster sum of squares measured after each assignment
// step.
UserPartition seeded_kmeans(const std::vector<UserVector>& vectors,
                            const FeatureSpace& features,
                            const ClassConfig& config,
                            int threads = 1,
                            std::vector<double>* wcss_out = nullptr);

}  // namespace polartrack
