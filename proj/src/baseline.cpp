#include "polartrack/baseline.hpp"

#include <algorithm>
#include <cmath>

#include "polartrack/parallel.hpp"

namespace polartrack {

std::pair<std::vector<UserVector>, FeatureSpace> build_vectors(const Corpus& corpus,
                                                               std::size_t k,
                                                               int threads) {
    if (k < 1) throw std::invalid_argument("build_vectors: k must be >= 1");

    FeatureSpace features;
    features.dims = top_hashtags(corpus, corpus.all_tweets(), k);
    for (std::size_t d = 0; d < features.dims.size(); ++d)
        features.index.emplace(features.dims[d], d);

    const auto& users = corpus.users();
    const std::size_t dims = features.dims.size();

    std::vector<UserVector> slots(users.size());
    parallel_chunks(users.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            std::vector<double> v(dims, 0.0);
            double norm_sq = 0.0;
            for (TweetIndex t : corpus.tweets_of_user(users[i]))
                for (const auto& h : corpus.record(t).hashtags) {
                    auto it = features.index.find(h);
                    if (it == features.index.end()) continue;
                    norm_sq += 2.0 * v[it->second] + 1.0;  // (x+1)^2 - x^2
                    v[it->second] += 1.0;
                }
            if (norm_sq <= 0.0) continue;  // no top-k hashtag used: dropped
            const double inv = 1.0 / std::sqrt(norm_sq);
            for (double& x : v) x *= inv;
            slots[i] = UserVector{users[i], std::move(v)};
        }
    });

    std::vector<UserVector> out;
    out.reserve(users.size());
    for (auto& s : slots)
        if (!s.features.empty()) out.push_back(std::move(s));
    return {std::move(out), std::move(features)};
}

UserPartition seeded_kmeans(const std::vector<UserVector>& vectors,
                            const FeatureSpace& features,
                            const ClassConfig& config,
                            int threads,
                            std::vector<double>* wcss_out) {
    const std::size_t num_classes = config.classes.size();
    const std::size_t dims = features.dims.size();
    if (wcss_out) wcss_out->clear();

    // One centroid per class: a one-hot vector at the class's first seed.
    std::vector<std::vector<double>> centroids(num_classes, std::vector<double>(dims, 0.0));
    for (std::size_t c = 0; c < num_classes; ++c) {
        const auto& seeds = config.seed_hashtags.at(config.classes[c]);
        if (seeds.empty())
            throw std::invalid_argument("seeded_kmeans: class '" + config.classes[c] + "' has no seed");
        auto it = features.index.find(seeds.front());
        if (it == features.index.end())
            throw std::invalid_argument("seeded_kmeans: seed hashtag '" + seeds.front() +
                                        "' is not among the feature dimensions");
        centroids[c][it->second] = 1.0;
    }

    std::vector<int> assignment(vectors.size(), -1);
    std::vector<double> distance(vectors.size(), 0.0);
    constexpr int kMaxRounds = 100;

    for (int round = 0; round < kMaxRounds; ++round) {
        std::vector<int> next(vectors.size(), 0);
        parallel_chunks(vectors.size(), threads, [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                int best = 0;
                double best_dist = 0.0;
                for (std::size_t c = 0; c < num_classes; ++c) {
                    double d = 0.0;
                    const auto& ctr = centroids[c];
                    const auto& v = vectors[i].features;
                    for (std::size_t j = 0; j < dims; ++j) {
                        const double diff = v[j] - ctr[j];
                        d += diff * diff;
                    }
                    // strict less keeps the earliest class on ties
                    if (c == 0 || d < best_dist) {
                        best = static_cast<int>(c);
                        best_dist = d;
                    }
                }
                next[i] = best;
                distance[i] = best_dist;
            }
        });

        if (wcss_out) {
            double wcss = 0.0;
            for (double d : distance) wcss += d;
            wcss_out->push_back(wcss);
        }
        if (next == assignment) break;
        assignment = std::move(next);

        std::vector<std::vector<double>> sums(num_classes, std::vector<double>(dims, 0.0));
        std::vector<std::size_t> sizes(num_classes, 0);
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            const auto& v = vectors[i].features;
            auto& sum = sums[assignment[i]];
            for (std::size_t j = 0; j < dims; ++j) sum[j] += v[j];
            ++sizes[assignment[i]];
        }
        for (std::size_t c = 0; c < num_classes; ++c) {
            if (sizes[c] == 0) continue;  // empty cluster keeps its centroid
            const double inv = 1.0 / static_cast<double>(sizes[c]);
            for (std::size_t j = 0; j < dims; ++j) centroids[c][j] = sums[c][j] * inv;
        }
    }

    UserPartition out = UserPartition::empty(config);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        out.assignments[config.classes[assignment[i]]].insert(vectors[i].user_id);
    return out;
}

}  // namespace polartrack
