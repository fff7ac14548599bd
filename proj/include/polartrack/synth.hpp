#pragma once

#include <cstdint>

#include "polartrack/corpus.hpp"
#include "polartrack/partition.hpp"

namespace polartrack {

// Planted-polarization corpus generator. Class members draw mostly from
// their own class vocabulary plus a shared one; a small fraction of draws
// leak into another class's vocabulary; a fraction of each class's users
// additionally emits the class golden hashtag once. Fully deterministic
// given the seed: every random draw is keyed by (seed, user, day, index),
// so generation order and thread count never change the output.
struct SynthConfig {
    std::uint64_t seed = 0;
    int classes = 3;
    int users_per_class = 300;
    int neutral_users = 400;
    int days = 9;
    double tweets_per_user_per_day = 0.8;
    int class_vocab_size = 30;
    int shared_vocab_size = 200;
    double leak_prob = 0.05;
    double golden_frac = 0.1;

    void validate() const;  // throws std::invalid_argument
};

struct SynthOutput {
    Corpus corpus;
    // The planted classes of every polarized user that produced at least one
    // record; neutral users are in no set.
    UserPartition ground_truth;
    // Ready-to-run configuration: per-class seed hashtag (the most frequent
    // hashtag of the class vocabulary), the golden hashtags, and default
    // iteration knobs.
    ClassConfig config;
};

SynthOutput generate(const SynthConfig& config, int threads = 1);

}  // namespace polartrack
