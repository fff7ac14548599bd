#include "polartrack/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "polartrack/parallel.hpp"

namespace polartrack {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t key4(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
    return splitmix(splitmix(splitmix(splitmix(a) ^ b) ^ c) ^ d);
}

// Counter-based random stream: draw i depends only on the stream key and i,
// never on how many other streams ran before it.
struct Draws {
    std::uint64_t key;
    std::uint64_t counter = 0;

    std::uint64_t next_u64() { return splitmix(key ^ (0xA0761D6478BD642FULL * ++counter)); }
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    int next_below(int n) { return n <= 1 ? 0 : static_cast<int>(next_unit() * n) % n; }
};

int poisson(Draws& rng, double mean) {
    if (mean <= 0.0) return 0;
    const double limit = std::exp(-mean);
    int k = 0;
    double p = 1.0;
    do {
        ++k;
        p *= rng.next_unit();
    } while (p > limit);
    return k - 1;
}

std::string zero_pad(int value, int width) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%0*d", width, value);
    return buf;
}

constexpr std::uint64_t kActivitySalt = 0x7EE75;
constexpr std::uint64_t kGoldenSalt = 0x601D;
constexpr std::uint64_t kSkewSalt = 0x5A5A;

// Bias inside the class vocabulary: tag 0 takes a fixed share of the draws
// so each class has a clear most-frequent tag to act as its seed.
constexpr double kHeadTagShare = 0.25;
// Share of a polarized user's hashtag draws that come from the shared
// vocabulary instead of the class vocabulary.
constexpr double kSharedShare = 0.35;
// Fraction of the shared vocabulary each group actually uses. Generic topics
// are not equally popular in every community; the overlap between group
// subsets is what keeps these tags non-discriminating.
constexpr double kSharedAvailability = 0.6;

// Whether a shared tag is in a group's repertoire; fixed by the seed. Groups
// are the classes plus one extra group for the neutral users.
bool shared_tag_available(std::uint64_t seed, int group, int tag) {
    const double w = static_cast<double>(key4(seed, kSkewSalt, static_cast<std::uint64_t>(group),
                                              static_cast<std::uint64_t>(tag)) >>
                                         11) *
                     0x1.0p-53;
    return w < kSharedAvailability;
}

// Uniform draw from the group's repertoire, by rejection.
int shared_index(Draws& rng, std::uint64_t seed, int group, int size) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        const int idx = rng.next_below(size);
        if (shared_tag_available(seed, group, idx)) return idx;
    }
    return rng.next_below(size);  // tiny vocabularies: fall back to the full pool
}

}  // namespace

void SynthConfig::validate() const {
    if (classes < 2) throw std::invalid_argument("synth: need at least 2 classes");
    if (users_per_class < 1) throw std::invalid_argument("synth: users_per_class must be >= 1");
    if (neutral_users < 0) throw std::invalid_argument("synth: neutral_users must be >= 0");
    if (days < 1) throw std::invalid_argument("synth: days must be >= 1");
    if (tweets_per_user_per_day < 0.0)
        throw std::invalid_argument("synth: tweets_per_user_per_day must be >= 0");
    if (class_vocab_size < 1) throw std::invalid_argument("synth: class_vocab_size must be >= 1");
    if (shared_vocab_size < 1) throw std::invalid_argument("synth: shared_vocab_size must be >= 1");
    if (leak_prob < 0.0 || leak_prob > 1.0)
        throw std::invalid_argument("synth: leak_prob must be in [0, 1]");
    if (golden_frac < 0.0 || golden_frac > 1.0)
        throw std::invalid_argument("synth: golden_frac must be in [0, 1]");
}

SynthOutput generate(const SynthConfig& config, int threads) {
    config.validate();

    const int num_polarized = config.classes * config.users_per_class;
    const int total_users = num_polarized + config.neutral_users;
    const int golden_per_class =
        static_cast<int>(std::llround(config.golden_frac * config.users_per_class));

    auto class_tag = [&](int cls, int idx) { return "t" + std::to_string(cls) + "h" + zero_pad(idx, 3); };
    auto shared_tag = [&](int idx) { return "sh" + zero_pad(idx, 3); };
    auto golden_tag = [&](int cls) { return "gold" + std::to_string(cls); };
    auto user_id = [&](int u) { return "u" + zero_pad(u, 5); };

    // Per-user generation into slots; concatenation in user order keeps the
    // output independent of chunking.
    std::vector<std::vector<TweetRecord>> slots(static_cast<std::size_t>(total_users));
    parallel_chunks(static_cast<std::size_t>(total_users), threads,
                    [&](std::size_t begin, std::size_t end) {
        for (std::size_t ui = begin; ui < end; ++ui) {
            const int u = static_cast<int>(ui);
            const bool neutral = u >= num_polarized;
            const int own_class = neutral ? -1 : u / config.users_per_class;
            auto& records = slots[ui];

            for (int day = 0; day < config.days; ++day) {
                Draws rng{key4(config.seed, kActivitySalt, static_cast<std::uint64_t>(u),
                               static_cast<std::uint64_t>(day))};
                const int tweets = poisson(rng, config.tweets_per_user_per_day);
                for (int j = 0; j < tweets; ++j) {
                    const double r = rng.next_unit();
                    const int draws = r < 0.50 ? 1 : (r < 0.85 ? 2 : 3);
                    std::set<Hashtag> tags;
                    const int group = neutral ? config.classes : own_class;
                    for (int d = 0; d < draws; ++d) {
                        if (neutral || rng.next_unit() < kSharedShare) {
                            tags.insert(shared_tag(
                                shared_index(rng, config.seed, group, config.shared_vocab_size)));
                            continue;
                        }
                        int cls = own_class;
                        if (rng.next_unit() < config.leak_prob && config.classes > 1) {
                            const int shift = 1 + rng.next_below(config.classes - 1);
                            cls = (own_class + shift) % config.classes;
                        }
                        const int idx = rng.next_unit() < kHeadTagShare
                                            ? 0
                                            : 1 + rng.next_below(config.class_vocab_size - 1);
                        tags.insert(class_tag(cls, config.class_vocab_size == 1 ? 0 : idx));
                    }
                    records.push_back(TweetRecord{
                        "t" + zero_pad(u, 5) + "d" + std::to_string(day) + "n" + std::to_string(j),
                        user_id(u), day, {tags.begin(), tags.end()}});
                }
            }

            // Golden emission: the first golden_per_class users of each class
            // post their class's golden hashtag once, on a random day.
            if (!neutral && (u % config.users_per_class) < golden_per_class) {
                Draws rng{key4(config.seed, kGoldenSalt, static_cast<std::uint64_t>(u), 0)};
                const int day = rng.next_below(config.days);
                records.push_back(TweetRecord{"t" + zero_pad(u, 5) + "g", user_id(u), day,
                                              {golden_tag(own_class)}});
            }
        }
    });

    std::vector<TweetRecord> records;
    for (auto& s : slots)
        for (auto& r : s) records.push_back(std::move(r));

    SynthOutput out;
    out.corpus = Corpus::from_records(std::move(records));

    // Seed per class: the most frequent tag of the class vocabulary.
    ClassConfig cfg;
    for (int c = 0; c < config.classes; ++c) {
        const ClassId cid = "c" + std::to_string(c);
        cfg.classes.push_back(cid);

        Hashtag best;
        std::uint32_t best_count = 0;
        for (int idx = 0; idx < config.class_vocab_size; ++idx) {
            const Hashtag tag = class_tag(c, idx);
            const auto it = out.corpus.hashtag_freq().find(tag);
            const std::uint32_t count = it == out.corpus.hashtag_freq().end() ? 0 : it->second;
            if (count > best_count || (count == best_count && (best.empty() || tag < best))) {
                best = tag;
                best_count = count;
            }
        }
        cfg.seed_hashtags[cid] = {best};
        cfg.golden_hashtags[cid] = {golden_tag(c)};
    }
    cfg.alpha = 2.0;
    cfg.beta = 1.0;
    // Candidate cap sized to the per-class topical vocabulary. A cap that
    // never binds would make every class's candidate neighborhood cover the
    // whole stream and destroy the score's discrimination.
    cfg.top_k = std::max(config.class_vocab_size, 10);
    cfg.max_iterations = 10;
    cfg.validate();
    out.config = std::move(cfg);

    out.ground_truth = UserPartition::empty(out.config);
    for (int u = 0; u < num_polarized; ++u) {
        if (!out.corpus.has_user(user_id(u))) continue;  // user produced no tweets
        const ClassId cid = "c" + std::to_string(u / config.users_per_class);
        out.ground_truth.assignments[cid].insert(user_id(u));
    }
    return out;
}

}  // namespace polartrack
