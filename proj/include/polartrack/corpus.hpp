#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polartrack {

using UserId = std::string;
using Hashtag = std::string;
using ClassId = std::string;
using TweetIndex = std::uint32_t;

// One message of the stream. Hashtags arrive pre-extracted and are stored
// normalized (lowercase, no leading '#'), sorted and de-duplicated.
struct TweetRecord {
    std::string tweet_id;
    UserId user_id;
    int day = 0;
    std::vector<Hashtag> hashtags;

    bool has_hashtag(const Hashtag& h) const;
    bool operator==(const TweetRecord&) const = default;
};

// Lowercases ASCII letters and strips one leading '#'. Bytes outside A-Z are
// passed through unchanged, which keeps UTF-8 sequences intact.
Hashtag normalize_hashtag(std::string_view raw);

// Run parameters shared by every stage: the class ids, the per-class seed
// and golden hashtag sets, and the numeric knobs of the iteration.
struct ClassConfig {
    std::vector<ClassId> classes;
    std::map<ClassId, std::vector<Hashtag>> seed_hashtags;
    std::map<ClassId, std::vector<Hashtag>> golden_hashtags;
    double alpha = 2.0;
    double beta = 1.0;
    int top_k = 500;
    int max_iterations = 10;

    // How the golden set is derived from golden-hashtag usage. `exclusive`
    // admits a user only if all their golden mentions belong to one class;
    // `dominance` applies the user classification rule with the golden sets.
    enum class GoldenRule { exclusive, dominance };
    GoldenRule golden_rule = GoldenRule::exclusive;

    // Throws std::invalid_argument on any violated constraint: fewer than
    // two classes, alpha <= 1, beta < 1, non-positive top_k/max_iterations,
    // empty or overlapping seed/golden sets.
    void validate() const;

    std::set<Hashtag> all_seeds() const;
    std::set<Hashtag> all_golden() const;
};

ClassConfig load_config(const std::filesystem::path& path);
void save_config(const ClassConfig& config, const std::filesystem::path& path);

// Immutable indexed view of the stream. Construction builds the per-user,
// per-hashtag and per-day indexes; afterwards the corpus is safe to share
// across threads.
class Corpus {
public:
    Corpus() = default;

    // Takes ownership of the records, validates them (normalized hashtags,
    // unique tweet ids, non-negative days) and builds all indexes.
    static Corpus from_records(std::vector<TweetRecord> records);

    std::size_t size() const { return records_.size(); }
    bool empty() const { return records_.empty(); }
    const std::vector<TweetRecord>& records() const { return records_; }
    const TweetRecord& record(TweetIndex i) const { return records_[i]; }

    // All user ids seen in the stream, sorted. Users whose every record has
    // an empty hashtag set are still counted here.
    const std::vector<UserId>& users() const { return users_; }
    std::size_t user_count() const { return users_.size(); }
    bool has_user(const UserId& u) const { return by_user_.count(u) > 0; }

    const std::map<UserId, std::vector<TweetIndex>>& by_user() const { return by_user_; }
    const std::map<Hashtag, std::vector<TweetIndex>>& by_hashtag() const { return by_hashtag_; }
    const std::map<int, std::vector<TweetIndex>>& by_day() const { return by_day_; }
    const std::map<Hashtag, std::uint32_t>& hashtag_freq() const { return hashtag_freq_; }

    // Throws std::out_of_range for an unknown user.
    const std::vector<TweetIndex>& tweets_of_user(const UserId& u) const;

    // Empty for a day with no records.
    std::vector<TweetIndex> tweets_of_day(int day) const;

    // Every record index in ascending order; the canonical "whole stream"
    // universe passed to the classification steps.
    const std::vector<TweetIndex>& all_tweets() const { return all_tweets_; }

    int max_day() const { return max_day_; }

private:
    std::vector<TweetRecord> records_;
    std::vector<UserId> users_;
    std::vector<TweetIndex> all_tweets_;
    std::map<UserId, std::vector<TweetIndex>> by_user_;
    std::map<Hashtag, std::vector<TweetIndex>> by_hashtag_;
    std::map<int, std::vector<TweetIndex>> by_day_;
    std::map<Hashtag, std::uint32_t> hashtag_freq_;
    int max_day_ = -1;
};

// Reads a line-delimited corpus file: one JSON object per line with fields
// `id` (string), `user` (string), `day` (integer >= 0) and `hashtags`
// (array of strings). Hashtags are normalized on the way in. Blank lines are
// skipped. Throws std::runtime_error with the offending line number on any
// malformed line, and on duplicate tweet ids.
Corpus load_corpus(const std::filesystem::path& path);

// Writes the same line-delimited format load_corpus reads. Loading the
// result reproduces the corpus exactly.
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

// Returns a new corpus with every golden hashtag removed from every record.
// Records left without hashtags are kept, so the user set and record count
// never change.
Corpus strip_golden(const Corpus& corpus, const ClassConfig& config);

// The k most frequent hashtags over the given tweets, counted at tweet level
// (a hashtag counts once per record). Descending by count, ties broken by
// ascending hashtag order. Returns fewer than k when fewer distinct hashtags
// occur.
std::vector<Hashtag> top_hashtags(const Corpus& corpus,
                                  std::span<const TweetIndex> tweet_ids,
                                  std::size_t k);

}  // namespace polartrack
