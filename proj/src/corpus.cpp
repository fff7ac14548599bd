#include "polartrack/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace polartrack {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

std::string line_err(const std::filesystem::path& path, std::size_t line, const std::string& what) {
    return path.string() + ":" + std::to_string(line) + ": " + what;
}

bool is_blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

void check_normalized(const Hashtag& h) {
    if (h.empty()) throw std::invalid_argument("hashtag symbol is empty");
    if (h.front() == '#') throw std::invalid_argument("hashtag '" + h + "' keeps a leading '#'");
    for (unsigned char c : h)
        if (c >= 'A' && c <= 'Z')
            throw std::invalid_argument("hashtag '" + h + "' is not lowercase");
}

std::vector<Hashtag> normalize_set(const std::vector<std::string>& raw) {
    std::vector<Hashtag> out;
    out.reserve(raw.size());
    for (const auto& r : raw) out.push_back(normalize_hashtag(r));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

bool TweetRecord::has_hashtag(const Hashtag& h) const {
    return std::binary_search(hashtags.begin(), hashtags.end(), h);
}

Hashtag normalize_hashtag(std::string_view raw) {
    std::string_view body = raw;
    if (!body.empty() && body.front() == '#') body.remove_prefix(1);
    Hashtag out;
    out.reserve(body.size());
    for (char c : body)
        out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
    return out;
}

void ClassConfig::validate() const {
    if (classes.size() < 2) throw std::invalid_argument("config: need at least 2 classes");
    std::set<ClassId> distinct(classes.begin(), classes.end());
    if (distinct.size() != classes.size())
        throw std::invalid_argument("config: duplicate class id");
    if (!(alpha > 1.0)) throw std::invalid_argument("config: alpha must be > 1");
    if (!(beta >= 1.0)) throw std::invalid_argument("config: beta must be >= 1");
    if (top_k < 1) throw std::invalid_argument("config: top_k must be >= 1");
    if (max_iterations < 1) throw std::invalid_argument("config: max_iterations must be >= 1");

    std::set<Hashtag> seen_seed, seen_golden;
    for (const auto& c : classes) {
        auto s = seed_hashtags.find(c);
        if (s == seed_hashtags.end() || s->second.empty())
            throw std::invalid_argument("config: class '" + c + "' has no seed hashtag");
        auto g = golden_hashtags.find(c);
        if (g == golden_hashtags.end() || g->second.empty())
            throw std::invalid_argument("config: class '" + c + "' has no golden hashtag");
        for (const auto& h : s->second) {
            check_normalized(h);
            if (!seen_seed.insert(h).second)
                throw std::invalid_argument("config: seed hashtag '" + h + "' used by two classes");
        }
        for (const auto& h : g->second) {
            check_normalized(h);
            if (!seen_golden.insert(h).second)
                throw std::invalid_argument("config: golden hashtag '" + h + "' used by two classes");
        }
    }
    for (const auto& h : seen_seed)
        if (seen_golden.count(h))
            throw std::invalid_argument("config: hashtag '" + h + "' is both seed and golden");
}

std::set<Hashtag> ClassConfig::all_seeds() const {
    std::set<Hashtag> out;
    for (const auto& [c, hs] : seed_hashtags) out.insert(hs.begin(), hs.end());
    return out;
}

std::set<Hashtag> ClassConfig::all_golden() const {
    std::set<Hashtag> out;
    for (const auto& [c, hs] : golden_hashtags) out.insert(hs.begin(), hs.end());
    return out;
}

ClassConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail("config file not found: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail("config " + path.string() + ": " + e.what());
    }

    ClassConfig cfg;
    try {
        cfg.classes = j.at("classes").get<std::vector<ClassId>>();
        for (const auto& c : cfg.classes) {
            cfg.seed_hashtags[c] = normalize_set(j.at("seed").at(c).get<std::vector<std::string>>());
            cfg.golden_hashtags[c] = normalize_set(j.at("golden").at(c).get<std::vector<std::string>>());
        }
        if (j.contains("alpha")) cfg.alpha = j.at("alpha").get<double>();
        if (j.contains("beta")) cfg.beta = j.at("beta").get<double>();
        if (j.contains("top_k")) cfg.top_k = j.at("top_k").get<int>();
        if (j.contains("max_iterations")) cfg.max_iterations = j.at("max_iterations").get<int>();
        if (j.contains("golden_rule")) {
            auto rule = j.at("golden_rule").get<std::string>();
            if (rule == "exclusive")
                cfg.golden_rule = ClassConfig::GoldenRule::exclusive;
            else if (rule == "dominance")
                cfg.golden_rule = ClassConfig::GoldenRule::dominance;
            else
                fail("config " + path.string() + ": unknown golden_rule '" + rule + "'");
        }
    } catch (const json::exception& e) {
        fail("config " + path.string() + ": " + e.what());
    }
    cfg.validate();
    return cfg;
}

void save_config(const ClassConfig& config, const std::filesystem::path& path) {
    ordered_json j;
    j["classes"] = config.classes;
    ordered_json seed = ordered_json::object();
    ordered_json golden = ordered_json::object();
    for (const auto& c : config.classes) {
        seed[c] = config.seed_hashtags.at(c);
        golden[c] = config.golden_hashtags.at(c);
    }
    j["seed"] = seed;
    j["golden"] = golden;
    j["alpha"] = config.alpha;
    j["beta"] = config.beta;
    j["top_k"] = config.top_k;
    j["max_iterations"] = config.max_iterations;
    j["golden_rule"] =
        config.golden_rule == ClassConfig::GoldenRule::exclusive ? "exclusive" : "dominance";

    std::ofstream out(path);
    if (!out) fail("cannot write config: " + path.string());
    out << j.dump(2) << '\n';
}

Corpus Corpus::from_records(std::vector<TweetRecord> records) {
    Corpus c;
    c.records_ = std::move(records);
    c.all_tweets_.reserve(c.records_.size());

    std::set<std::string> ids;
    for (TweetIndex i = 0; i < c.records_.size(); ++i) {
        const TweetRecord& r = c.records_[i];
        if (r.tweet_id.empty()) throw std::invalid_argument("record with empty tweet id");
        if (r.user_id.empty()) throw std::invalid_argument("record with empty user id");
        if (r.day < 0) throw std::invalid_argument("record '" + r.tweet_id + "' has negative day");
        if (!ids.insert(r.tweet_id).second)
            throw std::invalid_argument("duplicate tweet id '" + r.tweet_id + "'");
        if (!std::is_sorted(r.hashtags.begin(), r.hashtags.end()) ||
            std::adjacent_find(r.hashtags.begin(), r.hashtags.end()) != r.hashtags.end())
            throw std::invalid_argument("record '" + r.tweet_id + "' hashtags not a sorted set");
        for (const auto& h : r.hashtags) check_normalized(h);

        c.all_tweets_.push_back(i);
        c.by_user_[r.user_id].push_back(i);
        c.by_day_[r.day].push_back(i);
        for (const auto& h : r.hashtags) {
            c.by_hashtag_[h].push_back(i);
            ++c.hashtag_freq_[h];
        }
        c.max_day_ = std::max(c.max_day_, r.day);
    }
    c.users_.reserve(c.by_user_.size());
    for (const auto& [u, _] : c.by_user_) c.users_.push_back(u);
    return c;
}

const std::vector<TweetIndex>& Corpus::tweets_of_user(const UserId& u) const {
    auto it = by_user_.find(u);
    if (it == by_user_.end()) throw std::out_of_range("unknown user id '" + u + "'");
    return it->second;
}

std::vector<TweetIndex> Corpus::tweets_of_day(int day) const {
    auto it = by_day_.find(day);
    return it == by_day_.end() ? std::vector<TweetIndex>{} : it->second;
}

Corpus load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail("corpus file not found: " + path.string());

    std::vector<TweetRecord> records;
    std::string line;
    std::size_t lineno = 0;
    std::set<std::string> ids;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank(line)) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            fail(line_err(path, lineno, std::string("invalid record: ") + e.what()));
        }
        TweetRecord rec;
        try {
            rec.tweet_id = j.at("id").get<std::string>();
            rec.user_id = j.at("user").get<std::string>();
            rec.day = j.at("day").get<int>();
            rec.hashtags = normalize_set(j.at("hashtags").get<std::vector<std::string>>());
        } catch (const json::exception& e) {
            fail(line_err(path, lineno, std::string("invalid record: ") + e.what()));
        }
        if (rec.tweet_id.empty()) fail(line_err(path, lineno, "empty tweet id"));
        if (rec.user_id.empty()) fail(line_err(path, lineno, "empty user id"));
        if (rec.day < 0) fail(line_err(path, lineno, "negative day index"));
        for (const auto& h : rec.hashtags)
            if (h.empty()) fail(line_err(path, lineno, "hashtag empty after normalization"));
        if (!ids.insert(rec.tweet_id).second)
            fail(line_err(path, lineno, "duplicate tweet id '" + rec.tweet_id + "'"));
        records.push_back(std::move(rec));
    }
    return Corpus::from_records(std::move(records));
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) fail("cannot write corpus: " + path.string());
    for (const auto& r : corpus.records()) {
        ordered_json j;
        j["id"] = r.tweet_id;
        j["user"] = r.user_id;
        j["day"] = r.day;
        j["hashtags"] = r.hashtags;
        out << j.dump() << '\n';
    }
}

Corpus strip_golden(const Corpus& corpus, const ClassConfig& config) {
    const std::set<Hashtag> golden = config.all_golden();
    std::vector<TweetRecord> records = corpus.records();
    for (auto& r : records) {
        auto last = std::remove_if(r.hashtags.begin(), r.hashtags.end(),
                                   [&](const Hashtag& h) { return golden.count(h) > 0; });
        r.hashtags.erase(last, r.hashtags.end());
    }
    return Corpus::from_records(std::move(records));
}

std::vector<Hashtag> top_hashtags(const Corpus& corpus,
                                  std::span<const TweetIndex> tweet_ids,
                                  std::size_t k) {
    std::map<Hashtag, std::uint32_t> counts;
    for (TweetIndex t : tweet_ids) {
        if (t >= corpus.size()) throw std::out_of_range("tweet index out of range");
        for (const auto& h : corpus.record(t).hashtags) ++counts[h];
    }

    std::vector<std::pair<Hashtag, std::uint32_t>> ranked(counts.begin(), counts.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (ranked.size() > k) ranked.resize(k);

    std::vector<Hashtag> out;
    out.reserve(ranked.size());
    for (auto& [h, _] : ranked) out.push_back(std::move(h));
    return out;
}

}  // namespace polartrack
