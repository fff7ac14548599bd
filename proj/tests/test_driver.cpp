#include "doctest.h"
#include "polartrack/driver.hpp"
#include "polartrack/synth.hpp"

namespace pt = polartrack;

namespace {

pt::Corpus corpus_of(
    std::vector<std::tuple<std::string, int, std::vector<std::string>>> tweets) {
    std::vector<pt::TweetRecord> records;
    int i = 0;
    for (auto& [user, day, tags] : tweets) {
        std::sort(tags.begin(), tags.end());
        records.push_back(pt::TweetRecord{"t" + std::to_string(i++), user, day, tags});
    }
    return pt::Corpus::from_records(std::move(records));
}

pt::ClassConfig ab_config() {
    pt::ClassConfig cfg;
    cfg.classes = {"A", "B"};
    cfg.seed_hashtags = {{"A", {"a1"}}, {"B", {"b1"}}};
    cfg.golden_hashtags = {{"A", {"ga"}}, {"B", {"gb"}}};
    return cfg;
}

pt::SynthConfig small_synth(std::uint64_t seed) {
    pt::SynthConfig synth;
    synth.seed = seed;
    synth.users_per_class = 40;
    synth.neutral_users = 50;
    synth.class_vocab_size = 12;
    synth.shared_vocab_size = 60;
    return synth;
}

}  // namespace

TEST_CASE("run_ptr reaches the seed fixed point at iteration two") {
    // Seeds separate the users perfectly and nothing new can pass the gate.
    const auto corpus = corpus_of({
        {"ua", 0, {"a1"}}, {"ua", 0, {"a1"}},
        {"ub", 0, {"b1"}}, {"ub", 0, {"b1"}},
    });
    const auto traces = pt::run_ptr(corpus, ab_config());

    REQUIRE(traces.size() == 2);
    CHECK(traces[0].iteration == 1);
    CHECK_FALSE(traces[0].converged);
    CHECK(traces[1].converged);
    CHECK(traces[1].hashtags == traces[0].hashtags);
    CHECK(traces[0].hashtags == pt::HashtagPartition::seeds(ab_config()));
    CHECK(traces[1].users.assignments.at("A") == std::set<pt::UserId>{"ua"});
    CHECK(traces[1].users.assignments.at("B") == std::set<pt::UserId>{"ub"});
}

TEST_CASE("run_ptr on an empty corpus converges immediately") {
    const pt::Corpus corpus;
    const auto traces = pt::run_ptr(corpus, ab_config());
    REQUIRE(traces.size() == 1);
    CHECK(traces[0].converged);
    CHECK(traces[0].users.assigned_count() == 0);
    CHECK(traces[0].hashtags == pt::HashtagPartition::seeds(ab_config()));
}

TEST_CASE("run_ptr respects max_iterations and reports non-convergence") {
    const auto generated = pt::generate(small_synth(3));
    auto cfg = generated.config;
    cfg.max_iterations = 1;
    const auto stripped = pt::strip_golden(generated.corpus, cfg);
    const auto traces = pt::run_ptr(stripped, cfg);
    REQUIRE(traces.size() == 1);
    CHECK_FALSE(traces.back().converged);
}

TEST_CASE("run_ptr is deterministic and thread-count independent") {
    const auto generated = pt::generate(small_synth(17));
    const auto stripped = pt::strip_golden(generated.corpus, generated.config);

    const auto first = pt::run_ptr(stripped, generated.config);
    const auto second = pt::run_ptr(stripped, generated.config);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].users == second[i].users);
        CHECK(first[i].hashtags == second[i].hashtags);
    }

    pt::RunOptions parallel;
    parallel.threads = 4;
    const auto threaded = pt::run_ptr(stripped, generated.config, parallel);
    REQUIRE(threaded.size() == first.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].users == threaded[i].users);
        CHECK(first[i].hashtags == threaded[i].hashtags);
    }
}

TEST_CASE("run_ptr evaluates every iteration when a golden set is supplied") {
    const auto generated = pt::generate(small_synth(23));
    const auto golden = pt::build_golden(generated.corpus, generated.config);
    const auto stripped = pt::strip_golden(generated.corpus, generated.config);

    pt::RunOptions options;
    options.golden = &golden;
    options.total_users = generated.corpus.user_count();
    const auto traces = pt::run_ptr(stripped, generated.config, options);
    REQUIRE(!traces.empty());
    for (const auto& trace : traces) {
        REQUIRE(trace.eval.has_value());
        CHECK(trace.eval->macro_f >= 0.0);
        CHECK(trace.eval->macro_f <= 1.0);
    }
}

TEST_CASE("run_tptr on a one-day corpus equals the first batch iteration") {
    const auto corpus = corpus_of({
        {"ua", 0, {"a1"}}, {"ua", 0, {"a1", "x"}},
        {"ub", 0, {"b1"}}, {"uc", 0, {"x"}},
    });
    const auto cfg = ab_config();
    const auto temporal = pt::run_tptr(corpus, cfg);
    const auto batch = pt::run_ptr(corpus, cfg);

    REQUIRE(temporal.size() == 1);
    REQUIRE(!batch.empty());
    CHECK(temporal[0].users == batch[0].users);
    CHECK(temporal[0].hashtags == batch[0].hashtags);
}

TEST_CASE("run_tptr keeps users classified on silent days") {
    const auto corpus = corpus_of({
        {"ua", 0, {"a1"}},          // classified on day 0
        {"ub", 1, {"b1"}},          // ua is silent on day 1
    });
    const auto traces = pt::run_tptr(corpus, ab_config());
    REQUIRE(traces.size() == 2);
    CHECK(traces[0].users.assignments.at("A").count("ua") == 1);
    CHECK(traces[1].users.assignments.at("A").count("ua") == 1);  // backup keeps ua
    CHECK(traces[1].users.assignments.at("B").count("ub") == 1);
}

TEST_CASE("run_tptr coverage is non-decreasing over a multi-day corpus") {
    const auto generated = pt::generate(small_synth(31));
    const auto golden = pt::build_golden(generated.corpus, generated.config);
    const auto stripped = pt::strip_golden(generated.corpus, generated.config);

    pt::RunOptions options;
    options.golden = &golden;
    options.total_users = generated.corpus.user_count();
    const auto traces = pt::run_tptr(stripped, generated.config, options);
    REQUIRE(traces.size() == static_cast<std::size_t>(stripped.max_day() + 1));

    std::size_t previous_assigned = 0;
    double previous_gamma = 0.0, previous_big_gamma = 0.0;
    std::set<pt::UserId> previously_assigned;
    for (const auto& trace : traces) {
        const auto assigned = trace.users.all_assigned();
        CHECK(assigned.size() >= previous_assigned);
        for (const auto& u : previously_assigned) CHECK(assigned.count(u) == 1);
        REQUIRE(trace.eval.has_value());
        CHECK(trace.eval->gamma >= previous_gamma);
        CHECK(trace.eval->big_gamma >= previous_big_gamma);
        previous_assigned = assigned.size();
        previously_assigned = assigned;
        previous_gamma = trace.eval->gamma;
        previous_big_gamma = trace.eval->big_gamma;
    }
}

TEST_CASE("run traces keep disjoint partitions with seeds in place") {
    const auto generated = pt::generate(small_synth(47));
    const auto stripped = pt::strip_golden(generated.corpus, generated.config);
    for (const auto& trace : pt::run_ptr(stripped, generated.config)) {
        CHECK(trace.users.disjoint());
        CHECK(trace.hashtags.disjoint());
        for (const auto& c : generated.config.classes)
            for (const auto& seed : generated.config.seed_hashtags.at(c))
                CHECK(trace.hashtags.assignments.at(c).count(seed) == 1);
    }
}
