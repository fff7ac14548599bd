#include <random>

#include "doctest.h"
#include "micro.hpp"
#include "oracle.hpp"
#include "polartrack/classify.hpp"

namespace pt = polartrack;

namespace {

pt::Corpus corpus_of(std::vector<std::pair<std::string, std::vector<std::string>>> tweets) {
    std::vector<pt::TweetRecord> records;
    int i = 0;
    for (auto& [user, tags] : tweets) {
        std::sort(tags.begin(), tags.end());
        records.push_back(pt::TweetRecord{"t" + std::to_string(i++), user, 0, tags});
    }
    return pt::Corpus::from_records(std::move(records));
}

pt::HashtagPartition two_sets(std::set<std::string> a, std::set<std::string> b) {
    pt::HashtagPartition p;
    p.assignments["A"] = std::move(a);
    p.assignments["B"] = std::move(b);
    return p;
}

pt::UserPartition no_previous() {
    pt::UserPartition p;
    p.assignments["A"];
    p.assignments["B"];
    return p;
}

}  // namespace

TEST_CASE("polarized_tweets splits a user's tweets by exclusive class mention") {
    const auto hashtags = two_sets({"a1"}, {"b1"});

    SUBCASE("clean split") {
        const auto corpus = corpus_of({{"u", {"a1"}}, {"u", {"b1"}}});
        const auto split = pt::polarized_tweets(corpus, "u", hashtags);
        CHECK(split.at("A") == std::vector<pt::TweetIndex>{0});
        CHECK(split.at("B") == std::vector<pt::TweetIndex>{1});
    }
    SUBCASE("tweet touching both classes lands nowhere") {
        const auto corpus = corpus_of({{"u", {"a1", "b1"}}});
        const auto split = pt::polarized_tweets(corpus, "u", hashtags);
        CHECK(split.at("A").empty());
        CHECK(split.at("B").empty());
    }
    SUBCASE("hashtags outside every class do not constrain") {
        const auto corpus = corpus_of({{"u", {"a1", "noise"}}});
        const auto split = pt::polarized_tweets(corpus, "u", hashtags);
        CHECK(split.at("A") == std::vector<pt::TweetIndex>{0});
    }
    SUBCASE("unknown user") {
        const auto corpus = corpus_of({{"u", {"a1"}}});
        CHECK_THROWS_AS(pt::polarized_tweets(corpus, "ghost", hashtags), std::out_of_range);
    }
}

TEST_CASE("users_class applies strict alpha dominance with backup") {
    const auto hashtags = two_sets({"a1"}, {"b1"});

    SUBCASE("3 vs 1 at alpha 2 is dominant") {
        const auto corpus =
            corpus_of({{"u", {"a1"}}, {"u", {"a1"}}, {"u", {"a1"}}, {"u", {"b1"}}});
        const auto result = pt::users_class(corpus, hashtags, no_previous(), 2.0);
        CHECK(result.assignments.at("A").count("u") == 1);
    }
    SUBCASE("2 vs 1 at alpha 2 fails and the previous class sticks") {
        const auto corpus = corpus_of({{"u", {"a1"}}, {"u", {"a1"}}, {"u", {"b1"}}});
        pt::UserPartition previous = no_previous();
        previous.assignments["B"].insert("u");
        const auto result = pt::users_class(corpus, hashtags, previous, 2.0);
        CHECK(result.assignments.at("B").count("u") == 1);
        CHECK(result.assignments.at("A").empty());
    }
    SUBCASE("a single tweet dominates all-zero counts") {
        const auto corpus = corpus_of({{"u", {"a1"}}});
        const auto result = pt::users_class(corpus, hashtags, no_previous(), 2.0);
        CHECK(result.assignments.at("A").count("u") == 1);
    }
    SUBCASE("all-zero counts never assign") {
        const auto corpus = corpus_of({{"u", {"noise"}}});
        const auto result = pt::users_class(corpus, hashtags, no_previous(), 2.0);
        CHECK(result.assigned_count() == 0);
    }
    SUBCASE("equal counts with no previous stay unassigned") {
        const auto corpus = corpus_of({{"u", {"a1"}}, {"u", {"b1"}}});
        const auto result = pt::users_class(corpus, hashtags, no_previous(), 2.0);
        CHECK(result.assigned_count() == 0);
    }
    SUBCASE("fresh dominance beats a different previous class") {
        const auto corpus = corpus_of({{"u", {"a1"}}});
        pt::UserPartition previous = no_previous();
        previous.assignments["B"].insert("u");
        const auto result = pt::users_class(corpus, hashtags, previous, 2.0);
        CHECK(result.assignments.at("A").count("u") == 1);
        CHECK(result.assignments.at("B").empty());
    }
    SUBCASE("alpha at most 1 is rejected") {
        const auto corpus = corpus_of({{"u", {"a1"}}});
        CHECK_THROWS_AS(pt::users_class(corpus, hashtags, no_previous(), 1.0),
                        std::invalid_argument);
    }
}

TEST_CASE("users_class six-user instance matches the literal re-derivation") {
    // Six users, two classes, randomized counts, pinned to one seed.
    std::mt19937 rng(61);
    std::uniform_int_distribution<int> user_pick(0, 5);
    std::uniform_int_distribution<int> tag_pick(0, 3);
    const std::vector<std::string> tags{"a1", "b1", "n1", "n2"};

    std::vector<std::pair<std::string, std::vector<std::string>>> tweets;
    std::vector<oracle::Tweet> raw;
    for (int i = 0; i < 30; ++i) {
        const std::string user = "u" + std::to_string(user_pick(rng));
        std::set<std::string> chosen{tags[tag_pick(rng)]};
        if (tag_pick(rng) == 0) chosen.insert(tags[tag_pick(rng)]);
        tweets.push_back({user, {chosen.begin(), chosen.end()}});
        raw.push_back(oracle::Tweet{user, chosen});
    }
    const auto corpus = corpus_of(tweets);
    const auto hashtags = two_sets({"a1"}, {"b1"});

    const auto expected = oracle::users_class(
        raw, corpus.users(), {"A", "B"}, {{"A", {"a1"}}, {"B", {"b1"}}}, {{"A", {}}, {"B", {}}},
        2.0);
    const auto actual = pt::users_class(corpus, hashtags, no_previous(), 2.0);
    CHECK(actual.assignments == expected);
}

TEST_CASE("users_class randomized instances match the oracle") {
    std::mt19937 rng(1234);
    for (int i = 0; i < 60; ++i) {
        const auto inst = micro::random_instance(rng);
        const auto expected =
            oracle::users_class(inst.raw, inst.corpus.users(), inst.config.classes,
                                inst.hashtag_sets, inst.previous, inst.config.alpha);
        const auto actual =
            pt::users_class(inst.corpus, micro::as_hashtag_partition(inst.hashtag_sets),
                            micro::as_user_partition(inst.previous), inst.config.alpha);
        REQUIRE(actual.assignments == expected);
    }
}

TEST_CASE("users_class invariants over randomized instances") {
    std::mt19937 rng(99);
    for (int i = 0; i < 40; ++i) {
        const auto inst = micro::random_instance(rng);
        const auto previous = micro::as_user_partition(inst.previous);
        const auto result =
            pt::users_class(inst.corpus, micro::as_hashtag_partition(inst.hashtag_sets),
                            previous, inst.config.alpha);

        CHECK(result.disjoint());

        // once assigned, never unassigned
        const auto assigned = result.all_assigned();
        for (const auto& u : previous.all_assigned())
            if (inst.corpus.has_user(u)) CHECK(assigned.count(u) == 1);

        // every assigned user exists
        for (const auto& u : assigned) CHECK(inst.corpus.has_user(u));
    }
}

TEST_CASE("users_class is invariant under class relabeling") {
    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        const auto inst = micro::random_instance(rng);
        if (inst.config.classes.size() != 2) continue;

        auto rename = [](const oracle::Sets& sets, const std::string& from,
                         const std::string& to) {
            oracle::Sets out;
            for (const auto& [c, members] : sets)
                out[c == from ? to : (c == to ? from : c)] = members;
            return out;
        };
        const auto base =
            pt::users_class(inst.corpus, micro::as_hashtag_partition(inst.hashtag_sets),
                            micro::as_user_partition(inst.previous), inst.config.alpha);
        const auto swapped = pt::users_class(
            inst.corpus, micro::as_hashtag_partition(rename(inst.hashtag_sets, "a", "b")),
            micro::as_user_partition(rename(inst.previous, "a", "b")), inst.config.alpha);
        CHECK(swapped.assignments == rename(base.assignments, "a", "b"));
    }
}

TEST_CASE("users_class output does not depend on the thread count") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 10; ++i) {
        const auto inst = micro::random_instance(rng);
        const auto hashtags = micro::as_hashtag_partition(inst.hashtag_sets);
        const auto previous = micro::as_user_partition(inst.previous);
        const auto serial = pt::users_class(inst.corpus, hashtags, previous, inst.config.alpha, 1);
        const auto parallel =
            pt::users_class(inst.corpus, hashtags, previous, inst.config.alpha, 4);
        CHECK(serial == parallel);
    }
}
