#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "polartrack/baseline.hpp"
#include "polartrack/driver.hpp"
#include "polartrack/parallel.hpp"
#include "polartrack/report.hpp"
#include "polartrack/synth.hpp"

namespace py = pybind11;
namespace pt = polartrack;

namespace {

using Sets = std::map<pt::ClassId, std::set<std::string>>;

pt::UserPartition user_partition(const Sets& sets) {
    pt::UserPartition p;
    p.assignments = sets;
    return p;
}

pt::HashtagPartition hashtag_partition(const Sets& sets) {
    pt::HashtagPartition p;
    p.assignments = sets;
    return p;
}

pt::GoldenSet golden_set(const Sets& sets) {
    pt::GoldenSet g;
    g.members = sets;
    return g;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Polarized user and topic tracking over hashtag-annotated message streams";

    py::class_<pt::TweetRecord>(m, "TweetRecord")
        .def(py::init<>())
        .def(py::init([](std::string id, std::string user, int day,
                         std::vector<std::string> hashtags) {
                 std::sort(hashtags.begin(), hashtags.end());
                 hashtags.erase(std::unique(hashtags.begin(), hashtags.end()), hashtags.end());
                 return pt::TweetRecord{std::move(id), std::move(user), day, std::move(hashtags)};
             }),
             py::arg("tweet_id"), py::arg("user_id"), py::arg("day"), py::arg("hashtags"))
        .def_readwrite("tweet_id", &pt::TweetRecord::tweet_id)
        .def_readwrite("user_id", &pt::TweetRecord::user_id)
        .def_readwrite("day", &pt::TweetRecord::day)
        .def_readwrite("hashtags", &pt::TweetRecord::hashtags)
        .def("__repr__", [](const pt::TweetRecord& r) {
            return "TweetRecord(id=" + r.tweet_id + ", user=" + r.user_id + ")";
        });

    py::class_<pt::ClassConfig> config(m, "ClassConfig");
    config.def(py::init<>())
        .def_readwrite("classes", &pt::ClassConfig::classes)
        .def_readwrite("seed_hashtags", &pt::ClassConfig::seed_hashtags)
        .def_readwrite("golden_hashtags", &pt::ClassConfig::golden_hashtags)
        .def_readwrite("alpha", &pt::ClassConfig::alpha)
        .def_readwrite("beta", &pt::ClassConfig::beta)
        .def_readwrite("top_k", &pt::ClassConfig::top_k)
        .def_readwrite("max_iterations", &pt::ClassConfig::max_iterations)
        .def_readwrite("golden_rule", &pt::ClassConfig::golden_rule)
        .def("validate", &pt::ClassConfig::validate);
    py::enum_<pt::ClassConfig::GoldenRule>(config, "GoldenRule")
        .value("exclusive", pt::ClassConfig::GoldenRule::exclusive)
        .value("dominance", pt::ClassConfig::GoldenRule::dominance);

    py::class_<pt::Corpus>(m, "Corpus")
        .def(py::init<>())
        .def_static("from_records", &pt::Corpus::from_records, py::arg("records"))
        .def("__len__", &pt::Corpus::size)
        .def_property_readonly("records", &pt::Corpus::records)
        .def_property_readonly("users", &pt::Corpus::users)
        .def_property_readonly("user_count", &pt::Corpus::user_count)
        .def_property_readonly("max_day", &pt::Corpus::max_day)
        .def_property_readonly("hashtag_freq", &pt::Corpus::hashtag_freq)
        .def("has_user", &pt::Corpus::has_user, py::arg("user_id"))
        .def("tweets_of_user", &pt::Corpus::tweets_of_user, py::arg("user_id"))
        .def("tweets_of_day", &pt::Corpus::tweets_of_day, py::arg("day"));

    py::class_<pt::ClassMetrics>(m, "ClassMetrics")
        .def_readonly("precision", &pt::ClassMetrics::precision)
        .def_readonly("recall", &pt::ClassMetrics::recall)
        .def_readonly("f_measure", &pt::ClassMetrics::f_measure);

    py::class_<pt::EvalReport>(m, "EvalReport")
        .def_readonly("per_class", &pt::EvalReport::per_class)
        .def_readonly("macro_f", &pt::EvalReport::macro_f)
        .def_readonly("gamma", &pt::EvalReport::gamma)
        .def_readonly("big_gamma", &pt::EvalReport::big_gamma);

    py::class_<pt::HashtagScore>(m, "HashtagScore")
        .def_readonly("hashtag", &pt::HashtagScore::hashtag)
        .def_readonly("per_class", &pt::HashtagScore::per_class);

    py::class_<pt::IterationTrace>(m, "IterationTrace")
        .def_readonly("iteration", &pt::IterationTrace::iteration)
        .def_readonly("converged", &pt::IterationTrace::converged)
        .def_property_readonly(
            "hashtags", [](const pt::IterationTrace& t) { return t.hashtags.assignments; })
        .def_property_readonly(
            "users", [](const pt::IterationTrace& t) { return t.users.assignments; })
        .def_readonly("eval", &pt::IterationTrace::eval);

    py::class_<pt::SynthConfig>(m, "SynthConfig")
        .def(py::init<>())
        .def_readwrite("seed", &pt::SynthConfig::seed)
        .def_readwrite("classes", &pt::SynthConfig::classes)
        .def_readwrite("users_per_class", &pt::SynthConfig::users_per_class)
        .def_readwrite("neutral_users", &pt::SynthConfig::neutral_users)
        .def_readwrite("days", &pt::SynthConfig::days)
        .def_readwrite("tweets_per_user_per_day", &pt::SynthConfig::tweets_per_user_per_day)
        .def_readwrite("class_vocab_size", &pt::SynthConfig::class_vocab_size)
        .def_readwrite("shared_vocab_size", &pt::SynthConfig::shared_vocab_size)
        .def_readwrite("leak_prob", &pt::SynthConfig::leak_prob)
        .def_readwrite("golden_frac", &pt::SynthConfig::golden_frac);

    m.def("normalize_hashtag", &pt::normalize_hashtag, py::arg("raw"));
    m.def("load_corpus", &pt::load_corpus, py::arg("path"));
    m.def("save_corpus", &pt::save_corpus, py::arg("corpus"), py::arg("path"));
    m.def("load_config", &pt::load_config, py::arg("path"));
    m.def("save_config", &pt::save_config, py::arg("config"), py::arg("path"));
    m.def("strip_golden", &pt::strip_golden, py::arg("corpus"), py::arg("config"));
    m.def(
        "top_hashtags",
        [](const pt::Corpus& corpus, const std::vector<pt::TweetIndex>& tweets, std::size_t k) {
            return pt::top_hashtags(corpus, tweets, k);
        },
        py::arg("corpus"), py::arg("tweet_ids"), py::arg("k"));

    m.def(
        "polarized_tweets",
        [](const pt::Corpus& corpus, const pt::UserId& user, const Sets& hashtags) {
            return pt::polarized_tweets(corpus, user, hashtag_partition(hashtags));
        },
        py::arg("corpus"), py::arg("user"), py::arg("hashtags"));
    m.def(
        "users_class",
        [](const pt::Corpus& corpus, const Sets& hashtags, const Sets& previous, double alpha,
           int threads) {
            return pt::users_class(corpus, hashtag_partition(hashtags), user_partition(previous),
                                   alpha, threads)
                .assignments;
        },
        py::arg("corpus"), py::arg("hashtags"), py::arg("previous"), py::arg("alpha"),
        py::arg("threads") = 1);
    m.def(
        "hashtags_class",
        [](const pt::Corpus& corpus, const Sets& users, const pt::ClassConfig& config,
           int threads) {
            return pt::hashtags_class(corpus, user_partition(users), config, threads).assignments;
        },
        py::arg("corpus"), py::arg("users"), py::arg("config"), py::arg("threads") = 1);
    m.def(
        "candidate_sets",
        [](const pt::Corpus& corpus, const Sets& users, std::size_t top_k) {
            return pt::candidate_sets(corpus, user_partition(users), top_k, corpus.all_tweets());
        },
        py::arg("corpus"), py::arg("users"), py::arg("top_k"));
    m.def(
        "score",
        [](const pt::Corpus& corpus, const pt::Hashtag& h,
           const std::map<pt::ClassId, std::vector<pt::TweetIndex>>& candidate_tweets) {
            return pt::score(corpus, h, candidate_tweets);
        },
        py::arg("corpus"), py::arg("hashtag"), py::arg("candidate_tweet_sets"));

    m.def(
        "build_golden",
        [](const pt::Corpus& corpus, const pt::ClassConfig& config) {
            return pt::build_golden(corpus, config).members;
        },
        py::arg("corpus"), py::arg("config"));
    m.def(
        "evaluate",
        [](const Sets& users, const Sets& golden, std::size_t total_users) {
            return pt::evaluate(user_partition(users), golden_set(golden), total_users);
        },
        py::arg("users"), py::arg("golden"), py::arg("total_users"));

    m.def(
        "run_ptr",
        [](const pt::Corpus& corpus, const pt::ClassConfig& config,
           const std::optional<Sets>& golden, std::size_t total_users, int threads) {
            pt::RunOptions options;
            pt::GoldenSet g;
            if (golden) {
                g = golden_set(*golden);
                options.golden = &g;
            }
            options.total_users = total_users;
            options.threads = threads;
            return pt::run_ptr(corpus, config, options);
        },
        py::arg("corpus"), py::arg("config"), py::arg("golden") = std::nullopt,
        py::arg("total_users") = 0, py::arg("threads") = 1);
    m.def(
        "run_tptr",
        [](const pt::Corpus& corpus, const pt::ClassConfig& config,
           const std::optional<Sets>& golden, std::size_t total_users, int threads) {
            pt::RunOptions options;
            pt::GoldenSet g;
            if (golden) {
                g = golden_set(*golden);
                options.golden = &g;
            }
            options.total_users = total_users;
            options.threads = threads;
            return pt::run_tptr(corpus, config, options);
        },
        py::arg("corpus"), py::arg("config"), py::arg("golden") = std::nullopt,
        py::arg("total_users") = 0, py::arg("threads") = 1);

    m.def(
        "baseline_kmeans",
        [](const pt::Corpus& corpus, const pt::ClassConfig& config, int threads) {
            const auto [vectors, features] =
                pt::build_vectors(corpus, static_cast<std::size_t>(config.top_k), threads);
            return pt::seeded_kmeans(vectors, features, config, threads).assignments;
        },
        py::arg("corpus"), py::arg("config"), py::arg("threads") = 1);

    m.def(
        "generate",
        [](const pt::SynthConfig& config, int threads) {
            pt::SynthOutput out = pt::generate(config, threads);
            return py::make_tuple(std::move(out.corpus), out.ground_truth.assignments,
                                  std::move(out.config));
        },
        py::arg("config"), py::arg("threads") = 1);

    m.def("default_threads", &pt::default_threads);
    m.def(
        "render_eval_text",
        [](const pt::EvalReport& report, const pt::ClassConfig& config) {
            return pt::render_eval_text(report, config);
        },
        py::arg("report"), py::arg("config"));
}
