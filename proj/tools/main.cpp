#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "polartrack/baseline.hpp"
#include "polartrack/driver.hpp"
#include "polartrack/parallel.hpp"
#include "polartrack/report.hpp"
#include "polartrack/synth.hpp"

namespace {

namespace pt = polartrack;
namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Optional numeric overrides of config-file values.
struct Overrides {
    double alpha = 0;
    double beta = 0;
    int top_k = 0;
    int max_iterations = 0;
    bool has_alpha = false, has_beta = false, has_top_k = false, has_max_iterations = false;

    void apply(pt::ClassConfig& cfg) const {
        if (has_alpha) cfg.alpha = alpha;
        if (has_beta) cfg.beta = beta;
        if (has_top_k) cfg.top_k = top_k;
        if (has_max_iterations) cfg.max_iterations = max_iterations;
    }

    ordered_json to_json() const {
        ordered_json j = ordered_json::object();
        if (has_alpha) j["alpha"] = alpha;
        if (has_beta) j["beta"] = beta;
        if (has_top_k) j["top_k"] = top_k;
        if (has_max_iterations) j["max_iterations"] = max_iterations;
        return j;
    }
};

void add_override_flags(CLI::App* cmd, Overrides& ov) {
    cmd->add_option("--alpha", ov.alpha, "Override the user dominance factor")
        ->each([&](const std::string&) { ov.has_alpha = true; });
    cmd->add_option("--beta", ov.beta, "Override the hashtag dominance factor")
        ->each([&](const std::string&) { ov.has_beta = true; });
    cmd->add_option("--top-k", ov.top_k, "Override the candidate set size")
        ->each([&](const std::string&) { ov.has_top_k = true; });
    cmd->add_option("--max-iter", ov.max_iterations, "Override the iteration cap")
        ->each([&](const std::string&) { ov.has_max_iterations = true; });
}

void write_manifest(const fs::path& outdir, const std::string& subcommand,
                    const std::string& input, const std::string& config_path,
                    const Overrides& ov, int threads, bool temporal) {
    ordered_json j;
    j["subcommand"] = subcommand;
    j["input"] = input;
    j["config"] = config_path;
    j["overrides"] = ov.to_json();
    j["output_dir"] = outdir.string();
    j["threads"] = threads;
    j["temporal"] = temporal;
    j["timestamp"] = utc_timestamp();
    write_file(outdir / "manifest.json", j.dump(2) + "\n");
}

struct RunArgs {
    std::string input;
    std::string config_path;
    std::string outdir;
    Overrides overrides;
    bool with_golden = false;
    bool dump_scores = false;
    int threads = pt::default_threads();
};

void add_run_flags(CLI::App* cmd, RunArgs& args, bool with_scores = true) {
    cmd->add_option("input", args.input, "Corpus file (one JSON record per line)")->required();
    cmd->add_option("-c,--config", args.config_path, "Class configuration file")->required();
    cmd->add_option("-o,--out", args.outdir, "Output directory");
    cmd->add_flag("--golden", args.with_golden,
                  "Build the golden set and evaluate every iteration");
    if (with_scores)
        cmd->add_flag("--dump-scores", args.dump_scores, "Write the per-iteration score table");
    cmd->add_option("--threads", args.threads, "Worker threads (never changes the output)");
    add_override_flags(cmd, args.overrides);
}

int do_run(const RunArgs& args, bool temporal) {
    pt::ClassConfig cfg = pt::load_config(args.config_path);
    args.overrides.apply(cfg);
    cfg.validate();

    const pt::Corpus corpus = pt::load_corpus(args.input);
    pt::GoldenSet golden;
    if (args.with_golden) golden = pt::build_golden(corpus, cfg);

    // Golden hashtags never reach the algorithm.
    const pt::Corpus stripped = pt::strip_golden(corpus, cfg);

    std::vector<std::vector<pt::HashtagScore>> scores;
    pt::RunOptions options;
    options.golden = args.with_golden ? &golden : nullptr;
    options.total_users = corpus.user_count();
    options.threads = args.threads;
    options.scores_out = args.dump_scores ? &scores : nullptr;

    const auto traces = temporal ? pt::run_tptr(stripped, cfg, options)
                                 : pt::run_ptr(stripped, cfg, options);

    const std::string report = pt::render_run_text(traces, cfg, temporal);
    std::cout << report;

    if (!args.outdir.empty()) {
        const fs::path outdir(args.outdir);
        fs::create_directories(outdir);
        write_manifest(outdir, temporal ? "tptr" : "run", args.input, args.config_path,
                       args.overrides, args.threads, temporal);
        pt::save_config(cfg, outdir / "config.json");
        write_file(outdir / "trace.jsonl", pt::render_trace_jsonl(traces, cfg));
        write_file(outdir / "report.txt", report);
        if (!traces.empty()) {
            write_file(outdir / "users.json",
                       pt::render_partition_json(traces.back().users.assignments) + "\n");
            write_file(outdir / "hashtags.json",
                       pt::render_partition_json(traces.back().hashtags.assignments) + "\n");
        }
        if (args.dump_scores)
            write_file(outdir / "scores.tsv", pt::render_scores_tsv(scores, cfg));
    }
    return 0;
}

int do_gen(const pt::SynthConfig& synth, const std::string& out,
           std::string config_out, std::string truth_out, int threads) {
    const pt::SynthOutput result = pt::generate(synth, threads);

    const fs::path corpus_path(out);
    if (corpus_path.has_parent_path()) fs::create_directories(corpus_path.parent_path());
    pt::save_corpus(result.corpus, corpus_path);

    fs::path base = corpus_path;
    base.replace_extension();
    if (config_out.empty()) config_out = base.string() + ".config.json";
    if (truth_out.empty()) truth_out = base.string() + ".truth.json";
    pt::save_config(result.config, config_out);
    write_file(truth_out, pt::render_partition_json(result.ground_truth.assignments) + "\n");

    std::cout << "corpus: " << out << " (" << result.corpus.size() << " records, "
              << result.corpus.user_count() << " users)\n"
              << "config: " << config_out << "\n"
              << "truth:  " << truth_out << "\n";
    return 0;
}

int do_baseline(const RunArgs& args) {
    pt::ClassConfig cfg = pt::load_config(args.config_path);
    args.overrides.apply(cfg);
    cfg.validate();

    const pt::Corpus corpus = pt::load_corpus(args.input);
    pt::GoldenSet golden;
    if (args.with_golden) golden = pt::build_golden(corpus, cfg);
    const pt::Corpus stripped = pt::strip_golden(corpus, cfg);

    const auto [vectors, features] =
        pt::build_vectors(stripped, static_cast<std::size_t>(cfg.top_k), args.threads);
    const pt::UserPartition partition =
        pt::seeded_kmeans(vectors, features, cfg, args.threads);

    std::ostringstream report;
    report << "seeded k-means: " << vectors.size() << " of " << stripped.user_count()
           << " users vectorized over " << features.dims.size() << " dimensions\n";
    std::optional<pt::EvalReport> eval;
    if (args.with_golden) {
        eval = pt::evaluate(partition, golden, corpus.user_count());
        report << pt::render_eval_text(*eval, cfg);
    }
    std::cout << report.str();

    if (!args.outdir.empty()) {
        const fs::path outdir(args.outdir);
        fs::create_directories(outdir);
        write_manifest(outdir, "baseline", args.input, args.config_path, args.overrides,
                       args.threads, false);
        pt::save_config(cfg, outdir / "config.json");
        write_file(outdir / "report.txt", report.str());
        write_file(outdir / "users.json",
                   pt::render_partition_json(partition.assignments) + "\n");
        if (eval)
            write_file(outdir / "eval.json", pt::render_eval_json(*eval, cfg) + "\n");
    }
    return 0;
}

int do_eval(const std::string& input, const std::string& config_path,
            const std::string& users_path, const std::string& outdir) {
    const pt::ClassConfig cfg = pt::load_config(config_path);
    const pt::Corpus corpus = pt::load_corpus(input);
    const pt::GoldenSet golden = pt::build_golden(corpus, cfg);

    pt::UserPartition partition;
    partition.assignments = pt::parse_partition_json(read_file(users_path));
    for (const auto& [c, members] : partition.assignments)
        for (const auto& u : members)
            if (!corpus.has_user(u))
                throw std::runtime_error("users file names unknown user '" + u + "'");
    if (!partition.disjoint())
        throw std::runtime_error("users file assigns a user to two classes");

    const pt::EvalReport report = pt::evaluate(partition, golden, corpus.user_count());
    const std::string text = pt::render_eval_text(report, cfg);
    std::cout << text;

    if (!outdir.empty()) {
        const fs::path dir(outdir);
        fs::create_directories(dir);
        write_manifest(dir, "eval", input, config_path, Overrides{}, 1, false);
        write_file(dir / "report.txt", text);
        write_file(dir / "eval.json", pt::render_eval_json(report, cfg) + "\n");
    }
    return 0;
}

int do_report(const std::string& run_dir) {
    const fs::path dir(run_dir);
    const auto manifest = nlohmann::json::parse(read_file(dir / "manifest.json"));
    const bool temporal = manifest.value("temporal", false);
    const pt::ClassConfig cfg = pt::load_config(dir / "config.json");
    std::cout << pt::render_run_text_from_jsonl(read_file(dir / "trace.jsonl"), cfg, temporal);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discovers polarized user communities and their discriminating hashtags\n"
                 "in a hashtag-annotated message stream."};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a synthetic planted-polarization corpus");
    pt::SynthConfig synth;
    std::string gen_out = "corpus.jsonl";
    std::string gen_config_out, gen_truth_out;
    int gen_threads = pt::default_threads();
    gen->add_option("--seed", synth.seed, "Generator seed");
    gen->add_option("--classes", synth.classes, "Number of polarization classes");
    gen->add_option("--users-per-class", synth.users_per_class, "Polarized users per class");
    gen->add_option("--neutral-users", synth.neutral_users, "Users with no planted class");
    gen->add_option("--days", synth.days, "Number of stream days");
    gen->add_option("--tweets-per-day", synth.tweets_per_user_per_day,
                    "Mean tweets per user per day");
    gen->add_option("--class-vocab", synth.class_vocab_size, "Discriminating hashtags per class");
    gen->add_option("--shared-vocab", synth.shared_vocab_size, "Shared hashtag vocabulary size");
    gen->add_option("--leak-prob", synth.leak_prob,
                    "Probability a class draw leaks into another class's vocabulary");
    gen->add_option("--golden-frac", synth.golden_frac,
                    "Fraction of each class's users emitting the golden hashtag");
    gen->add_option("-o,--out", gen_out, "Corpus output path");
    gen->add_option("--config-out", gen_config_out, "Config output path");
    gen->add_option("--truth-out", gen_truth_out, "Ground-truth output path");
    gen->add_option("--threads", gen_threads, "Worker threads");

    // run / tptr
    auto* run = app.add_subcommand("run", "Batch fixed-point run");
    RunArgs run_args;
    add_run_flags(run, run_args);

    auto* tptr = app.add_subcommand("tptr", "Temporal day-by-day run");
    RunArgs tptr_args;
    add_run_flags(tptr, tptr_args);

    // baseline
    auto* baseline = app.add_subcommand("baseline", "Seeded k-means baseline");
    RunArgs baseline_args;
    add_run_flags(baseline, baseline_args, /*with_scores=*/false);

    // eval
    auto* eval = app.add_subcommand("eval", "Evaluate a stored user partition");
    std::string eval_input, eval_config, eval_users, eval_out;
    eval->add_option("input", eval_input, "Corpus file (with golden hashtags)")->required();
    eval->add_option("-c,--config", eval_config, "Class configuration file")->required();
    eval->add_option("-u,--users", eval_users, "User partition JSON")->required();
    eval->add_option("-o,--out", eval_out, "Output directory");

    // report
    auto* report = app.add_subcommand("report", "Re-render the report of a finished run");
    std::string report_dir;
    report->add_option("dir", report_dir, "Output directory of a run/tptr invocation")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return do_gen(synth, gen_out, gen_config_out, gen_truth_out, gen_threads);
        if (run->parsed()) return do_run(run_args, false);
        if (tptr->parsed()) return do_run(tptr_args, true);
        if (baseline->parsed()) return do_baseline(baseline_args);
        if (eval->parsed()) return do_eval(eval_input, eval_config, eval_users, eval_out);
        if (report->parsed()) return do_report(report_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
