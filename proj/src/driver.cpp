#include "polartrack/driver.hpp"

namespace polartrack {

std::vector<IterationTrace> run_ptr(const Corpus& corpus, const ClassConfig& config,
                                    const RunOptions& options) {
    config.validate();
    const std::size_t total_users =
        options.total_users > 0 ? options.total_users : corpus.user_count();
    const auto& universe = corpus.all_tweets();

    HashtagPartition hashtags = HashtagPartition::seeds(config);
    UserPartition users = UserPartition::empty(config);

    std::vector<IterationTrace> traces;
    for (int iteration = 1; iteration <= config.max_iterations; ++iteration) {
        UserPartition next_users =
            users_class(corpus, hashtags, users, config.alpha, universe, options.threads);

        std::vector<HashtagScore> scores;
        HashtagPartition next_hashtags =
            hashtags_class(corpus, next_users, config, universe, options.threads,
                           options.scores_out ? &scores : nullptr);
        if (options.scores_out) options.scores_out->push_back(std::move(scores));

        // Fixed point reached when one full iteration changes nothing.
        const bool converged = next_hashtags == hashtags && next_users == users;

        IterationTrace trace;
        trace.iteration = iteration;
        trace.hashtags = next_hashtags;
        trace.users = next_users;
        trace.converged = converged;
        if (options.golden) trace.eval = evaluate(next_users, *options.golden, total_users);
        traces.push_back(std::move(trace));

        hashtags = std::move(next_hashtags);
        users = std::move(next_users);
        if (converged) break;
    }
    return traces;
}

std::vector<IterationTrace> run_tptr(const Corpus& corpus, const ClassConfig& config,
                                     const RunOptions& options) {
    config.validate();
    const std::size_t total_users =
        options.total_users > 0 ? options.total_users : corpus.user_count();

    HashtagPartition hashtags = HashtagPartition::seeds(config);
    UserPartition users = UserPartition::empty(config);

    std::vector<IterationTrace> traces;
    for (int day = 0; day <= corpus.max_day(); ++day) {
        const std::vector<TweetIndex> universe = corpus.tweets_of_day(day);

        users = users_class(corpus, hashtags, users, config.alpha, universe, options.threads);

        std::vector<HashtagScore> scores;
        hashtags = hashtags_class(corpus, users, config, universe, options.threads,
                                  options.scores_out ? &scores : nullptr);
        if (options.scores_out) options.scores_out->push_back(std::move(scores));

        IterationTrace trace;
        trace.iteration = day + 1;
        trace.hashtags = hashtags;
        trace.users = users;
        if (options.golden) trace.eval = evaluate(users, *options.golden, total_users);
        traces.push_back(std::move(trace));
    }
    return traces;
}

}  // namespace polartrack
