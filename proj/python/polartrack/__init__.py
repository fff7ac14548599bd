"""Polarized user and topic tracking over hashtag-annotated message streams.

The heavy lifting happens in the C++ extension; this package re-exports its
surface: corpus loading, the iterative user/hashtag classification, the
temporal day-by-day variant, golden-set evaluation, the seeded k-means
baseline, and the synthetic corpus generator.
"""

from ._core import (
    ClassConfig,
    ClassMetrics,
    Corpus,
    EvalReport,
    HashtagScore,
    IterationTrace,
    SynthConfig,
    TweetRecord,
    baseline_kmeans,
    build_golden,
    candidate_sets,
    default_threads,
    evaluate,
    generate,
    hashtags_class,
    load_config,
    load_corpus,
    normalize_hashtag,
    polarized_tweets,
    render_eval_text,
    run_ptr,
    run_tptr,
    save_config,
    save_corpus,
    score,
    strip_golden,
    top_hashtags,
    users_class,
)

__version__ = "0.1.0"

__all__ = [
    "ClassConfig",
    "ClassMetrics",
    "Corpus",
    "EvalReport",
    "HashtagScore",
    "IterationTrace",
    "SynthConfig",
    "TweetRecord",
    "baseline_kmeans",
    "build_golden",
    "candidate_sets",
    "default_threads",
    "evaluate",
    "generate",
    "hashtags_class",
    "load_config",
    "load_corpus",
    "normalize_hashtag",
    "polarized_tweets",
    "render_eval_text",
    "run_ptr",
    "run_tptr",
    "save_config",
    "save_corpus",
    "score",
    "strip_golden",
    "top_hashtags",
    "users_class",
    "__version__",
]
