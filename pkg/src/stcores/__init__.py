"""Simultaneous (s, t)-core partitions, ballot words and Watson's U²."""
from .anderson import (
    downset_to_word,
    max_core_size,
    partition_to_word,
    size_from_word,
    ts_count_identity_check,
    word_to_downset,
    word_to_partition,
)
from .enumeration import (
    MomentSummary,
    SizeDistribution,
    brute_force_cores,
    enumerate_ballot_words,
    exact_moments,
    exact_size_distribution,
    rational_catalan,
)
from .partitions import (
    Downset,
    Partition,
    first_column_hooks,
    hook_lengths,
    is_downset,
    is_p_core,
    partition_from_hookset,
    size_from_hookset,
)
from .sampling import (
    NormalizedSample,
    SampleConfig,
    make_rng,
    monte_carlo_normalized,
    sample_core_partition,
    sample_core_size,
    sample_uniform_word,
)
from .watson import (
    EcdfComparison,
    U2Limit,
    ks_against_limit,
    persson_u2,
    size_u2_bridge,
    u2_cdf,
    u2_tail,
)
from .words import (
    BallotWord,
    PatternCounts,
    count_subsequence,
    is_ballot,
    pattern_counts,
    prefix_heights,
    rotate_to_ballot,
)

__version__ = "0.1.0"
