"""Exact discovery of time-series motif sets.

Window starts and motif-set members are 0-based, like numpy indexes. The
command-line tool's JSON files use 1-based indexes.
"""

from ._core import (
    BestPair,
    Cluster,
    GenerationError,
    InvalidParameter,
    IoError,
    MotifSet,
    ScoreReport,
    TTestResult,
    __version__,
    brute_force_pair,
    cluster_mk,
    condense,
    count_matches,
    discover,
    distance,
    distance_with_abandon,
    generate,
    matching_score,
    merge,
    mk_pair,
    scan_mk,
    score_single,
    set_finder,
    shape_values,
    sliding_window,
    t_test,
    trivial_match,
)

__all__ = [
    "BestPair",
    "Cluster",
    "GenerationError",
    "InvalidParameter",
    "IoError",
    "MotifSet",
    "ScoreReport",
    "TTestResult",
    "brute_force_pair",
    "cluster_mk",
    "condense",
    "count_matches",
    "discover",
    "distance",
    "distance_with_abandon",
    "generate",
    "matching_score",
    "merge",
    "mk_pair",
    "scan_mk",
    "score_single",
    "set_finder",
    "shape_values",
    "sliding_window",
    "t_test",
    "trivial_match",
]
