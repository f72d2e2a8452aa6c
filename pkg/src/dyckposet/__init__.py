"""Exact combinatorics of intervals in the Dyck pattern poset.

Dyck words ordered by subsequence (pattern) containment form a graded poset
with minimum UD.  This package materializes its intervals by brute force,
implements the known closed formulas for sizes, rank counts, cover counts and
Möbius values of staircase and two-peak initial intervals, carries the two
structural bijections (peak-less Motzkin words, squares in a grid), and ships
scan tooling for the rank-2/rank-3 extremal values and the sign-alternation
conjecture.  Every closed result is verified against the brute-force engine.
"""

from .errors import (
    ArgumentOutOfRangeError,
    DyckPatternError,
    ElementNotInIntervalError,
    InvalidCharacterError,
    InvalidMotzkinError,
    InvalidShapeParametersError,
    InvalidWordError,
    LimitExceededError,
    NotComparableError,
    NotTwoPeakError,
    OutOfGridError,
    PrefixViolationError,
    RankOutOfRangeError,
    UnbalancedError,
)
from .words import (
    DEFAULT_GENERATION_CEILING,
    DyckWord,
    RunForm,
    TwoPeakShape,
    WordStats,
    catalan,
    contains,
    elevated_staircase,
    factors,
    generate_all,
    lex_key,
    parse_word,
    pyramid,
    runs,
    staircase,
    statistics,
    two_peak,
)
from .poset import (
    IntervalModel,
    build_interval,
    covered_by,
    covers_of,
    deletion_children,
    interval_to_dot,
    interval_to_json_dict,
    mobius,
)
from .formulas import (
    cover_count_formula,
    delta_class,
    delta_histogram_closed,
    embeddable_in_staircase,
    mobius_elevated_staircase_rank2,
    mobius_pyramid,
    mobius_staircase_rank2,
    mobius_two_peak,
    narayana,
    phi0,
    phih,
    s1_two_peak_h0,
    staircase_interval_size,
    staircase_rank_count,
    two_peak_interval_size,
    two_peak_rank_count,
    two_peak_rank_count_h0,
)
from .bijections import (
    GridSquare,
    MotzkinWord,
    Triple,
    count_peakless_motzkin,
    dyck_to_motzkin,
    generate_peakless_motzkin,
    motzkin_to_dyck,
    parse_motzkin,
    path_to_triple,
    square_leq,
    square_to_triple,
    squares_in_grid,
    triple_leq,
    triple_to_path,
    triple_to_square,
    triples_in_grid,
)
from .scans import (
    ScanReport,
    scan_alternating,
    scan_rank2_max,
    scan_rank3_max,
    sweep_cover_count,
)

__version__ = "0.1.0"

__all__ = [
    "ArgumentOutOfRangeError",
    "DEFAULT_GENERATION_CEILING",
    "DyckPatternError",
    "DyckWord",
    "ElementNotInIntervalError",
    "GridSquare",
    "IntervalModel",
    "InvalidCharacterError",
    "InvalidMotzkinError",
    "InvalidShapeParametersError",
    "InvalidWordError",
    "LimitExceededError",
    "MotzkinWord",
    "NotComparableError",
    "NotTwoPeakError",
    "OutOfGridError",
    "PrefixViolationError",
    "RankOutOfRangeError",
    "RunForm",
    "ScanReport",
    "Triple",
    "TwoPeakShape",
    "UnbalancedError",
    "WordStats",
    "build_interval",
    "catalan",
    "contains",
    "count_peakless_motzkin",
    "cover_count_formula",
    "covered_by",
    "covers_of",
    "deletion_children",
    "delta_class",
    "delta_histogram_closed",
    "dyck_to_motzkin",
    "elevated_staircase",
    "embeddable_in_staircase",
    "factors",
    "generate_all",
    "generate_peakless_motzkin",
    "interval_to_dot",
    "interval_to_json_dict",
    "lex_key",
    "mobius",
    "mobius_elevated_staircase_rank2",
    "mobius_pyramid",
    "mobius_staircase_rank2",
    "mobius_two_peak",
    "motzkin_to_dyck",
    "narayana",
    "parse_motzkin",
    "parse_word",
    "path_to_triple",
    "phi0",
    "phih",
    "pyramid",
    "runs",
    "s1_two_peak_h0",
    "scan_alternating",
    "scan_rank2_max",
    "scan_rank3_max",
    "square_leq",
    "square_to_triple",
    "squares_in_grid",
    "staircase",
    "staircase_interval_size",
    "staircase_rank_count",
    "statistics",
    "sweep_cover_count",
    "triple_leq",
    "triple_to_path",
    "triple_to_square",
    "triples_in_grid",
    "two_peak",
    "two_peak_interval_size",
    "two_peak_rank_count",
    "two_peak_rank_count_h0",
]
