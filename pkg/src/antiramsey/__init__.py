"""Anti-Ramsey numbers AR(n, H) at desk scale: a catalog of closed-form
values with explicit domains, extremal coloring constructions, rainbow-copy
detection with certificates, and an exact branch-and-bound oracle."""

from .colorfile import (
    ColoringFormatError,
    format_coloring,
    parse_coloring_text,
    read_coloring,
    write_coloring,
)
from .core import (
    BudgetExceeded,
    Coloring,
    EdgeSubset,
    InvalidConstruction,
    InvalidEdge,
    InvalidPattern,
    InvalidVertex,
    Kind,
    NotConstructible,
    PatternComponent,
    PatternSpec,
    ValidationReport,
    VerificationFailed,
    Witness,
    all_edges,
    component_edges,
    edge_count,
    edge_endpoints,
    edge_index,
    pattern,
    pattern_stats,
    validate_coloring,
)
from .construct import (
    ConstructionReport,
    clique_plus_two,
    cover_rainbow_plus_one,
    extremal_for,
    matching_classes,
    rainbow_clique_plus_one,
)
from .detect import (
    DetectOutcome,
    WitnessCheck,
    find_rainbow,
    list_embeddings,
    verify_witness,
)
from .formulas import (
    ASYMPTOTIC,
    CYCLE_MODES,
    OUT_OF_RANGE,
    PROVEN,
    UNKNOWN_CONSTANT,
    FormulaResult,
    ar_cycle,
    ar_kp3_tp2,
    ar_kp4_tp2,
    ar_linear_forest,
    ar_lookup,
    ar_matching,
    ar_misc_family,
    ar_p5_tp2,
    ar_path,
    schiermeyer_matching,
)
from .patterns import PatternSyntaxError, parse_pattern, render_pattern
from .search import (
    INCONCLUSIVE,
    REFUTED,
    WITNESS,
    Decision,
    SearchResult,
    SearchStats,
    brute_force_ar,
    count_partitions,
    decide_ar_at_least,
    exact_ar,
    pattern_copies,
)

__version__ = "0.1.0"

__all__ = [
    "ASYMPTOTIC",
    "BudgetExceeded",
    "CYCLE_MODES",
    "Coloring",
    "ColoringFormatError",
    "ConstructionReport",
    "Decision",
    "DetectOutcome",
    "EdgeSubset",
    "FormulaResult",
    "INCONCLUSIVE",
    "InvalidConstruction",
    "InvalidEdge",
    "InvalidPattern",
    "InvalidVertex",
    "Kind",
    "NotConstructible",
    "OUT_OF_RANGE",
    "PROVEN",
    "PatternComponent",
    "PatternSpec",
    "PatternSyntaxError",
    "REFUTED",
    "SearchResult",
    "SearchStats",
    "UNKNOWN_CONSTANT",
    "ValidationReport",
    "VerificationFailed",
    "WITNESS",
    "Witness",
    "WitnessCheck",
    "all_edges",
    "ar_cycle",
    "ar_kp3_tp2",
    "ar_kp4_tp2",
    "ar_linear_forest",
    "ar_lookup",
    "ar_matching",
    "ar_misc_family",
    "ar_p5_tp2",
    "ar_path",
    "brute_force_ar",
    "clique_plus_two",
    "component_edges",
    "count_partitions",
    "cover_rainbow_plus_one",
    "decide_ar_at_least",
    "edge_count",
    "edge_endpoints",
    "edge_index",
    "exact_ar",
    "extremal_for",
    "find_rainbow",
    "format_coloring",
    "list_embeddings",
    "matching_classes",
    "parse_coloring_text",
    "parse_pattern",
    "pattern",
    "pattern_copies",
    "pattern_stats",
    "rainbow_clique_plus_one",
    "read_coloring",
    "render_pattern",
    "schiermeyer_matching",
    "validate_coloring",
    "verify_witness",
    "write_coloring",
]
