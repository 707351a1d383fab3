"""QAP tabu-search toolkit: exact delta formulas, two delta-table update
strategies, deterministic robust tabu search, and formula verification."""

from ._qapkit import (
    EXACT_FLOW_FRAME,
    BenchRecord,
    BenchSummary,
    DeltaTable,
    FlowFrame,
    InstanceShape,
    Permutation,
    QapInstance,
    RngState,
    RTerms,
    RVariant,
    SearchResult,
    Strategy,
    UpdateStats,
    VerifyLevel,
    bench_csv,
    cost,
    delta_disjoint_update,
    delta_full,
    delta_oracle,
    delta_overlap_update,
    delta_overlap_via_r,
    dist_bracket,
    exhaustive_optimum,
    flow_bracket,
    parse_qaplib,
    r_terms,
    random_instance,
    run_bench,
    run_verification,
    solve,
    to_qaplib,
    verify_per_g_identity,
    verify_simplification,
)

__all__ = [
    "EXACT_FLOW_FRAME",
    "BenchRecord",
    "BenchSummary",
    "DeltaTable",
    "FlowFrame",
    "InstanceShape",
    "Permutation",
    "QapInstance",
    "RngState",
    "RTerms",
    "RVariant",
    "SearchResult",
    "Strategy",
    "UpdateStats",
    "VerifyLevel",
    "bench_csv",
    "cost",
    "delta_disjoint_update",
    "delta_full",
    "delta_oracle",
    "delta_overlap_update",
    "delta_overlap_via_r",
    "dist_bracket",
    "exhaustive_optimum",
    "flow_bracket",
    "parse_qaplib",
    "r_terms",
    "random_instance",
    "run_bench",
    "run_verification",
    "solve",
    "to_qaplib",
    "verify_per_g_identity",
    "verify_simplification",
]

__version__ = "0.1.0"
