"""Exact combinatorics toolkit for the Caccetta-Haggkvist outdegree bound.

Orgraphs (loopless digraphs without anti-parallel pairs), the forbidden
pattern catalog, exact flag densities, extremal constructions, claim
checkers, pattern augmentation, and isomorph-free exhaustive generation.
"""

from .augment import (
    AUGMENTED_BY_NAME,
    AddedVertex,
    AugmentedPattern,
    MergeClassification,
    augment,
    identification_analysis,
    merge_added,
    not_induced_catalog,
    qualifying_pairs,
)
from .constructions import (
    TreeSpec,
    TreeSpecError,
    WeightedOrgraph,
    circulant,
    from_tree_spec,
    is_biregular,
    is_uniform,
    lex_product,
    weighted_out_measure,
)
from .enumeration import (
    DEFAULT_MAX_N,
    CHVerificationReport,
    ClaimLevelSummary,
    ClaimSuiteReport,
    EnumConstraints,
    LevelSummary,
    enumerate_classes,
    levels_up_to,
    search_counterexample,
    verify_ch_up_to,
    verify_claims_up_to,
)
from .flags import (
    ALPHA,
    FLAGS_BY_NAME,
    I_A,
    K21_A,
    K21_N,
    O_A,
    O_P,
    OHAT_A,
    P3_A,
    P3_N,
    EmptySampleSpaceError,
    Flag,
    FlagError,
    LabelEmbeddingError,
    NotC3FreeError,
    TypeMismatchError,
    TypeSpec,
    density,
    generate_flags,
    relative_density,
    restricted_density,
    witnesses,
)
from .orgraph import (
    AntiParallelError,
    DuplicateEdgeError,
    GraphTextError,
    LoopError,
    Orgraph,
    OrgraphError,
    VertexRangeError,
)
from .patterns import (
    C3,
    CH3_FORBIDDEN,
    I3,
    IN_PENDANT,
    K12,
    K21,
    OUT_PENDANT,
    PATTERNS,
    PATTERNS_BY_NAME,
    TRANSITIVE_TRIANGLE,
    TWISTED_CIRCLE,
    Pattern,
    contains_induced,
    contains_subgraph,
    find_induced,
    is_pattern_free,
)
from .verifier import (
    CLAIM_CHECKS,
    BoundGuaranteeError,
    ClaimReport,
    CriticalEdgeReport,
    PreconditionError,
    Violation,
    alpha,
    alpha_sum_lhs,
    check_ch,
    critical_edge_report,
    critical_edges,
    critical_successors,
    cycle_alpha_report,
    find_critical_cycle,
    find_low_outdegree_vertex,
    is_c4_saturated,
    per_vertex_contribution,
    run_all_claims,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # orgraph
    "Orgraph",
    "OrgraphError",
    "LoopError",
    "AntiParallelError",
    "DuplicateEdgeError",
    "VertexRangeError",
    "GraphTextError",
    # patterns
    "Pattern",
    "C3",
    "I3",
    "K12",
    "K21",
    "TRANSITIVE_TRIANGLE",
    "IN_PENDANT",
    "OUT_PENDANT",
    "TWISTED_CIRCLE",
    "CH3_FORBIDDEN",
    "PATTERNS",
    "PATTERNS_BY_NAME",
    "find_induced",
    "contains_induced",
    "contains_subgraph",
    "is_pattern_free",
    # flags
    "TypeSpec",
    "Flag",
    "FlagError",
    "TypeMismatchError",
    "EmptySampleSpaceError",
    "LabelEmbeddingError",
    "NotC3FreeError",
    "ALPHA",
    "O_A",
    "O_P",
    "OHAT_A",
    "I_A",
    "K21_A",
    "P3_A",
    "K21_N",
    "P3_N",
    "FLAGS_BY_NAME",
    "density",
    "relative_density",
    "restricted_density",
    "witnesses",
    "generate_flags",
    # constructions
    "circulant",
    "lex_product",
    "TreeSpec",
    "TreeSpecError",
    "WeightedOrgraph",
    "from_tree_spec",
    "weighted_out_measure",
    "is_uniform",
    "is_biregular",
    # verifier
    "alpha",
    "critical_successors",
    "critical_edges",
    "critical_edge_report",
    "CriticalEdgeReport",
    "find_critical_cycle",
    "cycle_alpha_report",
    "Violation",
    "ClaimReport",
    "CLAIM_CHECKS",
    "run_all_claims",
    "per_vertex_contribution",
    "alpha_sum_lhs",
    "is_c4_saturated",
    "check_ch",
    "find_low_outdegree_vertex",
    "PreconditionError",
    "BoundGuaranteeError",
    # augment
    "qualifying_pairs",
    "augment",
    "AddedVertex",
    "AugmentedPattern",
    "AUGMENTED_BY_NAME",
    "not_induced_catalog",
    "MergeClassification",
    "merge_added",
    "identification_analysis",
    # enumeration
    "DEFAULT_MAX_N",
    "EnumConstraints",
    "enumerate_classes",
    "verify_ch_up_to",
    "verify_claims_up_to",
    "search_counterexample",
    "levels_up_to",
    "LevelSummary",
    "CHVerificationReport",
    "ClaimLevelSummary",
    "ClaimSuiteReport",
]
