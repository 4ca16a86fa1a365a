"""Exact-arithmetic toolkit for positively k-spanning configurations,
Gale diagrams, and illuminated polytopes.

Everything computes over ``fractions.Fraction``; every verdict carries a
certificate that can be re-checked by plain arithmetic.
"""

from .errors import (
    BadParametersError,
    CheckFailedError,
    DegenerateInputError,
    DimensionMismatchError,
    EmptySelectionError,
    GalepolyError,
    NoCoverFoundError,
    NoEpsilonFoundError,
    NotAFacetError,
    NotASimplexFacetError,
    NotTwoSpanningError,
    SchemaError,
    TooLargeForBruteForceError,
    UnknownVertexError,
)
from .gale import (
    CofaceReport,
    PointConfiguration,
    all_points_are_vertices,
    barycenter,
    enumerate_facet_complements,
    gale_dual,
    incidence_from_gale,
    is_coface,
    realize,
    supporting_hyperplane,
    verify_facets_geometrically,
)
from .linalg import (
    QQ,
    ExactMatrix,
    format_rational,
    parse_rational,
    qq,
)
from .lp import (
    DependenceCertificate,
    interior_point_test,
    is_vertex_of_hull,
    nonneg_combination,
    positively_spans,
    solve_feasibility,
    strict_positive_dependence,
    verify_certificate,
)
from .mani import (
    BlockDiagramPlan,
    CounterexampleReport,
    FormulaRow,
    ManiConstruction,
    SimplicialConstruction,
    StackCertificate,
    build_block_diagram,
    construct_nonsimplicial_mani,
    default_block_size,
    dual_spanning_report,
    formula_table,
    formulas,
    geometric_stack_point,
    mani_simplicial,
    spanning_bound_counterexample,
)
from .polytope import (
    IlluminationReport,
    IncidencePolytope,
    MatchingReport,
    OppositeSetReport,
    crosspolytope,
    cyclic_polytope,
    gamma,
    illumination_report,
    inner_diagonal_matching,
    inner_diagonals,
    is_edge,
    missing_edges,
    simplex,
    stack_simplex_facet,
)
from .spanning import (
    MinimalityReport,
    SpanningReport,
    VectorConfiguration,
    is_minimal_k_spanning,
    is_positively_k_spanning,
    standard_minimal_config,
)

__version__ = "0.1.0"

__all__ = [
    "BadParametersError",
    "BlockDiagramPlan",
    "CheckFailedError",
    "CofaceReport",
    "CounterexampleReport",
    "DegenerateInputError",
    "DependenceCertificate",
    "DimensionMismatchError",
    "EmptySelectionError",
    "ExactMatrix",
    "FormulaRow",
    "GalepolyError",
    "IlluminationReport",
    "IncidencePolytope",
    "ManiConstruction",
    "MatchingReport",
    "MinimalityReport",
    "NoCoverFoundError",
    "NoEpsilonFoundError",
    "NotAFacetError",
    "NotASimplexFacetError",
    "NotTwoSpanningError",
    "OppositeSetReport",
    "PointConfiguration",
    "QQ",
    "SchemaError",
    "SimplicialConstruction",
    "SpanningReport",
    "StackCertificate",
    "TooLargeForBruteForceError",
    "UnknownVertexError",
    "VectorConfiguration",
    "all_points_are_vertices",
    "barycenter",
    "build_block_diagram",
    "construct_nonsimplicial_mani",
    "crosspolytope",
    "cyclic_polytope",
    "default_block_size",
    "dual_spanning_report",
    "enumerate_facet_complements",
    "formula_table",
    "formulas",
    "format_rational",
    "gale_dual",
    "gamma",
    "geometric_stack_point",
    "illumination_report",
    "incidence_from_gale",
    "inner_diagonal_matching",
    "inner_diagonals",
    "interior_point_test",
    "is_coface",
    "is_edge",
    "is_minimal_k_spanning",
    "is_positively_k_spanning",
    "is_vertex_of_hull",
    "mani_simplicial",
    "missing_edges",
    "nonneg_combination",
    "parse_rational",
    "positively_spans",
    "qq",
    "realize",
    "simplex",
    "solve_feasibility",
    "spanning_bound_counterexample",
    "stack_simplex_facet",
    "standard_minimal_config",
    "strict_positive_dependence",
    "supporting_hyperplane",
    "verify_certificate",
    "verify_facets_geometrically",
]
