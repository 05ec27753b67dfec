"""Per-vertex Randic energy: spectral, series, and contour-integral routes."""

from .bounds import (
    BoundsReport,
    BoundValue,
    VertexBounds,
    adjacent_product_lower,
    bounds_report,
    general_randic_index,
    lower_holder,
    lower_r2,
    r4_diag,
    s_value,
    upper_cauchy_schwarz,
    upper_refined,
    upper_regular,
    upper_series2,
    upper_series3,
    upper_unit,
)
from .charpoly import (
    MODE_DELETED_GRAPH,
    MODE_SUBMATRIX,
    Comparison,
    EvenCoefficients,
    Polynomial,
    VertexOrderCheck,
    char_poly_combinatorial,
    char_poly_numeric,
    disjoint_union_poly,
    even_coefficients,
    principal_submatrix_poly,
    quasi_order_compare,
    vertex_order_check,
)
from .coulson import (
    CoulsonResult,
    QuadratureConfig,
    coulson_integrand,
    coulson_vertex_energy,
    integrate_line,
)
from .energy import (
    ROUTE_ABS,
    ROUTE_EIGEN,
    ROUTE_SERIES,
    SeriesEnergies,
    VertexEnergyVector,
    graph_energy,
    partition_energies,
    series_energies,
    series_tail_bound,
    vertex_energies,
)
from .families import (
    ClosedFormEnergy,
    FamilyKind,
    FamilySpec,
    VertexClass,
    closed_form_energy,
    friendship_spectrum,
    generate,
    vertex_classes,
)
from .graph import (
    Bipartition,
    DisconnectedGraphError,
    Graph,
    GraphParseError,
    bipartition,
    connected_components,
    delete_vertex,
    disjoint_union,
    induced_subgraph,
    is_connected,
    parse_edge_list,
    serialize_edge_list,
)
from .spectral import (
    ConvergenceError,
    DegenerateDegreeError,
    EigenDecomposition,
    eigen_symmetric,
    matrix_abs,
    power_diag,
    randic_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "BoundValue",
    "BoundsReport",
    "ClosedFormEnergy",
    "Comparison",
    "ConvergenceError",
    "CoulsonResult",
    "DegenerateDegreeError",
    "DisconnectedGraphError",
    "EigenDecomposition",
    "EvenCoefficients",
    "FamilyKind",
    "FamilySpec",
    "Graph",
    "GraphParseError",
    "MODE_DELETED_GRAPH",
    "MODE_SUBMATRIX",
    "Polynomial",
    "QuadratureConfig",
    "ROUTE_ABS",
    "ROUTE_EIGEN",
    "ROUTE_SERIES",
    "SeriesEnergies",
    "VertexBounds",
    "VertexClass",
    "VertexEnergyVector",
    "VertexOrderCheck",
    "adjacent_product_lower",
    "bipartition",
    "bounds_report",
    "char_poly_combinatorial",
    "char_poly_numeric",
    "closed_form_energy",
    "connected_components",
    "coulson_integrand",
    "coulson_vertex_energy",
    "delete_vertex",
    "disjoint_union",
    "disjoint_union_poly",
    "eigen_symmetric",
    "even_coefficients",
    "friendship_spectrum",
    "general_randic_index",
    "generate",
    "graph_energy",
    "induced_subgraph",
    "integrate_line",
    "is_connected",
    "lower_holder",
    "lower_r2",
    "matrix_abs",
    "parse_edge_list",
    "partition_energies",
    "power_diag",
    "principal_submatrix_poly",
    "quasi_order_compare",
    "r4_diag",
    "randic_matrix",
    "s_value",
    "serialize_edge_list",
    "series_energies",
    "series_tail_bound",
    "upper_cauchy_schwarz",
    "upper_refined",
    "upper_regular",
    "upper_series2",
    "upper_series3",
    "upper_unit",
    "vertex_classes",
    "vertex_energies",
    "vertex_order_check",
]
