"""Skew spectra of oriented graphs: exact polynomials, cover expansions, radii."""

from .covers import (
    Cover,
    coefficient_via_lemma21,
    cover_routing_sign,
    cover_term,
    enumerate_covers,
    verify_theorem1_cancellation,
)
from .exactpoly import (
    IntPoly,
    charpoly,
    cospectrality_classes,
    holds_problem1_identity,
    matching_counts,
    matching_polynomial,
)
from .graph import (
    Cycle,
    Graph,
    delete_edge,
    delete_vertices,
    enumerate_cycles,
    generate,
    is_bipartite,
    is_connected,
    is_odd_cycle_graph,
    parse_graph6,
    to_graph6,
)
from .orientation import (
    Orientation,
    SkewMatrix,
    Switching,
    apply_switching,
    canonical_bipartite_orientation,
    enumerate_orientations,
    reverse,
    skew_matrix,
    switching_class_representatives,
    theorem1_orientation,
)
from .spectra import (
    SpectralReport,
    check_bipartite_radius_equality,
    check_edge_monotonicity,
    check_extremal_bounds,
    check_radius_constant,
    max_skew_spectral_radius,
    spectral_radius_adjacency,
    spectral_radius_skew,
)

__all__ = [
    "Cover",
    "coefficient_via_lemma21",
    "cover_routing_sign",
    "cover_term",
    "enumerate_covers",
    "verify_theorem1_cancellation",
    "IntPoly",
    "charpoly",
    "cospectrality_classes",
    "holds_problem1_identity",
    "matching_counts",
    "matching_polynomial",
    "Cycle",
    "Graph",
    "delete_edge",
    "delete_vertices",
    "enumerate_cycles",
    "generate",
    "is_bipartite",
    "is_connected",
    "is_odd_cycle_graph",
    "parse_graph6",
    "to_graph6",
    "Orientation",
    "SkewMatrix",
    "Switching",
    "apply_switching",
    "canonical_bipartite_orientation",
    "enumerate_orientations",
    "reverse",
    "skew_matrix",
    "switching_class_representatives",
    "theorem1_orientation",
    "SpectralReport",
    "check_bipartite_radius_equality",
    "check_edge_monotonicity",
    "check_extremal_bounds",
    "check_radius_constant",
    "max_skew_spectral_radius",
    "spectral_radius_adjacency",
    "spectral_radius_skew",
]

__version__ = "0.1.0"
