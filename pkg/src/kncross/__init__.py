"""Exact combinatorial maps of good drawings of complete graphs.

The package represents a drawing of K_n as its planarized map (crossings
become degree-4 nodes), computes k-edge statistics and the crossing
number identities they satisfy, and decides shellability and
bishellability with machine-checkable witnesses.
"""

from .geom import Point, circle_point, orient, point, proper_intersection
from .drawing import (
    BadCrossingDegree,
    DeletionView,
    Drawing,
    EdgePathInconsistent,
    EulerViolation,
    K4Census,
    build_drawing,
    crossing_count,
    delete_view,
    k4_census,
    reference_class_vertices,
    rotation_system,
    validate_good,
    weak_iso_equal,
)
from .planarize import DegenerateInput, planarize_points
from .kedges import (
    CumulativeSums,
    KEdgeVector,
    crossings_from_cumulative,
    crossings_from_k_edges,
    cumulative_sums,
    double_cumulative_bound_holds,
    hill_number,
    k_edge_vector,
    k_value,
    side_of,
)
from .shelling import (
    BishellWitness,
    InvariantEdgeReport,
    MalformedWitness,
    ShellWitness,
    WitnessInvalid,
    check_bishellable,
    check_s_shellable,
    invariant_edge_report,
    is_bishellable,
    is_shellable,
    shell_to_bishell,
    shelling_sequences,
    sufficient_conditions,
    truncate_bishell,
    verify_bishell_witness,
    verify_shell_witness,
)
from .generators import gen_convex, gen_cylindrical, gen_random_points, gen_twopage, TwoPageSpec
from .io import NoGeometry, ParseError, export_svg, parse, parse_witness, serialize, serialize_witness

__all__ = [
    "BadCrossingDegree", "BishellWitness", "CumulativeSums", "DegenerateInput",
    "DeletionView", "Drawing", "EdgePathInconsistent", "EulerViolation",
    "InvariantEdgeReport", "K4Census", "KEdgeVector", "MalformedWitness",
    "NoGeometry", "ParseError", "Point", "ShellWitness", "TwoPageSpec",
    "WitnessInvalid", "build_drawing", "check_bishellable", "check_s_shellable",
    "circle_point", "crossing_count", "crossings_from_cumulative",
    "crossings_from_k_edges", "cumulative_sums", "delete_view",
    "double_cumulative_bound_holds", "export_svg", "gen_convex",
    "gen_cylindrical", "gen_random_points", "gen_twopage", "hill_number",
    "invariant_edge_report", "is_bishellable", "is_shellable", "k4_census",
    "k_edge_vector", "k_value", "orient", "parse", "parse_witness",
    "planarize_points", "point", "proper_intersection",
    "reference_class_vertices", "rotation_system", "serialize",
    "serialize_witness", "shell_to_bishell", "shelling_sequences", "side_of",
    "sufficient_conditions", "truncate_bishell", "validate_good",
    "verify_bishell_witness", "verify_shell_witness", "weak_iso_equal",
]
