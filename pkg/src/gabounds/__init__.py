"""Geometric-arithmetic index GA1: companion indices, bounds, and exhaustive tightness checks."""

from .bounds import (
    BOUND_IDS,
    BoundEvaluation,
    CasselsInstance,
    Inapplicable,
    bound_abc,
    bound_basic,
    bound_degree_partition,
    bound_delta1,
    bound_forgotten,
    bound_gradient_minmax,
    bound_gradient_partition,
    bound_harmonic,
    bound_m2,
    bound_m2_h2,
    bound_m2_sharp,
    bound_mi,
    bound_order,
    bound_pendant,
    bound_variable_zagreb,
    cassels_check,
    evaluate_all,
)
from .graph import (
    Graph,
    GraphError,
    TrivialGraphError,
    build_graph,
    classify_structure,
    connected_components,
    degree_profile,
    edge_partitions,
)
from .graph6 import ParseError, parse_edge_list, parse_graph6, to_graph6
from .indices import (
    DEFAULT_ALPHAS,
    forgotten,
    ga1,
    helper_f,
    helper_g,
    helper_h,
    index_vector,
    sum_connectivity,
    variable_zagreb,
)
from .lab import (
    EnumerationSpec,
    VerificationReport,
    certificate,
    enumerate_graphs,
    lambda_census,
    pythagorean_pair,
    verify_exhaustive,
)
from .report import emit_report, graph_record, load_report

__version__ = "0.1.0"
