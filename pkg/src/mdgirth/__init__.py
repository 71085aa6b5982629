"""Metric dimension, girth and the bound beta(G) <= n - g(G) + 2 on small graphs."""

from ._accel import backend_name
from .families import (
    FamilyClassification,
    FamilyLabel,
    classify_extremal_family,
    classify_n_minus_2_family,
    components_hit,
    cut_vertex_reduction,
    leaf_swap,
)
from .graph import (
    INF,
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    encode_graph6,
    from_edge_list,
    is_connected,
    parse_edge_list,
    parse_graph6,
)
from .harness import (
    CorpusSummary,
    VerificationReport,
    canonical_form,
    enumerate_connected_graphs,
    run_corpus,
    verify_graph,
)
from .metric import (
    LandmarkSet,
    MetricDimensionResult,
    girth_resolving_set,
    is_resolving,
    metric_dimension,
    representation,
    twin_classes,
    upper_bounds,
)
from .structure import (
    CycleInfo,
    EarDecomposition,
    cut_vertices,
    ear_decomposition,
    girth_and_witness,
    is_two_connected,
    validate_ear_decomposition,
)

__version__ = "0.1.0"
