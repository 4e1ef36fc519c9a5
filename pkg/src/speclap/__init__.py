"""Transmission graph Laplacians: construction, spectra and bound verification."""
from .bounds import (
    BoundReport,
    GroundData,
    boundary_measure_p,
    capacity_min,
    capacity_ratio,
    cheeger_sharp,
    cheeger_upper,
    cheeger_weak,
    diameter_bound,
    ground_data,
    is_ramanujan,
    nilli_classical,
    nonempty_proper_subsets,
    vol_p,
)
from .graph import (
    DirectedEdge,
    Graph,
    adjacency_matrix,
    boundary,
    build_graph,
    degree_profile,
    diameter,
    distance,
    dual,
    from_pairs,
    incidence,
    is_simple,
    undirected_edges,
    vertex_subset,
    with_ranks,
)
from .spectra import Spectrum, RangeReport, ground_state, laplacian_spectrum, multiset_distance, spectrum, verify_range
from .transmission import (
    DEFAULT_TOL,
    Classification,
    Cochain,
    DiagonalWeight,
    TransmissionSystem,
    apply_laplacian,
    block_adjacency,
    classify,
    default_weight,
    identity_system,
    laplacian,
    normalized_adjacency,
)
from .surgery import VertexPartition, amalgamate, collapse, pushforward_collapse

__version__ = "0.1.0"
