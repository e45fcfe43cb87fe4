"""Extended graph energy: computation and mechanical certification of its bounds."""

from .bounds import (
    BoundCheck,
    GraphContext,
    Tolerances,
    catalog,
    check_dominance,
    check_global_upper,
    check_ng,
    check_sandwich,
    check_spectral_radius_sandwich,
    check_vertex_lower,
    check_vertex_upper_forgotten,
    check_vertex_upper_star,
)
from .energy import (
    EnergyReport,
    VertexEnergyDecomposition,
    adjacency_matrix,
    component_locality_check,
    degree_matrix,
    energy_report,
    extended_adjacency_matrix,
    vertex_weight_decomposition,
)
from .graphs import (
    DegreeProfile,
    Graph,
    connected_components,
    degree_profile,
    disjoint_union,
    make_family,
    parse_edge_list,
    parse_graph6,
    serialize_graph6,
)
from .linalg import (
    EigenDecomposition,
    eig_symmetric,
    kronecker,
    matrix_abs,
    operator_norm,
    polar_factor,
    spectral_radius,
    trace,
    vec,
    verify_S_identity,
)
from .oracle import (
    SweepConfig,
    SweepSummary,
    enumerate_labeled,
    find_equality_witnesses,
    identity_suite,
    run_sweep,
    sweep_graphs,
)

__version__ = "0.1.0"
