"""Cyclic edge-connectivity of graphs: exact small-graph oracles, closed-form
bounds, spectral certificates, and generators for the standard examples."""

from .bounds import (
    certify,
    epsilon_analysis,
    moore_bound,
    prop22_lower,
    quotient_lower,
    spectral_condition,
)
from .cyccut import (
    bridges,
    cec_oracle,
    ear_decomposition,
    enumerate_girth_cycles,
    find_separating_girth_cycle,
    is_two_edge_connected,
    size_cut_oracle,
    validate_cyclic_cut,
)
from .graph import (
    Graph,
    common_neighbors,
    components,
    degree_profile,
    every_component_has_cycle,
    from_edge_list,
    girth,
    is_complete_bipartite_with_side_3,
)
from .spectral import mixing_check, mixing_fuzz, spectrum

__all__ = [
    "Graph", "bridges", "cec_oracle", "certify", "common_neighbors", "components",
    "degree_profile", "ear_decomposition", "enumerate_girth_cycles", "epsilon_analysis",
    "every_component_has_cycle", "find_separating_girth_cycle", "from_edge_list", "girth",
    "is_complete_bipartite_with_side_3", "is_two_edge_connected", "mixing_check",
    "mixing_fuzz", "moore_bound", "prop22_lower", "quotient_lower", "size_cut_oracle",
    "spectral_condition", "spectrum", "validate_cyclic_cut",
]
