"""Exact directed cycle packing by two routes: combinatorial search over
cycles, and commutative algebra on the incidence ideal of the graph."""

from __future__ import annotations

from .cycles import (
    Cycle,
    CycleCollection,
    CycleSpectrum,
    cycle_spectrum,
    enumerate_cycles,
    feedback_number,
    is_acyclic,
    local_packing,
    maximal_collections,
    packing_number,
    path_numbers,
    strong_via_double,
)
from .errors import CyclepackError, GraphError, GuardExceeded, ParseError
from .geometry import build_incidence_set, degree_and_counts, dimension, is_variety, membership
from .graph import (
    DirectedGraph,
    Edge,
    FlowNetwork,
    UndirectedGraph,
    bipartite_double,
    parse_graph,
    path_contract,
    read_graph,
)
from .groebner import (
    MonomialOrder,
    buchberger,
    eliminate,
    hilbert_degree,
    ideal_equality,
    krull_dimension,
    normal_form,
    radical_membership,
)
from .poly import Polynomial, incidence_relations, strong_relations, undirected_relations

__version__ = "0.1.0"
