"""Exact-arithmetic toolkit for stable set polytopes: graph-side criteria
cross-validated against toric-ideal and lattice-point oracles."""

__version__ = "0.1.0"

from .graphs import (  # noqa: F401
    LoopGraph,
    SimpleGraph,
    StableSetFamily,
    Walk,
    bridges_between,
    clique_sum,
    complement,
    family,
    induced_cycles,
    induced_subgraph,
    is_bipartite,
    is_chordal,
    is_perfect,
    is_ring_graph,
    odd_cycle_condition,
    stability_number,
    stable_sets,
    star_graph,
)
