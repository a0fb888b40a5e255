"""Structural coloring toolkit for rings and their clique-cutset closure."""

from .errors import CapacityError, InputError, ParseError, StructureError
from .graph import (
    Graph,
    closed_neighborhood,
    complement,
    dominates,
    induced_subgraph,
    is_proper,
    load_dimacs,
    save_dimacs,
)
from .recognition import (
    RingPartition,
    SimplicialSequence,
    is_chordal,
    recognize_ring,
    simplicial_elimination_sequence,
    verify_ring_partition,
)
from .matching import (
    cobipartite_max_clique,
    max_matching_bipartite,
    max_matching_general,
)
from .chi_structure import (
    HyperholeSelection,
    chi_from_selection,
    chi_ring_class,
    hyperhole_chi,
    is_hyperhole,
    max_hyperhole,
    omega_ring,
)
from .ring_coloring import (
    TwoColorComponent,
    UnimprovabilityCertificate,
    color_even_ring,
    color_ring_or_simplicial,
    extend_optimal_coloring,
    is_unimprovable,
    make_unimprovable,
    two_color_components,
)
from .gt_solver import (
    CliqueCutPartition,
    chi_gt,
    clique_cutset_decompose,
    color_alpha_le2,
    color_gt,
    stability_le2,
)
from .generators import (
    BranchSets,
    StaircaseSpec,
    add_simplicial,
    chi_bound_gt,
    chi_bound_hyperantihole,
    chi_bound_hyperhole,
    compose_clique_cutset,
    consecutive_parts,
    gen_extremal_hyperantihole,
    gen_extremal_hyperhole,
    gen_hyperantihole,
    gen_hyperhole,
    gen_random_ring,
    hadwiger_minor_hyperantihole,
    hadwiger_minor_hyperhole,
    hadwiger_minor_ring,
    verify_minor,
)
from .oracle import (
    brute_alpha,
    brute_chi,
    brute_max_hyperhole,
    brute_omega,
    enumerate_holes,
)

__all__ = [name for name in dir() if not name.startswith("_")]
