"""Acyclic colorings of digraphs via vertex orderings: certificates,
exact forward ratios, circuit reversal, and brute-force oracles."""

from .circulation import Circulation, decompose_circulation
from .digraph import (
    Arc,
    Circuit,
    Digraph,
    circuit_from_arcs,
    digraph_from_pairs,
    format_digraph,
    incidence_matrix,
    induced_subdigraph,
    is_acyclic,
    parse_digraph,
    random_digraph,
    reverse_circuit,
    validate_simple,
)
from .inversion import InversionTrace, find_improving_circuit, make_two_dicolorable
from .ordering import (
    CheckOutcome,
    Coloring,
    Feasible,
    Infeasible,
    Ordering,
    Potential,
    ScaledWeights,
    arc_weights,
    check_ordering,
    color_with_ordering,
    coloring_from_potentials,
    forward_count,
    identity_ordering,
    kappa,
    min_forward_ratio,
    ordering_from_coloring,
    parse_ordering,
    format_ordering,
    validate_coloring,
    verify_farkas,
)
from .oracle import (
    CircuitList,
    best_k_over_orderings,
    check_ordering_bruteforce,
    dichromatic_number,
    enumerate_circuits,
    is_k_dicolorable_bruteforce,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
