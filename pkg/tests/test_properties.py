"""Property-based invariants over randomly drawn digraphs."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from dicolor import (
    Feasible,
    Infeasible,
    arc_weights,
    check_ordering,
    check_ordering_bruteforce,
    coloring_from_potentials,
    digraph_from_pairs,
    enumerate_circuits,
    is_acyclic,
    ordering_from_coloring,
    reverse_circuit,
    validate_coloring,
    verify_farkas,
)
from dicolor.circulation import (
    Circulation,
    circuit_indicator,
    decompose_circulation,
    is_circulation,
    recombine,
)
from dicolor.oracle import is_k_dicolorable_bruteforce
from dicolor.ordering import ordering_from_sequence


@st.composite
def digraphs(draw, max_n=6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    slots = [(u, v) for u in range(n) for v in range(n) if u != v]
    mask = draw(st.lists(st.booleans(), min_size=len(slots), max_size=len(slots)))
    return digraph_from_pairs(n, [p for p, b in zip(slots, mask) if b])


@st.composite
def digraphs_with_ordering_and_k(draw, max_n=6, max_k=4):
    D = draw(digraphs(max_n))
    perm = draw(st.permutations(range(D.n)))
    k = draw(st.integers(min_value=1, max_value=max_k))
    return D, ordering_from_sequence(list(perm)), k


@given(digraphs())
@settings(max_examples=150, deadline=None)
def test_circuit_indicators_are_circulations(D):
    for C in enumerate_circuits(D).circuits:
        assert is_circulation(D, circuit_indicator(D, C))


@given(digraphs())
@settings(max_examples=100, deadline=None)
def test_reverse_circuit_preserves_size(D):
    for C in enumerate_circuits(D).circuits[:5]:
        R = reverse_circuit(D, C)
        assert R.n == D.n and R.m == D.m


@given(digraphs())
@settings(max_examples=100, deadline=None)
def test_acyclic_iff_no_circuits(D):
    assert is_acyclic(D) == (len(enumerate_circuits(D)) == 0)


@given(digraphs_with_ordering_and_k())
@settings(max_examples=200, deadline=None)
def test_duality_totality(dok):
    D, sigma, k = dok
    W = arc_weights(D, sigma, k)
    outcome = check_ordering(D, sigma, k)
    if isinstance(outcome, Feasible):
        assert verify_farkas(D, W, outcome.potential)
        assert check_ordering_bruteforce(D, sigma, k)
    else:
        assert verify_farkas(D, W, circuit_indicator(D, outcome.witness))
        assert not check_ordering_bruteforce(D, sigma, k)


@given(digraphs_with_ordering_and_k())
@settings(max_examples=150, deadline=None)
def test_coloring_soundness(dok):
    D, sigma, k = dok
    outcome = check_ordering(D, sigma, k)
    if isinstance(outcome, Feasible):
        col = coloring_from_potentials(D, outcome.potential, k)
        assert validate_coloring(D, col)


@given(digraphs(), st.integers(min_value=1, max_value=4))
@settings(max_examples=150, deadline=None)
def test_easy_direction_round_trip(D, k):
    col = is_k_dicolorable_bruteforce(D, k)
    if col is None:
        return
    sigma = ordering_from_coloring(D, col)
    assert isinstance(check_ordering(D, sigma, k), Feasible)


@given(
    digraphs(),
    st.data(),
)
@settings(max_examples=100, deadline=None)
def test_decompose_reconstructs(D, data):
    circuits = enumerate_circuits(D).circuits
    if not circuits:
        return
    weights = [Fraction(0)] * D.m
    picks = data.draw(
        st.lists(
            st.tuples(
                st.integers(min_value=0, max_value=len(circuits) - 1),
                st.fractions(min_value=Fraction(1, 7), max_value=Fraction(5)),
            ),
            min_size=1,
            max_size=4,
        )
    )
    for idx, w in picks:
        for a in circuits[idx].arc_ids:
            weights[a] += w
    c = Circulation(tuple(weights))
    parts = decompose_circulation(D, c)
    assert len(parts) <= D.m
    assert recombine(D, parts) == c
