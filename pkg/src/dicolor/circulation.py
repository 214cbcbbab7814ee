"""Circulations (nonnegative conserved arc weightings) and their
decomposition into weighted circuits, with exact rational arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .digraph import Circuit, Digraph, circuit_from_arcs


@dataclass(frozen=True)
class Circulation:
    """Arc weighting indexed by arc_id; must be nonnegative and conserved
    at every vertex (kernel vector of the incidence matrix)."""

    weights: tuple[Fraction, ...]

    @staticmethod
    def from_values(values: Sequence) -> "Circulation":
        return Circulation(tuple(Fraction(v) for v in values))


def conservation_defect(D: Digraph, c: Circulation) -> list[Fraction]:
    """Net flow (in minus out) at every vertex; all zero iff conserved."""
    net = [Fraction(0)] * D.n
    for aid, arc in enumerate(D.arcs):
        w = c.weights[aid]
        net[arc.tail] -= w
        net[arc.head] += w
    return net


def is_circulation(D: Digraph, c: Circulation) -> bool:
    if len(c.weights) != D.m:
        return False
    if any(w < 0 for w in c.weights):
        return False
    return all(d == 0 for d in conservation_defect(D, c))


def circuit_indicator(D: Digraph, C: Circuit) -> Circulation:
    """The 0/1 circulation supported on the arcs of C."""
    w = [Fraction(0)] * D.m
    for aid in C.arc_ids:
        w[aid] = Fraction(1)
    return Circulation(tuple(w))


def _positive_circuit(D: Digraph, weights: list[Fraction]) -> Circuit:
    """Find some circuit using only arcs of positive weight.

    Conservation guarantees one exists whenever any weight is positive:
    walk forward along positive arcs until a vertex repeats.
    """
    out: list[list[int]] = [[] for _ in range(D.n)]
    for aid, arc in enumerate(D.arcs):
        if weights[aid] > 0:
            out[arc.tail].append(aid)
    start = next(
        arc.tail for aid, arc in enumerate(D.arcs) if weights[aid] > 0
    )
    path_arcs: list[int] = []
    at: dict[int, int] = {start: 0}  # vertex -> index in walk
    v = start
    while True:
        aid = out[v][0]  # conservation: positive out-arc must exist
        path_arcs.append(aid)
        v = D.arcs[aid].head
        if v in at:
            return circuit_from_arcs(D, path_arcs[at[v]:])
        at[v] = len(path_arcs)


def decompose_circulation(
    D: Digraph, c: Circulation
) -> list[tuple[Circuit, Fraction]]:
    """Write c as a positive combination of at most m circuits.

    Repeatedly finds a circuit of positive-weight arcs and subtracts the
    minimum weight along it; each round zeroes at least one arc.
    """
    if any(w < 0 for w in c.weights):
        raise ValueError("circulation has a negative weight")
    if not is_circulation(D, c):
        raise ValueError("flow conservation violated")
    weights = list(c.weights)
    parts: list[tuple[Circuit, Fraction]] = []
    while any(w > 0 for w in weights):
        C = _positive_circuit(D, weights)
        w = min(weights[a] for a in C.arc_ids)
        for a in C.arc_ids:
            weights[a] -= w
        parts.append((C, w))
    assert len(parts) <= D.m
    return parts


def recombine(D: Digraph, parts: list[tuple[Circuit, Fraction]]) -> Circulation:
    """Inverse of decomposition: sum of weighted circuit indicators."""
    w = [Fraction(0)] * D.m
    for C, wt in parts:
        for a in C.arc_ids:
            w[a] += wt
    return Circulation(tuple(w))
