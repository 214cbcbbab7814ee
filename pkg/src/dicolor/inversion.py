"""Circuit reversal to dichromatic number at most 2.

Fix an ordering.  While some circuit has more backward than forward
arcs, reverse it; every reversal strictly increases the total forward
arc count, which is bounded by m, so the loop terminates.  The final
digraph satisfies the circuit condition for k=2 under the fixed
ordering, and a verified 2-coloring is extracted from the potential.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .digraph import Circuit, Digraph, reverse_circuit
from .ordering import (
    Coloring,
    Feasible,
    Infeasible,
    Ordering,
    check_ordering,
    coloring_from_potentials,
    forward_count,
    identity_ordering,
    validate_coloring,
)


@dataclass(frozen=True)
class InversionTrace:
    initial_forward: int
    steps: tuple[tuple[Circuit, int], ...]  # (circuit reversed, forward after)
    final_digraph: Digraph
    final_coloring: Coloring

    def to_json_dict(self) -> dict:
        return {
            "initial_forward": self.initial_forward,
            "steps": [
                {"circuit": list(c.arc_ids), "forward": f} for c, f in self.steps
            ],
            "coloring": {
                "k": self.final_coloring.k,
                "color": list(self.final_coloring.color),
            },
        }


def find_improving_circuit(D: Digraph, sigma: Ordering) -> Optional[Circuit]:
    """A circuit with backward > forward arcs in sigma, or None.

    Negative-cycle detection on the k=2 scaled weights (+1 forward,
    -1 backward); None exactly when the ordering certifies k=2.
    """
    outcome = check_ordering(D, sigma, 2)
    if isinstance(outcome, Infeasible):
        return outcome.witness
    return None


def make_two_dicolorable(
    D: Digraph, sigma: Optional[Ordering] = None
) -> InversionTrace:
    """Reverse improving circuits until none remains; emit the trace and
    a verified 2-coloring of the final digraph."""
    if sigma is None:
        sigma = identity_ordering(D.n)
    f = forward_count(D, sigma)
    initial = f
    cur = D
    steps: list[tuple[Circuit, int]] = []
    while True:
        C = find_improving_circuit(cur, sigma)
        if C is None:
            break
        cur = reverse_circuit(cur, C)
        nf = forward_count(cur, sigma)
        assert nf > f, "forward count failed to increase"
        f = nf
        steps.append((C, nf))
        assert len(steps) <= cur.m, "more reversals than arcs"
    outcome = check_ordering(cur, sigma, 2)
    assert isinstance(outcome, Feasible)
    col = coloring_from_potentials(cur, outcome.potential, 2)
    assert validate_coloring(cur, col)
    return InversionTrace(initial, tuple(steps), cur, col)


def replay_trace(D: Digraph, trace: InversionTrace) -> Digraph:
    """Apply the recorded reversals to D; must reproduce final_digraph."""
    cur = D
    for C, _ in trace.steps:
        cur = reverse_circuit(cur, C)
    return cur
