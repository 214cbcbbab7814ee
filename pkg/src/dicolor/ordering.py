"""The ordering characterization of k-acyclic colorability.

Given an ordering of the vertices and a class count k, every circuit
must carry at least |C|/k forward arcs.  Working with the integer-scaled
arc weights W(a) = k*forw(a) - 1 turns this into "no negative circuit",
decided by Bellman-Ford relaxation from a virtual source.  The feasible
branch yields an integer potential, the infeasible branch a concrete
negative circuit; both are checkable certificates (Farkas duality).
All arithmetic is exact: integers for weights and potentials, Fractions
for ratios.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .circulation import Circulation, conservation_defect
from .digraph import (
    Circuit,
    Digraph,
    circuit_from_arcs,
    induced_subdigraph,
    is_acyclic,
    strongly_connected_components,
)
from .errors import CertificateError, InvalidColoringError


@dataclass(frozen=True)
class Ordering:
    """Bijection vertex -> position on {0..n-1}."""

    pos: tuple[int, ...]

    def __post_init__(self):
        n = len(self.pos)
        if sorted(self.pos) != list(range(n)):
            raise ValueError("positions are not a bijection onto 0..n-1")

    @property
    def n(self) -> int:
        return len(self.pos)

    def vertices_in_order(self) -> list[int]:
        out = [0] * self.n
        for v, p in enumerate(self.pos):
            out[p] = v
        return out


def identity_ordering(n: int) -> Ordering:
    return Ordering(tuple(range(n)))


def ordering_from_sequence(seq: Sequence[int]) -> Ordering:
    """Build an Ordering from the vertex list in position order."""
    pos = [0] * len(seq)
    seen = set()
    for p, v in enumerate(seq):
        if not (0 <= v < len(seq)) or v in seen:
            raise ValueError("vertex sequence is not a permutation")
        seen.add(v)
        pos[v] = p
    return Ordering(tuple(pos))


def parse_ordering(text: str) -> Ordering:
    """Parse the comma-separated vertex-list serialization, e.g. "2,0,1"."""
    try:
        seq = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"bad ordering string: {text!r}") from None
    return ordering_from_sequence(seq)


def format_ordering(sigma: Ordering) -> str:
    return ",".join(str(v) for v in sigma.vertices_in_order())


def is_forward(arc, sigma: Ordering) -> bool:
    return sigma.pos[arc.tail] < sigma.pos[arc.head]


def forward_count(D: Digraph, sigma: Ordering) -> int:
    return sum(1 for a in D.arcs if is_forward(a, sigma))


@dataclass(frozen=True)
class ScaledWeights:
    """Integer arc weights W(a) = k*forw(a) - 1, i.e. k-1 on forward arcs
    and -1 on backward arcs.  W(a)/k is the exact fractional weight."""

    k: int
    w: tuple[int, ...]


def arc_weights(D: Digraph, sigma: Ordering, k: int) -> ScaledWeights:
    if k < 1:
        raise ValueError("k must be at least 1")
    if sigma.n != D.n:
        raise ValueError("ordering size does not match digraph")
    w = tuple(k - 1 if is_forward(a, sigma) else -1 for a in D.arcs)
    return ScaledWeights(k, w)


@dataclass(frozen=True)
class Potential:
    """Integer vertex potential Z; feasibility certificate.  The arc
    inequalities are Z(head) - Z(tail) <= W(arc)."""

    z: tuple[int, ...]


@dataclass(frozen=True)
class Coloring:
    k: int
    color: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if any(not 0 <= c < self.k for c in self.color):
            raise ValueError("color index out of range")

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.color):
            out[c].append(v)
        return out


@dataclass(frozen=True)
class Feasible:
    potential: Potential


@dataclass(frozen=True)
class Infeasible:
    witness: Circuit


CheckOutcome = Union[Feasible, Infeasible]


def _predecessor_cycles(n: int, pred: list[int], tails: list[int]) -> list[list[int]]:
    """All cycles in the predecessor graph (arc ids, traversal order)."""
    state = [0] * n  # 0 unvisited, else visit stamp
    cycles = []
    stamp = 0
    for s in range(n):
        if state[s]:
            continue
        stamp += 1
        v = s
        while pred[v] != -1 and state[v] == 0:
            state[v] = stamp
            v = tails[pred[v]]
        if pred[v] != -1 and state[v] == stamp:
            # v lies on a cycle; collect it walking backwards
            back = []
            u = v
            while True:
                back.append(pred[u])
                u = tails[pred[u]]
                if u == v:
                    break
            back.reverse()
            cycles.append(back)
        # mark the remaining prefix as done
        u = s
        while state[u] == stamp:
            state[u] = -1
            if pred[u] == -1:
                break
            u = tails[pred[u]]
    return cycles


def check_ordering(D: Digraph, sigma: Ordering, k: int) -> CheckOutcome:
    """Decide the circuit condition for (D, sigma, k) with a certificate.

    Bellman-Ford from a virtual source (distance 0 to every vertex),
    relaxing arcs in arc_id order.  Convergence yields the canonical
    potential; a cycle of negative total weight in the predecessor graph
    yields the witness circuit.
    """
    weights = arc_weights(D, sigma, k)
    w = weights.w
    n, arcs = D.n, D.arcs
    tails = [a.tail for a in arcs]
    dist = [0] * n
    pred = [-1] * n
    for _ in range(n + 1):
        changed = False
        for aid, arc in enumerate(arcs):
            nd = dist[arc.tail] + w[aid]
            if nd < dist[arc.head]:
                dist[arc.head] = nd
                pred[arc.head] = aid
                changed = True
        if not changed:
            return Feasible(Potential(tuple(dist)))
        for cyc in _predecessor_cycles(n, pred, tails):
            if sum(w[a] for a in cyc) < 0:
                return Infeasible(circuit_from_arcs(D, cyc))
    raise AssertionError("relaxation neither converged nor exposed a cycle")


def coloring_from_potentials(D: Digraph, Z: Potential, k: int) -> Coloring:
    """Extract the k-coloring color(v) = Z(v) mod k (floored semantics)
    from a valid potential; every class is runtime-checked acyclic."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if len(Z.z) != D.n:
        raise ValueError("potential size does not match digraph")
    col = Coloring(k, tuple(z % k for z in Z.z))
    bad = _invalid_class_circuit(D, col)
    if bad is not None:
        raise AssertionError("potential produced a cyclic color class")
    return col


def coloring_from_potentials_checked(
    D: Digraph, Z: Potential, W: ScaledWeights
) -> Coloring:
    """Like coloring_from_potentials but first verifies the potential
    against the arc inequalities, naming the violated arc."""
    for aid, arc in enumerate(D.arcs):
        if Z.z[arc.head] - Z.z[arc.tail] > W.w[aid]:
            raise CertificateError(
                f"potential violates arc {aid} ({arc.tail}->{arc.head})"
            )
    return coloring_from_potentials(D, Z, W.k)


def color_with_ordering(D: Digraph, sigma: Ordering, k: int) -> CheckOutcome | Coloring:
    """Coloring when the ordering certifies k classes, else the witness."""
    outcome = check_ordering(D, sigma, k)
    if isinstance(outcome, Infeasible):
        return outcome
    return coloring_from_potentials(D, outcome.potential, k)


def _invalid_class_circuit(D: Digraph, col: Coloring) -> Optional[Circuit]:
    """A circuit inside some color class, or None if all classes acyclic."""
    for cls in col.classes():
        sub, verts = induced_subdigraph(D, cls)
        if is_acyclic(sub):
            continue
        # extract a circuit of the class by walking within the subgraph
        # restricted to vertices that survive in-degree-0 stripping
        return _some_circuit_within(D, set(cls))
    return None


def _some_circuit_within(D: Digraph, allowed: set[int]) -> Circuit:
    out: list[list[int]] = [[] for _ in range(D.n)]
    indeg = {v: 0 for v in allowed}
    for aid, arc in enumerate(D.arcs):
        if arc.tail in allowed and arc.head in allowed:
            out[arc.tail].append(aid)
            indeg[arc.head] += 1
    # strip vertices that cannot lie on a circuit
    queue = [v for v in allowed if indeg[v] == 0]
    alive = set(allowed)
    while queue:
        v = queue.pop()
        alive.discard(v)
        for aid in out[v]:
            h = D.arcs[aid].head
            indeg[h] -= 1
            if indeg[h] == 0:
                queue.append(h)
    start = min(alive)
    walk: list[int] = []
    at = {start: 0}
    v = start
    while True:
        aid = next(a for a in out[v] if D.arcs[a].head in alive)
        walk.append(aid)
        v = D.arcs[aid].head
        if v in at:
            return circuit_from_arcs(D, walk[at[v]:])
        at[v] = len(walk)


def validate_coloring(D: Digraph, col: Coloring) -> bool:
    """True iff every color class induces an acyclic subdigraph."""
    if len(col.color) != D.n:
        return False
    return _invalid_class_circuit(D, col) is None


def ordering_from_coloring(D: Digraph, col: Coloring) -> Ordering:
    """Concatenate the color classes 0..k-1, each in topological order
    of its induced subdigraph (smallest-vertex-first tie-breaking)."""
    if len(col.color) != D.n:
        raise ValueError("coloring size does not match digraph")
    import heapq

    seq: list[int] = []
    for cls in col.classes():
        sub, verts = induced_subdigraph(D, cls)
        indeg = [0] * sub.n
        adj: list[list[int]] = [[] for _ in range(sub.n)]
        for arc in sub.arcs:
            indeg[arc.head] += 1
            adj[arc.tail].append(arc.head)
        heap = [v for v in range(sub.n) if indeg[v] == 0]
        heapq.heapify(heap)
        taken = 0
        while heap:
            v = heapq.heappop(heap)
            seq.append(verts[v])
            taken += 1
            for h in adj[v]:
                indeg[h] -= 1
                if indeg[h] == 0:
                    heapq.heappush(heap, h)
        if taken != sub.n:
            raise InvalidColoringError(
                "color class induces a circuit",
                circuit=_some_circuit_within(D, set(cls)),
            )
    return ordering_from_sequence(seq)


def min_forward_ratio(D: Digraph, sigma: Ordering) -> Optional[Fraction]:
    """Exact minimum over circuits of forward(C)/|C|; None if D is acyclic.

    Karp's minimum mean cycle, run per strongly connected component on
    the 0/1 forward-indicator weights.
    """
    if sigma.n != D.n:
        raise ValueError("ordering size does not match digraph")
    best: Optional[Fraction] = None
    for comp in strongly_connected_components(D):
        if len(comp) < 2:
            continue
        sub, verts = induced_subdigraph(D, comp)
        wsub = [
            1 if sigma.pos[verts[a.tail]] < sigma.pos[verts[a.head]] else 0
            for a in sub.arcs
        ]
        val = _karp_min_mean(sub, wsub)
        if val is not None and (best is None or val < best):
            best = val
    return best


def _karp_min_mean(sub: Digraph, w: list[int]) -> Optional[Fraction]:
    """Karp's recurrence on a strongly connected digraph, source 0."""
    ns = sub.n
    if sub.m == 0:
        return None
    prev: list[Optional[int]] = [None] * ns
    prev[0] = 0
    table = [prev]
    for _ in range(ns):
        cur: list[Optional[int]] = [None] * ns
        for aid, arc in enumerate(sub.arcs):
            pu = prev[arc.tail]
            if pu is None:
                continue
            cand = pu + w[aid]
            if cur[arc.head] is None or cand < cur[arc.head]:
                cur[arc.head] = cand
        table.append(cur)
        prev = cur
    best: Optional[Fraction] = None
    dn = table[ns]
    for v in range(ns):
        if dn[v] is None:
            continue
        worst: Optional[Fraction] = None
        for i in range(ns):
            di = table[i][v]
            if di is None:
                continue
            val = Fraction(dn[v] - di, ns - i)
            if worst is None or val > worst:
                worst = val
        if worst is not None and (best is None or worst < best):
            best = worst
    return best


def kappa(D: Digraph, sigma: Ordering) -> int:
    """Least k for which sigma certifies a k-acyclic coloring:
    ceil(1/rho), or 1 when D is acyclic."""
    rho = min_forward_ratio(D, sigma)
    if rho is None:
        return 1
    return math.ceil(1 / rho)


def verify_farkas(
    D: Digraph, W: ScaledWeights, cert: Union[Potential, Circulation]
) -> bool:
    """Componentwise certificate check, no graph search.

    Potential: Z(head)-Z(tail) <= W(arc) for every arc.
    Circulation: conserved, nonnegative, and of negative total W-weight
    (a disproof of feasibility).
    """
    if isinstance(cert, Potential):
        if len(cert.z) != D.n:
            return False
        return all(
            cert.z[arc.head] - cert.z[arc.tail] <= W.w[aid]
            for aid, arc in enumerate(D.arcs)
        )
    if len(cert.weights) != D.m:
        return False
    if any(x < 0 for x in cert.weights):
        return False
    if any(d != 0 for d in conservation_defect(D, cert)):
        return False
    total = sum(Fraction(W.w[aid]) * cert.weights[aid] for aid in range(D.m))
    return total < 0
