"""Brute-force ground truth at desk scale.

Everything here trades speed for being obviously correct: complete
circuit enumeration (Johnson), exhaustive backtracking colorability,
exact dichromatic number, and the full search over vertex orderings.
Size guards fail loudly rather than run forever.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .digraph import Circuit, Digraph, circuit_from_arcs, strongly_connected_components
from .errors import CircuitCapError, SizeGuardError
from .ordering import Coloring, Ordering

DEFAULT_CIRCUIT_CAP = 10**6


@dataclass(frozen=True)
class CircuitList:
    """All elementary circuits, canonical form, lexicographically sorted
    by vertex sequence then arc ids.  Parallel arcs yield distinct
    arc-id circuits over identical vertex sequences."""

    circuits: tuple[Circuit, ...]

    def __len__(self) -> int:
        return len(self.circuits)

    def vertex_sequences(self, D: Digraph) -> list[tuple[int, ...]]:
        """Deduplicated vertex-sequence view, sorted."""
        return sorted({c.vertices(D) for c in self.circuits})


def _vertex_cycles(D: Digraph, cap: int) -> list[tuple[int, ...]]:
    """Johnson's elementary-circuit enumeration on the simple projection.

    Each cycle is returned as a vertex tuple starting at its smallest
    vertex.  Anchoring: cycles whose minimum vertex is s are found in
    the strongly connected component of s within the subgraph induced
    by vertices >= s.
    """
    succ: list[set[int]] = [set() for _ in range(D.n)]
    for arc in D.arcs:
        succ[arc.tail].add(arc.head)
    cycles: list[tuple[int, ...]] = []
    for s in range(D.n):
        allowed = set(range(s, D.n))
        comp = _scc_of(succ, allowed, s)
        if len(comp) < 2:
            continue
        adj = {v: sorted(w for w in succ[v] if w in comp) for v in comp}
        blocked: set[int] = set()
        unblock_sets: dict[int, set[int]] = {v: set() for v in comp}
        stack: list[int] = []

        def unblock(u: int) -> None:
            todo = [u]
            while todo:
                x = todo.pop()
                if x in blocked:
                    blocked.discard(x)
                    todo.extend(unblock_sets[x])
                    unblock_sets[x].clear()

        def circuit(v: int) -> bool:
            found = False
            stack.append(v)
            blocked.add(v)
            for w in adj[v]:
                if w == s:
                    if len(cycles) >= cap:
                        raise CircuitCapError(f"more than {cap} circuits")
                    cycles.append(tuple(stack))
                    found = True
                elif w not in blocked:
                    if circuit(w):
                        found = True
            if found:
                unblock(v)
            else:
                for w in adj[v]:
                    unblock_sets[w].add(v)
            stack.pop()
            return found

        circuit(s)
    return cycles


def _scc_of(succ: list[set[int]], allowed: set[int], s: int) -> set[int]:
    """Vertices of the SCC containing s within the allowed set."""
    fwd = {s}
    todo = [s]
    while todo:
        v = todo.pop()
        for w in succ[v]:
            if w in allowed and w not in fwd:
                fwd.add(w)
                todo.append(w)
    pred: list[set[int]] = [set() for _ in range(len(succ))]
    for v in allowed:
        for w in succ[v]:
            if w in allowed:
                pred[w].add(v)
    bwd = {s}
    todo = [s]
    while todo:
        v = todo.pop()
        for w in pred[v]:
            if w in bwd:
                continue
            if w in fwd:
                bwd.add(w)
                todo.append(w)
    return bwd


def enumerate_circuits(D: Digraph, cap: int = DEFAULT_CIRCUIT_CAP) -> CircuitList:
    """All elementary circuits of D as arc-id sequences.

    Parallel arcs are expanded: every choice of arc between consecutive
    vertices is a distinct circuit.  Raises CircuitCapError beyond cap.
    """
    arc_lookup: dict[tuple[int, int], list[int]] = {}
    for aid, arc in enumerate(D.arcs):
        arc_lookup.setdefault((arc.tail, arc.head), []).append(aid)
    out: list[Circuit] = []
    for verts in _vertex_cycles(D, cap):
        pairs = [
            (verts[i], verts[(i + 1) % len(verts)]) for i in range(len(verts))
        ]
        for choice in itertools.product(*(arc_lookup[p] for p in pairs)):
            if len(out) >= cap:
                raise CircuitCapError(f"more than {cap} circuits")
            out.append(circuit_from_arcs(D, choice))
    out.sort(key=lambda c: (c.vertices(D), c.arc_ids))
    return CircuitList(tuple(out))


def _class_stays_acyclic(
    D: Digraph, color: list[int], v: int, c: int, adj_in, adj_out
) -> bool:
    """Would assigning color c to v keep class c acyclic?  Checked by
    Kahn's algorithm on the class members among 0..v."""
    members = [u for u in range(v) if color[u] == c] + [v]
    mset = set(members)
    indeg = {u: 0 for u in members}
    for u in members:
        for w in adj_out[u]:
            if w in mset:
                indeg[w] += 1
    queue = [u for u in members if indeg[u] == 0]
    removed = 0
    while queue:
        u = queue.pop()
        removed += 1
        for w in adj_out[u]:
            if w in mset:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
    return removed == len(members)


def is_k_dicolorable_bruteforce(
    D: Digraph, k: int, max_n: int = 14
) -> Coloring | None:
    """Lexicographically first valid k-coloring, or None.

    Backtracking over vertices 0..n-1 with colors tried in increasing
    order; a color is admissible when its class stays acyclic.  Only
    colors up to (max used so far)+1 are tried, which the lex-first
    coloring always satisfies.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if D.n > max_n:
        raise SizeGuardError(f"brute force limited to n <= {max_n}")
    n = D.n
    if n == 0:
        return Coloring(k, ())
    adj_out = [[] for _ in range(n)]
    adj_in = [[] for _ in range(n)]
    for arc in D.arcs:
        adj_out[arc.tail].append(arc.head)
        adj_in[arc.head].append(arc.tail)
    color = [-1] * n

    def backtrack(v: int, used: int) -> bool:
        if v == n:
            return True
        for c in range(min(k, used + 1)):
            if _class_stays_acyclic(D, color, v, c, adj_in, adj_out):
                color[v] = c
                if backtrack(v + 1, max(used, c + 1)):
                    return True
                color[v] = -1
        return False

    if backtrack(0, 0):
        return Coloring(k, tuple(color))
    return None


def dichromatic_number(D: Digraph, max_n: int = 14) -> int:
    """Least k admitting an acyclic k-coloring; 1 iff D is acyclic."""
    if D.n > max_n:
        raise SizeGuardError(f"brute force limited to n <= {max_n}")
    k = 1
    while True:
        if is_k_dicolorable_bruteforce(D, k, max_n=max_n) is not None:
            return k
        k += 1


def check_ordering_bruteforce(
    D: Digraph, sigma: Ordering, k: int, cap: int = DEFAULT_CIRCUIT_CAP
) -> bool:
    """Literal circuit condition: every circuit C has at least |C|/k
    forward arcs, checked over the complete enumeration."""
    if k < 1:
        raise ValueError("k must be at least 1")
    for verts in enumerate_circuits(D, cap).vertex_sequences(D):
        fwd = sum(
            1
            for i in range(len(verts))
            if sigma.pos[verts[i]] < sigma.pos[verts[(i + 1) % len(verts)]]
        )
        if k * fwd < len(verts):
            return False
    return True


def best_k_over_orderings(
    D: Digraph, max_n: int = 8, cap: int = DEFAULT_CIRCUIT_CAP
) -> int:
    """min over all n! orderings of the least feasible k.

    For one ordering the least feasible k is max over circuits of
    ceil(|C| / forward(C)); the search is vectorized over the full
    permutation set against the enumerated circuits.
    """
    if D.n > max_n:
        raise SizeGuardError(f"ordering search limited to n <= {max_n}")
    n = D.n
    cycles = sorted({v for v in _vertex_cycles(D, cap)})
    if not cycles:
        return 1
    tails, heads, starts, lengths = [], [], [], []
    for verts in cycles:
        starts.append(len(tails))
        lengths.append(len(verts))
        for i in range(len(verts)):
            tails.append(verts[i])
            heads.append(verts[(i + 1) % len(verts)])
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    pos = np.argsort(perms, axis=1)  # pos[i, vertex] = position
    fwd = (pos[:, tails] < pos[:, heads]).astype(np.int64)
    f = np.add.reduceat(fwd, np.array(starts), axis=1)
    L = np.array(lengths, dtype=np.int64)
    per_circuit_k = -(-L // f)  # ceil division; every circuit has f >= 1
    return int(per_circuit_k.max(axis=1).min())


def kappa_from_circuits(D: Digraph, sigma: Ordering, cap: int = DEFAULT_CIRCUIT_CAP) -> int:
    """Least feasible k for one ordering, straight from the circuit list
    (cross-check for the minimum-mean-cycle route)."""
    best = 1
    for verts in enumerate_circuits(D, cap).vertex_sequences(D):
        fwd = sum(
            1
            for i in range(len(verts))
            if sigma.pos[verts[i]] < sigma.pos[verts[(i + 1) % len(verts)]]
        )
        best = max(best, -(-len(verts) // fwd))
    return best


def min_forward_ratio_bruteforce(
    D: Digraph, sigma: Ordering, cap: int = DEFAULT_CIRCUIT_CAP
) -> Fraction | None:
    """min over circuits of forward(C)/|C| by complete enumeration."""
    best: Fraction | None = None
    for verts in enumerate_circuits(D, cap).vertex_sequences(D):
        fwd = sum(
            1
            for i in range(len(verts))
            if sigma.pos[verts[i]] < sigma.pos[verts[(i + 1) % len(verts)]]
        )
        val = Fraction(fwd, len(verts))
        if best is None or val < best:
            best = val
    return best
