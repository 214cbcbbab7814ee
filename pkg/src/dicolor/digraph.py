"""Multidigraph representation and basic structural operations.

Vertices are dense integers 0..n-1.  Arcs are identified by their index
(arc_id) in the arc list; reversal keeps arc_ids stable and swaps tail
and head in place.  Loops are forbidden; parallel arcs are allowed at
the representation level (``validate_simple`` checks the stricter input
class).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import ParseError


@dataclass(frozen=True)
class Arc:
    tail: int
    head: int


@dataclass(frozen=True)
class Digraph:
    """Finite loop-free multidigraph with identified arcs."""

    n: int
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for aid, arc in enumerate(self.arcs):
            if not (0 <= arc.tail < self.n and 0 <= arc.head < self.n):
                raise ValueError(f"arc {aid} has endpoint out of range")
            if arc.tail == arc.head:
                raise ValueError(f"arc {aid} is a loop")

    @property
    def m(self) -> int:
        return len(self.arcs)

    def successors(self) -> list[list[tuple[int, int]]]:
        """Adjacency as lists of (head, arc_id) per tail vertex."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for aid, arc in enumerate(self.arcs):
            adj[arc.tail].append((arc.head, aid))
        return adj


def digraph_from_pairs(n: int, pairs: Iterable[tuple[int, int]]) -> Digraph:
    return Digraph(n, tuple(Arc(t, h) for t, h in pairs))


@dataclass(frozen=True, order=True)
class Circuit:
    """Elementary directed circuit, stored as a sequence of arc_ids.

    Canonical form: rotated so that the smallest visited vertex is the
    tail of the first arc.  Use :func:`circuit_from_arcs` to build one.
    """

    arc_ids: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.arc_ids)

    def vertices(self, D: Digraph) -> tuple[int, ...]:
        return tuple(D.arcs[a].tail for a in self.arc_ids)


def circuit_from_arcs(D: Digraph, arc_ids: Sequence[int]) -> Circuit:
    """Validate and canonicalize a closed elementary walk of arc_ids."""
    ids = list(arc_ids)
    if len(ids) < 2:
        raise ValueError("a circuit has length at least 2")
    for a in ids:
        if not (0 <= a < D.m):
            raise ValueError(f"unknown arc id {a}")
    verts = [D.arcs[a].tail for a in ids]
    for i, a in enumerate(ids):
        nxt = ids[(i + 1) % len(ids)]
        if D.arcs[a].head != D.arcs[nxt].tail:
            raise ValueError("arc sequence is not a closed walk")
    if len(set(verts)) != len(verts):
        raise ValueError("circuit visits a vertex twice")
    rot = verts.index(min(verts))
    return Circuit(tuple(ids[rot:] + ids[:rot]))


def parse_digraph(text: str | bytes) -> Digraph:
    """Parse the canonical edge-list format.

    First non-comment line is ``n m``; then exactly m lines ``tail head``.
    ``#`` starts a comment line.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    header = None
    pairs: list[tuple[int, int]] = []
    n = m = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected two fields, got {len(fields)}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError("non-integer field", lineno) from None
        if header is None:
            header = lineno
            n, m = a, b
            if n < 0 or m < 0:
                raise ParseError("negative count in header", lineno)
            continue
        if len(pairs) >= m:
            raise ParseError("more arcs than declared", lineno)
        if not (0 <= a < n) or not (0 <= b < n):
            raise ParseError(f"vertex index out of range 0..{n - 1}", lineno)
        if a == b:
            raise ParseError("loop", lineno)
        pairs.append((a, b))
    if header is None:
        raise ParseError("empty input, missing header")
    if len(pairs) != m:
        raise ParseError(f"declared {m} arcs, found {len(pairs)}")
    return digraph_from_pairs(n, pairs)


def format_digraph(D: Digraph) -> str:
    """Serialize to the edge-list format, arcs in arc_id order."""
    lines = [f"{D.n} {D.m}"]
    lines.extend(f"{a.tail} {a.head}" for a in D.arcs)
    return "\n".join(lines) + "\n"


def validate_simple(D: Digraph) -> bool:
    """True iff no two arcs share the same (tail, head) pair."""
    seen = set()
    for arc in D.arcs:
        key = (arc.tail, arc.head)
        if key in seen:
            return False
        seen.add(key)
    return True


def is_acyclic(D: Digraph) -> bool:
    """True iff D has no directed circuit (iterated in-degree-0 removal)."""
    indeg = [0] * D.n
    adj = [[] for _ in range(D.n)]
    for arc in D.arcs:
        indeg[arc.head] += 1
        adj[arc.tail].append(arc.head)
    queue = [v for v in range(D.n) if indeg[v] == 0]
    removed = 0
    while queue:
        v = queue.pop()
        removed += 1
        for w in adj[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return removed == D.n


def induced_subdigraph(D: Digraph, S: Iterable[int]) -> tuple[Digraph, list[int]]:
    """Subdigraph induced by S, relabeled 0..|S|-1.

    Returns the subdigraph and the vertex mapping (new index -> original
    vertex, sorted ascending).
    """
    verts = sorted(set(S))
    for v in verts:
        if not (0 <= v < D.n):
            raise ValueError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(verts)}
    pairs = [
        (index[a.tail], index[a.head])
        for a in D.arcs
        if a.tail in index and a.head in index
    ]
    return digraph_from_pairs(len(verts), pairs), verts


def incidence_matrix(D: Digraph) -> np.ndarray:
    """Dense n x m integer matrix: column a has -1 at tail(a), +1 at head(a)."""
    M = np.zeros((D.n, D.m), dtype=np.int64)
    for aid, arc in enumerate(D.arcs):
        M[arc.tail, aid] = -1
        M[arc.head, aid] = 1
    return M


def reverse_circuit(D: Digraph, C: Circuit) -> Digraph:
    """Swap tail and head of every arc of C; arc_ids are preserved.

    The arc sequence may close up in either traversal direction, so a
    circuit remains valid after its own reversal (involution).
    """
    try:
        C = circuit_from_arcs(D, C.arc_ids)  # re-validate against this digraph
    except ValueError:
        C = circuit_from_arcs(D, tuple(reversed(C.arc_ids)))
    flip = set(C.arc_ids)
    arcs = tuple(
        Arc(a.head, a.tail) if aid in flip else a for aid, a in enumerate(D.arcs)
    )
    return Digraph(D.n, arcs)


def random_digraph(n: int, p: float, seed: int) -> Digraph:
    """Erdos-Renyi style digraph: each ordered pair u != v gets an arc
    independently with probability p, from a deterministic seeded PRNG."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    pairs = []
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < p:
                pairs.append((u, v))
    return digraph_from_pairs(n, pairs)


def strongly_connected_components(D: Digraph) -> list[list[int]]:
    """Kosaraju SCCs, each sorted ascending; components in a deterministic
    order (by their smallest vertex)."""
    n = D.n
    adj = [[] for _ in range(n)]
    radj = [[] for _ in range(n)]
    for arc in D.arcs:
        adj[arc.tail].append(arc.head)
        radj[arc.head].append(arc.tail)
    order: list[int] = []
    seen = [False] * n
    for s in range(n):
        if seen[s]:
            continue
        stack: list[tuple[int, Iterator[int]]] = [(s, iter(adj[s]))]
        seen[s] = True
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if not seen[w]:
                    seen[w] = True
                    stack.append((w, iter(adj[w])))
                    advanced = True
                    break
            if not advanced:
                order.append(v)
                stack.pop()
    comp = [-1] * n
    ncomp = 0
    for s in reversed(order):
        if comp[s] != -1:
            continue
        todo = [s]
        comp[s] = ncomp
        while todo:
            v = todo.pop()
            for w in radj[v]:
                if comp[w] == -1:
                    comp[w] = ncomp
                    todo.append(w)
        ncomp += 1
    groups: list[list[int]] = [[] for _ in range(ncomp)]
    for v in range(n):
        groups[comp[v]].append(v)
    groups.sort(key=lambda g: g[0])
    return groups


def underlying_edge_multiset(D: Digraph) -> dict[tuple[int, int], int]:
    """Multiset of underlying undirected edges, as sorted-pair counts."""
    counts: dict[tuple[int, int], int] = {}
    for arc in D.arcs:
        key = (min(arc.tail, arc.head), max(arc.tail, arc.head))
        counts[key] = counts.get(key, 0) + 1
    return counts
