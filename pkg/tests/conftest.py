import itertools

import pytest

from dicolor import digraph_from_pairs, parse_digraph


@pytest.fixture
def triangle():
    return parse_digraph("3 3\n0 1\n1 2\n2 0\n")


@pytest.fixture
def reversed_triangle():
    return parse_digraph("3 3\n1 0\n2 1\n0 2\n")


@pytest.fixture
def digon():
    return parse_digraph("2 2\n0 1\n1 0\n")


def bidirected_complete(n):
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    return digraph_from_pairs(n, pairs)


def all_labeled_digraphs(n):
    """All 2^(n(n-1)) labeled digraphs on n vertices (no loops)."""
    slots = [(u, v) for u in range(n) for v in range(n) if u != v]
    for bits in itertools.product((0, 1), repeat=len(slots)):
        yield digraph_from_pairs(
            n, [p for p, b in zip(slots, bits) if b]
        )


def canonical_circuit_digraph(length):
    """The directed cycle 0 -> 1 -> ... -> length-1 -> 0."""
    return digraph_from_pairs(
        length, [(i, (i + 1) % length) for i in range(length)]
    )
