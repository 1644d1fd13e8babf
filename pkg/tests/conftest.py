"""Shared brute-force oracles for the test suite (independent of the package internals)."""

from __future__ import annotations

from itertools import permutations

import pytest

from randic_cacti import Digraph, Graph


def brute_encoding(x, perm) -> tuple:
    """Adjacency encoding of ``x`` relabeled by ``perm`` (vertex u -> perm[u])."""
    n = x.n
    if isinstance(x, Digraph):
        arcs = {(perm[u], perm[v]) for u, v in x.arcs}
        return tuple(int((i, j) in arcs) for i in range(n) for j in range(n))
    edges = {frozenset((perm[u], perm[v])) for u, v in x.edges}
    return tuple(int(frozenset((i, j)) in edges) for i in range(n) for j in range(i + 1, n))


def brute_canonical(x) -> tuple:
    """Minimum encoding over all n! relabelings."""
    return (isinstance(x, Digraph), x.n, min(brute_encoding(x, p) for p in permutations(range(x.n))))


def brute_index_digraph(d: Digraph, a) -> float:
    outd = [sum(1 for u, _ in d.arcs if u == w) for w in range(d.n)]
    ind = [sum(1 for _, v in d.arcs if v == w) for w in range(d.n)]
    return sum(outd[u] ** a + ind[v] ** a for u, v in d.arcs) / 2


def all_orientations(g: Graph):
    for mask in range(1 << g.m):
        yield Digraph.from_arcs(g.n, [(v, u) if (mask >> i) & 1 else (u, v) for i, (u, v) in enumerate(g.edges)])


@pytest.fixture
def c4() -> Graph:
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def c3() -> Graph:
    return Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
