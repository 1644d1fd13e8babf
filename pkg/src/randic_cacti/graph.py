"""Undirected graphs, orientations and the structural predicates used by the search.

Vertex ids are dense ``0..n-1``.  Edges are stored as ``(u, v)`` with ``u < v`` in
lexicographic order; that order fixes the meaning of an orientation bit vector:
bit ``0`` orients edge ``(u, v)`` as ``u -> v`` and bit ``1`` as ``v -> u``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "Block",
    "BlockProfile",
    "Digraph",
    "Graph",
    "GraphFormatError",
    "Validation",
    "bipartition",
    "cactus_profile",
    "format_edge_list",
    "is_sink_source",
    "orient",
    "orientation_bits",
    "parse_digraph",
    "parse_graph",
    "reverse",
    "validate",
]


class GraphFormatError(ValueError):
    """Malformed edge-list input.  ``lineno`` is 1-based, ``None`` for whole-document errors."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno is not None else ""
        super().__init__(prefix + message)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Normalize and check an edge iterable; rejects loops, duplicates and bad ids."""
        if n < 0:
            raise ValueError(f"negative vertex count {n}")
        seen: set[tuple[int, int]] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, tuple(sorted(seen)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def degree(self, u: int) -> int:
        return self.degrees[u]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v in self.adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return len(seen) == self.n

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex ``u`` becomes ``perm[u]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: tuple[tuple[int, int], ...]
    out_deg: tuple[int, ...] = field(compare=False, repr=False)
    in_deg: tuple[int, ...] = field(compare=False, repr=False)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Sequence[int]]) -> "Digraph":
        """Build an oriented graph; antiparallel pairs are rejected (not an orientation)."""
        seen: set[tuple[int, int]] = set()
        out = [0] * n
        inn = [0] * n
        for a in arcs:
            u, v = int(a[0]), int(a[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if (u, v) in seen:
                raise ValueError(f"duplicate arc ({u}, {v})")
            if (v, u) in seen:
                raise ValueError(f"antiparallel arcs between {u} and {v}")
            seen.add((u, v))
            out[u] += 1
            inn[v] += 1
        return cls(n, tuple(sorted(seen)), tuple(out), tuple(inn))

    @cached_property
    def arc_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.arcs)

    def underlying(self) -> Graph:
        return Graph.from_edges(self.n, self.arcs)

    def relabel(self, perm: Sequence[int]) -> "Digraph":
        return Digraph.from_arcs(self.n, ((perm[u], perm[v]) for u, v in self.arcs))

    def __str__(self) -> str:
        return f"Digraph(n={self.n}, arcs={list(self.arcs)})"


# --- edge-list text format -------------------------------------------------------


def _parse_lines(text: str) -> tuple[int, list[tuple[int, int, int]]]:
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise GraphFormatError("missing 'n m' header")
    lineno, header = rows[0]
    if len(header) != 2:
        raise GraphFormatError("header must be 'n m'", lineno)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError(f"non-integer header {' '.join(header)!r}", lineno) from None
    if n < 0 or m < 0:
        raise GraphFormatError("negative n or m in header", lineno)
    body = rows[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else None
        raise GraphFormatError(f"header declares {m} edges, found {len(body)}", where)
    pairs = []
    for lineno, parts in body:
        if len(parts) != 2:
            raise GraphFormatError("expected 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex in {' '.join(parts)!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex id out of range 0..{n - 1}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        pairs.append((lineno, u, v))
    return n, pairs


def parse_graph(text: str) -> Graph:
    n, pairs = _parse_lines(text)
    seen: set[tuple[int, int]] = set()
    for lineno, u, v in pairs:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
        seen.add(key)
    return Graph(n, tuple(sorted(seen)))


def parse_digraph(text: str) -> Digraph:
    n, pairs = _parse_lines(text)
    seen: set[tuple[int, int]] = set()
    for lineno, u, v in pairs:
        if (u, v) in seen or (v, u) in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
        seen.add((u, v))
    return Digraph.from_arcs(n, seen)


def format_edge_list(x: Graph | Digraph, comment: str | None = None) -> str:
    pairs = x.arcs if isinstance(x, Digraph) else x.edges
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{x.n} {len(pairs)}")
    lines.extend(f"{u} {v}" for u, v in pairs)
    return "\n".join(lines) + "\n"


# --- predicates ------------------------------------------------------------------


@dataclass(frozen=True)
class Validation:
    simple: bool
    connected: bool
    problems: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.problems


def validate(g: Graph) -> Validation:
    problems = []
    simple = True
    seen = set()
    for u, v in g.edges:
        if not (0 <= u < g.n and 0 <= v < g.n):
            problems.append(f"edge ({u}, {v}) out of range")
            simple = False
            continue
        if u == v:
            problems.append(f"self-loop at {u}")
            simple = False
        key = (min(u, v), max(u, v))
        if key in seen:
            problems.append(f"duplicate edge {key}")
            simple = False
        seen.add(key)
    connected = simple and g.is_connected()
    if simple and not connected:
        problems.append("disconnected")
    return Validation(simple, connected, tuple(problems))


@dataclass(frozen=True)
class Block:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def kind(self) -> str:
        if len(self.edges) == 1:
            return "edge"
        if len(self.edges) == len(self.vertices):
            return "cycle"
        return "other"


@dataclass(frozen=True)
class BlockProfile:
    blocks: tuple[Block, ...]

    @property
    def is_cactus(self) -> bool:
        return all(b.kind != "other" for b in self.blocks)

    @property
    def cycle_count(self) -> int:
        return sum(b.kind == "cycle" for b in self.blocks)

    @property
    def cycle_lengths(self) -> tuple[int, ...]:
        return tuple(sorted(len(b.edges) for b in self.blocks if b.kind == "cycle"))


def _blocks(g: Graph) -> list[Block]:
    # iterative Hopcroft-Tarjan with an edge stack
    disc = [-1] * g.n
    low = [0] * g.n
    blocks: list[Block] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(g.adjacency[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if v == parent:
                    continue
                if disc[v] == -1:
                    edge_stack.append((u, v))
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, u, iter(g.adjacency[v])))
                    advanced = True
                    break
                if disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    low[u] = min(low[u], disc[v])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                comp = []
                while True:
                    e = edge_stack.pop()
                    comp.append((min(e), max(e)))
                    if e == (parent, u):
                        break
                verts = sorted({x for e in comp for x in e})
                blocks.append(Block(tuple(verts), tuple(sorted(comp))))
    blocks.sort(key=lambda b: b.edges)
    return blocks


def cactus_profile(g: Graph) -> BlockProfile:
    """Block decomposition of ``g``; a block is a cycle iff it has as many edges as vertices."""
    return BlockProfile(tuple(_blocks(g)))


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """2-coloring of a connected graph, side containing vertex 0 first; ``None`` if an odd cycle exists."""
    if g.n == 0:
        return frozenset(), frozenset()
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    left = frozenset(u for u in range(g.n) if color[u] == 0)
    right = frozenset(u for u in range(g.n) if color[u] == 1)
    return left, right


# --- orientations ----------------------------------------------------------------


def orient(g: Graph, directions: Sequence[int]) -> Digraph:
    if len(directions) != g.m:
        raise ValueError(f"expected {g.m} direction bits, got {len(directions)}")
    arcs = [(v, u) if b else (u, v) for (u, v), b in zip(g.edges, directions)]
    return Digraph.from_arcs(g.n, arcs)


def orient_mask(g: Graph, mask: int) -> Digraph:
    """Bit ``i`` of ``mask`` is the direction bit of ``g.edges[i]``."""
    return orient(g, [(mask >> i) & 1 for i in range(g.m)])


def orientation_bits(g: Graph, d: Digraph) -> tuple[int, ...]:
    """Inverse of :func:`orient`."""
    bits = []
    for u, v in g.edges:
        if (u, v) in d.arc_set:
            bits.append(0)
        elif (v, u) in d.arc_set:
            bits.append(1)
        else:
            raise ValueError(f"edge ({u}, {v}) not oriented in digraph")
    if len(d.arcs) != g.m:
        raise ValueError("digraph has arcs outside the graph")
    return tuple(bits)


def reverse(d: Digraph) -> Digraph:
    return Digraph(d.n, tuple(sorted((v, u) for u, v in d.arcs)), d.in_deg, d.out_deg)


def is_sink_source(d: Digraph) -> bool:
    return all(o == 0 or i == 0 for o, i in zip(d.out_deg, d.in_deg))
