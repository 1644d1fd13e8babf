"""Named cacti, extremal orientations and desk-scale graph catalogs.

Vertex numbering of the bundle cactus ``G0(n, r)``: hub ``0``; triangle ``k`` (1-based)
is ``{0, 2k-1, 2k}``; vertices ``2r+1 .. n-1`` are pendants on the hub.  The fixtures
``G1 = G0(4, 1)`` and ``G2 = G0(5, 2)`` use the same numbering.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from pathlib import Path

from .canon import canonical_label
from .graph import Digraph, Graph, cactus_profile, format_edge_list, reverse
from .index import Exponent
from .search import sink_source_orientations

__all__ = [
    "ExtremalFamily",
    "MAX_CACTUS_N",
    "build_G0",
    "build_extremal_orientations",
    "connected_graphs",
    "connected_graphs_by_subsets",
    "cycle_graph",
    "enumerate_cacti",
    "export_catalog",
    "extremal_set",
    "fixtures",
    "path_graph",
    "star_graph",
]

MAX_CACTUS_N = 10
MAX_GRAPH_N = 7


def _check_feasible(n: int, r: int) -> None:
    if n < 2 or r < 0 or n < 2 * r + 1:
        raise ValueError(f"infeasible cactus parameters (n={n}, r={r}): need n >= 2 and n >= 2r + 1")


def build_G0(n: int, r: int) -> Graph:
    """Hub adjacent to all other vertices, ``r`` triangles through it, the rest pendant."""
    _check_feasible(n, r)
    edges = [(0, i) for i in range(1, n)]
    edges += [(2 * k - 1, 2 * k) for k in range(1, r + 1)]
    return Graph.from_edges(n, edges)


def build_extremal_orientations(n: int, r: int) -> tuple[Digraph, Digraph]:
    """Hub-source orientation of ``G0(n, r)`` and its reverse (hub-sink)."""
    _check_feasible(n, r)
    arcs = [(0, i) for i in range(1, n)]
    arcs += [(2 * k - 1, 2 * k) for k in range(1, r + 1)]
    first = Digraph.from_arcs(n, arcs)
    return first, reverse(first)


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


@dataclass(frozen=True)
class ExtremalFamily:
    n: int
    r: int
    a: Exponent
    graphs: tuple[Graph, ...]
    digraphs: tuple[Digraph, ...]

    @property
    def labels(self) -> frozenset[bytes]:
        return frozenset(canonical_label(d) for d in self.digraphs)


def extremal_set(n: int, r: int, a) -> ExtremalFamily:
    """The maximizing orientations: ``G(1)``, ``G(2)``, plus both sink-source ``C4`` at a=1, (n,r)=(4,1)."""
    a = Exponent.of(a)
    g0 = build_G0(n, r)
    digraphs = list(build_extremal_orientations(n, r))
    graphs = [g0]
    if a.value == 1 and (n, r) == (4, 1):
        c4 = cycle_graph(4)
        graphs.append(c4)
        digraphs.extend(sink_source_orientations(c4))
    return ExtremalFamily(n, r, a, tuple(graphs), tuple(digraphs))


def fixtures() -> dict[str, Graph]:
    return {"G1": build_G0(4, 1), "G2": build_G0(5, 2)}


# --- catalogs --------------------------------------------------------------------


def _attachments(g: Graph, max_n: int):
    """Children of ``g``: a pendant edge or a cycle of length >= 3 glued at one vertex."""
    for v in range(g.n):
        if g.n + 1 <= max_n:
            yield Graph.from_edges(g.n + 1, g.edges + ((v, g.n),)), 0
        for length in range(3, max_n - g.n + 2):
            new = list(range(g.n, g.n + length - 1))
            ring = [v] + new
            extra = [(ring[i], ring[(i + 1) % length]) for i in range(length)]
            yield Graph.from_edges(g.n + length - 1, g.edges + tuple(extra)), 1


@lru_cache(maxsize=None)
def _cactus_table(max_n: int) -> dict[tuple[int, int], tuple[Graph, ...]]:
    table: dict[tuple[int, int], dict[bytes, Graph]] = {(1, 0): {canonical_label(Graph(1, ())): Graph(1, ())}}
    for n in range(1, max_n):
        for r in range(0, (n - 1) // 2 + 1):
            for g in table.get((n, r), {}).values():
                for child, extra in _attachments(g, max_n):
                    key = (child.n, r + extra)
                    bucket = table.setdefault(key, {})
                    label = canonical_label(child)
                    if label not in bucket:
                        bucket[label] = child
    return {k: tuple(v[lab] for lab in sorted(v)) for k, v in table.items()}


def enumerate_cacti(n: int, r: int, max_n: int = MAX_CACTUS_N) -> tuple[Graph, ...]:
    """All pairwise non-isomorphic cacti with ``n`` vertices and ``r`` cycles, in label order."""
    if n > max_n:
        raise ValueError(f"cactus generation capped at n={max_n}, got n={n}")
    if n < 1 or r < 0:
        return ()
    # the table is built to n so that smaller requests stay cheap
    return _cactus_table(max(n, 1)).get((n, r), ())


def export_catalog(graphs, n: int, r: int, directory: str | Path) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for i, g in enumerate(graphs):
        path = directory / f"cactus_n{n}_r{r}_{i}.txt"
        path.write_text(format_edge_list(g))
        paths.append(path)
    return paths


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """Every connected simple graph on ``n`` vertices up to isomorphism.

    Grows each graph on ``n - 1`` vertices by a new vertex joined to a nonempty neighbor
    set; every connected graph has a non-cut vertex, so nothing is missed.
    """
    if n > MAX_GRAPH_N:
        raise ValueError(f"general graph generation capped at n={MAX_GRAPH_N}")
    if n <= 0:
        return ()
    if n == 1:
        return (Graph(1, ()),)
    found: dict[bytes, Graph] = {}
    for g in connected_graphs(n - 1):
        for k in range(1, n):
            for nbrs in combinations(range(n - 1), k):
                child = Graph.from_edges(n, g.edges + tuple((u, n - 1) for u in nbrs))
                found.setdefault(canonical_label(child), child)
    return tuple(found[lab] for lab in sorted(found))


def connected_graphs_by_subsets(n: int) -> tuple[Graph, ...]:
    """Same family as :func:`connected_graphs`, by filtering all edge subsets of ``K_n``."""
    pairs = list(combinations(range(n), 2))
    found: dict[bytes, Graph] = {}
    for mask in range(1 << len(pairs)):
        g = Graph(n, tuple(p for i, p in enumerate(pairs) if (mask >> i) & 1))
        if g.is_connected():
            found.setdefault(canonical_label(g), g)
    return tuple(found[lab] for lab in sorted(found))


def is_cactus_with(g: Graph, r: int) -> bool:
    prof = cactus_profile(g)
    return g.is_connected() and prof.is_cactus and prof.cycle_count == r
