"""Exact canonical labels for small graphs and digraphs.

The label is the lexicographically smallest adjacency encoding over every vertex
ordering reachable by individualization-refinement from the degree partition
((out, in) pairs for digraphs).  Refinement splits cells by neighbor-cell multisets and
is isomorphism-invariant, so the minimum is a canonical form.  Two pruning rules keep
the search small, both exact: only the first smallest non-singleton cell is branched
on, and vertices with identical in- and out-neighborhoods (twins) are branched on once
per twin class, since swapping twins is an automorphism fixing the partition.
"""

from __future__ import annotations

from .graph import Digraph, Graph

__all__ = ["CanonCapError", "MAX_CANON_N", "canonical_label", "ordered_partition"]

MAX_CANON_N = 12


class CanonCapError(ValueError):
    pass


class _Structure:
    __slots__ = ("n", "directed", "outs", "ins", "adj")

    def __init__(self, x: Graph | Digraph):
        self.n = x.n
        self.directed = isinstance(x, Digraph)
        outs: list[list[int]] = [[] for _ in range(x.n)]
        ins: list[list[int]] = [[] for _ in range(x.n)]
        adj = [[0] * x.n for _ in range(x.n)]
        if self.directed:
            for u, v in x.arcs:
                outs[u].append(v)
                ins[v].append(u)
                adj[u][v] = 1
        else:
            for u, v in x.edges:
                outs[u].append(v)
                outs[v].append(u)
                adj[u][v] = adj[v][u] = 1
        self.outs, self.ins, self.adj = outs, ins, adj

    def initial(self) -> list[list[int]]:
        sig = [(len(self.outs[u]), len(self.ins[u])) for u in range(self.n)]
        keys = sorted(set(sig))
        return [[u for u in range(self.n) if sig[u] == k] for k in keys]

    def refine(self, cells: list[list[int]]) -> list[list[int]]:
        while True:
            where = [0] * self.n
            for i, c in enumerate(cells):
                for u in c:
                    where[u] = i
            sig = {
                u: (
                    where[u],
                    tuple(sorted(where[v] for v in self.outs[u])),
                    tuple(sorted(where[v] for v in self.ins[u])),
                )
                for u in range(self.n)
            }
            new: list[list[int]] = []
            for c in cells:
                if len(c) == 1:
                    new.append(c)
                    continue
                groups: dict[tuple, list[int]] = {}
                for u in c:
                    groups.setdefault(sig[u], []).append(u)
                new.extend(groups[k] for k in sorted(groups))
            if len(new) == len(cells):
                return new
            cells = new

    def twins(self, v: int, w: int) -> bool:
        """Whether the transposition of ``v`` and ``w`` is an automorphism."""
        if self.adj[v][w] != self.adj[w][v]:
            return False
        pair = {v, w}
        return set(self.outs[v]) - pair == set(self.outs[w]) - pair and set(self.ins[v]) - pair == set(
            self.ins[w]
        ) - pair

    def encode(self, order: list[int]) -> int:
        code = 0
        n = self.n
        for i in range(n):
            row = self.adj[order[i]]
            for j in range(0 if self.directed else i + 1, n):
                code = (code << 1) | row[order[j]]
        return code


def ordered_partition(x: Graph | Digraph) -> list[list[int]]:
    """Equitable ordered partition obtained by refining the degree partition."""
    s = _Structure(x)
    return s.refine(s.initial())


def _search(s: _Structure, cells: list[list[int]]) -> int:
    cells = s.refine(cells)
    target = None
    for i, c in enumerate(cells):
        if len(c) > 1 and (target is None or len(c) < len(cells[target])):
            target = i
    if target is None:
        return s.encode([c[0] for c in cells])
    best = None
    reps: list[int] = []
    cell = cells[target]
    for v in cell:
        if any(s.twins(v, w) for w in reps):
            continue
        reps.append(v)
        branch = cells[:target] + [[v], [w for w in cell if w != v]] + cells[target + 1 :]
        code = _search(s, branch)
        if best is None or code < best:
            best = code
    return best


def canonical_label(x: Graph | Digraph, cap: int = MAX_CANON_N) -> bytes:
    """Relabeling-invariant key; equal for two inputs iff they are isomorphic."""
    if x.n > cap:
        raise CanonCapError(f"canonical labeling capped at n={cap}, got n={x.n}")
    s = _Structure(x)
    best = _search(s, s.initial()) if x.n else 0
    nbits = x.n * x.n if s.directed else x.n * (x.n - 1) // 2
    body = best.to_bytes((nbits + 7) // 8, "big")
    return bytes([ord("D" if s.directed else "G"), x.n]) + body
