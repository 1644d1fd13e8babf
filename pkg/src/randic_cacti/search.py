"""Search over the 2^m orientations of a graph.

Orientation ``mask`` sets bit ``i`` to the direction bit of ``g.edges[i]`` (see
:mod:`randic_cacti.graph`).  Exhaustive evaluation runs in numpy batches; the
branch-and-bound search is plain Python with an admissible per-edge bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .canon import MAX_CANON_N, canonical_label
from .graph import Digraph, Graph, bipartition, orient_mask
from .index import FLOAT_TOL, Exponent, IndexValue

__all__ = [
    "ExtremalResult",
    "OrientationBatch",
    "count_sink_source_filtered",
    "enumerate_orientations",
    "iter_orientation_batches",
    "max_orientation_bnb",
    "max_orientation_exhaustive",
    "sink_source_orientations",
]

MAX_ENUM_EDGES = 30
MAX_EXHAUSTIVE_EDGES = 24
BATCH = 1 << 15


class SearchCapError(ValueError):
    pass


def _check_cap(g: Graph, cap: int) -> None:
    if g.m > cap:
        raise SearchCapError(f"graph has {g.m} edges, cap is {cap}")


def enumerate_orientations(
    g: Graph, halve_by_reversal: bool = False, max_edges: int = MAX_ENUM_EDGES
) -> Iterator[Digraph]:
    """Every orientation of ``g`` in mask order; halving pins the first edge to ``u -> v``."""
    _check_cap(g, max_edges)
    step = 2 if halve_by_reversal and g.m > 0 else 1
    for mask in range(0, 1 << g.m, step):
        yield orient_mask(g, mask)


@dataclass
class OrientationBatch:
    masks: np.ndarray  # (N,)
    bits: np.ndarray  # (N, m) uint8
    out_deg: np.ndarray  # (N, n)
    in_deg: np.ndarray  # (N, n)
    doubled: np.ndarray | None  # (N,) doubled index, None when no exponent requested


def _powers(deg: np.ndarray, a: Exponent) -> np.ndarray:
    if a.exact:
        return deg.astype(np.int64) ** a.value
    return deg.astype(np.float64) ** a.value


def evaluate_bits(
    n: int, edges: tuple[tuple[int, int], ...], bits: np.ndarray, a: Exponent | None
) -> tuple[np.ndarray, np.ndarray, np.ndarray | None]:
    """Degree tables and doubled index for a stack of direction-bit rows over ``edges``."""
    rows = bits.shape[0]
    out = np.zeros((rows, n), dtype=np.int64)
    inn = np.zeros((rows, n), dtype=np.int64)
    for i, (u, v) in enumerate(edges):
        b = bits[:, i].astype(np.int64)
        out[:, u] += 1 - b
        inn[:, v] += 1 - b
        out[:, v] += b
        inn[:, u] += b
    doubled = None
    if a is not None:
        po, pi = _powers(out, a), _powers(inn, a)
        doubled = np.zeros(rows, dtype=po.dtype)
        for i, (u, v) in enumerate(edges):
            b = bits[:, i].astype(bool)
            doubled += np.where(b, po[:, v] + pi[:, u], po[:, u] + pi[:, v])
    return out, inn, doubled


def mask_bits(masks: np.ndarray, m: int) -> np.ndarray:
    shifts = np.arange(m, dtype=np.int64)
    return ((masks[:, None] >> shifts[None, :]) & 1).astype(np.int8)


def _batch_for(g: Graph, masks: np.ndarray, a: Exponent | None) -> OrientationBatch:
    bits = mask_bits(masks, g.m)
    out, inn, doubled = evaluate_bits(g.n, g.edges, bits, a)
    return OrientationBatch(masks, bits, out, inn, doubled)


def iter_orientation_batches(
    g: Graph, a=None, halve_by_reversal: bool = False, batch: int = BATCH, max_edges: int = MAX_ENUM_EDGES
) -> Iterator[OrientationBatch]:
    """Yield every orientation in mask order, ``batch`` at a time, with degree tables and values."""
    _check_cap(g, max_edges)
    if a is not None:
        a = Exponent.of(a)
        if a.exact and 2 * g.m * max(g.degrees, default=0) ** a.value >= 2**62:
            raise OverflowError("exact value would overflow int64 batches")
    total = 1 << g.m
    step = 2 if halve_by_reversal and g.m > 0 else 1
    for start in range(0, total, batch * step):
        masks = np.arange(start, min(start + batch * step, total), step, dtype=np.int64)
        yield _batch_for(g, masks, a)


@dataclass
class ExtremalResult:
    max_value: IndexValue
    witnesses: dict[bytes, Digraph] = field(default_factory=dict)
    searched: int = 0
    pruned: int = 0
    raw_witnesses: int = 0
    witness_masks: tuple[int, ...] = ()

    @property
    def witness_count(self) -> int:
        return len(self.witnesses)

    @property
    def labels(self) -> frozenset[bytes]:
        return frozenset(self.witnesses)


def _collect(g: Graph, best, masks: list[int], exact: bool, searched: int, pruned: int) -> ExtremalResult:
    masks = sorted(masks)
    witnesses: dict[bytes, Digraph] = {}
    for mask in masks:
        d = orient_mask(g, mask)
        # past the labeling cap witnesses stay labeled: one key per direction mask
        key = canonical_label(d) if g.n <= MAX_CANON_N else b"L" + mask.to_bytes((g.m + 7) // 8 or 1, "big")
        witnesses.setdefault(key, d)
    return ExtremalResult(
        max_value=IndexValue(best, exact),
        witnesses=dict(sorted(witnesses.items())),
        searched=searched,
        pruned=pruned,
        raw_witnesses=len(masks),
        witness_masks=tuple(masks),
    )


def max_orientation_exhaustive(
    g: Graph, a, max_edges: int = MAX_EXHAUSTIVE_EDGES, halve_by_reversal: bool = False
) -> ExtremalResult:
    """Maximum index over all 2^m orientations with every maximizer, deduplicated up to isomorphism.

    With ``halve_by_reversal`` only masks with bit 0 clear are evaluated; reversal keeps
    the index, so the maximizers found are closed under reversal to give the full set.
    """
    a = Exponent.of(a)
    _check_cap(g, max_edges)
    best = None
    cands: list[tuple[int, float]] = []
    searched = 0
    for b in iter_orientation_batches(g, a, halve_by_reversal=halve_by_reversal, max_edges=max_edges):
        searched += len(b.masks)
        top = b.doubled.max()
        if a.exact:
            if best is None or top > best:
                best, cands = int(top), []
            if top == best:
                cands.extend((int(x), best) for x in b.masks[b.doubled == best])
        else:
            # R is compared at FLOAT_TOL, so doubled values at twice that
            tol = 2 * FLOAT_TOL
            if best is None or top > best:
                best = float(top)
            keep = b.doubled >= best - tol
            cands = [c for c in cands if c[1] >= best - tol]
            cands.extend(zip(b.masks[keep].tolist(), b.doubled[keep].tolist()))
    masks = [c[0] for c in cands]
    if halve_by_reversal and g.m > 0:
        full = (1 << g.m) - 1
        masks = sorted(set(masks) | {full ^ x for x in masks})
    return _collect(g, best, masks, a.exact, searched, 0)


def _seed_masks(g: Graph) -> list[int]:
    parts = bipartition(g)
    full = (1 << g.m) - 1
    if parts is None:
        return [0, full]
    left = parts[0]
    mask = sum(1 << i for i, (u, v) in enumerate(g.edges) if u not in left)
    return [mask, full ^ mask]


def max_orientation_bnb(g: Graph, a, max_edges: int = MAX_ENUM_EDGES) -> ExtremalResult:
    """Branch-and-bound maximum; same value and witness set as the exhaustive search.

    A partial orientation is bounded edge by edge using, for each vertex, its current
    out/in degree plus its undecided incident edges as caps.  Subtrees whose bound falls
    strictly below the incumbent are skipped and counted in ``pruned``.
    """
    a = Exponent.of(a)
    _check_cap(g, max_edges)
    n, m, edges, deg = g.n, g.m, g.edges, g.degrees
    maxdeg = max(deg, default=0)
    if a.exact:
        P = [x ** a.value for x in range(maxdeg + 1)]
    else:
        P = [float(x) ** a.value for x in range(maxdeg + 1)]
    tol = 0 if a.exact else 2 * FLOAT_TOL
    order = sorted(range(m), key=lambda i: (-(deg[edges[i][0]] + deg[edges[i][1]]), edges[i]))

    def value_of(mask: int):
        out = [0] * n
        inn = [0] * n
        for i, (u, v) in enumerate(edges):
            if (mask >> i) & 1:
                u, v = v, u
            out[u] += 1
            inn[v] += 1
        return sum(
            P[out[v]] + P[inn[u]] if (mask >> i) & 1 else P[out[u]] + P[inn[v]] for i, (u, v) in enumerate(edges)
        )

    best = max(value_of(s) for s in _seed_masks(g)) if m else 0
    out = [0] * n
    inn = [0] * n
    und = list(deg)
    direction = [-1] * m
    found: list[tuple[int, object]] = []
    stats = {"searched": 0, "pruned": 0}

    def bound():
        total = 0
        for i, (u, v) in enumerate(edges):
            bit = direction[i]
            if bit == 0:
                total += P[out[u] + und[u]] + P[inn[v] + und[v]]
            elif bit == 1:
                total += P[out[v] + und[v]] + P[inn[u] + und[u]]
            else:
                total += max(P[out[u] + und[u]] + P[inn[v] + und[v]], P[out[v] + und[v]] + P[inn[u] + und[u]])
        return total

    def rec(k: int, mask: int) -> None:
        nonlocal best
        ub = bound()
        if k == m:
            stats["searched"] += 1
            if ub > best + tol:
                best = ub
            if ub >= best - tol:
                found.append((mask, ub))
            return
        if ub < best - tol:
            stats["pruned"] += 1
            return
        i = order[k]
        u, v = edges[i]
        und[u] -= 1
        und[v] -= 1
        for bit in (0, 1):
            t, h = (u, v) if bit == 0 else (v, u)
            out[t] += 1
            inn[h] += 1
            direction[i] = bit
            rec(k + 1, mask | (bit << i))
            out[t] -= 1
            inn[h] -= 1
        direction[i] = -1
        und[u] += 1
        und[v] += 1

    rec(0, 0)
    masks = [mk for mk, val in found if val >= best - tol]
    return _collect(g, best, masks, a.exact, stats["searched"], stats["pruned"])


def sink_source_orientations(g: Graph) -> tuple[Digraph, ...]:
    """The two sink-source orientations of a connected bipartite graph (none otherwise).

    The first sends every edge from the side containing vertex 0; the second is its reverse.
    """
    parts = bipartition(g)
    if parts is None:
        return ()
    left = parts[0]
    fwd = [(u, v) if u in left else (v, u) for u, v in g.edges]
    return (
        Digraph.from_arcs(g.n, fwd),
        Digraph.from_arcs(g.n, [(v, u) for u, v in fwd]),
    )


def sink_source_mask(b: OrientationBatch) -> np.ndarray:
    return np.all((b.out_deg == 0) | (b.in_deg == 0), axis=1)


def count_sink_source_filtered(g: Graph, batch: int = 1 << 20, max_edges: int = MAX_ENUM_EDGES) -> int:
    """Sink-source orientations counted by scanning all 2^m direction masks.

    Vertex ``v`` is a source in ``mask`` iff the bits of its incident edges read 1 exactly
    where ``v`` is the larger endpoint, and a sink iff they read 1 exactly where it is the
    smaller one.
    """
    _check_cap(g, max_edges)
    inc = [0] * g.n
    as_max = [0] * g.n
    for i, (u, v) in enumerate(g.edges):
        inc[u] |= 1 << i
        inc[v] |= 1 << i
        as_max[v] |= 1 << i
    total = 0
    for start in range(0, 1 << g.m, batch):
        masks = np.arange(start, min(start + batch, 1 << g.m), dtype=np.int64)
        ok = np.ones(len(masks), dtype=bool)
        for v in range(g.n):
            sel = masks & inc[v]
            ok &= (sel == as_max[v]) | (sel == inc[v] ^ as_max[v])
        total += int(ok.sum())
    return total
