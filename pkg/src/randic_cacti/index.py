"""Zeroth-order general Randić index R^0_{a+1} on graphs and orientations.

Exact mode (integer exponent) works with the doubled value ``2 R`` as a Python int so
that every bound and equality test is an integer comparison.  Floating mode keeps the
doubled value as a float and compares with an absolute tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Union

from .graph import Digraph, Graph

__all__ = [
    "Exponent",
    "FLOAT_TOL",
    "IndexValue",
    "index_digraph",
    "index_graph",
    "index_graph_edge_sum",
    "power",
    "theorem_bound",
    "vdb_index",
]

FLOAT_TOL = 1e-9


@dataclass(frozen=True)
class Exponent:
    value: Union[int, float]
    exact: bool

    def __post_init__(self):
        if self.value < 1:
            raise ValueError(f"exponent a must be >= 1, got {self.value}")
        if self.exact and not isinstance(self.value, int):
            raise ValueError(f"exact mode needs an integer exponent, got {self.value!r}")

    @classmethod
    def of(cls, a: "Exponent | int | float | str", mode: str | None = None) -> "Exponent":
        """Coerce ``a``; integral values default to exact mode unless ``mode='float'``."""
        if isinstance(a, Exponent):
            if mode is None or (mode == "exact") == a.exact:
                return a
            a = a.value
        if isinstance(a, str):
            a = float(a) if any(c in a for c in ".eE") else int(a)
        if mode not in (None, "exact", "float"):
            raise ValueError(f"unknown mode {mode!r}")
        integral = float(a).is_integer()
        if mode == "exact":
            if not integral:
                raise ValueError(f"exact mode needs an integer exponent, got {a!r}")
            return cls(int(a), True)
        if mode == "float" or not integral:
            return cls(float(a), False)
        return cls(int(a), True)

    def __str__(self) -> str:
        return str(self.value)


def power(x: int, a: Exponent) -> int | float:
    """``x**a`` with ``0**a == 0`` (a >= 1)."""
    if a.exact:
        return x ** a.value
    return float(x) ** a.value


@dataclass(frozen=True)
class IndexValue:
    """A value of R stored doubled (``2R``): an int in exact mode, a float otherwise."""

    doubled: Union[int, float]
    exact: bool = True

    @property
    def value(self) -> Fraction | float:
        if self.exact:
            return Fraction(self.doubled, 2)
        return self.doubled / 2

    def __float__(self) -> float:
        return self.doubled / 2

    def close_to(self, other: "IndexValue", tol: float = FLOAT_TOL) -> bool:
        if self.exact and other.exact:
            return self.doubled == other.doubled
        return abs(float(self) - float(other)) <= tol

    def __str__(self) -> str:
        if not self.exact:
            return f"{self.doubled / 2:.12g}"
        if self.doubled % 2 == 0:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"


def _as_exponent(a) -> Exponent:
    return a if isinstance(a, Exponent) else Exponent.of(a)


def index_digraph(d: Digraph, a) -> IndexValue:
    a = _as_exponent(a)
    total = sum(power(d.out_deg[u], a) + power(d.in_deg[v], a) for u, v in d.arcs)
    return IndexValue(total, a.exact)


def index_graph(g: Graph, a) -> IndexValue:
    """R^0_{a+1}(G) = sum of d(u)^(a+1) (stored doubled like every IndexValue)."""
    a = _as_exponent(a)
    if a.exact:
        total = sum(d ** (a.value + 1) for d in g.degrees)
    else:
        total = sum(float(d) ** (a.value + 1) for d in g.degrees)
    return IndexValue(2 * total, a.exact)


def index_graph_edge_sum(g: Graph, a) -> IndexValue:
    a = _as_exponent(a)
    total = sum(power(g.degrees[u], a) + power(g.degrees[v], a) for u, v in g.edges)
    return IndexValue(2 * total, a.exact)


PhiFunction = Union[Callable[[int, int], float], Mapping[tuple[int, int], float]]


def vdb_index(d: Digraph, phi: PhiFunction) -> float:
    """Half the sum over arcs ``(u, v)`` of ``phi(out_deg(u), in_deg(v))``."""
    total = 0.0
    for u, v in d.arcs:
        pair = (d.out_deg[u], d.in_deg[v])
        if callable(phi):
            total += phi(*pair)
        else:
            try:
                total += phi[pair]
            except KeyError:
                raise ValueError(f"phi undefined at degree pair {pair}") from None
    return total / 2


def theorem_bound(n: int, r: int, a) -> IndexValue:
    """Maximum of R^0_{a+1} over orientations of cacti with n vertices and r cycles."""
    a = _as_exponent(a)
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if not 0 <= r <= (n - 1) // 2:
        raise ValueError(f"no cactus with n={n} and r={r} cycles")
    total = power(n - 1, a) * (n - 1) + (n - 1) + 2 * r * power(2, a)
    return IndexValue(total, a.exact)
