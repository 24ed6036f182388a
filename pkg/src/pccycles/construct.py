"""Recursive construction of edge-colored graphs without properly colored cycles.

``build((p1, ..., pc))`` takes a fresh root ``x`` and, for every positive
``pi``, a copy of ``build(p - e_i)`` whose vertices are all joined to ``x`` in
color ``i``.  The result has minimum monochromatic degree ``min(p)`` and no
properly colored cycle.  The module also carries the order/edge recurrences and
the closed-form bounds on the threshold functions ``d(n, c)`` and ``d->(n, c)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

from .core import ColoredGraph, DomainError

__all__ = [
    "ParamVector",
    "build",
    "order_of",
    "edge_count_of",
    "lemma_order_bound",
    "literal_lemma_bound",
    "lower_bound_d",
    "gsy_bounds",
    "merged_upper_bound",
]


@dataclass(frozen=True)
class ParamVector:
    p: tuple[int, ...]

    def __post_init__(self):
        p = tuple(int(x) for x in self.p)
        if len(p) < 2:
            raise DomainError(f"need at least 2 colors, got c={len(p)}")
        if any(x < 0 for x in p):
            raise DomainError(f"coordinates must be nonnegative, got {p}")
        object.__setattr__(self, "p", p)

    @property
    def c(self) -> int:
        return len(self.p)

    @property
    def s(self) -> int:
        return sum(self.p)

    @classmethod
    def parse(cls, text: str) -> "ParamVector":
        try:
            return cls(tuple(int(x) for x in text.split(",") if x.strip()))
        except ValueError:
            raise DomainError(f"bad parameter list {text!r}") from None


ParamLike = Union[ParamVector, Sequence[int]]


def _as_params(p: ParamLike) -> ParamVector:
    return p if isinstance(p, ParamVector) else ParamVector(tuple(p))


def _key(p: tuple[int, ...]) -> tuple[int, ...]:
    # Zero coordinates never spawn a subtree and the recurrence is symmetric,
    # so the sorted positive coordinates determine the value.
    return tuple(sorted(x for x in p if x > 0))


@lru_cache(maxsize=None)
def _order(key: tuple[int, ...], b: int) -> int:
    if not key:
        return b
    total = 1
    for i in range(len(key)):
        total += _order(_key(key[:i] + (key[i] - 1,) + key[i + 1:]), b)
    return total


@lru_cache(maxsize=None)
def _edges(key: tuple[int, ...], b: int) -> int:
    if not key:
        return 0
    total = 0
    for i in range(len(key)):
        sub = _key(key[:i] + (key[i] - 1,) + key[i + 1:])
        total += _order(sub, b) + _edges(sub, b)
    return total


def _check_base(p: ParamVector, b: int) -> None:
    if b < 1:
        if b == 0 and p.s == 0:
            raise DomainError("base order 0 with p = 0 gives an empty graph")
        raise DomainError(f"base order must be >= 1, got {b}")


def order_of(p: ParamLike, b: int = 1) -> int:
    """Exact vertex count of ``build(p, b)``."""
    p = _as_params(p)
    _check_base(p, b)
    return _order(_key(p.p), b)


def edge_count_of(p: ParamLike, b: int = 1) -> int:
    """Exact edge count of ``build(p, b)``."""
    p = _as_params(p)
    _check_base(p, b)
    return _edges(_key(p.p), b)


def build(p: ParamLike, b: int = 1) -> ColoredGraph:
    """Build the PC-cycle-free graph for parameter vector ``p``.

    ``b`` is the order of the edgeless graph that replaces the single-vertex
    base case.  Numbering is root first, then the subgraphs for colors
    ``1..c`` in order, each numbered the same way recursively.
    """
    p = _as_params(p)
    _check_base(p, b)
    c = p.c
    edges: list[tuple[int, int, int]] = []

    def emit(q: tuple[int, ...], start: int) -> int:
        # returns the next free vertex label
        if not any(q):
            return start + b
        root = start
        nxt = start + 1
        for i in range(c):
            if q[i] == 0:
                continue
            sub = q[:i] + (q[i] - 1,) + q[i + 1:]
            end = emit(sub, nxt)
            edges.extend((root, v, i + 1) for v in range(nxt, end))
            nxt = end
        return nxt

    n = emit(p.p, 0)
    return ColoredGraph(n, c, tuple(edges))


def lemma_order_bound(s: int, c: int) -> int:
    """The order bound ``s * c**s`` established by induction on ``s``."""
    if s < 1:
        raise DomainError(f"s must be >= 1, got {s}")
    if c < 2:
        raise DomainError(f"c must be >= 2, got {c}")
    return s * c**s


def literal_lemma_bound(s: int) -> int:
    """``s * 2**s``, the form the bound takes when stated for two colors only."""
    if s < 1:
        raise DomainError(f"s must be >= 1, got {s}")
    return s * 2**s


def lower_bound_d(n: int, c: int) -> float:
    """``(1/c) * (log_c n - log_c log_c n)``, a lower bound on ``d(n, c)``."""
    if c < 2:
        raise DomainError(f"c must be >= 2, got {c}")
    if n <= c:
        raise DomainError(f"need n > c for log_c log_c n > 0, got n={n}, c={c}")
    lg = math.log(n, c)
    return (lg - math.log(lg, c)) / c


def _log2_pair(n: int) -> tuple[float, float]:
    if n < 4:
        raise DomainError(f"need n >= 4, got {n}")
    l2 = math.log2(n)
    return l2, math.log2(l2)


def gsy_bounds(n: int, c_low: float = 0.0, c_high: float = 0.0) -> tuple[float, float]:
    """Lower and upper bounds on ``d->(n, 2)`` with explicit additive constants.

    The constants stand in for unspecified bounded terms, so the returned pair
    is indicative only.
    """
    l2, ll2 = _log2_pair(n)
    return l2 / 4 + ll2 / 8 + c_low, l2 - ll2 / 3 + c_high


def merged_upper_bound(n: int, c: int, c0: float = 0.0) -> float:
    """``(log2 n - log2 log2 n / 3 + c0) / floor(c/2)``, an upper bound on ``d->(n, c)``."""
    if c < 2:
        raise DomainError(f"c must be >= 2, got {c}")
    l2, ll2 = _log2_pair(n)
    return (l2 - ll2 / 3 + c0) / (c // 2)
