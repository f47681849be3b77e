"""Measurement data of a polygon: squared distances and 4x signed areas.

Lookups follow the *literal* index regime: an index ``<= 0`` makes the
entry equal to 1, and an index above ``n`` is an error.  Callers that want
indices read modulo ``n`` (the frieze) reduce them first with :func:`cyc`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from itertools import combinations

from .exactnum import rat_to_json
from .geometry import Orientation, PolygonConfig, check_orientation

__all__ = [
    "MeasurementTable",
    "squared_distance",
    "signed_area4",
    "heron_H",
    "build_table",
    "cyc",
    "EAGER_S_LIMIT",
]

EAGER_S_LIMIT = 16

_ONE = Fraction(1)


def cyc(k: int, n: int) -> int:
    """Reduce ``k`` modulo ``n`` into ``1..n``."""
    return (k - 1) % n + 1


def _check(P: PolygonConfig, *idx: int) -> bool:
    """True if the literal convention applies (some index <= 0)."""
    for i in idx:
        if i > P.n:
            raise IndexError(f"index {i} exceeds polygon size {P.n}")
    return any(i <= 0 for i in idx)


def squared_distance(P: PolygonConfig, i: int, j: int) -> Fraction:
    if _check(P, i, j):
        return _ONE
    a, b = P.vertex(i), P.vertex(j)
    return (b.x - a.x) ** 2 + (b.y - a.y) ** 2


def signed_area4(P: PolygonConfig, i: int, j: int, k: int) -> Fraction:
    if _check(P, i, j, k):
        return _ONE
    a, b, c = P.vertex(i), P.vertex(j), P.vertex(k)
    return 2 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x))


def heron_H(x, y, z) -> Fraction:
    return -x * x - y * y - z * z + 2 * x * y + 2 * x * z + 2 * y * z


def _sort3(i: int, j: int, k: int) -> tuple[tuple[int, int, int], int]:
    """Sorted triple and the sign of the sorting permutation."""
    sign = 1
    if i > j:
        i, j, sign = j, i, -sign
    if j > k:
        j, k, sign = k, j, -sign
    if i > j:
        i, j, sign = j, i, -sign
    return (i, j, k), sign


class MeasurementTable:
    """Cached ``x(i, j)`` and ``s(i, j, k)`` for one polygon.

    All squared distances are computed up front.  Signed areas are stored
    for sorted triples only (the rest follow by antisymmetry) and are
    computed eagerly for ``n <= EAGER_S_LIMIT``, on demand above that.
    """

    def __init__(self, P: PolygonConfig):
        self.polygon = P
        self.n = n = P.n
        self._x = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
        for i, j in combinations(range(1, n + 1), 2):
            self._x[i][j] = self._x[j][i] = squared_distance(P, i, j)
        self._s: dict[tuple[int, int, int], Fraction] = {}
        if n <= EAGER_S_LIMIT:
            for t in combinations(range(1, n + 1), 3):
                self._s[t] = signed_area4(P, *t)

    @cached_property
    def orientation(self) -> Orientation:
        """Orientation of the polygon, computed once (may raise
        :class:`~heronfrieze.geometry.DegeneratePolygonError`)."""
        return check_orientation(self.polygon)

    def x(self, i: int, j: int) -> Fraction:
        if _check(self.polygon, i, j):
            return _ONE
        return self._x[i][j]

    def s(self, i: int, j: int, k: int) -> Fraction:
        if _check(self.polygon, i, j, k):
            return _ONE
        if i == j or j == k or i == k:
            return Fraction(0)
        key, sign = _sort3(i, j, k)
        v = self._s.get(key)
        if v is None:
            v = self._s[key] = signed_area4(self.polygon, *key)
        return v if sign > 0 else -v

    def xc(self, i: int, j: int) -> Fraction:
        """``x`` with indices read modulo n."""
        return self._x[cyc(i, self.n)][cyc(j, self.n)]

    def sc(self, i: int, j: int, k: int) -> Fraction:
        """``s`` with indices read modulo n."""
        n = self.n
        return self.s(cyc(i, n), cyc(j, n), cyc(k, n))

    def to_json(self) -> dict:
        """Debug dump: ``"x.i.j"`` and ``"s.i.j.k"`` keys for sorted indices."""
        out = {}
        rng = range(1, self.n + 1)
        for i, j in combinations(rng, 2):
            out[f"x.{i}.{j}"] = rat_to_json(self.x(i, j))
        for i, j, k in combinations(rng, 3):
            out[f"s.{i}.{j}.{k}"] = rat_to_json(self.s(i, j, k))
        return out


def build_table(P: PolygonConfig) -> MeasurementTable:
    return MeasurementTable(P)
