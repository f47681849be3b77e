"""The alternating-sum relation for cyclic polygons with an even number of
vertices ``n > 4``::

    sum_{m=1}^{n} (-1)^(m+1) x(m) S(m) = 0,

where ``x(m)`` is a monomial in the boundary squared lengths
``x_{l,l+1}`` and ``S(m)`` a monomial in the 4x signed areas.

Both monomials use the literal index regime: any factor with an index
``<= 0`` is 1, and a power with negative exponent is 1.  Empty products
are 1.
"""

from __future__ import annotations

from fractions import Fraction

from ..measurements import MeasurementTable, build_table
from .relations import cyclic_hypothesis
from .report import CheckReport, exact_report, skipped

__all__ = ["main_x", "main_s", "alternating_terms", "check_main_theorem"]


def _rng(a: int, b: int, parity: int | None = None):
    """Integers ``a..b`` inclusive, optionally only those of given parity."""
    for v in range(a, b + 1):
        if parity is None or v % 2 == parity:
            yield v


EVEN, ODD = 0, 1


def _xp(T: MeasurementTable, i: int, j: int, p: int) -> Fraction:
    if p <= 0:
        return Fraction(1)
    return T.x(i, j) ** p


def _validate(T: MeasurementTable, m: int, n: int):
    if n != T.n:
        raise ValueError(f"n={n} does not match the table's polygon size {T.n}")
    if n <= 4 or n % 2:
        raise ValueError(f"the alternating sum needs an even n > 4, got n={n}")
    if not 1 <= m <= n:
        raise ValueError(f"m={m} outside 1..{n}")


def main_x(T: MeasurementTable, m: int, n: int | None = None) -> Fraction:
    """The boundary-length monomial ``x(m)``."""
    n = T.n if n is None else n
    _validate(T, m, n)
    a = 1 if m in (1, 3) else 0
    b = 1 if m in (1, 3, 5) else 0
    c = 0 if n == 6 else 1
    out = Fraction(1)
    if m % 2 == 0:
        out *= T.x(1, 2) * _xp(T, 3, 4, c)
        for l in _rng(m, n - 2, EVEN):
            out *= _xp(T, l, l + 1, (l - 2) // 2)
        for l in _rng(5, m - 1, ODD):
            out *= _xp(T, l, l + 1, (l - 3) // 2)
    elif n == 6:
        out *= _xp(T, 1, 2, a)
        for l in _rng(m - 1, n - 2, EVEN):
            out *= _xp(T, l, l + 1, (l - 2) // 2)
        for l in _rng(5, m, ODD):
            out *= _xp(T, l, l + 1, (l - 3) // 2)
    else:
        out *= _xp(T, 1, 2, a) * _xp(T, 3, 4, b)
        out *= _xp(T, m - 2, m - 1, (m - 5) // 2) * _xp(T, m, m + 1, (m - 3) // 2)
        for l in _rng(m - 1, n - 2, EVEN):
            out *= _xp(T, l, l + 1, (l - 2) // 2)
        for l in _rng(5, m - 4, ODD):
            out *= _xp(T, l, l + 1, (l - 5) // 2)
    return out


def main_s(T: MeasurementTable, m: int, n: int | None = None) -> Fraction:
    """The signed-area monomial ``S(m)``."""
    n = T.n if n is None else n
    _validate(T, m, n)
    s = T.s
    out = Fraction(1)
    # Shared tail: triangles on boundary edges beyond m.
    for k in _rng(m, n - 3):
        for l in _rng(k + 2, n - 1, ODD):
            out *= s(k + 1, l, l + 1)
    if m % 2 == 0:
        for k in _rng(1, m - 1):
            for l in _rng(k + 1, m - 2, EVEN):
                out *= s(k, l, l + 1)
            for l in _rng(m + 1, n - 1, ODD):
                out *= s(k, l, l + 1)
        return out
    out *= s(m - 2, m - 1, m + 1)
    for l in _rng(m + 2, n - 1, ODD):
        out *= s(m - 1, l, l + 1) * s(m - 2, l, l + 1) * s(m - 3, l, l + 1)
    for k in _rng(1, m - 4):
        if k % 2:
            out *= s(k, k + 1, k + 2) * s(k, k + 1, m - 1) * s(k, k + 1, m + 1)
        for l in _rng(k + 2, m - 2, EVEN):
            out *= s(k, l, l + 1)
        for l in _rng(m + 2, n - 1, ODD):
            out *= s(k, l, l + 1)
    return out


def alternating_terms(T: MeasurementTable) -> list[Fraction]:
    """The signed summands ``(-1)^(m+1) x(m) S(m)`` for ``m = 1..n``."""
    n = T.n
    return [(1 if m % 2 else -1) * main_x(T, m, n) * main_s(T, m, n) for m in range(1, n + 1)]


def check_main_theorem(T) -> CheckReport:
    """Exact value of the alternating sum; accepts a polygon or its table."""
    T = T if isinstance(T, MeasurementTable) else build_table(T)
    n = T.n
    params = {"n": n}
    if n % 2 or n <= 4:
        return skipped("main-theorem", params, f"needs an even n > 4, got n={n}")
    why = cyclic_hypothesis(T)
    if why:
        return skipped("main-theorem", params, why)
    return exact_report("main-theorem", params, [sum(alternating_terms(T))])
