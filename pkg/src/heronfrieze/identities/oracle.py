"""Chord-product oracle.

For a cyclic polygon with an even number of vertices the chord products

    delta(m) = prod_{i<j, i,j != m} sqrt(x_ij)

satisfy ``sum (-1)^(m+1) delta(m) = 0``.  Each ``delta(m)`` factors as
``S(m) / X(m)`` with ``X(m)`` a monomial in the boundary lengths and the
circumradius ``R``; ``L`` is the least common multiple of the ``X(m)``.
Multiplying the chord identity by ``L`` gives the exact alternating sum, so
``L / X(m)`` must equal ``main_x(m)`` and the ``S(m)`` below must equal
``main_s(m)``.  This module computes that second route independently: the
``S(m)`` displays for ``m = 1, 3`` are separate formulas here, and the
``x`` side goes through ``X(m)`` and ``L`` rather than through ``x(m)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from ..exactnum import to_float
from ..measurements import MeasurementTable, build_table
from .alternating import main_s, main_x
from .relations import cyclic_hypothesis
from .report import CheckReport, exact_report, float_report, skipped

__all__ = [
    "RMonomial",
    "OracleXSL",
    "oracle_delta",
    "oracle_X",
    "oracle_S",
    "oracle_L",
    "oracle_XSL",
    "check_oracle",
    "ORACLE_RTOL",
]

ORACLE_RTOL = 1e-9


@dataclass(frozen=True)
class RMonomial:
    """``value * R**r_power`` with the power of ``R`` kept symbolic."""

    value: Fraction
    r_power: int = 0

    def __mul__(self, other):
        if isinstance(other, RMonomial):
            return RMonomial(self.value * other.value, self.r_power + other.r_power)
        return RMonomial(self.value * other, self.r_power)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, RMonomial):
            return RMonomial(self.value / other.value, self.r_power - other.r_power)
        return RMonomial(self.value / other, self.r_power)

    def evaluate(self, R) -> Fraction:
        return self.value * Fraction(R) ** self.r_power


def _odd(a, b):
    return range(a + (a % 2 == 0), b + 1, 2)


def _even(a, b):
    return range(a + (a % 2), b + 1, 2)


def _pw(T: MeasurementTable, l: int, e: int) -> Fraction:
    """``x_{l,l+1}^e`` under the negative-exponent convention."""
    return T.x(l, l + 1) ** e if e > 0 else Fraction(1)


def _r_exponent(n: int) -> int:
    return -((n - 2) // 2) ** 2


def _table(P) -> MeasurementTable:
    return P if isinstance(P, MeasurementTable) else build_table(P)


def oracle_delta(P, m: int) -> float:
    """Product of all chord lengths among the vertices other than ``A_m``."""
    T = _table(P)
    n = T.n
    if not 1 <= m <= n:
        raise ValueError(f"m={m} outside 1..{n}")
    others = [i for i in range(1, n + 1) if i != m]
    return math.prod(math.sqrt(to_float(T.x(i, j))) for i, j in combinations(others, 2))


def oracle_X(T: MeasurementTable, m: int) -> RMonomial:
    n = T.n
    v = Fraction(1)
    if m % 2 == 0:
        for l in _odd(m + 1, n - 1):
            v *= _pw(T, l, (l - 3) // 2)
        for l in _even(4, m - 2):
            v *= _pw(T, l, (l - 2) // 2)
    else:
        if m >= 5:
            v *= T.x(1, 2)
        for l in _odd(m + 2, n - 1):
            v *= _pw(T, l, (l - 3) // 2)
        for l in _odd(3, m - 4):
            v *= T.x(l, l + 1)
        for l in _even(4, m - 3):
            v *= _pw(T, l, (l - 2) // 2)
    return RMonomial(v, _r_exponent(n))


def _tail(T: MeasurementTable, start: int) -> Fraction:
    n = T.n
    return math.prod((T.s(k + 1, l, l + 1)
                      for k in range(start, n - 2) for l in _odd(k + 2, n - 1)), start=Fraction(1))


def oracle_S(T: MeasurementTable, m: int) -> Fraction:
    n, s = T.n, T.s
    if m == 1:
        return _tail(T, 1)
    if m == 3:
        v = s(1, 2, 4)
        for l in _odd(5, n - 1):
            v *= s(1, l, l + 1) * s(2, l, l + 1)
        return v * _tail(T, 3)
    v = Fraction(1)
    if m % 2 == 0:
        for k in range(1, m):
            for l in _even(k + 1, m - 1):
                v *= s(k, l, l + 1)
            for l in _odd(m + 1, n - 1):
                v *= s(k, l, l + 1)
        return v * _tail(T, m)
    v = s(m - 2, m - 1, m + 1)
    for l in _odd(m + 2, n - 1):
        v *= s(m - 1, l, l + 1) * s(m - 2, l, l + 1) * s(m - 3, l, l + 1)
    v *= _tail(T, m)
    for k in range(1, m - 3):
        if k % 2:
            v *= s(k, k + 1, k + 2) * s(k, k + 1, m - 1) * s(k, k + 1, m + 1)
        for l in _even(k + 2, m - 2):
            v *= s(k, l, l + 1)
        for l in _odd(m + 2, n - 1):
            v *= s(k, l, l + 1)
    return v


def oracle_L(T: MeasurementTable) -> RMonomial:
    n = T.n
    v = T.x(1, 2) * (T.x(3, 4) if n >= 8 else 1)
    for l in _even(4, n - 2):
        v *= _pw(T, l, (l - 2) // 2)
    for l in _odd(5, n - 1):
        v *= _pw(T, l, (l - 3) // 2)
    return RMonomial(v, _r_exponent(n))


@dataclass(frozen=True)
class OracleXSL:
    X: RMonomial
    S: Fraction
    L: RMonomial


def _require(T: MeasurementTable):
    n = T.n
    if n <= 4 or n % 2:
        raise ValueError(f"the oracle needs an even n > 4, got n={n}")
    if T.polygon.cyclic_data is None:
        raise ValueError("the oracle needs a polygon with circle data (radius)")


def oracle_XSL(P, m: int) -> OracleXSL:
    T = _table(P)
    _require(T)
    if not 1 <= m <= T.n:
        raise ValueError(f"m={m} outside 1..{T.n}")
    return OracleXSL(oracle_X(T, m), oracle_S(T, m), oracle_L(T))


def check_oracle(P) -> list[CheckReport]:
    """All oracle contracts for one polygon.

    ``oracle-sum``: the chord identity in floating point.  Per ``m``:
    ``oracle-x`` is ``L/X(m) - x(m)`` (exact, R powers must cancel),
    ``oracle-s`` is the difference of the two ``S(m)`` routes (exact) and
    ``oracle-delta`` is ``S(m)/X(m) - delta(m)`` in floating point.
    """
    T = _table(P)
    n = T.n
    if n % 2 or n <= 4:
        return [skipped("oracle", {"n": n}, f"needs an even n > 4, got n={n}")]
    why = cyclic_hypothesis(T)
    if why:
        return [skipped("oracle", {"n": n}, why)]
    if T.polygon.cyclic_data is None:
        return [skipped("oracle", {"n": n}, "no circle data (radius unknown)")]
    R = T.polygon.cyclic_data.radius
    deltas = [oracle_delta(T, m) for m in range(1, n + 1)]
    alt = math.fsum((1 if m % 2 else -1) * d for m, d in enumerate(deltas, start=1))
    reports = [float_report("oracle-sum", {"n": n}, [alt], max(map(abs, deltas)), ORACLE_RTOL)]
    L = oracle_L(T)
    for m in range(1, n + 1):
        X, S = oracle_X(T, m), oracle_S(T, m)
        q = L / X
        res_x = [q.value - main_x(T, m)] if q.r_power == 0 else [q.value]
        rep = exact_report("oracle-x", {"n": n, "m": m}, res_x)
        if q.r_power:
            rep = CheckReport(rep.identity, rep.params, rep.residuals, "violated",
                              f"R power {q.r_power} does not cancel")
        reports.append(rep)
        reports.append(exact_report("oracle-s", {"n": n, "m": m}, [S - main_s(T, m)]))
        ratio = to_float(S / X.evaluate(R))
        reports.append(float_report("oracle-delta", {"n": n, "m": m},
                                    [ratio - deltas[m - 1]], abs(deltas[m - 1]), ORACLE_RTOL))
    return reports
