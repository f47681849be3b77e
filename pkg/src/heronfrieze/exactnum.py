"""Exact rational scalars and determinant kernels.

Every exact verdict in the package reduces to "is this rational exactly
zero?", so all scalars are :class:`fractions.Fraction` values, which are
kept in lowest terms with a positive denominator after every operation.
"""

from __future__ import annotations

import math
import warnings
from fractions import Fraction
from typing import Sequence

ExactRational = Fraction

__all__ = [
    "ExactRational",
    "rat",
    "as_rat",
    "det_exact",
    "det_cofactor",
    "to_float",
    "rat_to_json",
    "rat_from_json",
    "format_rat",
]


def rat(num: int, den: int = 1) -> Fraction:
    """Build the canonical rational ``num/den``.

    >>> rat(2, 4)
    Fraction(1, 2)
    >>> rat(-3, -6)
    Fraction(1, 2)
    """
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(int(num), int(den))


def as_rat(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: an exact check fed a float would silently verify a
    different polygon than the one the caller had in mind.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def det_cofactor(M: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant by Laplace expansion along the first row (small k only)."""
    k = len(M)
    if k == 1:
        return M[0][0]
    if k == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    total = Fraction(0)
    for j in range(k):
        if M[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * det_cofactor(minor)
        total += term if j % 2 == 0 else -term
    return total


def _check_square(M) -> int:
    k = len(M)
    if k == 0:
        raise ValueError("determinant of an empty matrix")
    for row in M:
        if len(row) != k:
            raise ValueError(f"matrix is not square: {k} rows, row of length {len(row)}")
    return k


def det_exact(M: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square rational matrix.

    Up to 3x3 the cofactor formula is used directly.  Larger matrices are
    cleared to a common integer denominator and reduced with Bareiss'
    fraction-free elimination, so every intermediate stays an integer and
    each division is exact.
    """
    k = _check_square(M)
    rows = [[as_rat(v) for v in row] for row in M]
    if k <= 3:
        return det_cofactor(rows)

    # Scale row i by the lcm of its denominators; det picks up the product.
    scale = 1
    A: list[list[int]] = []
    for row in rows:
        d = 1
        for v in row:
            d = d * v.denominator // math.gcd(d, v.denominator)
        scale *= d
        A.append([int(v * d) for v in row])

    sign = 1
    prev = 1
    for p in range(k - 1):
        if A[p][p] == 0:
            for i in range(p + 1, k):
                if A[i][p] != 0:
                    A[p], A[i] = A[i], A[p]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        piv = A[p][p]
        for i in range(p + 1, k):
            Ai, Ap = A[i], A[p]
            aip = Ai[p]
            for j in range(p + 1, k):
                Ai[j] = (piv * Ai[j] - aip * Ap[j]) // prev
            Ai[p] = 0
        prev = piv
    return Fraction(sign * A[k - 1][k - 1], scale)


def to_float(x: Fraction) -> float:
    """Nearest double to ``x``; overflow gives +-inf with a RuntimeWarning."""
    try:
        return float(x)
    except OverflowError:
        warnings.warn(f"rational with {x.numerator.bit_length()}-bit numerator "
                      "overflows a double", RuntimeWarning, stacklevel=2)
        return math.inf if x > 0 else -math.inf


def rat_to_json(x: Fraction) -> list[str]:
    x = as_rat(x)
    return [str(x.numerator), str(x.denominator)]


def rat_from_json(obj) -> Fraction:
    if not (isinstance(obj, (list, tuple)) and len(obj) == 2):
        raise ValueError(f"expected a [\"num\", \"den\"] pair, got {obj!r}")
    num, den = obj
    return rat(int(num), int(den))


def format_rat(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
