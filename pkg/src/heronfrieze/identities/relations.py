"""Chord relations and determinant identities for cyclic polygons.

Every check needs a cyclic polygon with anticlockwise vertex order; other
inputs give a ``skipped`` report naming the failed hypothesis.  Indices in
:func:`check_cor_diamonds` and :func:`check_cor_chord` are read modulo n.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Optional, Sequence

from ..exactnum import det_exact
from ..geometry import DegeneratePolygonError
from ..measurements import MeasurementTable, build_table, cyc
from .report import CheckReport, exact_report, skipped

__all__ = [
    "cyclic_hypothesis",
    "ptolemy_residual",
    "det3_matrices",
    "check_ptolemy_s",
    "check_det3",
    "cor_diamond_matrices",
    "diamond_kind",
    "check_cor_diamond",
    "check_cor_diamonds",
    "chord_residual",
    "check_chord_relation",
    "cor_chord_vertices",
    "is_wraparound",
    "valid_cor_chord_params",
    "check_cor_chord",
    "plane_det_matrix",
    "plane_det_degrees",
    "check_plane_det",
    "sample",
    "anticlockwise_quads",
]


def _table(P) -> MeasurementTable:
    return P if isinstance(P, MeasurementTable) else build_table(P)


def cyclic_hypothesis(T: MeasurementTable) -> Optional[str]:
    """None if the polygon is cyclic and anticlockwise, else the reason."""
    if not T.polygon.cyclic:
        return "not cyclic"
    try:
        o = T.orientation
    except DegeneratePolygonError as exc:
        return f"degenerate: {exc}"
    if not o.anticlockwise:
        return f"orientation: vertices are {o.verdict}, not anticlockwise"
    return None


def _increasing(T: MeasurementTable, idx: Sequence[int]):
    if not all(1 <= v <= T.n for v in idx):
        raise IndexError(f"indices {tuple(idx)} outside 1..{T.n}")
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise ValueError(f"indices {tuple(idx)} must be strictly increasing")


# -- four points on a circle -------------------------------------------------

def ptolemy_residual(T: MeasurementTable, i: int, j: int, k: int, l: int) -> Fraction:
    x, s = T.x, T.s
    return (s(i, j, k) * x(j, l) * x(k, l) - s(i, j, l) * x(i, k) * x(k, l)
            + s(i, k, l) * x(i, j) * x(j, l) - s(j, k, l) * x(i, j) * x(i, k))


def det3_matrices(T: MeasurementTable, i: int, j: int, k: int, l: int):
    x, s = T.x, T.s
    return (
        [[x(k, l), s(i, k, l), s(j, k, l)],
         [-x(i, j), s(i, j, k), s(i, j, l)],
         [0, x(i, k), x(j, l)]],
        [[x(k, l), s(i, k, l), s(j, k, l)],
         [x(i, j), s(i, j, l), s(i, j, k)],
         [0, x(i, l), x(j, k)]],
        [[x(j, k), s(i, j, k), s(j, k, l)],
         [-x(i, l), s(i, k, l), s(i, j, l)],
         [0, x(i, k), x(j, l)]],
    )


def check_ptolemy_s(T, i: int, j: int, k: int, l: int) -> CheckReport:
    T = _table(T)
    _increasing(T, (i, j, k, l))
    params = {"i": i, "j": j, "k": k, "l": l}
    why = cyclic_hypothesis(T)
    if why:
        return skipped("ptolemy-s", params, why)
    return exact_report("ptolemy-s", params, [ptolemy_residual(T, i, j, k, l)])


def check_det3(T, i: int, j: int, k: int, l: int) -> CheckReport:
    T = _table(T)
    _increasing(T, (i, j, k, l))
    params = {"i": i, "j": j, "k": k, "l": l}
    why = cyclic_hypothesis(T)
    if why:
        return skipped("det3", params, why)
    return exact_report("det3", params, [det_exact(M) for M in det3_matrices(T, i, j, k, l)])


# -- diamonds of the plane frieze --------------------------------------------

def diamond_kind(n: int, a: int, b: int) -> str:
    """``gluing`` (b = a), ``bottom`` (b = a+1), ``top`` (b = a-1) or ``inner``."""
    a, b = cyc(a, n), cyc(b, n)
    if a == b:
        return "gluing"
    if b == cyc(a + 1, n):
        return "bottom"
    if b == cyc(a - 1, n):
        return "top"
    return "inner"


def cor_diamond_matrices(T: MeasurementTable, a: int, b: int, corner=(None, None, None)):
    """The three 3x3 matrices attached to diamond ``(a, b)``.

    ``corner`` optionally overrides the bottom-left entry of each matrix.
    """
    x, s = T.xc, T.sc
    a1, b1 = a + 1, b + 1
    M = [
        [[x(b, b1), s(a, b, b1), s(a1, b, b1)],
         [-x(a, a1), s(a, a1, b), s(a, a1, b1)],
         [0, x(a, b), x(a1, b1)]],
        [[x(b, b1), s(a, b, b1), s(a1, b, b1)],
         [x(a, a1), s(a, a1, b1), s(a, a1, b)],
         [0, x(a, b1), x(a1, b)]],
        [[x(a1, b), s(a, a1, b), s(a1, b, b1)],
         [-x(a, b1), s(a, b, b1), s(a, a1, b1)],
         [0, x(a, b), x(a1, b1)]],
    ]
    for m, c in zip(M, corner):
        if c is not None:
            m[2][0] = c
    return M


def check_cor_diamond(T, a: int, b: int) -> CheckReport:
    """Three determinants for diamond ``(a, b)``; on the boundary rows and
    gluing diamonds the alternative bottom-left entries are appended."""
    T = _table(T)
    n = T.n
    kind = diamond_kind(n, a, b)
    params = {"a": a, "b": b, "kind": kind}
    why = cyclic_hypothesis(T)
    if why:
        return skipped("cor-diamonds", params, why)
    dets = [det_exact(M) for M in cor_diamond_matrices(T, a, b)]
    x = T.xc
    if kind == "bottom":
        variants = [(x(a + 1, b), None, None)]
    elif kind == "top":
        variants = [(x(a, b + 1), None, None)]
    elif kind == "gluing":
        variants = [(None, x(a, b), None), (None, x(a + 1, b + 1), None)]
    else:
        variants = []
    for corner in variants:
        Ms = cor_diamond_matrices(T, a, b, corner)
        dets.extend(det_exact(Ms[i]) for i, c in enumerate(corner) if c is not None)
    return exact_report("cor-diamonds", params, dets)


def check_cor_diamonds(P) -> list[CheckReport]:
    """Every ordered pair ``(a, b)``, gluing pairs ``a = b`` included."""
    T = _table(P)
    rng = range(1, T.n + 1)
    return [check_cor_diamond(T, a, b) for a in rng for b in rng]


# -- chord relations ---------------------------------------------------------

def chord_residual(T: MeasurementTable, V: Sequence[int]) -> Fraction:
    """Residual of the chord relation for the cyclic sub-polygon ``V``.

    With ``V = (v_1, ..., v_{m+1})`` in anticlockwise order and ``w = v_{m+1}``::

        S_{v_1 v_m w} prod_{i=2}^{m-1} x_{v_i w}
            - sum_{j=1}^{m-1} S_{v_j v_{j+1} w} prod_{k != j, j+1} x_{v_k w}
    """
    m = len(V) - 1
    w = V[-1]
    xs = [T.x(v, w) for v in V[:-1]]
    lhs = T.s(V[0], V[m - 1], w)
    for i in range(1, m - 1):
        lhs *= xs[i]
    rhs = Fraction(0)
    for j in range(m - 1):
        term = T.s(V[j], V[j + 1], w)
        for k in range(m):
            if k != j and k != j + 1:
                term *= xs[k]
        rhs += term
    return lhs - rhs


def check_chord_relation(T, m: int) -> CheckReport:
    T = _table(T)
    if m < 2 or T.n != m + 1:
        raise ValueError(f"the chord relation with m={m} needs an {m + 1}-gon, got n={T.n}")
    params = {"m": m}
    why = cyclic_hypothesis(T)
    if why:
        return skipped("chord", params, why)
    return exact_report("chord", params, [chord_residual(T, list(range(1, m + 2)))])


def cor_chord_vertices(n: int, m: int, q: int, r: int) -> list[int]:
    """``q, q+1, ..., q+m-2, r, r+1`` reduced modulo n; raises if not distinct."""
    if not 2 <= m <= n - 1:
        raise ValueError(f"m={m} outside 2..{n - 1}")
    if not (1 <= q <= n and 1 <= r <= n):
        raise ValueError(f"q={q}, r={r} must lie in 1..{n}")
    V = [cyc(q + t, n) for t in range(m - 1)] + [cyc(r, n), cyc(r + 1, n)]
    if len(set(V)) != len(V):
        raise ValueError(f"indices {V} for (m, q, r) = ({m}, {q}, {r}) are not distinct")
    return V


def is_wraparound(n: int, m: int, q: int, r: int) -> bool:
    """True if some index of the relation passes n and is reduced."""
    return q + m - 2 > n or r + 1 > n


def valid_cor_chord_params(n: int) -> Iterator[tuple[int, int, int]]:
    for m in range(2, n):
        for q in range(1, n + 1):
            for r in range(1, n + 1):
                try:
                    cor_chord_vertices(n, m, q, r)
                except ValueError:
                    continue
                yield m, q, r


def check_cor_chord(T, m: int, q: int, r: int) -> CheckReport:
    T = _table(T)
    V = cor_chord_vertices(T.n, m, q, r)
    params = {"m": m, "q": q, "r": r}
    why = cyclic_hypothesis(T)
    if why:
        return skipped("cor-chord", params, why)
    return exact_report("cor-chord", params, [chord_residual(T, V)])


# -- plane determinants ------------------------------------------------------

def plane_det_matrix(T: MeasurementTable, d: int) -> list[list[Fraction]]:
    """``(n/2) x (n/2)`` matrix with entry ``(i, j) = x_{2i, 2j-1}^(d/2)``."""
    h = T.n // 2
    e = d // 2
    return [[T.x(2 * i, 2 * j - 1) ** e for j in range(1, h + 1)] for i in range(1, h + 1)]


def plane_det_degrees(n: int) -> list[int]:
    """Even ``d`` in ``0..n-2`` (the range reported by ``run_all_checks``)."""
    return list(range(0, n - 1, 2))


def check_plane_det(P, d: int) -> CheckReport:
    """Vanishing of the odd/even chord-power determinant.

    The vanishing is claimed when the half-size ``h = n/2`` is even and
    ``d`` is one of ``0, 2, ..., h-2``.  Outside that range the determinant
    is still computed and attached to a ``skipped`` report.
    """
    T = _table(P)
    n = T.n
    params = {"n": n, "d": d}
    if n % 2:
        return skipped("plane-det", params, "n is odd")
    if d < 0 or d % 2:
        return skipped("plane-det", params, "d must be a non-negative even integer")
    why = cyclic_hypothesis(T)
    if why:
        return skipped("plane-det", params, why)
    h = n // 2
    det = det_exact(plane_det_matrix(T, d))
    if h % 2:
        return skipped("plane-det", params, "n not divisible by 4 (informational)", [det])
    if d > h - 2:
        return skipped("plane-det", params, f"d > n/2 - 2 = {h - 2} (informational)", [det])
    return exact_report("plane-det", params, [det])


def sample(items: list, budget: Optional[int], seed: int = 0) -> list:
    """All items, or a deterministic uniform sample of ``budget`` of them."""
    if budget is None or len(items) <= budget:
        return items
    return sorted(random.Random(seed).sample(items, budget))


def anticlockwise_quads(n: int) -> list[tuple[int, int, int, int]]:
    return list(combinations(range(1, n + 1), 4))
