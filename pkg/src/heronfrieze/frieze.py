"""Heronian diamonds and the (plane) polygonal Heronian frieze of a polygon.

Frieze indices use the *cyclic* regime: every index is reduced into
``1..n`` with :func:`~heronfrieze.measurements.cyc`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Iterator, Optional

from .exactnum import format_rat, rat_from_json, rat_to_json
from .geometry import PolygonConfig
from .measurements import MeasurementTable, build_table, cyc, heron_H

__all__ = [
    "HeronianDiamond",
    "FriezeTable",
    "PlaneFriezeTable",
    "diamond_from_quad",
    "verify_diamond",
    "is_heronian",
    "build_frieze",
    "build_plane_frieze",
    "is_equilateral",
    "render_frieze",
    "frieze_from_json",
]


@dataclass(frozen=True)
class HeronianDiamond:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction
    f: Fraction
    p: Fraction
    q: Fraction
    r: Fraction
    s: Fraction
    source_quad: Optional[tuple[int, int, int, int]] = None

    def values(self) -> tuple[Fraction, ...]:
        return tuple(getattr(self, fl.name) for fl in fields(self)[:10])

    def replace(self, **kw) -> "HeronianDiamond":
        vals = {fl.name: getattr(self, fl.name) for fl in fields(self)}
        vals.update(kw)
        return HeronianDiamond(**vals)


def diamond_from_quad(T: MeasurementTable, i: int, j: int, k: int, l: int) -> HeronianDiamond:
    """Measurement diamond of the quadrilateral ``(A_i, A_j, A_k, A_l)``.

    Vertices may repeat, which is how the boundary rows and the gluing
    diamonds arise.
    """
    for v in (i, j, k, l):
        if not 1 <= v <= T.n:
            raise IndexError(f"vertex index {v} outside 1..{T.n}")
    x, s = T.x, T.s
    return HeronianDiamond(
        a=x(i, l), b=x(i, j), c=x(j, k), d=x(k, l), e=x(i, k), f=x(j, l),
        p=s(i, j, k), q=s(i, k, l), r=s(i, j, l), s=s(j, k, l),
        source_quad=(i, j, k, l),
    )


def verify_diamond(D: HeronianDiamond) -> list[Fraction]:
    """``LHS - RHS`` of each of the seven diamond equations."""
    a, b, c, d, e, f, p, q, r, s = D.values()
    return [
        p * p - heron_H(b, c, e),
        q * q - heron_H(a, d, e),
        r * r - heron_H(a, f, b),
        s * s - heron_H(c, f, d),
        (r + s) - (p + q),
        4 * e * f - ((p + q) ** 2 + (a - b + c - d) ** 2),
        e * (r - s) - (p * (a - d) + q * (b - c)),
    ]


def is_heronian(D: HeronianDiamond) -> bool:
    return all(v == 0 for v in verify_diamond(D))


@dataclass(frozen=True)
class FriezeTable:
    """Entries ``z[(i, j)]`` for all ``i, j`` and ``ztilde`` for the index
    triples ``(i, i+1, j)`` and ``(i, j, j+1)``, all reduced into ``1..n``."""

    n: int
    z: dict
    ztilde: dict

    def zz(self, i: int, j: int) -> Fraction:
        return self.z[(cyc(i, self.n), cyc(j, self.n))]

    def zt(self, i: int, j: int, k: int) -> Fraction:
        n = self.n
        return self.ztilde[(cyc(i, n), cyc(j, n), cyc(k, n))]

    def diamond(self, a: int, b: int) -> HeronianDiamond:
        """Diamond of the quadruple ``(A_a, A_{a+1}, A_b, A_{b+1})``, read
        straight from the frieze entries."""
        n = self.n
        a, b = cyc(a, n), cyc(b, n)
        a1, b1 = cyc(a + 1, n), cyc(b + 1, n)
        return HeronianDiamond(
            a=self.zz(a, b1), b=self.zz(a, a1), c=self.zz(a1, b), d=self.zz(b, b1),
            e=self.zz(a, b), f=self.zz(a1, b1),
            p=self.zt(a, a1, b), q=self.zt(a, b, b1),
            r=self.zt(a, a1, b1), s=self.zt(a1, b, b1),
            source_quad=(a, a1, b, b1),
        )

    def diamonds(self) -> Iterator[tuple[tuple[int, int], HeronianDiamond]]:
        """All diamonds of the pattern: ordered pairs ``(a, b)``, ``a != b``."""
        for a in range(1, self.n + 1):
            for b in range(1, self.n + 1):
                if a != b:
                    yield (a, b), self.diamond(a, b)


@dataclass(frozen=True)
class PlaneFriezeTable:
    frieze: FriezeTable
    gluing: tuple[HeronianDiamond, ...]

    @property
    def n(self) -> int:
        return self.frieze.n

    def diamonds(self) -> Iterator[tuple[tuple[int, int], HeronianDiamond]]:
        """Pattern diamonds followed by the gluing diamonds ``(a, a)``."""
        yield from self.frieze.diamonds()
        for a, D in enumerate(self.gluing, start=1):
            yield (a, a), D


def build_frieze(P: PolygonConfig) -> FriezeTable:
    T = build_table(P)
    n = P.n
    rng = range(1, n + 1)
    z = {(i, j): T.x(i, j) for i in rng for j in rng}
    zt = {}
    for i in rng:
        for j in rng:
            zt[(i, cyc(i + 1, n), j)] = T.sc(i, i + 1, j)
            zt[(i, j, cyc(j + 1, n))] = T.sc(i, j, j + 1)
    return FriezeTable(n, z, zt)


def build_plane_frieze(P: PolygonConfig) -> PlaneFriezeTable:
    T = build_table(P)
    n = P.n
    gluing = tuple(diamond_from_quad(T, a, cyc(a + 1, n), a, cyc(a + 1, n))
                   for a in range(1, n + 1))
    return PlaneFriezeTable(build_frieze(P), gluing)


def is_equilateral(F) -> bool:
    """All boundary-edge entries ``z_{i,i+1}`` equal."""
    F = F.frieze if isinstance(F, PlaneFriezeTable) else F
    edges = {F.zz(i, i + 1) for i in range(1, F.n + 1)}
    return len(edges) == 1


# -- rendering ---------------------------------------------------------------

_DIAMOND_KEYS = "abcdefpqrs"


def _frieze_json(F: FriezeTable) -> dict:
    return {
        "n": F.n,
        "z": {f"{i},{j}": rat_to_json(v) for (i, j), v in sorted(F.z.items())},
        "ztilde": {",".join(map(str, k)): rat_to_json(v) for k, v in sorted(F.ztilde.items())},
    }


def _grid(F: FriezeTable) -> list[tuple[str, list[str]]]:
    """Figure-style layout of one period.

    Half-step column ``c`` (taken mod ``4n``) holds ``z_{j+k, j}`` at
    ``c = 4(j-1) + 2k`` on z-row ``k``; the S-row between z-rows ``k`` and
    ``k+1`` holds ``S_{j+k, j+k+1, j}`` at ``c + 1`` and
    ``S_{j+k+1, j, j+1}`` at ``c + 3``.
    """
    n = F.n
    width = 4 * n

    def blank():
        return [""] * width

    rows = []
    top = blank()
    for j in range(1, n + 1):
        top[4 * (j - 1) + 2] = format_rat(F.zz(j, j + 1))
    rows.append(("dashed", top))
    for k in range(n + 1):
        zrow = blank()
        for j in range(1, n + 1):
            zrow[(4 * (j - 1) + 2 * k) % width] = format_rat(F.zz(j + k, j))
        rows.append(("z", zrow))
        if k == n:
            break
        srow = blank()
        for j in range(1, n + 1):
            c = 4 * (j - 1) + 2 * k
            srow[(c + 1) % width] = format_rat(F.zt(j + k, j + k + 1, j))
            srow[(c + 3) % width] = format_rat(F.zt(j + k + 1, j, j + 1))
        rows.append(("S", srow))
    bottom = blank()
    for j in range(1, n + 1):
        bottom[(4 * (j - 1) + 2 * n + 2) % width] = format_rat(F.zz(j, j + 1))
    rows.append(("dashed", bottom))
    return rows


def _render_ascii(F: FriezeTable, gluing=()) -> str:
    rows = _grid(F)
    widths = [max(len(r[c]) for _, r in rows) + 1 for c in range(4 * F.n)]
    lines = [f"Heronian frieze of order {F.n} (one period)"]
    for kind, cells in rows:
        if kind == "dashed":
            body = "".join((cell or "-").center(w, "-") for cell, w in zip(cells, widths))
            lines.append(f"{'':>7} {body}")
        else:
            lines.append(f"{kind:>7} " + "".join(cell.center(w) for cell, w in zip(cells, widths)))
    for a, D in enumerate(gluing, start=1):
        vals = " ".join(f"{k}={format_rat(v)}" for k, v in zip(_DIAMOND_KEYS, D.values()))
        lines.append(f"gluing {a}: {vals}")
    return "\n".join(line.rstrip() for line in lines) + "\n"


def render_frieze(F, format: str = "ascii") -> str:
    """Render a :class:`FriezeTable` or :class:`PlaneFriezeTable`."""
    plane = isinstance(F, PlaneFriezeTable)
    base = F.frieze if plane else F
    gluing = F.gluing if plane else ()
    if format == "ascii":
        return _render_ascii(base, gluing)
    if format == "json":
        obj = _frieze_json(base)
        if plane:
            obj["gluing"] = {
                str(a): {k: rat_to_json(v) for k, v in zip(_DIAMOND_KEYS, D.values())}
                for a, D in enumerate(gluing, start=1)
            }
        return json.dumps(obj, indent=1) + "\n"
    raise ValueError(f"unknown format {format!r}; expected 'ascii' or 'json'")


def _key(s: str, size: int) -> tuple[int, ...]:
    parts = tuple(int(p) for p in s.split(","))
    if len(parts) != size:
        raise ValueError(f"bad entry key {s!r}")
    return parts


def frieze_from_json(obj):
    """Inverse of the JSON rendering; accepts a dict or a JSON string."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    n = int(obj["n"])
    z = {_key(k, 2): rat_from_json(v) for k, v in obj["z"].items()}
    zt = {_key(k, 3): rat_from_json(v) for k, v in obj["ztilde"].items()}
    F = FriezeTable(n, z, zt)
    if "gluing" not in obj:
        return F
    gluing = []
    for a in range(1, n + 1):
        entry = obj["gluing"][str(a)]
        a1 = cyc(a + 1, n)
        gluing.append(HeronianDiamond(**{k: rat_from_json(entry[k]) for k in _DIAMOND_KEYS},
                                      source_quad=(a, a1, a, a1)))
    return PlaneFriezeTable(F, tuple(gluing))
