"""Rational-coordinate polygons, including exact points on circles.

Cyclic polygons are built from the tangent half-angle parametrization

    t  ->  center + R * ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)),

which hits every point of the circle except the one at angle pi, with
rational coordinates whenever t and R are rational.  Increasing t walks the
circle anticlockwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .exactnum import as_rat, rat_from_json, rat_to_json

__all__ = [
    "Point",
    "CyclicData",
    "PolygonConfig",
    "Orientation",
    "DegeneratePolygonError",
    "circle_point",
    "make_cyclic_polygon",
    "make_polygon",
    "random_cyclic_polygon",
    "random_polygon",
    "circumcircle",
    "is_concyclic",
    "check_orientation",
    "perturb_radially",
    "polygon_to_json",
    "polygon_from_json",
    "T_NUM_BOUND",
    "T_DEN_BOUND",
]

# Bounds on the random tangent parameters.  Entries of the alternating sums
# grow with the heights of these, so they are kept small.
T_NUM_BOUND = 50
T_DEN_BOUND = 20


class DegeneratePolygonError(ValueError):
    pass


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rat(self.x))
        object.__setattr__(self, "y", as_rat(self.y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __iter__(self):
        yield self.x
        yield self.y


ORIGIN = Point(0, 0)


@dataclass(frozen=True)
class CyclicData:
    radius: Fraction
    center: Point
    params: tuple[Fraction, ...]


@dataclass(frozen=True)
class PolygonConfig:
    """An ordered tuple of vertices ``A_1 .. A_n``.

    ``cyclic`` records whether the cyclic-polygon theorems may be applied.
    It is always true when ``cyclic_data`` is present; for bare vertex lists
    it is either detected exactly or asserted by the caller (which is how a
    perturbed polygon gets its identities checked, and refuted).
    """

    vertices: tuple[Point, ...]
    cyclic_data: Optional[CyclicData] = None
    cyclic: bool = False
    n: int = field(init=False)

    def __post_init__(self):
        verts = tuple(v if isinstance(v, Point) else Point(*v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "n", len(verts))
        if self.n < 3:
            raise ValueError(f"a polygon needs at least 3 vertices, got {self.n}")
        if self.cyclic_data is not None:
            object.__setattr__(self, "cyclic", True)

    def vertex(self, i: int) -> Point:
        """1-based vertex access."""
        if not 1 <= i <= self.n:
            raise IndexError(f"vertex index {i} outside 1..{self.n}")
        return self.vertices[i - 1]

    @property
    def radius(self) -> Optional[Fraction]:
        return None if self.cyclic_data is None else self.cyclic_data.radius


def circle_point(t, R=1, center: Point = ORIGIN) -> Point:
    t, R = as_rat(t), as_rat(R)
    if R <= 0:
        raise ValueError("radius must be positive")
    d = 1 + t * t
    return Point(center.x + R * (1 - t * t) / d, center.y + R * 2 * t / d)


def make_cyclic_polygon(n: int, t: Sequence, R=1, center: Point = ORIGIN) -> PolygonConfig:
    """Polygon with vertices ``circle_point(t_i, R, center)``, anticlockwise."""
    if n < 3:
        raise ValueError(f"a polygon needs at least 3 vertices, got {n}")
    t = tuple(as_rat(v) for v in t)
    if len(t) != n:
        raise ValueError(f"expected {n} parameters, got {len(t)}")
    if any(b <= a for a, b in zip(t, t[1:])):
        raise ValueError("circle parameters must be strictly increasing")
    R = as_rat(R)
    verts = tuple(circle_point(ti, R, center) for ti in t)
    return PolygonConfig(verts, CyclicData(R, center, t))


def make_polygon(vertices: Sequence, cyclic: Optional[bool] = None) -> PolygonConfig:
    """Polygon from explicit vertices.

    With ``cyclic=None`` concyclicity is decided exactly.
    """
    P = PolygonConfig(tuple(Point(*v) if not isinstance(v, Point) else v for v in vertices))
    if cyclic is None:
        cyclic = is_concyclic(P)
    return PolygonConfig(P.vertices, cyclic=bool(cyclic))


def _random_params(n: int, rng: random.Random) -> list[Fraction]:
    seen: set[Fraction] = set()
    while len(seen) < n:
        seen.add(Fraction(rng.randint(-T_NUM_BOUND, T_NUM_BOUND), rng.randint(1, T_DEN_BOUND)))
    return sorted(seen)


def random_cyclic_polygon(n: int, seed: int, R=1) -> PolygonConfig:
    """Deterministic random cyclic n-gon on the circle of radius R about 0.

    Parameters are ``p/q`` with ``|p| <= T_NUM_BOUND`` and
    ``1 <= q <= T_DEN_BOUND``.
    """
    rng = random.Random(int(seed))
    return make_cyclic_polygon(n, _random_params(n, rng), R)


def random_polygon(n: int, seed: int, bound: int = 20) -> PolygonConfig:
    """Random polygon with small rational coordinates; generally not cyclic."""
    rng = random.Random(int(seed))

    def coord():
        return Fraction(rng.randint(-bound, bound), rng.randint(1, 5))

    return make_polygon([(coord(), coord()) for _ in range(n)], cyclic=False)


def circumcircle(a: Point, b: Point, c: Point) -> tuple[Point, Fraction]:
    """Center and squared radius of the circle through three points."""
    d = 2 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y))
    if d == 0:
        raise DegeneratePolygonError("collinear points have no circumcircle")
    na, nb, nc = a.x ** 2 + a.y ** 2, b.x ** 2 + b.y ** 2, c.x ** 2 + c.y ** 2
    ux = (na * (b.y - c.y) + nb * (c.y - a.y) + nc * (a.y - b.y)) / d
    uy = (na * (c.x - b.x) + nb * (a.x - c.x) + nc * (b.x - a.x)) / d
    center = Point(ux, uy)
    return center, (a.x - ux) ** 2 + (a.y - uy) ** 2


def is_concyclic(P: PolygonConfig) -> bool:
    """Distinct vertices, all exactly on one circle."""
    if len(set(P.vertices)) != P.n:
        return False
    try:
        center, r2 = circumcircle(*P.vertices[:3])
    except DegeneratePolygonError:
        return False
    return all((v.x - center.x) ** 2 + (v.y - center.y) ** 2 == r2 for v in P.vertices)


def _s(a: Point, b: Point, c: Point) -> Fraction:
    return 2 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x))


@dataclass(frozen=True)
class Orientation:
    verdict: str  # "anticlockwise", "clockwise", "mixed" or "degenerate"
    nonpositive: tuple[tuple[int, int, int], ...] = ()

    @property
    def anticlockwise(self) -> bool:
        return self.verdict == "anticlockwise"


def check_orientation(P: PolygonConfig) -> Orientation:
    """Orientation of the vertex order.

    For cyclic polygons every triple ``i<j<k`` must have the same sign; a
    zero signed area there raises :class:`DegeneratePolygonError`.  For other
    polygons the verdict is the sign of ``S_123`` and ``nonpositive`` lists
    every triple whose signed area is not positive.
    """
    n = P.n
    bad = []
    pos = 0
    for i, j, k in combinations(range(1, n + 1), 3):
        s = _s(P.vertex(i), P.vertex(j), P.vertex(k))
        if s <= 0:
            if s == 0 and P.cyclic:
                raise DegeneratePolygonError(f"vertices {i},{j},{k} are collinear")
            bad.append((i, j, k))
        else:
            pos += 1
    bad = tuple(bad)
    if P.cyclic:
        if not bad:
            return Orientation("anticlockwise")
        if pos == 0:
            return Orientation("clockwise", bad)
        return Orientation("mixed", bad)
    s123 = _s(*P.vertices[:3])
    if s123 > 0:
        verdict = "anticlockwise"
    elif s123 < 0:
        verdict = "clockwise"
    else:
        verdict = "degenerate"
    return Orientation(verdict, bad)


def perturb_radially(P: PolygonConfig, i: int, eps) -> PolygonConfig:
    """Move vertex ``i`` by ``eps`` along the ray from the circle's center.

    The factor ``1 + eps/R`` keeps coordinates rational; the result keeps
    ``cyclic=True`` so cyclic identities are still evaluated on it.
    """
    if P.cyclic_data is None:
        raise ValueError("radial perturbation needs a polygon with circle data")
    c, R = P.cyclic_data.center, P.cyclic_data.radius
    f = 1 + as_rat(eps) / R
    verts = list(P.vertices)
    v = verts[i - 1]
    verts[i - 1] = Point(c.x + f * (v.x - c.x), c.y + f * (v.y - c.y))
    return PolygonConfig(tuple(verts), cyclic=True)


def polygon_to_json(P: PolygonConfig) -> dict:
    if P.cyclic_data is not None and P.cyclic_data.center == ORIGIN:
        return {
            "n": P.n,
            "R": rat_to_json(P.cyclic_data.radius),
            "t": [rat_to_json(t) for t in P.cyclic_data.params],
        }
    return {
        "n": P.n,
        "vertices": [[rat_to_json(v.x), rat_to_json(v.y)] for v in P.vertices],
        "cyclic": P.cyclic,
    }


def polygon_from_json(obj: dict) -> PolygonConfig:
    """Parse the polygon schema; exactly one of ``t``+``R`` or ``vertices``.

    A vertex-form polygon may carry ``"cyclic": true/false`` to assert the
    hypothesis; without it concyclicity is detected exactly.
    """
    if not isinstance(obj, dict):
        raise ValueError("polygon JSON must be an object")
    has_t = "t" in obj or "R" in obj
    has_v = "vertices" in obj
    if has_t == has_v:
        raise ValueError("polygon JSON needs exactly one of (\"t\" with \"R\") or \"vertices\"")
    n = obj.get("n")
    if has_t:
        if "t" not in obj or "R" not in obj:
            raise ValueError("\"t\" and \"R\" must be given together")
        t = [rat_from_json(v) for v in obj["t"]]
        P = make_cyclic_polygon(len(t) if n is None else int(n), t, rat_from_json(obj["R"]))
    else:
        verts = [(rat_from_json(x), rat_from_json(y)) for x, y in obj["vertices"]]
        if n is not None and int(n) != len(verts):
            raise ValueError(f"\"n\" is {n} but {len(verts)} vertices given")
        P = make_polygon(verts, obj.get("cyclic"))
    return P
