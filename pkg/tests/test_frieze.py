from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from heronfrieze.frieze import (
    HeronianDiamond,
    build_frieze,
    build_plane_frieze,
    diamond_from_quad,
    frieze_from_json,
    is_equilateral,
    is_heronian,
    render_frieze,
    verify_diamond,
)
from heronfrieze.geometry import make_polygon, random_cyclic_polygon, random_polygon
from heronfrieze.measurements import build_table, cyc

seeds = st.integers(0, 10 ** 6)


def test_square_diamond(square):
    D = diamond_from_quad(build_table(square), 1, 2, 3, 4)
    assert (D.a, D.b, D.c, D.d, D.e, D.f) == (2, 2, 2, 2, 4, 4)
    assert (D.p, D.q, D.r, D.s) == (4, 4, 4, 4)
    assert verify_diamond(D) == [0] * 7
    # equation 6 by hand: 4*4*4 = (4+4)^2 + 0
    assert 4 * D.e * D.f == (D.p + D.q) ** 2


def test_repeated_vertex_diamonds(square):
    T = build_table(square)
    D = diamond_from_quad(T, 1, 2, 2, 3)
    assert D.c == 0 and D.p == 0
    G = diamond_from_quad(T, 1, 2, 1, 2)
    assert G.e == 0 and G.f == 0
    with pytest.raises(IndexError):
        diamond_from_quad(T, 0, 1, 2, 3)
    with pytest.raises(IndexError):
        diamond_from_quad(T, 1, 2, 3, 5)


def test_zero_diamond():
    Z = HeronianDiamond(*[Fraction(0)] * 10)
    assert verify_diamond(Z) == [0] * 7


def test_perturbed_p_breaks_equations():
    # a generic diamond; on the square a = d and b = c hide p from equation 7
    D = diamond_from_quad(build_table(random_polygon(4, 11)), 1, 2, 3, 4)
    assert verify_diamond(D) == [0] * 7
    res = verify_diamond(D.replace(p=D.p + 1))
    assert [k + 1 for k, r in enumerate(res) if r != 0] == [1, 5, 6, 7]


def test_square_frieze_entries(square):
    F = build_frieze(square)
    assert F.zt(1, 2, 1) == 0
    assert F.zt(1, 2, 3) == 4
    assert all(F.zz(i, i) == 0 for i in range(1, 5))


@given(st.integers(3, 9), seeds)
def test_boundary_conditions(n, seed):
    F = build_frieze(random_polygon(n, seed))
    for i in range(1, n + 1):
        assert F.zz(i, i) == 0
        for j in range(1, n + 1):
            # entries of the forms z~_iij, z~_ijj, z~_iji present in the table
            assert F.zt(i, i + 1, i) == 0
            assert F.zt(i, i + 1, i + 1) == 0
            if i in (j, cyc(j + 1, n)):
                assert F.zt(i, j, j + 1) == 0


@given(st.integers(3, 9), seeds, st.integers(-3, 3), st.integers(-3, 3))
def test_periodic(n, seed, s, t):
    F = build_frieze(random_polygon(n, seed))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            assert F.zz(i + s * n, j + t * n) == F.zz(i, j)
            assert F.zt(i + s * n, i + 1 + s * n, j + t * n) == F.zt(i, i + 1, j)


@given(st.integers(3, 9), seeds)
def test_every_diamond_is_heronian(n, seed):
    PF = build_plane_frieze(random_polygon(n, seed))
    T = build_table(random_polygon(n, seed))
    count = 0
    for (a, b), D in PF.diamonds():
        assert verify_diamond(D) == [0] * 7
        a1, b1 = cyc(a + 1, n), cyc(b + 1, n)
        assert D.values() == diamond_from_quad(T, a, a1, b, b1).values()
        count += 1
    assert count == n * n


def test_gluing_diamonds(square):
    PF = build_plane_frieze(square)
    assert len(PF.gluing) == 4
    for D in PF.gluing:
        assert D.values() == (2, 2, 2, 2, 0, 0, 0, 0, 0, 0)
        assert is_heronian(D)


@given(st.integers(3, 12), seeds)
def test_gluing_count_and_shape(n, seed):
    PF = build_plane_frieze(random_polygon(n, seed))
    assert len(PF.gluing) == n
    for a, D in enumerate(PF.gluing, start=1):
        edge = PF.frieze.zz(a, a + 1)
        assert D.values() == (edge,) * 4 + (0,) * 6


def test_is_equilateral(square):
    assert is_equilateral(build_frieze(square))
    assert not is_equilateral(build_frieze(random_cyclic_polygon(6, 0)))
    # isosceles: x_12 = x_13 = 5 but x_23 = 4
    iso = make_polygon([(0, 0), (2, 1), (2, -1)][::-1])
    F = build_frieze(iso)
    assert sorted(F.zz(i, i + 1) for i in range(1, 4)) == [4, 5, 5]
    assert not is_equilateral(F)


def test_ascii_layout_triangle():
    F = build_frieze(random_cyclic_polygon(3, 7))
    lines = render_frieze(F, "ascii").splitlines()
    body = lines[1:]
    assert body[0].lstrip().startswith("-") and body[-1].lstrip().startswith("-")
    labels = [ln.split()[0] for ln in body[1:-1]]
    # zero rows on both sides of the 2n-1 content rows
    assert labels[0] == labels[-1] == "z"
    assert len(labels[1:-1]) == 2 * 3 - 1
    assert labels[1:-1] == ["S", "z", "S", "z", "S"]


def test_ascii_zero_diagonal(square):
    text = render_frieze(build_frieze(square), "ascii")
    rows = [ln.split() for ln in text.splitlines() if ln.strip().startswith("z")]
    assert rows[0] == ["z", "0", "0", "0", "0"]
    assert rows[-1] == ["z", "0", "0", "0", "0"]


def test_ascii_plane_lists_gluing(square):
    text = render_frieze(build_plane_frieze(square), "ascii")
    assert sum(ln.startswith("gluing") for ln in text.splitlines()) == 4


@given(st.integers(3, 8), seeds)
def test_json_round_trip(n, seed):
    P = random_polygon(n, seed)
    F = build_frieze(P)
    assert frieze_from_json(render_frieze(F, "json")) == F
    PF = build_plane_frieze(P)
    back = frieze_from_json(json.loads(render_frieze(PF, "json")))
    assert back.frieze == PF.frieze
    assert [D.values() for D in back.gluing] == [D.values() for D in PF.gluing]


def test_render_unknown_format(square):
    with pytest.raises(ValueError):
        render_frieze(build_frieze(square), "svg")
