from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from heronfrieze.exactnum import det_exact
from heronfrieze.geometry import (
    make_polygon,
    perturb_radially,
    random_cyclic_polygon,
    random_polygon,
)
from heronfrieze.identities.relations import (
    check_chord_relation,
    check_cor_chord,
    check_cor_diamonds,
    check_det3,
    check_plane_det,
    check_ptolemy_s,
    cor_chord_vertices,
    cor_diamond_matrices,
    det3_matrices,
    diamond_kind,
    is_wraparound,
    ptolemy_residual,
    valid_cor_chord_params,
)
from heronfrieze.measurements import build_table

from test_exactnum import leibniz

seeds = st.integers(0, 10 ** 6)


# -- four points ---------------------------------------------------------------

def test_square_ptolemy_by_hand(square):
    T = build_table(square)
    # 4*4*2 - 4*4*2 + 4*2*4 - 4*2*4
    terms = [T.s(1, 2, 3) * T.x(2, 4) * T.x(3, 4), T.s(1, 2, 4) * T.x(1, 3) * T.x(3, 4),
             T.s(1, 3, 4) * T.x(1, 2) * T.x(2, 4), T.s(2, 3, 4) * T.x(1, 2) * T.x(1, 3)]
    assert terms == [32, 32, 32, 32]
    assert check_ptolemy_s(T, 1, 2, 3, 4).residuals == (0,)
    assert check_det3(T, 1, 2, 3, 4).residuals == (0, 0, 0)


def test_octagon_quadruple():
    rep = check_det3(random_cyclic_polygon(8, 9), 1, 3, 5, 8)
    assert rep.holds and rep.residuals == (0, 0, 0)


@given(st.integers(4, 9), seeds)
def test_first_determinant_is_the_expansion(n, seed):
    # an identity in the entries, so it holds off the circle too
    T = build_table(random_polygon(n, seed))
    for q in combinations(range(1, n + 1), 4):
        assert det_exact(det3_matrices(T, *q)[0]) == ptolemy_residual(T, *q)


@given(st.integers(4, 8), seeds)
def test_det3_on_random_cyclic(n, seed):
    T = build_table(random_cyclic_polygon(n, seed))
    for q in combinations(range(1, n + 1), 4):
        assert check_det3(T, *q).residuals == (0, 0, 0)
        assert check_ptolemy_s(T, *q).residuals == (0,)


def test_perturbed_vertex_breaks_ptolemy():
    P = perturb_radially(random_cyclic_polygon(6, 2), 2, Fraction(1, 1000))
    rep = check_ptolemy_s(P, 1, 2, 3, 4)
    assert rep.violated and rep.residuals[0] != 0


def test_hypothesis_and_argument_errors():
    P = random_cyclic_polygon(6, 2)
    assert check_det3(make_polygon(P.vertices[::-1]), 1, 2, 3, 4).verdict == "skipped"
    rep = check_det3(random_polygon(6, 2), 1, 2, 3, 4)
    assert rep.verdict == "skipped" and rep.reason == "not cyclic"
    with pytest.raises(ValueError):
        check_det3(P, 2, 1, 3, 4)
    with pytest.raises(IndexError):
        check_det3(P, 1, 2, 3, 7)


# -- diamonds -----------------------------------------------------------------

def test_diamond_kinds():
    assert diamond_kind(5, 2, 2) == "gluing"
    assert diamond_kind(5, 2, 3) == "bottom"
    assert diamond_kind(5, 5, 1) == "bottom"
    assert diamond_kind(5, 1, 5) == "top"
    assert diamond_kind(5, 1, 3) == "inner"


def test_pentagon_all_positions():
    reps = check_cor_diamonds(random_cyclic_polygon(5, 3))
    assert len(reps) == 25
    assert all(r.holds for r in reps)
    kinds = [r.params["kind"] for r in reps]
    assert kinds.count("gluing") == 5 and kinds.count("inner") == 10
    # boundary rows carry one variant determinant, gluing diamonds two
    assert {len(r.residuals) for r in reps if r.params["kind"] in ("top", "bottom")} == {4}
    assert {len(r.residuals) for r in reps if r.params["kind"] == "gluing"} == {5}


def test_bottom_row_zero_pattern():
    T = build_table(random_cyclic_polygon(6, 1))
    M1 = cor_diamond_matrices(T, 2, 3)[0]
    assert M1[0][2] == 0 and M1[1][1] == 0
    assert M1[0][1] == M1[1][2] == T.s(2, 3, 4)


def test_gluing_zero_pattern():
    T = build_table(random_cyclic_polygon(6, 1))
    M1 = cor_diamond_matrices(T, 4, 4)[0]
    assert [row[1:] for row in M1] == [[0, 0]] * 3


@given(st.integers(4, 8), seeds)
def test_cor_diamonds_random(n, seed):
    assert all(r.holds for r in check_cor_diamonds(random_cyclic_polygon(n, seed)))


def test_cor_diamond_detects_perturbation():
    P = perturb_radially(random_cyclic_polygon(7, 0), 3, Fraction(1, 1000))
    assert any(r.violated for r in check_cor_diamonds(P))


# -- chord relations -----------------------------------------------------------

def test_triangle_collapse():
    rep = check_chord_relation(random_cyclic_polygon(3, 0), 2)
    assert rep.holds


def test_square_chord_by_hand(square):
    T = build_table(square)
    assert T.s(1, 3, 4) * T.x(2, 4) == 16
    assert T.s(1, 2, 4) * T.x(3, 4) + T.s(2, 3, 4) * T.x(1, 4) == 8 + 8
    assert check_chord_relation(T, 3).residuals == (0,)


def test_chord_relation_size_mismatch():
    with pytest.raises(ValueError):
        check_chord_relation(random_cyclic_polygon(6, 0), 4)


@given(st.integers(3, 10), seeds)
def test_chord_relation_random(n, seed):
    assert check_chord_relation(random_cyclic_polygon(n, seed), n - 1).holds


def eq25_residual(T):
    x, s = T.x, T.s
    lhs = s(3, 9, 10) * x(4, 10) * x(5, 10) * x(6, 10)
    rhs = (s(3, 4, 10) * x(5, 10) * x(6, 10) * x(9, 10)
           + s(4, 5, 10) * x(3, 10) * x(6, 10) * x(9, 10)
           + s(5, 6, 10) * x(3, 10) * x(4, 10) * x(9, 10)
           + s(6, 9, 10) * x(3, 10) * x(4, 10) * x(5, 10))
    return lhs - rhs


@pytest.mark.parametrize("seed", range(4))
def test_decagon_instance_written_out(seed):
    T = build_table(random_cyclic_polygon(10, seed))
    assert cor_chord_vertices(10, 5, 3, 9) == [3, 4, 5, 6, 9, 10]
    assert eq25_residual(T) == 0
    assert check_cor_chord(T, 5, 3, 9).residuals == (0,)
    # off the circle the written-out form and the implementation still agree
    Q = build_table(perturb_radially(random_cyclic_polygon(10, seed), 4, Fraction(1, 100)))
    assert eq25_residual(Q) != 0
    assert check_cor_chord(Q, 5, 3, 9).residuals == (eq25_residual(Q),)


def test_m2_collapse():
    T = build_table(random_cyclic_polygon(8, 1))
    assert cor_chord_vertices(8, 2, 2, 5) == [2, 5, 6]
    assert check_cor_chord(T, 2, 2, 5).holds


def test_wraparound_case():
    assert cor_chord_vertices(8, 4, 7, 3) == [7, 8, 1, 3, 4]
    assert is_wraparound(8, 4, 7, 3)
    assert check_cor_chord(random_cyclic_polygon(8, 6), 4, 7, 3).holds


def test_non_distinct_rejected():
    with pytest.raises(ValueError):
        cor_chord_vertices(8, 4, 1, 2)
    with pytest.raises(ValueError):
        cor_chord_vertices(8, 8, 1, 5)
    with pytest.raises(ValueError):
        cor_chord_vertices(8, 3, 0, 5)


@given(st.sampled_from([6, 8, 10]), seeds, st.data())
def test_cor_chord_equals_relabelled_chord_relation(n, seed, data):
    P = random_cyclic_polygon(n, seed)
    m, q, r = data.draw(st.sampled_from(list(valid_cor_chord_params(n))))
    V = cor_chord_vertices(n, m, q, r)
    # rotate so the sub-polygon keeps increasing indices, then apply the
    # whole-polygon relation to it
    sub = make_polygon([P.vertex(v) for v in V], cyclic=True)
    assert check_chord_relation(sub, m).residuals == check_cor_chord(P, m, q, r).residuals == (0,)


# -- plane determinants --------------------------------------------------------

def direct_plane_det(P, d):
    h = P.n // 2
    def x(i, j):
        a, b = P.vertex(i), P.vertex(j)
        return (a.x - b.x) ** 2 + (a.y - b.y) ** 2
    return leibniz([[x(2 * i, 2 * j - 1) ** (d // 2) for j in range(1, h + 1)]
                    for i in range(1, h + 1)])


def test_octagon_d2():
    P = random_cyclic_polygon(8, 12)
    rep = check_plane_det(P, 2)
    assert rep.holds and rep.residuals == (0,)
    assert direct_plane_det(P, 2) == 0


def test_d0_all_ones():
    rep = check_plane_det(random_cyclic_polygon(8, 1), 0)
    assert rep.holds


@pytest.mark.parametrize("d", [0, 2, 4])
def test_dodecagon(d):
    P = random_cyclic_polygon(12, 5)
    assert check_plane_det(P, d).residuals == (0,)


def test_plane_det_outside_range_is_informational():
    P = random_cyclic_polygon(8, 3)
    rep = check_plane_det(P, 4)
    assert rep.verdict == "skipped" and rep.residuals == (direct_plane_det(P, 4),)
    assert rep.residuals[0] != 0
    six = check_plane_det(random_cyclic_polygon(6, 3), 2)
    assert six.verdict == "skipped" and "divisible by 4" in six.reason
    assert check_plane_det(P, 3).verdict == "skipped"
    assert check_plane_det(random_cyclic_polygon(7, 3), 2).reason == "n is odd"


def test_plane_det_matches_direct_determinant():
    # x_pq = a(p).b(q) with 4-vectors, and b(q) spans only 3 dimensions while
    # the odd vertices share a circle: moving one vertex keeps the 4x4
    # determinant at 0, so one even and one odd vertex are moved
    P = random_cyclic_polygon(8, 3)
    v = list(P.vertices)
    for i, f in ((1, Fraction(1001, 1000)), (2, Fraction(999, 1000))):
        v[i] = (v[i].x * f, v[i].y * f)
    Q = make_polygon(v, cyclic=True)
    assert check_plane_det(perturb_radially(P, 2, Fraction(1, 1000)), 2).holds
    rep = check_plane_det(Q, 2)
    assert rep.violated and rep.residuals == (direct_plane_det(Q, 2),)
