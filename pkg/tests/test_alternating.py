from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from heronfrieze.geometry import make_polygon, perturb_radially, random_cyclic_polygon
from heronfrieze.identities.alternating import (
    alternating_terms,
    check_main_theorem,
    main_s,
    main_x,
)
from heronfrieze.identities.oracle import oracle_S
from heronfrieze.measurements import build_table

from helpers import monomial

seeds = st.integers(0, 10 ** 6)

# The six summands for n = 6, written out term by term (x part, S part).
HEXAGON = [
    ("x12 x45", "S234 S256 S356 S456"),
    ("x12 x45", "S134 S156 S356 S456"),
    ("x12 x45", "S124 S156 S256 S456"),
    ("x12 x45", "S123 S156 S256 S356"),
    ("x45 x56", "S123 S124 S126 S346"),
    ("x12 x56", "S123 S145 S245 S345"),
]

# The eight summands for n = 8.
OCTAGON = [
    ("x12 x34 x45 x67^2", "S234 S256 S278 S356 S378 S456 S478 S578 S678"),
    ("x12 x34 x45 x67^2", "S134 S156 S178 S356 S378 S456 S478 S578 S678"),
    ("x12 x34 x45 x67^2", "S124 S256 S156 S278 S178 S456 S478 S578 S678"),
    ("x12 x34 x45 x67^2", "S123 S156 S178 S256 S278 S356 S378 S578 S678"),
    ("x34 x56 x45 x67^2", "S346 S478 S378 S278 S678 S123 S124 S126 S178"),
    ("x12 x34 x56 x67^2", "S123 S145 S178 S245 S278 S345 S378 S478 S578"),
    ("x56 x78^2 x67^2", "S568 S123 S126 S128 S145 S245 S345 S346 S348"),
    ("x12 x34 x56 x78^2", "S123 S145 S167 S245 S267 S345 S367 S467 S567"),
]


def written_terms(T, table):
    return [(1 if m % 2 else -1) * monomial(T, xs) * monomial(T, ss)
            for m, (xs, ss) in enumerate(table, start=1)]


@pytest.mark.parametrize("n,table", [(6, HEXAGON), (8, OCTAGON)])
@pytest.mark.parametrize("seed", range(5))
def test_monomials_match_written_out_sums(n, table, seed):
    T = build_table(random_cyclic_polygon(n, seed))
    for m, (xs, ss) in enumerate(table, start=1):
        assert main_x(T, m) == monomial(T, xs), m
        assert main_s(T, m) == monomial(T, ss), m
    assert alternating_terms(T) == written_terms(T, table)
    assert sum(written_terms(T, table)) == 0


def test_documented_monomials():
    T6 = build_table(random_cyclic_polygon(6, 1))
    assert main_x(T6, 1) == monomial(T6, "x12 x45")
    assert main_x(T6, 5) == monomial(T6, "x45 x56")
    assert main_s(T6, 1) == monomial(T6, "S234 S256 S356 S456")
    assert main_s(T6, 6) == monomial(T6, "S123 S145 S245 S345")
    T8 = build_table(random_cyclic_polygon(8, 1))
    assert main_x(T8, 2) == monomial(T8, "x12 x34 x45 x67^2")
    assert main_s(T8, 5) == monomial(T8, "S346 S478 S378 S278 S678 S123 S124 S126 S178")


@pytest.mark.parametrize("n", [6, 8, 10, 12])
def test_odd_branch_collapses_at_one_and_three(n):
    T = build_table(random_cyclic_polygon(n, 4))
    assert main_s(T, 1) == oracle_S(T, 1)
    assert main_s(T, 3) == oracle_S(T, 3)
    assert main_x(T, 1) == main_x(T, 3)


@given(st.sampled_from([6, 8, 10, 12]), seeds, st.integers(1, 4))
def test_main_theorem_exact_zero(n, seed, R):
    rep = check_main_theorem(random_cyclic_polygon(n, seed, R))
    assert rep.holds and rep.residuals == (0,)


@given(st.sampled_from([6, 8]), seeds, st.data())
def test_radial_perturbation_breaks_it(n, seed, data):
    P = random_cyclic_polygon(n, seed)
    i = data.draw(st.integers(1, n))
    eps = data.draw(st.sampled_from([Fraction(1, 1000), Fraction(-1, 1000), Fraction(1, 50)]))
    rep = check_main_theorem(perturb_radially(P, i, eps))
    # a nearly collinear triple may flip, which is reported as skipped
    assume(rep.verdict != "skipped")
    assert rep.violated and rep.residuals[0] != 0


def test_hypotheses():
    T = build_table(random_cyclic_polygon(7, 0))
    with pytest.raises(ValueError):
        main_x(T, 1)
    T4 = build_table(random_cyclic_polygon(4, 0))
    with pytest.raises(ValueError):
        main_s(T4, 1)
    T6 = build_table(random_cyclic_polygon(6, 0))
    with pytest.raises(ValueError):
        main_x(T6, 7)
    with pytest.raises(ValueError):
        main_x(T6, 0)
    assert check_main_theorem(T).verdict == "skipped"
    assert check_main_theorem(T4).verdict == "skipped"


def test_clockwise_input_skipped():
    P = random_cyclic_polygon(6, 2)
    rep = check_main_theorem(make_polygon(P.vertices[::-1]))
    assert rep.verdict == "skipped" and "clockwise" in rep.reason
