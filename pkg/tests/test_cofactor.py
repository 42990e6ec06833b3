"""Candidate boxes, disk filters, digit systems, witness search, and the
full co-factor pipeline."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from salembeta.cofactor import (DYADIC_PHI_SWEEP, LinearSystem, box_bounds,
                                box_size, candidate_box, candidate_system,
                                cyclotomic_excluded, disk_census, disk_filter,
                                feasible, m1_no_positive_roots_check,
                                minimal_cofactor_set, phi_boundary_factor,
                                phi_disk_closed, reciprocal_cofactor_min_period,
                                routh_table, shape_15_conditions,
                                shape_17_cofactor, witness_search)
from salembeta.expansion import expand, Expansion, verify_expansion
from salembeta.intpoly import IntPoly
from salembeta.salem import certify, enumerate_by_trace


def test_box_bounds_fixtures():
    assert box_bounds(6, 1, 10) == [(0, 11), (-34, 34), (-42, 42),
                                    (-26, 26), (-4, 5)]
    assert box_size(6, 1, 7) == 21
    assert box_size(6, 1, 8) == 675
    assert box_size(6, 1, 10) == 37_301_400
    with pytest.raises(ValueError):
        box_bounds(6, 1, 0)


def test_candidate_box_order_and_count():
    cands = list(candidate_box(6, 1, 7))
    assert len(cands) == 21
    assert all(c.q.is_monic and c.q.degree == 2 for c in cands)
    assert cands[0].q == IntPoly([0, -3, 1])
    assert cands[1].q == IntPoly([1, -3, 1])
    assert cands[-1].q == IntPoly([2, 3, 1])
    assert len({tuple(c.q.coeffs) for c in cands}) == 21


def test_report_line():
    c = next(candidate_box(6, 1, 7))
    line = c.report_line()
    assert line == "Q 0 -3 1 | disk=skipped feas=skipped witness=none"


def test_routh_table_fixtures():
    t = routh_table(IntPoly([3, 4, 7, 2, 1]))
    assert t.defined
    assert t.first_column() == [1, 2, 5, Fraction(14, 5), 3]
    assert t.stable()
    t2 = routh_table(IntPoly([3, 4, 7, 0, 1]))
    assert not t2.defined
    assert not t2.stable()
    # roots 1 and 2 in the right half plane: sign changes, not stable
    t3 = routh_table(IntPoly([2, -3, 1]))
    assert t3.defined and not t3.stable()


def test_disk_filter_fixtures():
    assert disk_filter(IntPoly([0, 0, 0, 1]), 2)  # x^3, all roots at 0
    assert not disk_filter(IntPoly([1, -3, 1]), 2)  # root (3+sqrt5)/2 > 2
    assert not disk_filter(IntPoly([1, -3, 1]), Fraction(13, 8))
    assert not disk_filter(IntPoly([-2, 1]), 2)  # root exactly on |z| = 2
    assert disk_filter(IntPoly([3, 0, 1]), 2)  # roots +-i*sqrt(3)
    assert not disk_filter(IntPoly([4, 0, 1]), 2)  # roots +-2i on the rim
    assert disk_filter(IntPoly([1, 1, 1]), Fraction(13, 8))


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=5))
@settings(max_examples=300)
def test_disk_filter_matches_constructed_roots(roots):
    q = IntPoly([1])
    for r in roots:
        q = q * IntPoly([-r, 1])
    assert disk_filter(q, 2) == all(abs(r) < 2 for r in roots)
    assert disk_filter(q, Fraction(13, 8)) == all(abs(r) <= 1 for r in roots)


def _mobius_numerator_k2(q: IntPoly) -> list:
    # coefficients of (1-z)^deg * q(2(1+z)/(1-z)), ascending
    num = IntPoly([2, 2])
    den = IntPoly([1, -1])
    deg = q.degree
    acc = IntPoly([0])
    for j, c in enumerate(q.coeffs):
        if c:
            term = IntPoly([c])
            for _ in range(j):
                term = term * num
            for _ in range(deg - j):
                term = term * den
            acc = acc + term
    return list(acc.coeffs) + [0] * (deg + 1 - len(acc.coeffs))


def test_mobius_numerator_fixture():
    assert _mobius_numerator_k2(IntPoly([0, 0, 0, 1])) == [8, 24, 24, 8]


@given(st.tuples(st.integers(-8, 8), st.integers(-8, 8), st.integers(-8, 8),
                 st.integers(1, 8)))
@settings(max_examples=300)
def test_quick_reject_implies_filter_reject(coeffs):
    # cheap necessary conditions on the transformed cubic: whenever they
    # fire, the full filter must reject too (never the other way around)
    d0, d1, d2, d3 = coeffs
    q = IntPoly([d0, d1, d2, d3])
    a0, a1, a2, a3 = _mobius_numerator_k2(q)
    if a3 != 0 and (a0 * a3 <= 0 or a2 * a3 <= 0 or a1 * a2 <= a0 * a3):
        assert not disk_filter(q, 2)


def test_phi_disk_closed_fixtures():
    assert phi_disk_closed(IntPoly([-1, 1, 1]))  # roots -phi, 1/phi
    assert phi_disk_closed(IntPoly([-1, -1, 1]))  # roots phi, -1/phi
    assert phi_disk_closed(IntPoly([1, 2, 1]))  # double root -1
    assert phi_disk_closed(IntPoly([1, -1, 1]))
    assert not phi_disk_closed(IntPoly([-2, 1]))  # 2 > phi
    assert not phi_disk_closed(IntPoly([1, 3, 1]))  # root -phi^2
    assert phi_boundary_factor(IntPoly([-1, 1, 1])) == IntPoly([-1, 1, 1])
    assert phi_boundary_factor(IntPoly([1, 2, 1])) is None
    prod = IntPoly([-1, -1, 1]) * IntPoly([1, 1])
    assert phi_disk_closed(prod)
    assert phi_boundary_factor(prod) == IntPoly([-1, -1, 1])


def test_phi_disk_is_strictly_tighter_than_dyadic_sweep():
    # the dyadic radii decrease toward phi from above
    radii = list(DYADIC_PHI_SWEEP)
    assert radii == sorted(radii, reverse=True)
    assert all(Fraction(1618, 1000) < r <= 2 for r in radii)


def test_census_p8_frozen():
    census = disk_census(6, 1, 8)
    assert census["box"] == 675
    assert census["k2_pass"] == 126
    assert census["phi_closed"] == 58
    assert len(census["phi_boundary"]) == 4
    assert census["phi_interior"] == 54
    parts = (census["k2_pass"] + census["k2_lead_zero"] +
             census["k2_zero_pivot"] + census["k2_zero_row"] +
             census["k2_fail"])
    assert parts == census["box"]
    # every boundary survivor carries a golden-ratio minimal factor, and
    # every dyadic radius above phi still lets it through: only the exact
    # closed-disk test separates boundary from interior
    for q in census["phi_boundary"]:
        assert phi_boundary_factor(q) is not None
        assert phi_disk_closed(q)
        assert disk_filter(q, Fraction(1657, 1024))


def test_digit_vectors_constant_cofactor():
    sys = candidate_system(IntPoly([1]), 1, 5)
    assert sys.digits == [(-1, 0, 0, 0), (0, -1, 0, 0), (0, 0, -1, 0),
                          (0, -1, 0, 0), (-1, 0, 0, -1), (-1, 0, 0, -1)]
    assert sys.evaluate(-1, 0, -1)
    assert sys.evaluate(-3, -1, -3)
    assert not sys.evaluate(0, -1, -1)  # c_1 = 0 < c_3


def test_digit_vectors_x2_plus_1():
    sys = candidate_system(IntPoly([1, 0, 1]), 1, 7)
    assert sys.digits == [(-1, 0, 0, 0), (0, -1, 0, -1), (-1, 0, -1, 0),
                          (0, -2, 0, 0), (-1, 0, -1, 0), (0, -1, 0, -1),
                          (-1, 0, 0, -1), (-1, 0, 0, -1)]
    assert sys.evaluate(-2, -1, 2)
    assert not sys.evaluate(0, 0, 0)


def test_feasible_and_monotone():
    sys = candidate_system(IntPoly([1, 0, 1]), 1, 7)
    assert feasible(sys)
    # for x^2 - x + 1 the strict case c_1 > c_3 and c_1 > c_4 collapses:
    # it forces a <= b while c_2 = a - b - 1 >= 0 needs a > b
    sys2 = candidate_system(IntPoly([1, -1, 1]), 1, 7)
    assert feasible(sys2)
    d1, d3, d4 = sys2.digits[0], sys2.digits[2], sys2.digits[3]
    strict = [tuple(d1[t] - d3[t] for t in range(3)) + (d1[3] - d3[3] - 1,),
              tuple(d1[t] - d4[t] for t in range(3)) + (d1[3] - d4[3] - 1,)]
    restricted = LinearSystem(inequalities=sys2.inequalities + strict,
                              digits=sys2.digits)
    assert not feasible(restricted)
    assert feasible(LinearSystem(inequalities=[]))


def test_witness_search_p8_fixtures():
    assert witness_search(IntPoly([1, 1, 1, 1]), 1, 8) is not None
    w = witness_search(IntPoly([1, 1, 1, 1]), 1, 8)
    assert (w.a, w.b, w.c) == (-2, 0, 1)
    w2 = witness_search(IntPoly([1, 2, 2, 1]), 1, 8)
    assert (w2.a, w2.b, w2.c) == (-4, 6, -7)
    assert witness_search(IntPoly([1, 0, 0, 1]), 1, 8) is None


def test_witnesses_verify():
    for qc, mp in [((1, 1, 1, 1), (1, 8)), ((1, 2, 2, 1), (1, 8))]:
        q = IntPoly(qc)
        w = witness_search(q, *mp)
        e = expand(w, max_steps=10_000)
        assert isinstance(e, Expansion) and (e.m, e.p) == mp
        assert verify_expansion(w, e).cofactor == q


def test_minimal_cofactor_sets_small():
    conf, unres = minimal_cofactor_set(6, 1, 5)
    assert [q for q in conf] == [IntPoly([1])]
    assert unres == []
    stats = {}
    conf7, unres7 = minimal_cofactor_set(6, 1, 7, stats=stats)
    assert sorted(tuple(c.q.coeffs) for c in stats["reports"]
                  if c.witness) == [(1, -1, 1), (1, 0, 1), (1, 2, 1)]
    assert {tuple(q.coeffs) for q in conf7} == {(1, -1, 1), (1, 0, 1),
                                                (1, 2, 1)}
    assert unres7 == []
    assert stats["box"] == 21
    assert stats["disk_k2"] == 13
    conf8, unres8 = minimal_cofactor_set(6, 1, 8)
    assert {tuple(q.coeffs) for q in conf8} == {(1, 1, 1, 1), (1, 2, 2, 1)}
    assert unres8 == []


def test_pipeline_confirmed_all_reciprocal_no_positive_roots():
    for p in (5, 6, 7, 8):
        conf, _ = minimal_cofactor_set(6, 1, p)
        for q in conf:
            assert m1_no_positive_roots_check(q)
            assert q.coeffs == q.coeffs[::-1]
            assert disk_filter(q, 2)
            if q.degree >= 1:
                assert disk_filter(q, Fraction(13, 8))


def test_cyclotomic_excluded():
    assert cyclotomic_excluded(certify(-6, -26, -39))
    assert not cyclotomic_excluded(certify(-3, -1, -7))
    assert not cyclotomic_excluded(certify(-1, 0, -1))


def test_m1_no_positive_roots_check():
    assert m1_no_positive_roots_check(IntPoly([1, 0, 1]))
    assert m1_no_positive_roots_check(IntPoly([1, -1, 1, -1, 1]))
    assert not m1_no_positive_roots_check(IntPoly([-1, 1]))
    assert not m1_no_positive_roots_check(IntPoly([2, -3, 1]))
    assert m1_no_positive_roots_check(IntPoly([0, 2, 1]))  # x(x+2)
    assert m1_no_positive_roots_check(IntPoly([1]))


def test_reciprocal_min_period():
    assert reciprocal_cofactor_min_period(IntPoly([1, 0, 1])) == 3
    assert reciprocal_cofactor_min_period(IntPoly([1, 1, 1, 1, 1])) == 3
    assert reciprocal_cofactor_min_period(IntPoly([0, 1, 1])) is None
    assert reciprocal_cofactor_min_period(IntPoly([-1, 1, 1])) is None


def test_shape_conditions_match_engine():
    # closed-form (1,5)/(1,7) predicates against the expansion engine
    for t in enumerate_by_trace(3):
        r = expand(t, max_steps=2000)
        mp = (r.m, r.p) if isinstance(r, Expansion) else None
        assert shape_15_conditions(t) == (mp == (1, 5)), (t.a, t.b, t.c)
        q17 = shape_17_cofactor(t)
        if mp == (1, 7):
            assert q17 == verify_expansion(t, r).cofactor, (t.a, t.b, t.c)
        else:
            assert q17 is None, (t.a, t.b, t.c)
