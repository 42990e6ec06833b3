"""Exact polynomial arithmetic underneath everything else."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from salembeta.intpoly import (InexactDivision, IntPoly, cyclotomic,
                               discriminant, divexact, mobius, poly_gcd,
                               reciprocal_test, resultant, root_bound,
                               squarefree_part, sturm_count, try_divexact)

small_polys = st.lists(st.integers(-30, 30), min_size=0, max_size=8).map(
    IntPoly)
nonzero_polys = small_polys.filter(lambda p: not p.is_zero)
monic_polys = st.lists(st.integers(-30, 30), min_size=0, max_size=7).map(
    lambda lo: IntPoly(lo + [1]))


def test_canonical_trim():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly([0, 0]).coeffs == ()
    assert IntPoly().degree == -1
    assert IntPoly([5]).degree == 0


def test_evaluation_and_shift():
    p = IntPoly([3, 0, 1])  # x^2 + 3
    assert p(2) == 7
    assert p(Fraction(1, 2)) == Fraction(13, 4)
    assert p.shift(2).coeffs == (0, 0, 3, 0, 1)
    assert p.reversed().coeffs == (1, 0, 3)


@given(small_polys, small_polys)
def test_mul_degree_and_commutes(p, q):
    r = p * q
    assert r == q * p
    if not p.is_zero and not q.is_zero:
        assert r.degree == p.degree + q.degree
    else:
        assert r.is_zero


@given(small_polys, monic_polys)
def test_divexact_roundtrip(p, q):
    assert divexact(p * q, q) == p


def test_divexact_rejects_inexact():
    with pytest.raises(InexactDivision):
        divexact(IntPoly([1, 0, 1]), IntPoly([1, 1]))
    assert try_divexact(IntPoly([1, 0, 1]), IntPoly([1, 1])) is None
    assert try_divexact(IntPoly([1, 2, 1]), IntPoly([1, 1])) == IntPoly([1, 1])


def test_reciprocal():
    assert reciprocal_test(IntPoly([1, -3, -1, -7, -1, -3, 1]))
    assert reciprocal_test(IntPoly([1]))
    assert not reciprocal_test(IntPoly([2, 1]))
    assert not reciprocal_test(IntPoly([1, 2, 2, 1, 1]))


def test_mobius_small():
    assert [mobius(n) for n in range(1, 13)] == [
        1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


def test_cyclotomic_fixtures():
    assert cyclotomic(1) == IntPoly([-1, 1])
    assert cyclotomic(2) == IntPoly([1, 1])
    assert cyclotomic(4) == IntPoly([1, 0, 1])
    assert cyclotomic(6) == IntPoly([1, -1, 1])
    assert cyclotomic(12) == IntPoly([1, 0, -1, 0, 1])
    # x^n - 1 = prod_{d | n} Phi_d
    for n in (6, 10, 12):
        prod = IntPoly([1])
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic(d)
        want = IntPoly([-1] + [0] * (n - 1) + [1])
        assert prod == want


def test_resultant_and_discriminant():
    # res(x^2 - 2, x^2 - 3) = (2-3)^2 = 1
    assert resultant(IntPoly([-2, 0, 1]), IntPoly([-3, 0, 1])) == 1
    # disc(x^2 + bx + c) = b^2 - 4c
    assert discriminant(IntPoly([5, 3, 1])) == 9 - 20
    assert discriminant(IntPoly([1, 0, 1])) == -4
    # repeated root -> 0
    assert discriminant(IntPoly([1, 2, 1])) == 0


@given(nonzero_polys, nonzero_polys)
@settings(max_examples=60)
def test_resultant_multiplicative(p, q):
    r = IntPoly([1, 1])
    assert resultant(p * q, r) == resultant(p, r) * resultant(q, r)


def test_sturm_count_fixtures():
    p = IntPoly([-2, 0, 1])  # roots +-sqrt(2)
    assert sturm_count(p, Fraction(0), Fraction(2)) == 1
    assert sturm_count(p, Fraction(-2), Fraction(2)) == 2
    assert sturm_count(p, Fraction(3), Fraction(4)) == 0
    salem = IntPoly([1, -3, -1, -7, -1, -3, 1])
    # exactly one root beyond 1 and one inside (0, 1)
    assert sturm_count(salem, Fraction(1), Fraction(root_bound(salem))) == 1
    assert sturm_count(salem, Fraction(0), Fraction(1)) == 1


@given(st.sets(st.integers(-6, 6), min_size=1, max_size=4))
@settings(max_examples=80)
def test_sturm_counts_constructed_roots(roots):
    # sturm_count wants squarefree input and non-root endpoints
    p = IntPoly([1])
    for r in roots:
        p = p * IntPoly([-r, 1])
    assert sturm_count(p, Fraction(-7), Fraction(7)) == len(roots)
    assert sturm_count(p, Fraction(13, 2), Fraction(8)) == 0


@given(small_polys, small_polys, monic_polys)
@settings(max_examples=60)
def test_gcd_divides(p, q, g):
    if g.degree < 1:
        return
    d = poly_gcd(p * g, q * g)
    if (p * g).is_zero and (q * g).is_zero:
        assert d.is_zero
        return
    assert try_divexact(d, g) is not None


def test_squarefree_part():
    p = IntPoly([1, 1]) * IntPoly([1, 1]) * IntPoly([-3, 1])
    sf = squarefree_part(p)
    assert try_divexact(sf, IntPoly([1, 1])) is not None
    assert try_divexact(sf, IntPoly([-3, 1])) is not None
    assert sf.degree == 2


def test_root_bound_contains_roots():
    p = IntPoly([-100, 0, 0, 1])
    b = root_bound(p)
    assert p(b) > 0 and b >= 5
