"""Recognition, enumeration and numeric helpers for Salem sextics."""

from decimal import Decimal
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from salembeta.intpoly import IntPoly, discriminant
from salembeta.salem import (SalemTriple, certify, enumerate_by_trace,
                             floor_beta, heuristic_constant, is_salem,
                             refine_beta, truncate)

KNOWN_SALEM = [(-1, 0, -1), (-3, -1, -7), (-5, -2, -11), (-6, -26, -39),
               (-9, -37, -55), (0, -1, -1), (0, -1, -2), (0, -2, -3),
               (0, -4, -7), (-1, -1, -1), (-2, 1, -2), (-5, 6, -7),
               (-15, 30, -33)]
# (-4, -7, -4) and (0, -2, -2) have a Salem-like root layout but the
# recognition cubic has the rational root -2, so (x + 1)^2 divides P
KNOWN_NOT = [(0, 0, 0), (1, 1, 1), (-1, 5, -1), (2, 0, 0), (0, 1, -3),
             (-4, -7, -4), (0, -2, -2)]


def test_certify_fixtures():
    for abc in KNOWN_SALEM:
        assert certify(*abc).is_salem, abc
    for abc in KNOWN_NOT:
        assert not certify(*abc).is_salem, abc


def test_triple_accessors():
    t = certify(-3, -1, -7)
    assert t.trace == 3
    assert t.poly() == IntPoly([1, -3, -1, -7, -1, -3, 1])
    assert t.recognition_cubic() == IntPoly([-7 + 6, -1 - 3, -3, 1])


def test_recognition_cubic_root_identity():
    # U(y) has the root beta + 1/beta; P reciprocal pairs collapse
    t = certify(-5, -2, -11)
    enc = refine_beta((-5, -2, -11), Fraction(1, 10 ** 30))
    beta = enc.mid
    y = beta + 1 / beta
    u = t.recognition_cubic()
    assert abs(u(y)) < Fraction(1, 10 ** 20)


def test_enumerate_small_traces():
    triples = list(enumerate_by_trace(4))
    assert all(t.is_salem for t in triples)
    assert len(triples) == len({(t.a, t.b, t.c) for t in triples})
    assert all(1 <= t.trace <= 4 or t.trace == 0 for t in triples)
    got = {(t.a, t.b, t.c) for t in triples}
    assert (-1, 0, -1) in got
    assert (0, -1, -1) in got and (0, -2, -3) in got
    assert (-4, -7, -4) not in got
    # monotone in the bound
    fewer = {(t.a, t.b, t.c) for t in enumerate_by_trace(3)}
    assert fewer < got


def test_enumerate_covers_full_box():
    # rectangular rescan wider than the enumerator's pruned box; confirms
    # the c-pruning in enumerate_by_trace never clips a certified triple
    want = set()
    for a in (0, -1):
        for b in range(-45, 46):
            for c in range(-75, 76):
                if is_salem(a, b, c):
                    want.add((a, b, c))
    got = {(t.a, t.b, t.c) for t in enumerate_by_trace(1)}
    assert got == want
    assert {t for t in got if t[0] == 0} == {(0, -1, -1), (0, -1, -2),
                                             (0, -2, -3), (0, -4, -7)}


def test_refine_beta_enclosure():
    enc = refine_beta((-3, -1, -7), Fraction(1, 10 ** 40))
    assert enc.width <= Fraction(1, 10 ** 40)
    p = certify(-3, -1, -7).poly()
    assert p(enc.lo) < 0 < p(enc.hi)


def test_floor_beta_fixtures():
    assert floor_beta((-1, 0, -1)) == 1
    assert floor_beta((-3, -1, -7)) == 3
    assert floor_beta((-6, -26, -39)) == 9
    assert floor_beta((-15, 30, -33)) == 12


@given(st.sampled_from(list(enumerate_by_trace(5))))
@settings(max_examples=40, deadline=None)
def test_floor_beta_against_mpmath(t):
    b = floor_beta((t.a, t.b, t.c))
    with mpmath.workdps(40):
        roots = mpmath.polyroots(
            [1, t.a, t.b, t.c, t.b, t.a, 1], maxsteps=200, extraprec=200)
        beta = max(r.real for r in roots if abs(r.imag) < 1e-20)
        assert int(mpmath.floor(beta)) == b


def test_heuristic_constant_fixtures():
    assert truncate(heuristic_constant(-3, -1, -7), 4) == Decimal("0.3342")
    assert truncate(heuristic_constant(-6, -26, -39), 4) == Decimal("7.3275")
    # C > 1 far from guarantees a short expansion
    assert truncate(heuristic_constant(-9, -37, -55), 4) == Decimal("6.6955")


def test_heuristic_constant_rejects_nonpositive_disc():
    with pytest.raises(ValueError):
        heuristic_constant(0, 0, 0)


def test_truncate_toward_zero():
    assert truncate(Decimal("1.23456"), 4) == Decimal("1.2345")
    assert truncate(Decimal("-1.23456"), 4) == Decimal("-1.2345")
    assert truncate(Decimal("2"), 4) == Decimal("2.0000")


def test_salem_discriminant_positive():
    # two real roots and two complex-conjugate pairs force disc > 0
    for abc in KNOWN_SALEM:
        assert discriminant(certify(*abc).poly()) > 0
