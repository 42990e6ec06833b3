"""Degree-6 Salem number recognition, enumeration, and root enclosures.

A Salem number here is a real algebraic integer beta > 1 whose remaining
conjugates all lie in the closed unit disk with at least one on the unit
circle.  Degree-6 minimal polynomials are reciprocal,

    P(x) = x^6 + a x^5 + b x^4 + c x^3 + b x^2 + a x + 1,

so a triple (a, b, c) names the polynomial.  Substituting y = x + 1/x
compresses P to the cubic

    U(y) = y^3 + a y^2 + (b - 3) y + (c - 2a),

and P is a Salem polynomial exactly when U has no rational root, two real
roots in (-2, 2) and one in (2, oo).  With no rational root U is
irreducible, which forces P irreducible, so the test is exact in both
directions; everything below is integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, ROUND_DOWN
from fractions import Fraction

import mpmath

from .intpoly import IntPoly, discriminant, root_bound

CERTIFIED_SALEM = "certified-salem"
CERTIFIED_NOT_SALEM = "certified-not-salem"


@dataclass(frozen=True)
class SalemTriple:
    """A coefficient triple together with its certification verdict."""

    a: int
    b: int
    c: int
    salem_status: str

    @property
    def is_salem(self) -> bool:
        return self.salem_status == CERTIFIED_SALEM

    @property
    def trace(self) -> int:
        return -self.a

    def poly(self) -> IntPoly:
        a, b, c = self.a, self.b, self.c
        return IntPoly([1, a, b, c, b, a, 1])

    def recognition_cubic(self) -> IntPoly:
        a, b, c = self.a, self.b, self.c
        return IntPoly([c - 2 * a, b - 3, a, 1])


def certify(a: int, b: int, c: int) -> SalemTriple:
    status = CERTIFIED_SALEM if is_salem(a, b, c) else CERTIFIED_NOT_SALEM
    return SalemTriple(a, b, c, status)


def _cubic_has_integer_root(a: int, s: int, t: int) -> bool:
    # monic cubic x^3 + a x^2 + s x + t with t != 0; any rational root is an
    # integer divisor of t
    n = abs(t)
    d = 1
    while d * d <= n:
        if n % d == 0:
            for r in (d, n // d):
                for x in (r, -r):
                    if ((x + a) * x + s) * x + t == 0:
                        return True
        d += 1
    return False


def _cubic_variations(a: int, s: int, t: int, points):
    """Sign-variation counts of the Sturm chain of x^3 + a x^2 + s x + t at
    the given integer points, all in scaled integer arithmetic.

    Returns None when the chain degenerates (repeated root).  The linear
    chain element is 9 * (-rem(U, U')) = (2a^2 - 6s) x + (as - 9t) and the
    constant one is -A^2 * rem(U', Ax + B); positive scalings keep signs.
    """
    A = 2 * a * a - 6 * s
    B = a * s - 9 * t
    if A == 0 and B == 0:
        return None
    p3 = None
    if A != 0:
        p3 = -(3 * B * B - 2 * a * A * B + s * A * A)
        if p3 == 0:
            return None
    out = []
    for x in points:
        u = ((x + a) * x + s) * x + t
        du = (3 * x + 2 * a) * x + s
        seq = [u, du, A * x + B]
        if p3 is not None:
            seq.append(p3)
        var = 0
        last = 0
        for v in seq:
            if v == 0:
                continue
            sgn = 1 if v > 0 else -1
            if last and sgn != last:
                var += 1
            last = sgn
        out.append(var)
    return out


def is_salem(a: int, b: int, c: int) -> bool:
    """Exact Salem certification for the triple (a, b, c).

    U(2) = P(1) < 0 and U(-2) = -P(-1) < 0 are necessary (P is negative
    strictly between 1/beta and beta, positive outside), so they serve as a
    cheap pre-filter before the integer-root test and the Sturm counts.
    """
    if 2 + 2 * a + 2 * b + c >= 0:
        return False
    if 2 * a - 2 * b + c - 2 >= 0:
        return False
    s = b - 3
    t = c - 2 * a
    if t == 0 or _cubic_has_integer_root(a, s, t):
        return False
    bound = 2 + max(abs(a), abs(s), abs(t))
    counts = _cubic_variations(a, s, t, (-2, 2, bound))
    if counts is None:
        return False
    v_lo, v_mid, v_hi = counts
    return v_lo - v_mid == 2 and v_mid - v_hi == 1


def enumerate_by_trace(max_trace: int):
    """All certified Salem triples with trace(beta) = -a <= max_trace,
    ordered by (a, b, c).

    The scan covers a in [-max_trace, 0]: degree-6 Salem numbers of trace 0
    exist (four of them), but none of negative trace, and max_trace < 1
    yields nothing.  Box bounds per coefficient: five conjugates have
    modulus <= 1 and beta < -a + 4, so |b| <= 15 + 5(-a+4) and
    |c| <= 20 + 10(-a+4).
    """
    out = []
    if max_trace < 1:
        return out
    for a in range(-max_trace, 1):
        bb = 15 + 5 * (-a + 4)
        cc = 20 + 10 * (-a + 4)
        for b in range(-bb, bb + 1):
            # U(2) < 0 and U(-2) < 0 solved for c: both are upper bounds
            cmax = min(cc, -3 - 2 * a - 2 * b, 1 - 2 * a + 2 * b)
            for c in range(-cc, cmax + 1):
                if is_salem(a, b, c):
                    out.append(SalemTriple(a, b, c, CERTIFIED_SALEM))
    return out


@dataclass(frozen=True)
class BetaEnclosure:
    """Dyadic rational bracket around the root beta > 1: P(lo) < 0 < P(hi)."""

    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2


def _sign_at_fraction(p: IntPoly, x: Fraction) -> int:
    u, v = x.numerator, x.denominator
    acc = p.coeffs[-1]
    power = 1
    for c in reversed(p.coeffs[:-1]):
        power *= v
        acc = acc * u + c * power
    return (acc > 0) - (acc < 0)


def _as_poly(P) -> IntPoly:
    if isinstance(P, SalemTriple):
        return P.poly()
    if isinstance(P, tuple):
        a, b, c = P
        return IntPoly([1, a, b, c, b, a, 1])
    return P


def initial_bracket(P) -> BetaEnclosure:
    """Starting bracket (1, hi) with P(1) < 0 < P(hi).

    For a Salem sextic (a, b, c) the upper end -a + 4 works since
    beta < -a - 1/beta + 4; for a generic monic P the Cauchy bound does.
    """
    poly = _as_poly(P)
    if isinstance(P, (SalemTriple, tuple)):
        hi = Fraction(-poly.coeffs[5] + 4)
    else:
        hi = Fraction(root_bound(poly))
    lo = Fraction(1)
    if _sign_at_fraction(poly, lo) >= 0 or _sign_at_fraction(poly, hi) <= 0:
        raise ValueError("no sign change on (1, bound); cannot bracket a root > 1")
    return BetaEnclosure(lo, hi)


def refine_beta(P, eps) -> BetaEnclosure:
    """Bisect the initial bracket down to width <= eps.

    Endpoints stay dyadic multiples of the starting width, and the sign
    invariant P(lo) < 0 < P(hi) certifies beta in (lo, hi) throughout.  P
    is irreducible of degree >= 2 for certified inputs, so no dyadic
    midpoint is ever a root.
    """
    poly = _as_poly(P)
    enc = initial_bracket(P)
    eps = Fraction(eps)
    return _bisect_to(poly, enc, eps)


def _bisect_to(poly: IntPoly, enc: BetaEnclosure, eps: Fraction) -> BetaEnclosure:
    lo, hi = enc.lo, enc.hi
    while hi - lo > eps:
        mid = (lo + hi) / 2
        s = _sign_at_fraction(poly, mid)
        if s == 0:
            raise ArithmeticError("dyadic midpoint is a root; input not irreducible")
        if s < 0:
            lo = mid
        else:
            hi = mid
    return BetaEnclosure(lo, hi)


def floor_beta(P) -> int:
    """Exact integer part of beta, refining only until the floor is pinned."""
    poly = _as_poly(P)
    enc = initial_bracket(P)
    lo, hi = enc.lo, enc.hi
    while math.floor(lo) != math.floor(hi):
        mid = (lo + hi) / 2
        s = _sign_at_fraction(poly, mid)
        if s == 0:
            # an integer midpoint can be a root only for reducible input
            raise ArithmeticError("midpoint is a root; input not irreducible")
        if s < 0:
            lo = mid
        else:
            hi = mid
    return math.floor(lo)


def heuristic_constant(a: int, b: int, c: int, digits: int = 80) -> Decimal:
    """C(beta) = (pi/6)^2 * beta^5 / sqrt(disc(beta)).

    Computed with `digits` working decimal digits; the discriminant is an
    exact integer (positive for Salem sextics: two real roots, two complex
    pairs).  Callers compare these truncated, not rounded.
    """
    triple = (a, b, c)
    poly = _as_poly(triple)
    disc = discriminant(poly)
    if disc <= 0:
        raise ValueError("expected positive discriminant; is (a, b, c) Salem?")
    enc = refine_beta(triple, Fraction(1, 10 ** (digits + 10)))
    with mpmath.workdps(digits + 20):
        beta = mpmath.mpf(enc.lo.numerator) / mpmath.mpf(enc.lo.denominator)
        val = (mpmath.pi / 6) ** 2 * beta ** 5 / mpmath.sqrt(disc)
        return Decimal(mpmath.nstr(val, 30))


def truncate(value, places: int = 4) -> Decimal:
    """Truncate toward zero to the given number of decimal places."""
    q = Decimal(1).scaleb(-places)
    return Decimal(value).quantize(q, rounding=ROUND_DOWN)
