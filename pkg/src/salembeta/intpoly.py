"""Dense exact polynomial arithmetic over Z and Q.

Coefficients are stored in ascending order (index i holds the x^i
coefficient).  The canonical form never carries trailing zeros, so the
zero polynomial is the empty tuple and ``degree`` of zero is -1.  All
operations are exact; nothing here ever rounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class InexactDivision(ArithmeticError):
    """Raised when a polynomial division was expected to be exact but is not."""


def _trim(coeffs):
    """Drop trailing zeros, returning a canonical coefficient tuple."""
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, dense ascending coefficients, canonical form.

    >>> IntPoly([1, 0, 0]) == IntPoly([1])
    True
    >>> IntPoly([-1, 0, 1]).degree
    2
    """

    coeffs: tuple

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trim(tuple(int(c) for c in coeffs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([other * c for c in self.coeffs])
        return mul(self, other)

    __rmul__ = __mul__

    def __call__(self, x):
        """Evaluate by Horner.  Exact for int and Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def reversed(self) -> "IntPoly":
        """x^deg * p(1/x); the coefficient sequence read backwards."""
        return IntPoly(tuple(reversed(self.coeffs)))

    def content(self) -> int:
        """gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Divide out the (positive) content.  Preserves every sign."""
        g = self.content()
        if g in (0, 1):
            return self
        return IntPoly([c // g for c in self.coeffs])

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = f"{abs(c)}"
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}"
                term = f"{mag}x" if i == 1 else f"{mag}x^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


@dataclass(frozen=True)
class RatPoly:
    """Rational polynomial; Fraction keeps every coefficient in lowest terms."""

    coeffs: tuple

    def __init__(self, coeffs=()):
        object.__setattr__(
            self, "coeffs", _trim(tuple(Fraction(c) for c in coeffs))
        )

    @classmethod
    def from_int(cls, p: IntPoly) -> "RatPoly":
        return cls(p.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def mul(p: IntPoly, q: IntPoly) -> IntPoly:
    """Schoolbook product.

    >>> mul(IntPoly([1, 1]), IntPoly([-1, 1])).coeffs
    (-1, 0, 1)
    """
    if p.is_zero or q.is_zero:
        return IntPoly()
    a, b = p.coeffs, q.coeffs
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return IntPoly(out)


def divexact(r: IntPoly, p: IntPoly) -> IntPoly:
    """Quotient r/p for monic p, raising InexactDivision on any remainder.

    >>> divexact(IntPoly([-1, 0, 1]), IntPoly([1, 1])).coeffs
    (-1, 1)
    >>> divexact(IntPoly([1, 0, 1]), IntPoly([1, 1]))
    Traceback (most recent call last):
        ...
    salembeta.intpoly.InexactDivision: remainder is nonzero
    """
    if p.is_zero or not p.is_monic:
        raise ValueError("divisor must be monic and nonzero")
    if r.is_zero:
        return IntPoly()
    if r.degree < p.degree:
        raise InexactDivision("degree of dividend below divisor")
    rem = list(r.coeffs)
    dp = p.degree
    quot = [0] * (len(rem) - dp)
    for k in range(len(rem) - 1, dp - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        quot[k - dp] = c
        rem[k] = 0
        for i in range(dp):
            rem[k - dp + i] -= c * p.coeffs[i]
    if any(rem):
        raise InexactDivision("remainder is nonzero")
    return IntPoly(quot)


def try_divexact(r: IntPoly, p: IntPoly):
    """divexact, but None instead of an exception on failure."""
    try:
        return divexact(r, p)
    except InexactDivision:
        return None


def reciprocal_test(p: IntPoly) -> bool:
    """True when the coefficient sequence is palindromic (x^d p(1/x) = p)."""
    return p.coeffs == tuple(reversed(p.coeffs))


def mobius(n: int) -> int:
    """Mobius function by trial division."""
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    """n-th cyclotomic polynomial via iterated exact division of x^n - 1.

    >>> cyclotomic(12).coeffs
    (1, 0, -1, 0, 1)
    """
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    num = IntPoly([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            num = divexact(num, cyclotomic(d))
    return num


def _bareiss_det(m) -> int:
    """Fraction-free determinant of a square integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for swap in range(k + 1, n):
                if m[swap][k] != 0:
                    m[k], m[swap] = m[swap], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def resultant(p: IntPoly, q: IntPoly) -> int:
    """Resultant via the Sylvester matrix and Bareiss elimination."""
    if p.is_zero or q.is_zero:
        return 0
    dp, dq = p.degree, q.degree
    if dp == 0:
        return p.coeffs[0] ** dq
    if dq == 0:
        return q.coeffs[0] ** dp
    n = dp + dq
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(dq):
        rows.append([0] * i + pc + [0] * (n - dp - 1 - i))
    for i in range(dp):
        rows.append([0] * i + qc + [0] * (n - dq - 1 - i))
    return _bareiss_det(rows)


def discriminant(p: IntPoly) -> int:
    """disc(p) = (-1)^(d(d-1)/2) * Res(p, p') / lc(p).

    Zero exactly when p shares a root with its derivative.

    >>> discriminant(IntPoly([-1, 0, 1]))
    4
    >>> discriminant(IntPoly([1, 0, 1]))
    -4
    """
    d = p.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    res = resultant(p, p.derivative())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    q, rem = divmod(sign * res, p.coeffs[-1])
    if rem:
        raise ArithmeticError("resultant not divisible by leading coefficient")
    return q


def descartes_positive_roots_bound(p: IntPoly) -> int:
    """Sign changes of the coefficient sequence: an upper bound (matching
    parity) for the number of positive real roots counted with multiplicity."""
    changes = 0
    last = 0
    for c in p.coeffs:
        if c == 0:
            continue
        s = 1 if c > 0 else -1
        if last and s != last:
            changes += 1
        last = s
    return changes


# ---------------------------------------------------------------------------
# Sturm chains.
#
# Chain elements are stored as primitive integer polynomials, each a strictly
# positive rational multiple of the textbook chain element, so sign
# evaluations are unaffected.  Divisions by leading coefficients are replaced
# by even-power pseudo-remainders to stay in Z.
# ---------------------------------------------------------------------------


def _signed_prem(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive part of lc(g)^e * (f mod g) with the sign of the true
    remainder of f by g.  Each elimination step scales the running remainder
    by lc(g) (rem <- lc*rem - c*x^j*g), so the arithmetic stays in Z; an odd
    number of scalings by a negative leading coefficient is undone at the
    end."""
    gc = g.coeffs
    glc = gc[-1]
    dg = g.degree
    rem = list(f.coeffs)
    flips = 0
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        if glc != 1:
            for i in range(k):
                rem[i] *= glc
            flips += 1
        rem[k] = 0
        for i in range(dg):
            rem[k - dg + i] -= c * gc[i]
    if glc < 0 and flips % 2:
        rem = [-v for v in rem]
    return IntPoly(rem).primitive()


def sturm_chain(p: IntPoly) -> list:
    """Sturm chain of p as primitive integer polynomials (positive multiples
    of the usual p, p', -rem(...), ... sequence)."""
    chain = [p.primitive()]
    d = p.derivative()
    if d.is_zero:
        return chain
    chain.append(d.primitive())
    while chain[-1].degree > 0:
        rem = _signed_prem(chain[-2], chain[-1])
        if rem.is_zero:
            break
        chain.append(-rem)
    return chain


def _sign_at(p: IntPoly, x: Fraction) -> int:
    """Exact sign of p(x) for rational x, via p(u/v) * v^deg."""
    if p.is_zero:
        return 0
    u, v = x.numerator, x.denominator
    # Horner with cleared denominators: sign of p(u/v) * v^deg
    acc = p.coeffs[-1]
    power = 1
    for c in reversed(p.coeffs[:-1]):
        power *= v
        acc = acc * u + c * power
    return (acc > 0) - (acc < 0)


def _variations(signs) -> int:
    count = 0
    last = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def sturm_count(p: IntPoly, lo, hi) -> int:
    """Exact number of real roots of squarefree p in the interval (lo, hi].

    lo < hi are rationals with p(lo) != 0 and p(hi) != 0 (so the half-open
    and open counts coincide).  A non-squarefree p is detected from the
    chain and rejected.

    >>> sturm_count(IntPoly([-2, 0, 1]), 0, 2)   # x^2 - 2 on (0, 2]
    1
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    if p.degree < 1:
        raise ValueError("sturm_count needs degree >= 1")
    chain = sturm_chain(p)
    if chain[-1].degree > 0:
        raise ValueError("polynomial is not squarefree")
    if _sign_at(p, lo) == 0 or _sign_at(p, hi) == 0:
        raise ValueError("interval endpoints must not be roots")
    vlo = _variations(_sign_at(f, lo) for f in chain)
    vhi = _variations(_sign_at(f, hi) for f in chain)
    return vlo - vhi


def root_bound(p: IntPoly) -> int:
    """Integer Cauchy bound: every real root lies in (-B, B)."""
    if p.degree < 1:
        raise ValueError("root bound needs degree >= 1")
    lc = abs(p.coeffs[-1])
    m = max(abs(c) for c in p.coeffs[:-1]) if p.degree else 0
    return 2 + m // lc


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd over Z (sign-normalized to positive leading coefficient),
    by a primitive pseudo-remainder sequence."""
    a, b = p.primitive(), q.primitive()
    if a.is_zero:
        return b if b.is_zero or b.coeffs[-1] > 0 else -b
    if b.is_zero:
        return a if a.coeffs[-1] > 0 else -a
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        r = _signed_prem(a, b)
        a, b = b, r
        if b.degree == 0:
            # a nonzero constant remainder means the pair is coprime
            if not b.is_zero:
                return IntPoly([1])
    return a if a.coeffs[-1] > 0 else -a


def squarefree_part(p: IntPoly) -> IntPoly:
    """p with repeated factors collapsed: p / gcd(p, p'), primitive."""
    if p.degree < 1:
        return p.primitive()
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.primitive()
    num = p.primitive()
    quot = _rational_divexact(num, g)
    return quot.primitive()


def _rational_divexact(r: IntPoly, g: IntPoly) -> IntPoly:
    """Exact division by a possibly non-monic divisor; both primitive, so
    Gauss's lemma keeps the quotient integral."""
    rem = [Fraction(c) for c in r.coeffs]
    gc = g.coeffs
    dg = g.degree
    glc = Fraction(gc[-1])
    quot = [Fraction(0)] * (len(rem) - dg)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k]
        if not c:
            continue
        q = c / glc
        quot[k - dg] = q
        rem[k] = Fraction(0)
        for i in range(dg):
            rem[k - dg + i] -= q * gc[i]
    if any(rem):
        raise InexactDivision("remainder is nonzero")
    if any(f.denominator != 1 for f in quot):
        raise InexactDivision("quotient is not integral")
    return IntPoly([int(f) for f in quot])
