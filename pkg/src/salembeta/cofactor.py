"""Co-factor enumeration and certification for eventually periodic expansions.

A completed expansion of shape (m, p) for a degree-6 Salem polynomial P has
companion R = P * Q, and every root of the co-factor Q lies in the closed
disk |z| <= (1+sqrt(5))/2.  That bound makes the set of possible Q finite:
coefficient bounds carve out a finite candidate box, a Mobius transform
turns disk membership into a half-plane question answerable by exact Routh
tables, the Parry digit inequalities give a rational feasibility test, and
an engine run on a small witness triple certifies survivors.  The pieces
compose into minimal_cofactor_set, which splits the box into confirmed
co-factors (witness exhibited) and unresolved stragglers.

All arithmetic is exact: big integers, Fractions, and the quadratic ring
Z[phi] for the closed-disk boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import gcd
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .intpoly import (
    InexactDivision,
    IntPoly,
    RatPoly,
    divexact,
    reciprocal_test,
    root_bound,
    squarefree_part,
    sturm_count,
    try_divexact,
)
from .salem import SalemTriple, certify, enumerate_by_trace

WITNESS_STEP_CAP = 100_000

# x^2 - x - 1 and x^2 + x - 1: the only integer polynomials with a root on
# the circle |z| = phi, via phi and -phi themselves
_PHI_MINPOLY = IntPoly([-1, -1, 1])
_NEGPHI_MINPOLY = IntPoly([-1, 1, 1])


# ---------------------------------------------------------------------------
# candidate box
# ---------------------------------------------------------------------------


def _phi_power_floor(mult: int, k: int) -> int:
    """floor(mult * phi^k) for integers mult >= 0, k >= 0, exactly.

    phi^k = (L_k + F_k sqrt 5)/2 with Lucas and Fibonacci numbers, and
    floor((A + B)/2) = (A + floor(B))//2 whenever A is an integer and B > 0
    is irrational, so isqrt suffices.
    """
    if mult == 0:
        return 0
    luc, fib = 2, 0
    luc_next, fib_next = 1, 1
    for _ in range(k):
        luc, luc_next = luc_next, luc + luc_next
        fib, fib_next = fib_next, fib + fib_next
    if fib == 0:
        return mult
    return (mult * luc + math.isqrt(5 * mult * mult * fib * fib)) // 2


def box_bounds(n: int, m: int, p: int) -> list:
    """Inclusive coefficient ranges [(lo, hi), ...] for d_0 .. d_{ell-1}.

    Monic candidates of degree ell = m+p-n.  Each |d_{ell-k}| is capped by
    binom(ell, k) phi^k (elementary symmetric functions of roots of modulus
    at most phi); the second-highest coefficient is further pinned to
    [-4, 5] and, for m = 1, the constant term is nonnegative.
    """
    ell = m + p - n
    if ell <= 0:
        raise ValueError("m + p must exceed the Salem degree")
    bounds = []
    for i in range(ell):
        k = ell - i
        cap = _phi_power_floor(math.comb(ell, k), k)
        lo, hi = -cap, cap
        if i == ell - 1:
            # constant window on the subleading coefficient
            lo, hi = max(lo, -4), min(hi, 5)
        if i == 0 and m == 1:
            lo = max(lo, 0)
        bounds.append((lo, hi))
    return bounds


def box_size(n: int, m: int, p: int) -> int:
    return math.prod(hi - lo + 1 for lo, hi in box_bounds(n, m, p))


@dataclass
class CofactorCandidate:
    """A monic box member plus the verdicts the pipeline has reached.

    Verdict values are "pass"/"fail" (or "skipped" for stages never run);
    witness is the confirming Salem triple when one exists.
    """

    q: IntPoly
    disk: str = "skipped"
    feasible: str = "skipped"
    witness: SalemTriple = None

    def report_line(self) -> str:
        coeffs = " ".join(str(c) for c in self.q.coeffs)
        if self.witness is None:
            wit = "none"
        else:
            wit = "%d,%d,%d" % (self.witness.a, self.witness.b, self.witness.c)
        return "Q %s | disk=%s feas=%s witness=%s" % (
            coeffs, self.disk, self.feasible, wit)


def candidate_box(n: int, m: int, p: int):
    """Stream every candidate co-factor for shape (m, p), degree-n Salem.

    Deterministic lexicographic order: the subleading coefficient moves
    slowest, the constant term fastest, each ascending.
    """
    bounds = box_bounds(n, m, p)
    ranges = [range(lo, hi + 1) for lo, hi in reversed(bounds)]
    for rev in product(*ranges):
        yield CofactorCandidate(q=IntPoly(rev[::-1] + (1,)))


# ---------------------------------------------------------------------------
# Routh tables
# ---------------------------------------------------------------------------


@dataclass
class RouthTable:
    """Exact Routh array; defined is False when a first-column pivot
    vanished before construction finished."""

    rows: list
    defined: bool

    def first_column(self) -> list:
        return [row[0] for row in self.rows]

    def stable(self) -> bool:
        # all roots in the open left half plane
        if not self.defined:
            return False
        col = self.first_column()
        return all(x > 0 for x in col) or all(x < 0 for x in col)


def routh_table(poly) -> RouthTable:
    """Build the Routh table of a polynomial with exact rational entries."""
    if isinstance(poly, IntPoly):
        poly = RatPoly.from_int(poly)
    coeffs = [Fraction(c) for c in poly.coeffs]
    if not coeffs or coeffs[-1] == 0:
        raise ValueError("leading coefficient must be nonzero")
    desc = coeffs[::-1]
    n = len(desc) - 1
    rows = [desc[0::2]]
    if n == 0:
        return RouthTable(rows=rows, defined=True)
    rows.append(desc[1::2])
    while len(rows) < n + 1:
        above, cur = rows[-2], rows[-1]
        if cur[0] == 0:
            return RouthTable(rows=rows, defined=False)
        nxt = []
        for i in range(len(above) - 1):
            hi = cur[i + 1] if i + 1 < len(cur) else Fraction(0)
            nxt.append((cur[0] * above[i + 1] - above[0] * hi) / cur[0])
        rows.append(nxt)
    return RouthTable(rows=rows, defined=True)


def _routh_positive(h: list) -> bool:
    """All roots of the integer polynomial h (descending coefficients) in
    the open left half plane.

    Fraction-free variant: each constructed row is a positive multiple of
    the classical one as long as pivots stay positive, so "defined with
    constant sign" collapses to "every pivot > 0" after normalizing the
    leading coefficient.  Degenerate tables fail, which is the safe verdict
    for every caller in this module.

    Raw cross-multiplication doubles entry bit-length per row, which is
    hopeless beyond degree ~25; stripping each new row to its primitive
    part keeps entries determinant-sized and changes no signs.
    """
    lead = h[0]
    if lead == 0:
        return False
    if lead < 0:
        h = [-x for x in h]
    prev = h[0::2]
    cur = h[1::2]
    if not cur:
        return True
    for _ in range(len(h) - 2):
        if cur[0] <= 0:
            return False
        c0, p0 = cur[0], prev[0]
        nxt = []
        for i in range(len(prev) - 1):
            hi = cur[i + 1] if i + 1 < len(cur) else 0
            nxt.append(c0 * prev[i + 1] - p0 * hi)
        g = 0
        for x in nxt:
            g = gcd(g, x)
            if g == 1:
                break
        if g > 1:
            nxt = [x // g for x in nxt]
        prev, cur = cur, nxt
    return cur[0] > 0


@lru_cache(maxsize=None)
def _mobius_basis(ell: int, u: int, v: int) -> tuple:
    """Descending coefficients of u^i v^(ell-i) (1+z)^i (1-z)^(ell-i) for
    i = 0..ell.  H(z) for a candidate is the q_i-weighted sum, so the hot
    scan only ever adds precomputed rows."""
    rows = []
    for i in range(ell + 1):
        poly = [1]
        for _ in range(i):
            poly = [x + y for x, y in zip(poly + [0], [0] + poly)]
        for _ in range(ell - i):
            poly = [x - y for x, y in zip(poly + [0], [0] + poly)]
        scale = u ** i * v ** (ell - i)
        rows.append(tuple(scale * c for c in reversed(poly)))
    return tuple(rows)


def disk_filter(q: IntPoly, k=2) -> bool:
    """Exact test: do all roots of q lie in the open disk |z| < k?

    k must be rational with phi < k <= 2.  The Mobius transform
    f(z) = k(1+z)/(1-z) carries the open left half plane onto that disk;
    the numerator of q(f(z)) is an integer polynomial whose Routh table
    answers the question.  A leading-coefficient collapse means a root at
    z = -k, on the boundary, and fails.
    """
    k = Fraction(k)
    if k > 2 or k * k - k - 1 <= 0:
        raise ValueError("radius must satisfy phi < k <= 2")
    ell = q.degree
    if ell < 0:
        raise ValueError("zero polynomial has no root locus")
    if ell == 0:
        return True
    basis = _mobius_basis(ell, k.numerator, k.denominator)
    qc = q.coeffs
    h = [sum(qc[i] * basis[i][j] for i in range(ell + 1))
         for j in range(ell + 1)]
    return _routh_positive(h)


# ---------------------------------------------------------------------------
# closed golden-ratio disk, exactly, in Z[phi]
# ---------------------------------------------------------------------------
#
# Elements are pairs (x, y) = x + y*phi.  Any root of modulus exactly phi
# is real (a complex pair on |z| = phi would force the non-integer
# 2*phi*cos(theta) into Z), hence is phi or -phi itself, so stripping the
# two quadratic factors above reduces the closed-disk test to an open-disk
# Routh run with k = phi.


def _phi_mul(s, t):
    a, b = s
    c, d = t
    bd = b * d
    return (a * c + bd, a * d + b * c + bd)


def _phi_sign(s) -> int:
    x, y = s
    # x + y*phi = (A + B*sqrt5)/2 with A = 2x + y, B = y
    A = 2 * x + y
    B = y
    if A >= 0 and B >= 0:
        return 1 if A or B else 0
    if A <= 0 and B <= 0:
        return -1
    if A < 0:
        return 1 if 5 * B * B > A * A else -1
    return 1 if A * A > 5 * B * B else -1


def _phi_routh_positive(h: list) -> bool:
    # same recurrence as _routh_positive, ring ops swapped in
    s = _phi_sign(h[0])
    if s == 0:
        return False
    if s < 0:
        h = [(-x, -y) for x, y in h]
    prev = h[0::2]
    cur = h[1::2]
    if not cur:
        return True
    zero = (0, 0)
    for _ in range(len(h) - 2):
        if _phi_sign(cur[0]) <= 0:
            return False
        c0, p0 = cur[0], prev[0]
        nxt = []
        for i in range(len(prev) - 1):
            hi = cur[i + 1] if i + 1 < len(cur) else zero
            a = _phi_mul(c0, prev[i + 1])
            b = _phi_mul(p0, hi)
            nxt.append((a[0] - b[0], a[1] - b[1]))
        g = 0
        for x, y in nxt:
            g = gcd(gcd(g, x), y)
            if g == 1:
                break
        if g > 1:
            nxt = [(x // g, y // g) for x, y in nxt]
        prev, cur = cur, nxt
    return _phi_sign(cur[0]) > 0


def phi_disk_closed(q: IntPoly) -> bool:
    """Exact membership of every root of q in |z| <= (1+sqrt5)/2."""
    while True:
        for f in (_NEGPHI_MINPOLY, _PHI_MINPOLY):
            d = try_divexact(q, f)
            if d is not None:
                q = d
                break
        else:
            break
    ell = q.degree
    if ell <= 0:
        return not q.is_zero
    shape = _mobius_basis(ell, 1, 1)
    qc = q.coeffs
    fib_pairs = []
    a, b = 1, 0  # phi^0 = 1 + 0*phi, then multiply by phi
    for _ in range(ell + 1):
        fib_pairs.append((a, b))
        a, b = b, a + b
    h = []
    for j in range(ell + 1):
        sx = sy = 0
        for i in range(ell + 1):
            w = qc[i] * shape[i][j]
            sx += w * fib_pairs[i][0]
            sy += w * fib_pairs[i][1]
        h.append((sx, sy))
    return _phi_routh_positive(h)


# ---------------------------------------------------------------------------
# symbolic digits and Parry inequality systems
# ---------------------------------------------------------------------------

# coefficients of P = x^6 + a x^5 + b x^4 + c x^3 + b x^2 + a x + 1 as
# affine vectors (coeff_a, coeff_b, coeff_c, constant), ascending degree
_P_VECTORS = (
    (0, 0, 0, 1), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0),
    (0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1),
)


@dataclass
class LinearSystem:
    """Conjunction of affine inequalities over the triple (a, b, c).

    Each entry (ca, cb, cc, k) asserts ca*a + cb*b + cc*c + k >= 0.  The
    digit forms the system was built from ride along for callers that need
    to evaluate or extend them.
    """

    inequalities: list
    digits: list = field(default_factory=list)

    def evaluate(self, a: int, b: int, c: int) -> bool:
        return all(ca * a + cb * b + cc * c + k >= 0
                   for ca, cb, cc, k in self.inequalities)


def _digit_vectors(q: IntPoly, m: int, p: int) -> list:
    """Digits c_1..c_{m+p} of a hypothetical (m, p) expansion with
    co-factor q, as affine vectors over (a, b, c).

    R = P*q must equal x^{m+p} - c_1 x^{m+p-1} - ... - (c_p + 1) x^m - ...
    - (c_{m+p} - c_m), so the digits read off the product coefficients.
    """
    if q.degree != m + p - 6:
        raise ValueError("co-factor degree must be m + p - 6")
    rvec = [[0, 0, 0, 0] for _ in range(m + p + 1)]
    for i, pv in enumerate(_P_VECTORS):
        for j, qc in enumerate(q.coeffs):
            if qc:
                tgt = rvec[i + j]
                for t in range(4):
                    tgt[t] += qc * pv[t]
    digits = []
    for i in range(1, p):
        digits.append(tuple(-x for x in rvec[m + p - i]))
    cp = [-x for x in rvec[m]]
    cp[3] -= 1
    digits.append(tuple(cp))
    for j in range(1, m + 1):
        prior = digits[j - 1]
        digits.append(tuple(prior[t] - rvec[m - j][t] for t in range(4)))
    return digits


def candidate_system(q: IntPoly, m: int, p: int) -> LinearSystem:
    """Necessary digit inequalities for q to be the (m, p) co-factor.

    Contains every c_k >= 0 and every c_1 >= c_k for k >= 2.  This is the
    partial form of Parry's criterion; full lexicographic domination is
    only checkable per witness (or by the case split in
    minimal_cofactor_set).
    """
    digits = _digit_vectors(q, m, p)
    rows = list(digits)
    first = digits[0]
    for d in digits[1:]:
        rows.append(tuple(first[t] - d[t] for t in range(4)))
    return LinearSystem(inequalities=rows, digits=digits)


# ---------------------------------------------------------------------------
# Fourier-Motzkin feasibility
# ---------------------------------------------------------------------------


def _normalize_row(row):
    g = math.gcd(math.gcd(abs(row[0]), abs(row[1])),
                 math.gcd(abs(row[2]), abs(row[3])))
    if g > 1:
        row = tuple(x // g for x in row)
    return row


def _fm_eliminate(rows, idx):
    """Project the system onto the variables other than idx.

    Returns the reduced row set, or None when a contradiction surfaced.
    """
    lows, ups, keep = [], [], []
    for r in rows:
        cv = r[idx]
        if cv > 0:
            lows.append(r)
        elif cv < 0:
            ups.append(r)
        else:
            keep.append(r)
    out = set()
    for r in keep:
        if r[0] == 0 and r[1] == 0 and r[2] == 0:
            if r[3] < 0:
                return None
            continue
        out.add(_normalize_row(r))
    for lo in lows:
        cl = lo[idx]
        for up in ups:
            cu = -up[idx]
            comb = tuple(cl * up[t] + cu * lo[t] for t in range(4))
            if comb[0] == 0 and comb[1] == 0 and comb[2] == 0:
                if comb[3] < 0:
                    return None
                continue
            out.add(_normalize_row(comb))
    return list(out)


def feasible(sys) -> bool:
    """Is the rational solution set of the system nonempty?

    Classic Fourier-Motzkin over (a, b, c); exact, and an empty system is
    trivially feasible.
    """
    rows = sys.inequalities if isinstance(sys, LinearSystem) else list(sys)
    for idx in (2, 1, 0):
        rows = _fm_eliminate(rows, idx)
        if rows is None:
            return False
    return True


def _var_range(rows, idx, cap):
    """Integer range of the single remaining variable, clamped to |.|<=cap."""
    lo, hi = -cap, cap
    for r in rows:
        cv, k = r[idx], r[3]
        if cv > 0:
            lo = max(lo, -(k // cv))
        elif cv < 0:
            hi = min(hi, k // -cv)
    return lo, hi


def _substitute(rows, idx, value):
    out = []
    for r in rows:
        if r[idx]:
            r = tuple(0 if t == idx else r[t] for t in range(3)) + (
                r[3] + r[idx] * value,)
        out.append(r)
    return out


def _polyhedron_points(system: LinearSystem, cap: int = 120):
    """Integer points of the feasibility polyhedron with coordinates
    bounded by cap, streamed deterministically."""
    rows0 = list(system.inequalities)
    rows1 = _fm_eliminate(rows0, 2)
    if rows1 is None:
        return
    rows2 = _fm_eliminate(rows1, 1)
    if rows2 is None:
        return
    a_lo, a_hi = _var_range(rows2, 0, cap)
    for a in range(a_lo, a_hi + 1):
        rows1a = _substitute(rows1, 0, a)
        b_lo, b_hi = _var_range(rows1a, 1, cap)
        for b in range(b_lo, b_hi + 1):
            rows0ab = _substitute(_substitute(rows0, 0, a), 1, b)
            c_lo, c_hi = _var_range(rows0ab, 2, cap)
            for c in range(c_lo, c_hi + 1):
                yield a, b, c


# ---------------------------------------------------------------------------
# structural filters
# ---------------------------------------------------------------------------


def m1_no_positive_roots_check(q: IntPoly) -> bool:
    """True when q has no root in (0, oo).

    Co-factors of (1, p) expansions cannot have positive roots, so this is
    a hard filter for the m = 1 pipeline.  Powers of x are stripped first;
    a root at 0 is not a positive root.
    """
    x = IntPoly([0, 1])
    while q.degree > 0 and q.coeffs[0] == 0:
        q = divexact(q, x)
    if q.degree <= 0:
        return True
    sf = squarefree_part(q)
    return sturm_count(sf, 0, root_bound(sf)) == 0


def reciprocal_cofactor_min_period(q: IntPoly):
    """Minimal period a reciprocal co-factor permits (3), else None.

    A reciprocal Q forces the companion R = P*Q to be reciprocal, and a
    coefficient comparison against the digit shape rules out p = 1 and
    p = 2 outright.
    """
    return 3 if reciprocal_test(q) else None


def cyclotomic_excluded(t: SalemTriple) -> bool:
    """No cyclotomic polynomial can divide the companion of (a, b, c) when
    b <= 2a - 3: the leading digit inequality c_1 >= c_2 fails for every
    possible pair of second and third cyclotomic coefficients."""
    return t.b <= 2 * t.a - 3


def shape_15_conditions(t: SalemTriple) -> bool:
    """Closed-form test for (m, p) = (1, 5): a <= b <= 0, a <= c <= 0,
    a <= -1.  The companion is P itself, so the co-factor is 1."""
    a, b, c = t.a, t.b, t.c
    return a <= b <= 0 and a <= c <= 0 and a <= -1


_X2_SHIFTS = {0: IntPoly([1, 0, 1]), -1: IntPoly([1, -1, 1]),
              2: IntPoly([1, 2, 1])}


def shape_17_cofactor(t: SalemTriple):
    """Closed-form test for (m, p) = (1, 7): the co-factor that the
    coefficient conditions name, or None when (a, b, c) admits no such
    expansion.

    The three condition sets are mutually exclusive: x^2+1 needs b <= -1,
    x^2+2x+1 needs b >= 1-a >= 5, and the x^2-x+1 set is three explicit
    trace-0 triples satisfying neither.
    """
    a, b, c = t.a, t.b, t.c
    if (b <= -1 and 1 <= c <= -a and a <= 2 * b
            and (a != 2 * b or b + c >= 1)):
        return _X2_SHIFTS[0]
    if (a, b, c) in ((0, -1, -1), (0, -1, -2), (0, -2, -3)):
        return _X2_SHIFTS[-1]
    if (a <= -4 and 2 - 2 * a <= 2 * b <= -3 * a - 2
            and a - 2 * b + 2 <= 2 * c <= -2 * a - 4 * b):
        return _X2_SHIFTS[2]
    return None


def _forces_pure_periodicity(q: IntPoly, m: int) -> bool:
    # m = 1 with q(0) = 0 would force c_{p+1} = c_1 and hence B_p = B_0,
    # i.e. remainder exactly 1, impossible for a greedy orbit
    return m == 1 and q.coeffs[0] == 0


def _identically_subperiodic(digits, m: int, p: int) -> bool:
    """Digit forms repeat with a proper divisor of p for every (a, b, c),
    so no expansion can have minimal period p."""
    for div in range(1, p):
        if p % div:
            continue
        cycle = digits[m:]
        if all(cycle[i] == cycle[i + div] for i in range(p - div)):
            return True
    return False


def _tails_dominable(digits, m: int, p: int, base_rows) -> bool:
    """Can every proper tail be strictly dominated by the head sequence
    somewhere in the rational polyhedron?

    Parry's criterion needs (c_k, c_{k+1}, ...) < (c_1, c_2, ...) for all
    k >= 2.  For each tail we branch on the first strict position j:
    equalities before j, then c_{1+j} >= c_{k+j} + 1 (digits are integers).
    If some tail admits no feasible branch, no Salem triple anywhere can
    realize this candidate.  One-tail-at-a-time, so a pass here is still
    only a necessary condition.
    """
    total = m + p

    def form(pos):
        # digit position >= 1, cycle unfolded
        if pos <= total:
            return digits[pos - 1]
        return digits[m + (pos - m - 1) % p]

    for k in range(2, total + 1):
        prefix = list(base_rows)
        ok = False
        for j in range(p + 2):
            head, tail = form(1 + j), form(k + j)
            delta = tuple(head[t] - tail[t] for t in range(4))
            strict = delta[:3] + (delta[3] - 1,)
            if strict[0] == 0 and strict[1] == 0 and strict[2] == 0:
                branch_ok = strict[3] >= 0 and feasible(prefix)
            else:
                branch_ok = feasible(prefix + [strict])
            if branch_ok:
                ok = True
                break
            if delta[0] == 0 and delta[1] == 0 and delta[2] == 0:
                if delta[3] != 0:
                    break  # identically unequal: no equality branch either
                continue
            prefix.append(delta)
            prefix.append(tuple(-x for x in delta))
            if not feasible(prefix):
                break
        if not ok:
            return False
    return True


# ---------------------------------------------------------------------------
# witness confirmation
# ---------------------------------------------------------------------------

_POOL_CACHE = {}
_EXPANSION_CACHE = {}


def _witness_pool(max_trace: int = 15) -> list:
    if max_trace not in _POOL_CACHE:
        triples = enumerate_by_trace(max_trace)
        _POOL_CACHE[max_trace] = sorted(
            triples, key=lambda t: (t.trace, t.b, t.c))
    return _POOL_CACHE[max_trace]


def _expansion_summary(triple: SalemTriple, step_cap: int):
    """(m, p, cofactor) for the triple's expansion, or None within cap.

    Memoized: the same pool is probed for every candidate of a scan.
    """
    from .expansion import LowerBoundReport, digits_to_companion, expand

    key = (triple.a, triple.b, triple.c, step_cap)
    if key in _EXPANSION_CACHE:
        return _EXPANSION_CACHE[key]
    result = expand(triple.poly(), max_steps=step_cap,
                    checkpoint_interval=10_000)
    if isinstance(result, LowerBoundReport):
        summary = None
    else:
        comp = digits_to_companion(result.digits, result.m, result.p)
        try:
            q = divexact(comp.poly, triple.poly())
        except InexactDivision:
            summary = None
        else:
            summary = (result.m, result.p, q)
    _EXPANSION_CACHE[key] = summary
    return summary


def witness_search(q: IntPoly, m: int, p: int, search_box=None,
                   step_cap: int = WITNESS_STEP_CAP,
                   system: LinearSystem = None):
    """Find a Salem triple whose expansion has exactly shape (m, p) and
    co-factor q.

    The default pool is every certified triple of trace <= 15 ordered by
    (trace, b, c), then the integer points of the digit polyhedron with
    coordinates up to 120.  Minimality of the engine's (m, p) protects
    against period-divisor impostors.  Returns the triple or None.
    """
    if system is None:
        system = candidate_system(q, m, p)

    def confirmed(t: SalemTriple):
        if not system.evaluate(t.a, t.b, t.c):
            return False
        summary = _expansion_summary(t, step_cap)
        return (summary is not None and summary[0] == m
                and summary[1] == p and summary[2] == q)

    if search_box is not None:
        for t in search_box:
            if t.is_salem and confirmed(t):
                return t
        return None
    seen = set()
    for t in _witness_pool():
        seen.add((t.a, t.b, t.c))
        if confirmed(t):
            return t
    for a, b, c in _polyhedron_points(system):
        if (a, b, c) in seen:
            continue
        t = certify(a, b, c)
        if t.is_salem and confirmed(t):
            return t
    return None


# ---------------------------------------------------------------------------
# full pipeline
# ---------------------------------------------------------------------------


def _scan_box_survivors(n: int, m: int, p: int, stats: dict) -> list:
    """Walk the whole candidate box and keep the closed-disk members.

    The k = 2 Routh filter runs inline on incrementally updated transform
    coefficients (the transform is linear in the candidate), so the scan
    stays a few integer operations per box member; the tighter 13/8 and
    exact golden-ratio tests only ever see the small survivor stream.
    """
    ell = m + p - n
    bounds = box_bounds(n, m, p)
    basis = _mobius_basis(ell, 2, 1)
    width = ell + 1
    e0 = basis[0]
    outer_ranges = [range(lo, hi + 1) for lo, hi in reversed(bounds[1:])]
    d0_lo, d0_hi = bounds[0]
    k138 = Fraction(13, 8)
    test = _routh_positive
    survivors = []
    visited = passed2 = passed138 = 0
    for outer in product(*outer_ranges):
        base = list(basis[ell])
        for lvl, dv in enumerate(outer):
            if dv:
                row = basis[ell - 1 - lvl]
                for j in range(width):
                    base[j] += dv * row[j]
        h = [base[j] + d0_lo * e0[j] for j in range(width)]
        for d0 in range(d0_lo, d0_hi + 1):
            visited += 1
            if test(h):
                passed2 += 1
                qpoly = IntPoly((d0,) + outer[::-1] + (1,))
                if disk_filter(qpoly, k138):
                    passed138 += 1
                    if phi_disk_closed(qpoly):
                        survivors.append(qpoly)
            for j in range(width):
                h[j] += e0[j]
    stats["box"] = visited
    stats["disk_k2"] = passed2
    stats["disk_13_8"] = passed138
    stats["phi_closed"] = len(survivors)
    return survivors


PHI_BOUNDARY_FACTORS = (_NEGPHI_MINPOLY, _PHI_MINPOLY)

DYADIC_PHI_SWEEP = (Fraction(13, 8), Fraction(415, 256), Fraction(829, 512),
                    Fraction(1657, 1024))


def phi_boundary_factor(q: IntPoly):
    """The quadratic factor of q with a root of modulus exactly (1+sqrt5)/2,
    or None.  x^2+x-1 has root -phi, x^2-x-1 has root phi; these are the only
    integer-polynomial sources of boundary roots for the closed phi disk."""
    for factor in PHI_BOUNDARY_FACTORS:
        if try_divexact(q, factor) is not None:
            return factor
    return None


def disk_census(n: int, m: int, p: int) -> dict:
    """Exact filter census over the (n, m, p) candidate box.

    Classifies every candidate by the outcome of the k = 2 Routh chain in
    the q(2)-leading orientation, then refines the exact passes through the
    dyadic radius sweep and the exact closed golden-ratio disk test,
    splitting the closed-disk survivors into boundary (a root of modulus
    exactly phi) and interior.  Every figure is computed in integer
    arithmetic; nothing is sampled or rounded.

    Keys: box, k2_pass, k2_lead_zero, k2_zero_pivot, k2_zero_row, k2_fail,
    dyadic (radius string -> count), phi_closed, phi_boundary (tuple of
    IntPoly), phi_interior.
    """
    ell = m + p - n
    if ell <= 0:
        raise ValueError("census needs a nonempty box")
    bounds = box_bounds(n, m, p)
    basis = _mobius_basis(ell, 2, 1)
    width = ell + 1
    e0 = basis[0]
    outer_ranges = [range(lo, hi + 1) for lo, hi in reversed(bounds[1:])]
    d0_lo, d0_hi = bounds[0]
    census = {"box": 0, "k2_pass": 0, "k2_lead_zero": 0, "k2_zero_pivot": 0,
              "k2_zero_row": 0, "k2_fail": 0}
    passes = []
    for outer in product(*outer_ranges):
        base = list(basis[ell])
        for lvl, dv in enumerate(outer):
            if dv:
                row = basis[ell - 1 - lvl]
                for j in range(width):
                    base[j] += dv * row[j]
        h = [base[j] + d0_lo * e0[j] for j in range(width)]
        for d0 in range(d0_lo, d0_hi + 1):
            census["box"] += 1
            kind = _k2_anatomy(h[::-1])
            census[kind] += 1
            if kind == "k2_pass":
                passes.append(IntPoly((d0,) + outer[::-1] + (1,)))
            for j in range(width):
                h[j] += e0[j]

    census["dyadic"] = {
        str(k): sum(1 for q in passes if disk_filter(q, k))
        for k in DYADIC_PHI_SWEEP
    }
    closed = [q for q in passes if phi_disk_closed(q)]
    boundary = tuple(q for q in closed if phi_boundary_factor(q) is not None)
    census["phi_closed"] = len(closed)
    census["phi_boundary"] = boundary
    census["phi_interior"] = len(closed) - len(boundary)
    return census


def _k2_anatomy(g: list) -> str:
    """Routh-chain outcome class for one transformed candidate, leading
    coefficient first.  Zero classes are mutually exclusive with pass/fail:
    a zero is only reported when every earlier pivot was strictly positive,
    which is where implementations genuinely diverge."""
    if g[0] == 0:
        return "k2_lead_zero"
    if g[0] < 0:
        g = [-x for x in g]
    prev = g[0::2]
    cur = g[1::2]
    for _ in range(len(g) - 2):
        if all(x == 0 for x in cur):
            return "k2_zero_row"
        if cur[0] == 0:
            return "k2_zero_pivot"
        if cur[0] < 0:
            return "k2_fail"
        c0, p0 = cur[0], prev[0]
        nxt = [c0 * prev[i + 1] - p0 * (cur[i + 1] if i + 1 < len(cur) else 0)
               for i in range(len(prev) - 1)]
        prev, cur = cur, nxt
    if cur[0] == 0:
        return "k2_zero_row"
    if cur[0] < 0:
        return "k2_fail"
    return "k2_pass"


def minimal_cofactor_set(n: int, m: int, p: int, stats: dict = None,
                         witness_step_cap: int = WITNESS_STEP_CAP):
    """Compute (confirmed, unresolved) co-factor lists for T_n with
    expansion shape (m, p).

    Confirmed candidates carry an exhibited witness; unresolved ones
    passed every exact filter but no witness was found, and are reported
    rather than dropped.  An empty unresolved list certifies the confirmed
    list as the complete minimal co-factor set.  stats, when given, is
    filled with per-stage counts and the CofactorCandidate reports.
    """
    if stats is None:
        stats = {}
    if n != 6:
        raise ValueError("only the degree-6 pipeline is wired up")
    ell = m + p - n
    if ell < 0:
        raise ValueError("m + p below the Salem degree")
    if ell == 0:
        one = IntPoly([1])
        stats.update(box=1, disk_k2=1, disk_13_8=1, phi_closed=1)
        survivors = [one]
    else:
        survivors = _scan_box_survivors(n, m, p, stats)

    kept = []
    n_d0 = n_roots = n_period = n_fm = n_parry = 0
    for q in survivors:
        if _forces_pure_periodicity(q, m):
            continue
        n_d0 += 1
        if m == 1 and not m1_no_positive_roots_check(q):
            continue
        n_roots += 1
        floor_p = reciprocal_cofactor_min_period(q)
        if floor_p is not None and p < floor_p:
            continue
        system = candidate_system(q, m, p)
        if _identically_subperiodic(system.digits, m, p):
            continue
        n_period += 1
        if not feasible(system):
            continue
        n_fm += 1
        if not _tails_dominable(system.digits, m, p, system.inequalities):
            continue
        n_parry += 1
        kept.append((q, system))
    stats["d0_positive"] = n_d0
    stats["no_positive_roots"] = n_roots
    stats["aperiodic"] = n_period
    stats["fm_feasible"] = n_fm
    stats["parry_feasible"] = n_parry

    confirmed, unresolved, reports = [], [], []
    for q, system in kept:
        wit = witness_search(q, m, p, step_cap=witness_step_cap,
                             system=system)
        cand = CofactorCandidate(q=q, disk="pass", feasible="pass",
                                 witness=wit)
        reports.append(cand)
        (confirmed if wit is not None else unresolved).append(q)
    key = lambda poly: (poly.degree, poly.coeffs)
    confirmed.sort(key=key)
    unresolved.sort(key=key)
    reports.sort(key=lambda cand: key(cand.q))
    stats["confirmed"] = len(confirmed)
    stats["unresolved"] = len(unresolved)
    stats["reports"] = reports
    return confirmed, unresolved
