"""Greedy beta expansion engine with exact integer states.

The expansion of 1 in base beta is the digit stream c_1 c_2 ... with

    r_0 = 1,  c_n = floor(beta * r_{n-1}),  r_n = beta * r_{n-1} - c_n.

For algebraic beta with monic minimal polynomial P of degree d the
remainders are tracked exactly as integer polynomial states

    B_0 = 1,  B_n = x * B_{n-1} - c_n  (mod P),  r_n = B_n(beta),

so periodicity is decidable: the stream is eventually periodic with
preperiod m and period p exactly when B_m = B_{m+p}, and that state
equality (big-integer vector equality, never digit comparison) is the
certificate everything here rests on.

Digits are computed without rounding.  beta is enclosed in a dyadic
interval (lo, hi) whose midpoint is beta0 = M / 2^s; the integer

    v = sum_i b_i * M^(i+1) * 2^(s(d-i-1))

equals 2^(sd) * beta0 * B(beta0) exactly, so v >> sd is the true floor of
beta0 * B(beta0).  Writing g(x) = x * B(x), the substitution error obeys

    |g(beta) - g(beta0)| <= eps * sum_j |g_j| * j * hi^(j-1),

with eps = (hi - lo)/2, by the mean value theorem.  Whenever the
fractional part of v / 2^(sd) clears that bound on both sides the digit
is provably correct; otherwise the enclosure is refined and the step is
retried.  No step ever guesses.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from fractions import Fraction

from .intpoly import IntPoly, InexactDivision, divexact
from .salem import BetaEnclosure, _as_poly, _bisect_to, initial_bracket

DEFAULT_EPS = Fraction(5, 10 ** 64)
DEFAULT_CHECKPOINT_INTERVAL = 10_000_000
DEFAULT_HEAD_DIGITS = 1_000_000
CKPT_HEADER = "SALEMBETA-CKPT v1"

# enclosure bits kept beyond the bit length of the largest state
# coefficient; about 72 decimal guard digits
GUARD_BITS = 240


class PrecisionError(ArithmeticError):
    """The enclosure is too coarse to certify the next digit."""


class VerificationError(ValueError):
    """A claimed expansion failed re-verification."""


class InternalCheckError(RuntimeError):
    """An invariant that correct computations cannot break was broken."""


@dataclass(frozen=True)
class Expansion:
    """Eventually periodic digit stream: head c_1..c_m, cycle
    c_{m+1}..c_{m+p}.  p = 0 encodes a finite expansion; otherwise both m
    and p are minimal for the underlying state orbit."""

    digits: tuple
    m: int
    p: int

    def __post_init__(self):
        if self.m < 0 or self.p < 0 or self.m + self.p != len(self.digits):
            raise ValueError("digit list must have length m + p")
        if any(d < 0 for d in self.digits):
            raise ValueError("digits must be nonnegative")

    @property
    def head(self) -> tuple:
        return self.digits[: self.m]

    @property
    def period(self) -> tuple:
        return self.digits[self.m :]

    def digit_at(self, i: int) -> int:
        """c_i for i >= 1, unfolding the cycle."""
        if i < 1:
            raise IndexError("digit positions start at 1")
        if i <= self.m + self.p:
            return self.digits[i - 1]
        if self.p == 0:
            return 0
        return self.digits[self.m + (i - self.m - 1) % self.p]


@dataclass(frozen=True)
class CompanionPolynomial:
    """R = P_{m+p} - P_m for a digit stream (R = P_m alone when p = 0),
    where P_k(x) = x^k - c_1 x^(k-1) - ... - c_k.  beta is always a root."""

    poly: IntPoly
    m: int
    p: int


@dataclass(frozen=True)
class LowerBoundReport:
    """Budget exhausted.  Each record (n, |L|) marks a new maximum of the
    absolute constant coefficient of B_n; a fresh record at n proves the
    state at n never occurred before, hence m + p > n."""

    steps: int
    records: tuple

    @property
    def record_index(self) -> int:
        return self.records[-1][0]

    @property
    def record_value(self) -> int:
        return self.records[-1][1]


@dataclass(frozen=True)
class EngineState:
    """Functional snapshot: the state after n digits."""

    n: int
    bcoeffs: tuple


@dataclass(frozen=True)
class CofactorCertificate:
    companion: CompanionPolynomial
    cofactor: IntPoly
    disk_checked: bool


# ---------------------------------------------------------------------------
# digit evaluator
# ---------------------------------------------------------------------------


class _DigitEvaluator:
    """Exact floor(beta * B(beta)) with a proven-correctness guard."""

    def __init__(self, poly: IntPoly, enclosure: BetaEnclosure):
        self.poly = poly
        self.d = poly.degree
        self._rebuild(enclosure)

    def _rebuild(self, enc: BetaEnclosure):
        mid = enc.mid
        den = mid.denominator
        s = den.bit_length() - 1
        if 1 << s != den:
            raise ValueError("enclosure midpoint must be dyadic")
        d = self.d
        num = mid.numerator
        self.enc = enc
        self.s = s
        self.T = s * d
        self.two_T = 1 << self.T
        self.mask = self.two_T - 1
        # W[i] scales state coefficient b_i: b_i*W[i] = 2^(sd)*b_i*beta0^(i+1)
        self.W = tuple((num ** (i + 1)) << (s * (d - i - 1)) for i in range(d))
        half = enc.width / 2
        K = sum(j * enc.hi ** (j - 1) for j in range(1, d + 1))
        ek = half * K * self.two_T
        self.EK = ek.numerator // ek.denominator + 1

    def refine(self, min_bits: int = 0):
        """Deepen the enclosure: double its bit depth, or more when
        min_bits asks for it."""
        target = max(2 * self.s, self.s + 64, min_bits)
        goal = self.enc.width / (1 << (target - self.s))
        self._rebuild(_bisect_to(self.poly, self.enc, goal))

    def ensure_coefficient_budget(self, bmax: int):
        """Keep the depth ahead of coefficient growth so in-loop guard
        failures stay rare."""
        need = bmax.bit_length() + GUARD_BITS
        if self.s < need:
            self.refine(min_bits=need)

    def digit(self, b, bmax: int) -> int:
        v = 0
        W = self.W
        for i in range(self.d):
            bi = b[i]
            if bi:
                v += bi * W[i]
        if bmax == 0:
            return 0
        c = v >> self.T
        f = v & self.mask
        g = self.EK * bmax
        if f <= g or f + g >= self.two_T:
            raise PrecisionError("enclosure too coarse for this state")
        return c


def _functional_evaluator(poly, enc, _cache={}):
    key = (poly.coeffs, enc.lo, enc.hi)
    ev = _cache.get(key)
    if ev is None:
        if len(_cache) > 64:
            _cache.clear()
        ev = _DigitEvaluator(poly, enc)
        _cache[key] = ev
    return ev


def step(state: EngineState, P, enclosure: BetaEnclosure):
    """One exact greedy step: state after n digits -> (state after n+1
    digits, digit c_{n+1}).

    Raises PrecisionError when the enclosure cannot separate
    beta * B(beta) from the nearest integer; the caller refines (see
    refine_enclosure) and retries.
    """
    poly = _as_poly(P)
    d = poly.degree
    b = list(state.bcoeffs) + [0] * (d - len(state.bcoeffs))
    bmax = max(abs(x) for x in b)
    c = _functional_evaluator(poly, enclosure).digit(b, bmax)
    tmp = b[d - 1]
    pc = poly.coeffs
    for i in range(d - 1, 0, -1):
        b[i] = b[i - 1] - tmp * pc[i]
    b[0] = -tmp * pc[0] - c
    return EngineState(state.n + 1, tuple(b)), c


def refine_enclosure(P, enc: BetaEnclosure) -> BetaEnclosure:
    """Double the bit depth of a root enclosure."""
    poly = _as_poly(P)
    s = max(enc.mid.denominator.bit_length(), 64)
    return _bisect_to(poly, enc, enc.width / (1 << s))


# ---------------------------------------------------------------------------
# engine
# ---------------------------------------------------------------------------


class Engine:
    """Forward runner with checkpoints, record tracking and cycle anchors.

    Two anchors watch for state recurrence while advancing:

    * the most recent checkpoint (multiples of checkpoint_interval), which
      catches any period up to one interval once the preperiod is passed;
    * a geometric anchor at indices 1, 2, 4, 8, ..., which catches every
      (m, p) by index ~ 2*max(m, p) + p regardless of the interval.

    A hit at anchor A with distance q means B_A = B_{A+q} with no earlier
    return, so q is exactly the minimal period of the state orbit.
    """

    def __init__(self, P, eps=DEFAULT_EPS,
                 checkpoint_interval=DEFAULT_CHECKPOINT_INTERVAL,
                 head_digits=DEFAULT_HEAD_DIGITS, state_sink=None):
        poly = _as_poly(P)
        if not poly.is_monic or poly.degree < 2:
            raise ValueError("need a monic polynomial of degree >= 2")
        if checkpoint_interval < 1:
            raise ValueError("checkpoint interval must be positive")
        self.poly = poly
        self.d = poly.degree
        self.eps = Fraction(eps)
        self.interval = checkpoint_interval
        self.head_cap = head_digits
        self.ev = _DigitEvaluator(poly, _bisect_to(poly, initial_bracket(poly),
                                                   self.eps))
        self.n = 0
        self.b = [1] + [0] * (self.d - 1)
        self.digits = array("q")
        self.checkpoints = {0: tuple(self.b)}
        self.snapshots = {0: tuple(self.b)}
        self.record = (0, 1)  # current maximum (index, |L(B_index)|)
        self.records = [(0, 1)]  # thinned history; every entry is genuine
        self.period_hit = None  # (anchor_index, hit_index) once seen
        self._recent_idx = 0
        self._recent = list(self.b)
        self._geo_idx = 0
        self._geo = list(self.b)
        self._sink = state_sink
        self._written_record = None

    # -- persistence hooks --

    def _emit_lines(self, n, state, rec_idx, rec_val):
        # a record line travels with every checkpoint so a resumed run
        # restores the exact historical maximum as of its start state
        self._sink.write("ckpt %d %s\n" % (n, " ".join(map(str, state))))
        self._sink.write("record %d %d\n" % (rec_idx, rec_val))
        self._sink.flush()
        self._written_record = (rec_idx, rec_val)

    def sync_records(self):
        """Fold the current maximum into the thinned history and emit a
        record line when a sink is attached.

        Skipped when the newest checkpoint already carries this record:
        a run stopped on a checkpoint boundary then leaves a file that is
        byte-identical to the same run left uninterrupted."""
        if self.records[-1] != self.record:
            self.records.append(self.record)
        if self._sink is not None and self.record != self._written_record:
            self._sink.write("record %d %d\n" % self.record)
            self._sink.flush()
            self._written_record = self.record

    # -- main loop --

    def run(self, max_steps: int) -> bool:
        """Advance to index max_steps or to the first anchor hit.
        Returns True when a period was found."""
        if self.period_hit:
            return True
        d = self.d
        b = self.b
        ev = self.ev
        interval = self.interval
        digits = self.digits
        # only store digits while the array stays aligned with the index
        store = self.head_cap if len(digits) == self.n else -1
        records = self.records
        rec_idx, rec_val = self.record
        recent = self._recent
        geo = self._geo
        n = self.n
        pc = self.poly.coeffs
        neg0 = -pc[0]
        while n < max_steps:
            bmax = 0
            for x in b:
                ax = -x if x < 0 else x
                if ax > bmax:
                    bmax = ax
            while True:
                try:
                    c = ev.digit(b, bmax)
                    break
                except PrecisionError:
                    ev.refine(min_bits=bmax.bit_length() + GUARD_BITS)
            tmp = b[d - 1]
            for i in range(d - 1, 0, -1):
                b[i] = b[i - 1] - tmp * pc[i]
            b[0] = neg0 * tmp - c
            n += 1
            if n <= store:
                digits.append(c)
            a0 = b[0]
            if a0 < 0:
                a0 = -a0
            if a0 > rec_val:
                rec_val = a0
                rec_idx = n
                # thin the kept history once it gets long; the current
                # maximum is folded back in by sync_records
                if len(records) < 1024 or a0 >= 2 * records[-1][1]:
                    records.append((n, a0))
            if b == recent:
                self.period_hit = (self._recent_idx, n)
            elif b == geo:
                self.period_hit = (self._geo_idx, n)
            if n % interval == 0:
                state = tuple(b)
                self.checkpoints[n] = state
                self.snapshots[n] = state
                if self._sink is not None:
                    self._emit_lines(n, state, rec_idx, rec_val)
                self._recent_idx = n
                recent = self._recent = list(b)
                ev.ensure_coefficient_budget(bmax)
            if n == 2 * self._geo_idx or (self._geo_idx == 0 and n == 1):
                self.snapshots.setdefault(n, tuple(b))
                self._geo_idx = n
                geo = self._geo = list(b)
            if self.period_hit:
                break
        self.n = n
        self.record = (rec_idx, rec_val)
        return self.period_hit is not None

    # -- replay --

    def _replay(self, state, count, want_digits=False):
        """Advance `count` exact steps from an arbitrary state (the
        recursion does not depend on the index)."""
        ev = self.ev
        d = self.d
        pc = self.poly.coeffs
        neg0 = -pc[0]
        b = list(state)
        out = array("q") if want_digits else None
        for _ in range(count):
            bmax = max(-x if x < 0 else x for x in b)
            while True:
                try:
                    c = ev.digit(b, bmax)
                    break
                except PrecisionError:
                    ev.refine(min_bits=bmax.bit_length() + GUARD_BITS)
            tmp = b[d - 1]
            for i in range(d - 1, 0, -1):
                b[i] = b[i - 1] - tmp * pc[i]
            b[0] = neg0 * tmp - c
            if want_digits:
                out.append(c)
        if want_digits:
            return b, out
        return b

    def _nearest_snapshot(self, index: int) -> int:
        best = 0
        for k in self.snapshots:
            if best < k <= index:
                best = k
        return best

    def state_at(self, index: int) -> tuple:
        """Exact state B_index, replayed from the nearest stored snapshot."""
        snap = self.snapshots.get(index)
        if snap is not None:
            return snap
        if index == self.n:
            return tuple(self.b)
        base = self._nearest_snapshot(index)
        return tuple(self._replay(self.snapshots[base], index - base))

    def digits_range(self, lo: int, hi: int) -> list:
        """Digits c_lo..c_hi (1-indexed, inclusive), replaying past the
        stored head when needed."""
        if lo < 1 or hi < lo - 1:
            raise IndexError("bad digit range")
        have = len(self.digits)
        if hi <= have:
            return list(self.digits[lo - 1 : hi])
        out = list(self.digits[lo - 1 :]) if lo <= have else []
        start = max(lo - 1, have)
        base = self._nearest_snapshot(start)
        _, digs = self._replay(self.snapshots[base], hi - base,
                               want_digits=True)
        out.extend(digs[start - base :])
        return out

    # -- periodicity --

    def detect_period(self, M: int, scan_limit=None):
        """Minimal q <= scan_limit with B_M = B_{M+q}, or None.

        M must be a stored snapshot index (checkpoints qualify) or the
        current index.  Default budget: the distance from M to the newest
        computed index.
        """
        if M not in self.snapshots and M != self.n:
            raise ValueError("no snapshot at index %d" % M)
        if scan_limit is None:
            scan_limit = max(self.n - M, 0)
        anchor = list(self.state_at(M))
        b = anchor[:]
        ev = self.ev
        d = self.d
        pc = self.poly.coeffs
        neg0 = -pc[0]
        for q in range(1, scan_limit + 1):
            bmax = max(-x if x < 0 else x for x in b)
            while True:
                try:
                    c = ev.digit(b, bmax)
                    break
                except PrecisionError:
                    ev.refine(min_bits=bmax.bit_length() + GUARD_BITS)
            tmp = b[d - 1]
            for i in range(d - 1, 0, -1):
                b[i] = b[i - 1] - tmp * pc[i]
            b[0] = neg0 * tmp - c
            if b == anchor:
                return q
        return None

    def detect_preperiod(self, p: int) -> int:
        """Minimal m with B_m = B_{m+p}: binary search over stored
        snapshot indices (the predicate k -> B_k == B_{k+p} is monotone),
        then a two-cursor linear scan inside the bracketing gap."""
        if p < 1:
            raise ValueError("period must be positive")
        idxs = sorted(self.snapshots)
        lo, hi = 0, len(idxs) - 1
        first_true = None
        while lo <= hi:
            mid = (lo + hi) // 2
            k = idxs[mid]
            if self.state_at(k) == self.state_at(k + p):
                first_true = mid
                hi = mid - 1
            else:
                lo = mid + 1
        if first_true is None:
            raise InternalCheckError("periodic region has no snapshot")
        if first_true == 0:
            return idxs[0]
        base = idxs[first_true - 1]
        target = idxs[first_true]
        cur = list(self.snapshots[base])
        far = list(self.state_at(base + p))
        for j in range(base + 1, target + 1):
            cur = self._replay(cur, 1)
            far = self._replay(far, 1)
            if cur == far:
                return j
        return target


def expand(P, max_steps: int, eps=DEFAULT_EPS,
           checkpoint_interval=DEFAULT_CHECKPOINT_INTERVAL,
           head_digits=DEFAULT_HEAD_DIGITS, engine=None, state_sink=None):
    """Run the greedy expansion of 1 for P.

    Returns an Expansion when eventual periodicity is certified within the
    step budget, otherwise a LowerBoundReport whose newest record index N
    proves m + p > N.
    """
    eng = engine or Engine(P, eps=eps,
                           checkpoint_interval=checkpoint_interval,
                           head_digits=head_digits, state_sink=state_sink)
    found = eng.run(max_steps)
    eng.sync_records()
    if not found:
        return LowerBoundReport(steps=eng.n, records=tuple(eng.records))
    anchor, hit = eng.period_hit
    p = hit - anchor
    m = eng.detect_preperiod(p)
    digits = tuple(eng.digits_range(1, m + p))
    return Expansion(digits=digits, m=m, p=p)


# ---------------------------------------------------------------------------
# digit stream <-> companion polynomial
# ---------------------------------------------------------------------------


def unfold_digits(expansion: Expansion, count: int) -> list:
    """First `count` digits with the cycle unrolled."""
    return [expansion.digit_at(i) for i in range(1, count + 1)]


def digits_to_companion(digits, m: int, p: int) -> CompanionPolynomial:
    """Companion polynomial of an eventually periodic stream.

    With P_k(x) = x^k - c_1 x^(k-1) - ... - c_k, returns P_{m+p} - P_m for
    p >= 1 and P_m for p = 0.  beta is a root because P_k(beta)
    telescopes to beta^k * r_k and r_m = r_{m+p}.
    """
    digits = tuple(digits)
    if m < 0 or p < 0 or m + p != len(digits) or m + p < 1:
        raise ValueError("need digits of length m + p >= 1")
    asc = [0] * (m + p + 1)
    asc[m + p] = 1
    for i, c in enumerate(digits, start=1):
        asc[m + p - i] -= c
    if p >= 1:
        asc[m] -= 1
        for i in range(1, m + 1):
            asc[m - i] += digits[i - 1]
    return CompanionPolynomial(poly=IntPoly(asc), m=m, p=p)


def companion_to_digits(poly, m: int, p: int) -> Expansion:
    """Invert digits_to_companion.

    Raises VerificationError when poly is not the companion of any valid
    digit stream with parameters (m, p): wrong degree, not monic, or a
    recovered digit is negative.
    """
    poly = poly if isinstance(poly, IntPoly) else IntPoly(poly)
    if m < 0 or p < 0 or m + p < 1:
        raise ValueError("need m >= 0, p >= 0, m + p >= 1")
    if poly.degree != m + p or not poly.is_monic:
        raise VerificationError("not monic of degree m + p")
    asc = list(poly.coeffs) + [0] * (m + p + 1 - len(poly.coeffs))
    c = [0] * (m + p + 1)  # 1-indexed
    if p == 0:
        for i in range(1, m + 1):
            c[i] = -asc[m - i]
    else:
        for i in range(1, p):
            c[i] = -asc[m + p - i]
        c[p] = -asc[m] - 1
        for j in range(1, m + 1):
            c[p + j] = c[j] - asc[m - j]
    digits = tuple(c[1:])
    if any(d < 0 for d in digits):
        raise VerificationError("recovered digits are negative")
    check = digits_to_companion(digits, m, p)
    if check.poly != poly:
        raise VerificationError("digit stream does not reproduce the input")
    return Expansion(digits=digits, m=m, p=p)


# ---------------------------------------------------------------------------
# admissibility
# ---------------------------------------------------------------------------


def _z_array(s):
    n = len(s)
    z = [0] * n
    if n:
        z[0] = n
    l = r = 0
    for i in range(1, n):
        if i < r:
            z[i] = min(r - i, z[i - l])
        while i + z[i] < n and s[z[i]] == s[i + z[i]]:
            z[i] += 1
        if i + z[i] > r:
            l, r = i, i + z[i]
    return z


def parry_check(expansion: Expansion) -> bool:
    """Whether every proper shift of the unfolded stream is
    lexicographically smaller than the stream itself, the admissibility
    condition for an expansion of 1.

    Two streams that are eventually periodic with parameters within
    (m, p) and agree on m + 2p positions agree everywhere, so each shift
    is compared over a window of that length via one Z-array pass.
    """
    m, p = expansion.m, expansion.p
    shifts = m + p if p >= 1 else m + 1
    window = m + 2 * p if p >= 1 else m + 2
    s = unfold_digits(expansion, shifts + window)
    z = _z_array(s)
    for k in range(1, shifts):
        lcp = min(z[k], window)
        if lcp >= window:
            return False
        if s[lcp] <= s[k + lcp]:
            return False
    return True


def verify_expansion(P, expansion: Expansion, disk_degree_cap: int = 600,
                     disk_k: Fraction = Fraction(13, 8)) -> CofactorCertificate:
    """Re-verify a claimed expansion against its companion polynomial.

    Checks that P divides the companion exactly; the quotient is the
    co-factor Q.  When deg Q is small enough the Mobius/Routh disk test
    is run with a rational radius slightly above the golden ratio, which
    every true co-factor must pass.  Raises VerificationError on failure.
    """
    poly = _as_poly(P)
    comp = digits_to_companion(expansion.digits, expansion.m, expansion.p)
    try:
        q = divexact(comp.poly, poly)
    except InexactDivision:
        raise VerificationError("companion polynomial is not divisible by P")
    checked = False
    if 0 < q.degree <= disk_degree_cap:
        from .cofactor import disk_filter

        if not disk_filter(q, disk_k):
            raise VerificationError("co-factor has a root outside radius %s"
                                    % disk_k)
        checked = True
    return CofactorCertificate(companion=comp, cofactor=q,
                               disk_checked=checked)


# ---------------------------------------------------------------------------
# checkpoint files
# ---------------------------------------------------------------------------


def open_state_file(path, engine: Engine):
    """Open `path` for writing and register it as the engine's checkpoint
    sink.  The header pins the polynomial and run parameters so a resume
    cannot silently mix runs.  Caller owns the handle."""
    fh = open(path, "w")
    fh.write(CKPT_HEADER + "\n")
    fh.write("P %s\n" % " ".join(map(str, engine.poly.coeffs)))
    fh.write("interval %d\n" % engine.interval)
    fh.write("eps %s\n" % engine.eps)
    fh.flush()
    engine._sink = fh
    return fh


def load_state_file(path):
    """Parse a checkpoint file into (poly, interval, eps, checkpoints,
    records).

    checkpoints maps index -> state tuple; records is the (n, L) list in
    file order.  Unknown lines are rejected: resuming from a damaged file
    must fail loudly, not quietly recompute.
    """
    with open(path) as fh:
        lines = [ln.rstrip("\n") for ln in fh if ln.strip()]
    if not lines or lines[0] != CKPT_HEADER:
        raise VerificationError("not a checkpoint file (bad header)")
    poly = None
    interval = None
    eps = None
    checkpoints = {}
    records = []
    for ln in lines[1:]:
        parts = ln.split()
        tag = parts[0]
        if tag == "P":
            poly = IntPoly([int(t) for t in parts[1:]])
        elif tag == "interval":
            interval = int(parts[1])
        elif tag == "eps":
            eps = Fraction(parts[1])
        elif tag == "ckpt":
            checkpoints[int(parts[1])] = tuple(int(t) for t in parts[2:])
        elif tag == "record":
            records.append((int(parts[1]), int(parts[2])))
        else:
            raise VerificationError("unknown checkpoint line %r" % ln)
    if poly is None or interval is None:
        raise VerificationError("checkpoint file is missing its preamble")
    for idx, state in checkpoints.items():
        if len(state) != poly.degree:
            raise VerificationError("checkpoint %d has wrong width" % idx)
        if idx % interval:
            raise VerificationError("checkpoint %d off the grid" % idx)
    return poly, interval, eps, checkpoints, records


def resume_engine(path, eps=None, head_digits=0):
    """Rebuild an Engine positioned at the newest checkpoint of `path`.

    The resumed run appends to the same file and produces bit-identical
    states and checkpoint lines from that index on; digits before the
    resume point are recoverable by replay, not stored.  Returns
    (engine, file_handle); the caller closes the handle.
    """
    poly, interval, file_eps, checkpoints, records = load_state_file(path)
    eng = Engine(poly, eps=eps if eps is not None else file_eps,
                 checkpoint_interval=interval, head_digits=head_digits)
    newest = max(checkpoints, default=0)
    if newest:
        eng.n = newest
        eng.b = list(checkpoints[newest])
        eng.checkpoints.update(checkpoints)
        eng.snapshots.update(checkpoints)
        eng._recent_idx = newest
        eng._recent = list(eng.b)
        # the geometric anchor restarts at the resume point; that only
        # delays detection, never corrupts it
        eng._geo_idx = newest
        eng._geo = list(eng.b)
    if records:
        # record lines are emitted with every checkpoint, so the newest
        # one is the exact historical maximum as of the resume state
        kept = [records[0]]
        for pair in records[1:]:
            if pair[1] > kept[-1][1]:
                kept.append(pair)
        eng.record = kept[-1]
        eng.records = kept
        eng._written_record = records[-1]
    fh = open(path, "a")
    eng._sink = fh
    return eng, fh
