"""Parametric families of Salem sextics with controlled expansions.

Two one-parameter families are constructed and verified here.  The
bounded-length family (a, a+1, -2), a <= -2 even, keeps m + p = 6 while
the heuristic constant C(beta) grows without bound as a -> -infinity.
The long-period family (a, -2a, 2a-3) with a = -6k-3, k >= 2, has
(m, p) = (1, 8k+6); both its digit word and its co-factor follow
closed-form patterns in k, so the engine output can be checked digit by
digit against an independent prediction.
"""

from dataclasses import dataclass
from decimal import Decimal

from .expansion import (Expansion, LowerBoundReport, VerificationError,
                        digits_to_companion, expand, verify_expansion)
from .intpoly import IntPoly
from .salem import SalemTriple, certify, heuristic_constant

__all__ = [
    "LargePeriodFamily",
    "LargeTraceFamily",
    "PeriodFamilyReport",
    "VariantObservation",
    "large_period_instance",
    "large_trace_instance",
    "scan_family_variants",
    "verify_large_period",
]


# ---------------------------------------------------------------------------
# long-period family: (a, -2a, 2a-3) with a = -6k-3
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LargePeriodFamily:
    """Instance data for the long-period family at parameter k.

    `predicted` is the full expected expansion (head digit 6k, then a
    period of 8k+6 digits) and `cofactor` the expected co-factor, a
    reciprocal polynomial of degree 8k+1.  Neither has been compared
    with the engine yet; that is verify_large_period's job.
    """

    k: int
    triple: SalemTriple
    predicted: Expansion
    cofactor: IntPoly

    @property
    def a(self) -> int:
        return -6 * self.k - 3


def _period_word(k: int) -> list:
    # ascending ramp blocks (6j, 6j, 6j, 6j+3) for j = 1..k-2, then its
    # reverse on the far side; empty when k = 2
    ramp = []
    for j in range(1, k - 1):
        ramp.extend((6 * j, 6 * j, 6 * j, 6 * j + 3))
    s = 6 * (k - 1)
    word = [6 * k - 2, 6 * k, 2]
    word += ramp
    word += [s, s, s, 6 * k - 2]
    word += [0, 2, 1, 1, 2, 0]
    word += [6 * k - 2, s, s, s]
    word += ramp[::-1]
    word += [2, 6 * k, 6 * k - 2, 6 * k - 1, 6 * k - 1]
    return word


def _predicted_cofactor(k: int) -> IntPoly:
    """Reciprocal co-factor of degree 8k+1 for the long-period family.

    The lower-index coefficients climb through the residues 1, 3, 5, 0
    mod 6 in increasing order (1, 3, 5, 6, 7, 9, 11, 12, ...), the two
    middle coefficients are both 6k, and the upper half mirrors the
    lower one.
    """
    ramp = (1, 3, 5, 6)
    half = [6 * (i // 4) + ramp[i % 4] for i in range(4 * k)]
    return IntPoly(half + [6 * k, 6 * k] + half[::-1])


def large_period_instance(k: int) -> LargePeriodFamily:
    """Materialize the predicted expansion and co-factor at parameter k."""
    if k < 2:
        raise ValueError("long-period family needs k >= 2")
    a = -6 * k - 3
    triple = certify(a, -2 * a, 2 * a - 3)
    digits = (6 * k,) + tuple(_period_word(k))
    predicted = Expansion(digits=digits, m=1, p=8 * k + 6)
    return LargePeriodFamily(k=k, triple=triple, predicted=predicted,
                             cofactor=_predicted_cofactor(k))


@dataclass(frozen=True)
class PeriodFamilyReport:
    """Outcome of checking one long-period instance against the engine.

    first_mismatch is the 1-based position of the first digit where the
    engine disagrees with the prediction, or None.  passed requires the
    Salem certificate, the exact (m, p), digit-for-digit agreement, the
    predicted co-factor, and the closed-form interior coefficients of
    the companion product.
    """

    family: LargePeriodFamily
    observed: object
    salem_ok: bool
    shape_ok: bool
    digits_ok: bool
    first_mismatch: object
    cofactor_ok: bool
    interior_ok: bool

    @property
    def passed(self) -> bool:
        return (self.salem_ok and self.shape_ok and self.digits_ok
                and self.cofactor_ok and self.interior_ok)


def _first_digit_mismatch(predicted, observed):
    for i, (want, got) in enumerate(zip(predicted, observed), start=1):
        if want != got:
            return i
    if len(predicted) != len(observed):
        return min(len(predicted), len(observed)) + 1
    return None


def _interior_ok(companion: IntPoly, k: int) -> bool:
    # coefficient of x^i for 6 <= i < 4k: -6(i//4)+3 when 4 | i, else -6(i//4)
    for i in range(6, 4 * k):
        want = -6 * (i // 4) + (3 if i % 4 == 0 else 0)
        if companion.coeffs[i] != want:
            return False
    return True


def verify_large_period(k: int, eps=None) -> PeriodFamilyReport:
    """Run the engine on the k-th instance and compare with the prediction.

    The expansion has length 8k+7, so a few multiples of that is plenty
    of step budget.
    """
    fam = large_period_instance(k)
    kwargs = {} if eps is None else {"eps": eps}
    observed = expand(fam.triple, max_steps=4 * (8 * k + 7) + 64, **kwargs)
    salem_ok = fam.triple.is_salem
    if not isinstance(observed, Expansion):
        return PeriodFamilyReport(family=fam, observed=observed,
                                  salem_ok=salem_ok, shape_ok=False,
                                  digits_ok=False, first_mismatch=None,
                                  cofactor_ok=False, interior_ok=False)
    shape_ok = (observed.m, observed.p) == (1, 8 * k + 6)
    mismatch = _first_digit_mismatch(fam.predicted.digits, observed.digits)
    digits_ok = shape_ok and mismatch is None
    cofactor_ok = False
    interior_ok = False
    if digits_ok:
        cert = verify_expansion(fam.triple, observed)
        cofactor_ok = cert.cofactor == fam.cofactor
        interior_ok = _interior_ok(cert.companion.poly, k)
    return PeriodFamilyReport(family=fam, observed=observed,
                              salem_ok=salem_ok, shape_ok=shape_ok,
                              digits_ok=digits_ok, first_mismatch=mismatch,
                              cofactor_ok=cofactor_ok, interior_ok=interior_ok)


# ---------------------------------------------------------------------------
# bounded-length family: (a, a+1, -2) with a <= -2 even
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LargeTraceFamily:
    a: int
    triple: SalemTriple
    expansion: Expansion
    constant: Decimal

    @property
    def length(self) -> int:
        return self.expansion.m + self.expansion.p


def large_trace_instance(a: int) -> LargeTraceFamily:
    """Certify (a, a+1, -2), expand it, and attach C(beta).

    The recognition cubic x^3 + ax^2 + (a-2)x - (2+2a) has every
    non-leading coefficient even and constant term 2 mod 4, so it is
    irreducible whenever a is even; the rest of the Salem certificate is
    checked numerically.  The expansion always has m + p = 6, which is
    asserted here, while C(beta) grows without bound.
    """
    if a > -2 or a % 2 != 0:
        raise ValueError("bounded-length family needs even a <= -2")
    triple = certify(a, a + 1, -2)
    if not triple.is_salem:
        raise VerificationError("(%d, %d, -2) failed Salem certification" %
                                (a, a + 1))
    got = expand(triple, max_steps=256)
    if not isinstance(got, Expansion) or got.m + got.p != 6:
        raise VerificationError("expected an expansion of length 6 for "
                                "(%d, %d, -2), got %r" % (a, a + 1, got))
    return LargeTraceFamily(a=a, triple=triple, expansion=got,
                            constant=heuristic_constant(a, a + 1, -2))


# ---------------------------------------------------------------------------
# variant scan
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VariantObservation:
    """One engine run for a = -6k + offset; evidence only, no claim."""

    k: int
    a: int
    salem_ok: bool
    observed: object

    @property
    def matches_pattern(self) -> bool:
        return (isinstance(self.observed, Expansion)
                and (self.observed.m, self.observed.p) == (1, 8 * self.k + 6))


def scan_family_variants(k_range, offset: int,
                         max_steps: int = 500_000) -> tuple:
    """Probe the (a, -2a, 2a-3) pattern at a = -6k + offset.

    The closed-form digit word is only proved for offset -3; for -4 and
    -5 this gathers engine observations of whether (m, p) = (1, 8k+6)
    still holds.  Non-Salem parameters are reported with observed=None.
    """
    if offset not in (-4, -5):
        raise ValueError("offset must be -4 or -5")
    rows = []
    for k in k_range:
        a = -6 * k + offset
        triple = certify(a, -2 * a, 2 * a - 3)
        if not triple.is_salem:
            rows.append(VariantObservation(k=k, a=a, salem_ok=False,
                                           observed=None))
            continue
        got = expand(triple, max_steps=max_steps)
        rows.append(VariantObservation(k=k, a=a, salem_ok=True, observed=got))
    return tuple(rows)
