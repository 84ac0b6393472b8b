"""Exact Routh-Hurwitz tests and certified bounds on the largest real part.

The Routh table is built fraction-free: each new row is scaled by a positive
factor instead of divided by the pivot, then reduced by its content.  Positive
row scalings leave every sign in the first column unchanged, so verdicts are
those of the textbook table over Q.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import CertificationError
from .polynomial import RationalPolynomial, root_radius_bound


class Stability(enum.Enum):
    ALL_NEGATIVE = "AllNegative"
    NOT_ALL_NEGATIVE = "NotAllNegative"
    BOUNDARY = "Boundary"


def _content_reduce(row):
    g = 0
    for x in row:
        g = math.gcd(g, x)
    return [x // g for x in row] if g > 1 else row


def routh_first_column(p: RationalPolynomial) -> list[int]:
    """First column of the Routh table of a positive multiple of ``p``.

    The table stops early at the first zero pivot; that zero is the last
    entry returned.
    """
    if p.degree < 1:
        raise ValueError("Routh table needs a polynomial of degree >= 1")
    a = p.integer_coefficients()[::-1]
    if a[0] < 0:
        a = [-x for x in a]
    n = len(a) - 1
    width = n // 2 + 1
    prev = a[0::2] + [0] * (width - len(a[0::2]))
    cur = a[1::2] + [0] * (width - len(a[1::2]))
    column = [prev[0], cur[0]]
    for _ in range(n - 1):
        if cur[0] == 0:
            return column
        sgn = 1 if cur[0] > 0 else -1
        nxt = [sgn * (cur[0] * prev[j + 1] - prev[0] * cur[j + 1]) for j in range(width - 1)] + [0]
        prev, cur = cur, _content_reduce(nxt)
        column.append(cur[0])
    return column


def routh_hurwitz_strictly_stable(p: RationalPolynomial) -> Stability:
    """Do all roots of ``p`` have strictly negative real part?

    A zero pivot or vanishing row gives ``BOUNDARY`` rather than a guessed
    sign; the epsilon trick is never applied.
    """
    column = routh_first_column(p)
    if any(x == 0 for x in column):
        return Stability.BOUNDARY
    if all(x > 0 for x in column):
        return Stability.ALL_NEGATIVE
    return Stability.NOT_ALL_NEGATIVE


def shifted_verdict(p: RationalPolynomial, s) -> Stability:
    """Verdict for ``p(n + s)``: ALL_NEGATIVE iff every root has real part < s."""
    return routh_hurwitz_strictly_stable(p.shift(s))


@dataclass(frozen=True)
class EndpointWitness:
    shift: Fraction
    verdict: Stability

    def to_dict(self):
        return {"shift": _fmt(self.shift), "verdict": self.verdict.value}


@dataclass(frozen=True)
class CertifiedBound:
    """``lo <= max Re(root) < hi``, backed by exact verdicts at both ends."""

    lo: Fraction
    hi: Fraction
    polynomial: RationalPolynomial
    witness: tuple

    def contains(self, x) -> bool:
        return self.lo <= x < self.hi

    def to_dict(self) -> dict:
        return {
            "lo": _fmt(self.lo),
            "hi": _fmt(self.hi),
            "lo_float": float(self.lo),
            "hi_float": float(self.hi),
            "witness": [w.to_dict() for w in self.witness],
            "polynomial": self.polynomial.to_dict(),
        }


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def _floor(q: Fraction) -> int:
    return q.numerator // q.denominator


def certify_max_real_part(
    p: RationalPolynomial,
    width,
    bracket=None,
    max_retries: int = 12,
) -> CertifiedBound:
    """Bracket the largest real part of the roots of ``p`` to within ``width``.

    Bisection runs over integer multiples of ``width``, so a clean run ends on
    ``[j*width, (j+1)*width)``; halving the width therefore only ever refines
    the interval.  An optional numeric ``bracket = (lo, hi)`` seeds the search;
    it is used only if both endpoints verify exactly, otherwise the
    bracket ``[-1 - R, 1 + R]`` is used, with R the smaller of the
    Cauchy and Fujiwara root radius bounds.  When a midpoint lands on a Boundary
    verdict it is nudged by ``width / 2**(t+3)`` with alternating sign until a
    definite verdict appears.
    """
    if p.degree < 1:
        raise ValueError("certification needs a polynomial of degree >= 1")
    w = Fraction(width)
    if w <= 0:
        raise ValueError("width must be positive")

    def verdict(u):
        return shifted_verdict(p, u * w)

    lo_u = hi_u = None
    if bracket is not None:
        try:
            a, b = Fraction(bracket[0]), Fraction(bracket[1])
        except (TypeError, ValueError, OverflowError):
            a = b = None
        if a is not None and a < b:
            ca, cb = _floor(a / w), _ceil(b / w)
            if cb == ca:
                cb += 1
            if verdict(ca) is Stability.NOT_ALL_NEGATIVE and verdict(cb) is Stability.ALL_NEGATIVE:
                lo_u, hi_u = Fraction(ca), Fraction(cb)
    if lo_u is None:
        c = root_radius_bound(p)
        lo_u, hi_u = Fraction(_floor((-1 - c) / w)), Fraction(_ceil((1 + c) / w))
        if verdict(lo_u) is not Stability.NOT_ALL_NEGATIVE or verdict(hi_u) is not Stability.ALL_NEGATIVE:
            raise CertificationError("Cauchy bracket failed to verify")

    while hi_u - lo_u > 1:
        if lo_u.denominator == 1 and hi_u.denominator == 1:
            mid = Fraction((lo_u.numerator + hi_u.numerator) // 2)
        else:
            mid = (lo_u + hi_u) / 2
        v = verdict(mid)
        t = 0
        while v is Stability.BOUNDARY:
            if t >= max_retries:
                raise CertificationError(f"Boundary verdict persisted near shift {float(mid * w)}")
            step = Fraction(1, 2 ** (t + 3)) * (1 if t % 2 == 0 else -1)
            cand = mid + step
            t += 1
            if lo_u < cand < hi_u:
                v = verdict(cand)
                if v is not Stability.BOUNDARY:
                    mid = cand
        if v is Stability.ALL_NEGATIVE:
            hi_u = mid
        else:
            lo_u = mid

    lo, hi = lo_u * w, hi_u * w
    witness = (
        EndpointWitness(lo, shifted_verdict(p, lo)),
        EndpointWitness(hi, shifted_verdict(p, hi)),
    )
    return CertifiedBound(lo, hi, p, witness)
