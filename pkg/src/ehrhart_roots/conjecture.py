"""Checking roots against the strip ``-d <= Re <= d - 1`` and scanning the
``(m, d, k)`` family for roots outside it.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .ehrhart import g_polynomial
from .errors import EhrhartError
from .roots import ComplexRootSet, RootSettings, full_ehrhart_roots
from .routh import CertifiedBound, Stability, certify_max_real_part, routh_hurwitz_strictly_stable

PASS = "pass"
VIOLATION = "violation"
INCONCLUSIVE = "inconclusive"
FAILED = "error"

GUARD_FACTOR = 10


@dataclass(frozen=True)
class ViolationReport:
    m: int | None
    d: int
    k: int | None
    status: str
    max_real_part: float | None = None
    min_real_part: float | None = None
    violating_roots: tuple = ()
    exceeds_d: bool = False
    certified: CertifiedBound | None = None
    message: str = ""

    @property
    def violates(self) -> bool:
        return self.status == VIOLATION

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "d": self.d,
            "k": self.k,
            "status": self.status,
            "max_real_part": self.max_real_part,
            "min_real_part": self.min_real_part,
            "violating_roots": [{"re": float(z.real), "im": float(z.imag)} for z in self.violating_roots],
            "exceeds_d": self.exceeds_d,
            "certified": self.certified.to_dict() if self.certified else None,
            "message": self.message,
        }


def _outside(roots: ComplexRootSet, threshold: int, above: bool):
    """Roots with Re > threshold (``above``) or Re < threshold.

    Returns ``(roots, decided)``; ``decided`` is False when a root within the
    guard band could not be settled exactly.
    """
    clear, near = [], []
    for i, z in enumerate(roots.roots):
        x = float(z.real)
        guard = GUARD_FACTOR * roots.error_estimate(i)
        gap = x - threshold if above else threshold - x
        if gap > guard:
            clear.append(z)
        elif gap >= -guard:
            near.append(z)
    if not near:
        return clear, True
    if roots.polynomial is None:
        return clear, False
    p = roots.polynomial
    # Re(z) > t  <=>  q(n) = p(n + t) has a root in the open right half plane;
    # for the lower side reflect: Re(z) < t  <=>  p(-(n - t)) does
    q = p.shift(threshold) if above else p.reflect().shift(-threshold)
    verdict = routh_hurwitz_strictly_stable(q)
    if verdict is Stability.BOUNDARY:
        return clear, False
    if verdict is Stability.ALL_NEGATIVE:
        return clear, True
    return clear + (near if not clear else []), True


def check_conjecture(
    roots: ComplexRootSet,
    d: int,
    *,
    m: int | None = None,
    k: int | None = None,
) -> ViolationReport:
    """Flag roots with ``Re < -d`` or ``Re > d - 1``.

    Roots inside the guard band ``GUARD_FACTOR * error`` of a boundary are
    settled by an exact Routh verdict on the stored polynomial; if that is
    itself undecided the report is INCONCLUSIVE.
    """
    upper, ok_upper = _outside(roots, d - 1, above=True)
    lower, ok_lower = _outside(roots, -d, above=False)
    over_d, ok_d = _outside(roots, d, above=True)
    # plain complex values: private-context mpc objects do not pickle across workers
    bad = tuple(sorted({complex(z) for z in upper + lower}, key=lambda z: (-z.real, -z.imag)))
    if bad:
        status = VIOLATION
    elif ok_upper and ok_lower:
        status = PASS
    else:
        status = INCONCLUSIVE
    return ViolationReport(
        m=m,
        d=d,
        k=k,
        status=status,
        max_real_part=roots.max_real_part,
        min_real_part=roots.min_real_part,
        violating_roots=bad,
        exceeds_d=bool(over_d),
        message="" if ok_d else "exceeds_d undecided within guard band",
    )


def analyze_cell(
    m: int,
    d: int,
    k: int,
    settings: RootSettings | None = None,
    certify_width=None,
) -> ViolationReport:
    """Roots, conjecture verdict and (optionally) a certified bound on the
    largest real part of the nontrivial factor ``g``.
    """
    roots = full_ehrhart_roots(m, d, k, settings)
    report = check_conjecture(roots, d, m=m, k=k)
    if certify_width is not None:
        w = Fraction(certify_width)
        guess = Fraction(roots.max_real_part)
        bound = certify_max_real_part(g_polynomial(m, d, k), w, bracket=(guess - w, guess + w))
        report = _replace(report, certified=bound)
    return report


def _replace(report, **changes):
    data = {f: getattr(report, f) for f in report.__dataclass_fields__}
    data.update(changes)
    return ViolationReport(**data)


def k_values(d: int, policy) -> list[int]:
    """``policy`` is ``"half"`` (k = floor((d+1)/2)), ``"all"``, or an int."""
    top = (d + 1) // 2
    if policy == "half":
        return [top]
    if policy == "all":
        return list(range(1, top + 1))
    return [int(policy)]


def _cell(args):
    m, d, k, settings, width = args
    try:
        return analyze_cell(m, d, k, settings, width)
    except EhrhartError as exc:
        return ViolationReport(m=m, d=d, k=k, status=FAILED, message=str(exc))


def scan(
    m_range,
    d_range,
    k_policy="half",
    settings: RootSettings | None = None,
    certify_width=None,
    workers: int = 1,
) -> list[ViolationReport]:
    """One report per ``(m, d, k)`` cell, sorted by ``(m, d, k)``.

    Failing cells are recorded with status ``"error"`` and the scan goes on.
    """
    settings = settings or RootSettings()
    cells = sorted(
        {(m, d, k) for m in m_range for d in d_range for k in k_values(d, k_policy)}
    )
    jobs = [(m, d, k, settings, certify_width) for m, d, k in cells]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_cell, jobs))
    return [_cell(job) for job in jobs]


CSV_COLUMNS = ["m", "d", "k", "max_real_part", "violates_conjecture", "exceeds_d", "certified_lo", "certified_hi"]


def reports_to_csv(reports) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        cert = r.certified
        writer.writerow([
            r.m,
            r.d,
            r.k,
            "" if r.max_real_part is None else f"{r.max_real_part:.10f}",
            r.status if r.status in (INCONCLUSIVE, FAILED) else str(r.violates).lower(),
            str(r.exceeds_d).lower(),
            "" if cert is None else f"{cert.lo.numerator}/{cert.lo.denominator}",
            "" if cert is None else f"{cert.hi.numerator}/{cert.hi.denominator}",
        ])
    return out.getvalue()
