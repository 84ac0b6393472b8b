"""Reproduction checks for the published claims, one function per claim.

Each check returns ``(expected, computed, ok)`` as short strings plus a bool;
:func:`run` times them and collects :class:`ClaimResult` rows.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .conjecture import analyze_cell, check_conjecture, scan
from .ehrhart import (
    discriminant_quadratic,
    ehrhart_from_delta,
    factor_check,
    g_polynomial,
    generating_function_check,
    quadratic_complex_real_part,
)
from .lattice import (
    count_dilate_points,
    count_interior_dilate_points,
    delta_vector,
    family_simplex,
    normalized_volume,
    theorem_simplex,
)
from .polynomial import RationalPolynomial
from .roots import find_roots, full_ehrhart_roots
from .routh import Stability, certify_max_real_part

EXAMPLE_ROOTS = [
    (14.37537447, 25.02096544),
    (-0.77681486, 10.23552765),
    (-2.56596317, 4.52757516),
    (-3.03259644, 1.31223697),
]


@dataclass(frozen=True)
class ClaimResult:
    name: str
    expected: str
    computed: str
    ok: bool
    seconds: float


def _example_roots(quick):
    roots = find_roots(g_polynomial(9, 15, 8))
    targets = [complex(a, s * b) for a, b in EXAMPLE_ROOTS for s in (1, -1)]
    worst = 0.0
    for t in targets:
        z = min(roots.roots, key=lambda r: abs(complex(r) - t))
        z = complex(z)
        worst = max(worst, abs(z.real - t.real), abs(z.imag - t.imag))
    return "8 roots within 1e-6", f"max deviation {worst:.2e}", len(roots) == 8 and worst < 1e-6


def _certified_interval(quick):
    b = certify_max_real_part(g_polynomial(9, 15, 8), Fraction(1, 10))
    verdicts = tuple(w.verdict for w in b.witness)
    ok = (
        b.lo >= Fraction(143, 10)
        and b.hi <= Fraction(144, 10)
        and verdicts == (Stability.NOT_ALL_NEGATIVE, Stability.ALL_NEGATIVE)
    )
    return "14.3 <= Re < 14.4", f"[{b.lo}, {b.hi})", ok


def _threshold(quick):
    statuses = [analyze_cell(m, 15, 8).status for m in range(1, 10)]
    ok = statuses[:8] == ["pass"] * 8 and statuses[8] == "violation"
    return "m<=8 pass, m=9 violates", ",".join(s[0] for s in statuses), ok


def _scan(quick):
    top = 40 if quick else 100
    reports = scan([9], range(15, top + 1), "half")
    missing = [r.d for r in reports if not r.violates]
    no_exceed = [r.d for r in reports if r.d >= 17 and not r.exceeds_d]
    ok = not missing and not no_exceed and len(reports) == top - 14
    return (
        f"violation for d=15..{top}, Re>d for d>=17",
        f"non-violating {missing or 'none'}, not exceeding d {no_exceed or 'none'}",
        ok,
    )


def _growth(quick):
    targets = [(30, 59), (50, 174)] + ([] if quick else [(100, 722)])
    got = []
    ok = True
    for d, approx in targets:
        x = full_ehrhart_roots(9, d, (d + 1) // 2).max_real_part
        got.append(f"d={d}: {x:.2f}")
        ok = ok and abs(x - approx) <= 1.0
    return ", ".join(f"~{a}" for _, a in targets), "; ".join(got), ok


def _second_counterexample(quick):
    r = analyze_cell(2, 37, 19)
    return "violation", f"{r.status} (max Re {r.max_real_part:.4f})", r.violates


def _m1_line(quick):
    worst = 0.0
    symmetric = True
    for d in range(2, 31):
        for k in range(1, (d + 1) // 2 + 1):
            g = g_polynomial(1, d, k)
            line = (-d + k - 1) / 2
            roots = find_roots(g)
            worst = max(worst, max(abs(x - line) for x in roots.real_parts))
            reflected = g.reflect().shift(d - k + 1)
            symmetric = symmetric and reflected == g * (-1) ** k
    return "|Re - (k-d-1)/2| < 1e-8, exact symmetry", f"max {worst:.1e}, symmetric={symmetric}", worst < 1e-8 and symmetric


def _construction(quick):
    bad = []
    for m in range(1, 11):
        for d in range(2, 10):
            for k in range(1, (d + 1) // 2 + 1):
                s = theorem_simplex(m, d, k)
                expected = [0] * (d + 1)
                expected[0] = 1
                expected[k] = m
                dv = delta_vector(s)
                ehr = ehrhart_from_delta(dv)
                ok = list(dv.entries) == expected and dv.volume == normalized_volume(s)
                for n in range(1, 4):
                    ok = ok and count_dilate_points(s, n) == ehr(n)
                    ok = ok and count_interior_dilate_points(s, n) == (-1) ** d * ehr(-n)
                if not ok:
                    bad.append((m, d, k))
    return "delta, volume, dilates, reciprocity", f"failures: {bad or 'none'}", not bad


def _identities(quick):
    bad = []
    for m in range(1, 11):
        for d in range(2, 21):
            top = (d + 1) // 2
            for k in range(1, top + 1):
                try:
                    factor_check(m, d, k)
                    generating_function_check(m, d, k, d + k + 2)
                except AssertionError:
                    bad.append((m, d, k))
            if g_polynomial(m, d, 1) != RationalPolynomial([d, m + 1]):
                bad.append((m, d, "k=1 form"))
            if top >= 2:
                g2 = RationalPolynomial([d * (d - 1), 2 * d - m - 1, m + 1])
                if g_polynomial(m, d, 2) != g2:
                    bad.append((m, d, "k=2 form"))
                if discriminant_quadratic(m, d) < 0:
                    re = -Fraction(2 * d - m - 1, 2 * (m + 1))
                    if re != quadratic_complex_real_part(m, d):
                        bad.append((m, d, "k=2 real part"))
    return "all identities exact", f"failures: {bad or 'none'}", not bad


def _family_volume(quick):
    s = family_simplex(9, 15)
    dv = delta_vector(s)
    ok = normalized_volume(s) == 10 and dv[8] == 9 and dv.volume == 10
    return "vol=10, delta_8=9", f"vol={normalized_volume(s)}, delta_8={dv[8]}", ok


def _linear_root(quick):
    worst = 0.0
    passes = True
    for m in range(1, 6):
        for d in range(2, 12):
            (z,) = find_roots(g_polynomial(m, d, 1)).roots
            worst = max(worst, abs(complex(z) - (-d / (m + 1))))
            passes = passes and not check_conjecture(full_ehrhart_roots(m, d, 1), d).violates
    return "root -d/(m+1), inside the strip", f"max deviation {worst:.1e}, inside={passes}", worst < 1e-12 and passes


CLAIMS = {
    "example-roots": _example_roots,
    "certified-interval": _certified_interval,
    "threshold": _threshold,
    "scan": _scan,
    "growth": _growth,
    "second-counterexample": _second_counterexample,
    "m1-line": _m1_line,
    "construction": _construction,
    "identities": _identities,
    "family-volume": _family_volume,
    "linear-root": _linear_root,
}


def run(names=None, quick=False) -> list[ClaimResult]:
    out = []
    for name in names or CLAIMS:
        start = time.perf_counter()
        try:
            expected, computed, ok = CLAIMS[name](quick)
        except Exception as exc:  # reported as a failed claim, not a crash
            expected, computed, ok = "no error", f"{type(exc).__name__}: {exc}", False
        out.append(ClaimResult(name, expected, computed, bool(ok), time.perf_counter() - start))
    return out


def format_table(results) -> str:
    # timings stay on ClaimResult so that repeated runs print identical tables
    rows = [("claim", "expected", "computed", "status")]
    for r in results:
        rows.append((r.name, r.expected, r.computed, "PASS" if r.ok else "FAIL"))
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows)
