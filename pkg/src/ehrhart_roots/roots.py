"""Simultaneous (Aberth-Ehrlich) root finding at arbitrary precision.

The iteration starts from a fixed circular configuration in ordinary complex
floats, which is cheap and usually lands close to every root; the iterate is
then carried to the working precision with mpmath, finished by Aberth steps
there and polished by Newton.  Every step uses fixed constants and a fixed
update order, so results are bit-reproducible at a given precision.
"""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass, field

import mpmath

from .ehrhart import g_polynomial, theorem_ehrhart
from .errors import NonConvergenceError
from .lattice import check_theorem_params
from .polynomial import RationalPolynomial

DEFAULT_PRECISION = int(os.environ.get("EHRHART_ROOTS_PRECISION", "256"))
DEFAULT_TOLERANCE = 1e-12
START_ANGLE = 0.4
FLOAT_ITERATIONS = 400
MP_ITERATIONS = 200
NEWTON_STEPS = 2


@dataclass(frozen=True)
class RootSettings:
    precision_bits: int = DEFAULT_PRECISION
    tolerance: float = DEFAULT_TOLERANCE
    max_iterations: int = MP_ITERATIONS

    def __post_init__(self):
        if self.precision_bits < 53:
            raise ValueError("precision_bits must be at least 53")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be positive")


@dataclass(frozen=True)
class ComplexRootSet:
    """Roots as mpmath ``mpc`` values, sorted by descending real part then
    descending imaginary part.

    ``residuals[i]`` is ``|p(z_i)| / sum_j |a_j| |z_i|^j``; ``steps[i]`` is the
    size of the last Newton correction, used as a forward error estimate.
    """

    roots: tuple
    residuals: tuple
    working_precision: int
    steps: tuple = ()
    polynomial: RationalPolynomial | None = field(default=None, compare=False)

    def __len__(self):
        return len(self.roots)

    @property
    def real_parts(self) -> list[float]:
        return [float(z.real) for z in self.roots]

    @property
    def max_real_part(self) -> float:
        return max(self.real_parts)

    @property
    def min_real_part(self) -> float:
        return min(self.real_parts)

    def error_estimate(self, i: int) -> float:
        step = self.steps[i] if self.steps else 0.0
        return max(step, self.residuals[i] * max(1.0, abs(complex(self.roots[i]))))

    def to_dict(self) -> dict:
        return {
            "roots": [
                {"re": float(z.real), "im": float(z.imag), "residual": float(r)}
                for z, r in zip(self.roots, self.residuals)
            ],
            "precision_bits": self.working_precision,
        }


def _horner(coeffs_desc, z):
    p = coeffs_desc[0]
    dp = 0
    for c in coeffs_desc[1:]:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _start_points(coeffs_desc, n):
    lead = abs(coeffs_desc[0])
    # Fujiwara radius; the float version only seeds the iteration
    radius = 0.0
    for i in range(1, n + 1):
        a = abs(coeffs_desc[i]) / lead
        if i == n:
            a /= 2
        if a:
            radius = max(radius, a ** (1.0 / i))
    radius = 2 * radius or 1.0
    return [radius * cmath.exp(1j * (2 * math.pi * k / n + START_ANGLE)) for k in range(n)]


def _aberth(coeffs_desc, z, max_iter, unit_roundoff, absval):
    """Gauss-Seidel Aberth sweeps in place.

    A root is frozen once ``|p(z)|`` is within the Horner rounding-error
    bound ``4 n u sum |a_j| |z|^j``; returns True when every root is frozen.
    """
    n = len(z)
    abs_coeffs = [absval(c) for c in coeffs_desc]
    tol = 4 * n * unit_roundoff
    done = [False] * n
    for _ in range(max_iter):
        for i in range(n):
            if done[i]:
                continue
            zi = z[i]
            p, dp = _horner(coeffs_desc, zi)
            r = absval(zi)
            scale = abs_coeffs[0]
            for c in abs_coeffs[1:]:
                scale = scale * r + c
            if absval(p) <= tol * scale:
                done[i] = True
                continue
            s = 0
            for j in range(n):
                if j != i:
                    s += 1 / (zi - z[j])
            if dp == 0:
                w = 1 / s if s != 0 else tol * (1 + r)
            else:
                ratio = p / dp
                w = ratio / (1 - ratio * s)
            z[i] = zi - w
        if all(done):
            return True
    return False


def _float_stage(coeffs, n):
    try:
        fc = [complex(float(c)) for c in coeffs]
    except OverflowError:
        return None
    z = _start_points(fc, n)
    try:
        _aberth(fc, z, FLOAT_ITERATIONS, 2.0**-53, abs)
    except (OverflowError, ZeroDivisionError):
        return None
    if not all(math.isfinite(x.real) and math.isfinite(x.imag) for x in z):
        return None
    if len({(x.real, x.imag) for x in z}) < n:
        return None
    return z


def find_roots(
    p: RationalPolynomial,
    precision_bits: int = DEFAULT_PRECISION,
    tolerance: float = DEFAULT_TOLERANCE,
    max_iterations: int = MP_ITERATIONS,
) -> ComplexRootSet:
    """All complex roots of ``p`` with multiplicity.

    Raises :class:`NonConvergenceError` (carrying the best iterate) when some
    relative residual stays above ``tolerance``.
    """
    if p.degree < 1:
        raise ValueError("find_roots needs a polynomial of degree >= 1")
    n = p.degree
    ctx = mpmath.MPContext()
    ctx.prec = precision_bits
    coeffs = [ctx.mpf(c.numerator) / c.denominator for c in reversed(p.coeffs)]
    if n == 1:
        z = [-coeffs[1] / coeffs[0]]
        z = [ctx.mpc(z[0], 0)]
    else:
        seed = _float_stage(p.coeffs[::-1], n)
        if seed is None:
            seed = _start_points([complex(float(c)) for c in coeffs], n)
        z = [ctx.mpc(x.real, x.imag) for x in seed]
        _aberth(coeffs, z, max_iterations, ctx.mpf(2) ** -precision_bits, ctx.fabs)

    for i in range(n):
        for _ in range(NEWTON_STEPS):
            val, dval = _horner(coeffs, z[i])
            if val == 0 or dval == 0:
                break
            z[i] -= val / dval

    z = _pair_conjugates(ctx, z, precision_bits)
    z.sort(key=lambda x: (-x.real, -x.imag))
    residuals = [_relative_residual(ctx, coeffs, x) for x in z]
    steps = [_newton_step(ctx, coeffs, x) for x in z]
    if max(residuals) > tolerance:
        raise NonConvergenceError(
            f"max relative residual {max(residuals):.3e} exceeds tolerance {tolerance:.1e}",
            roots=z,
            residuals=residuals,
        )
    return ComplexRootSet(tuple(z), tuple(residuals), precision_bits, tuple(steps), p)


def _newton_step(ctx, coeffs, z) -> float:
    val, dval = _horner(coeffs, z)
    if val == 0:
        return 0.0
    if dval == 0:
        return math.inf
    return float(ctx.fabs(val / dval))


def _relative_residual(ctx, coeffs, z) -> float:
    val, _ = _horner(coeffs, z)
    r = ctx.fabs(z)
    scale = ctx.mpf(0)
    for c in coeffs:
        scale = scale * r + ctx.fabs(c)
    if scale == 0:
        return 0.0
    return float(ctx.fabs(val) / scale)


def _pair_conjugates(ctx, z, precision_bits):
    """Make the root multiset exactly closed under conjugation."""
    thresh = ctx.mpf(2) ** (-(precision_bits // 2))
    real, upper, lower = [], [], []
    for x in z:
        scale = max(ctx.mpf(1), ctx.fabs(x))
        if ctx.fabs(x.imag) <= thresh * scale:
            real.append(ctx.mpc(x.real, 0))
        elif x.imag > 0:
            upper.append(x)
        else:
            lower.append(x)
    if len(upper) != len(lower):
        # a near-real pair straddled the threshold; fold the odd ones out
        extra = sorted(upper + lower, key=lambda x: ctx.fabs(x.imag))
        while len(upper) != len(lower):
            x = extra.pop(0)
            (upper if x in upper else lower).remove(x)
            real.append(ctx.mpc(x.real, 0))
    out = list(real)
    remaining = list(lower)
    for u in sorted(upper, key=lambda x: (x.real, x.imag)):
        best = min(range(len(remaining)), key=lambda j: ctx.fabs(u - ctx.conj(remaining[j])))
        l = remaining.pop(best)
        m = (u + ctx.conj(l)) / 2
        out.append(m)
        out.append(ctx.conj(m))
    return out


def full_ehrhart_roots(m: int, d: int, k: int, settings: RootSettings | None = None) -> ComplexRootSet:
    """Roots of ``binom(d+n, d) + m binom(d+n-k, d)``.

    Only the degree-k factor ``g`` is solved numerically; the integer roots
    ``-1, ..., -(d-k)`` are adjoined exactly.
    """
    check_theorem_params(m, d, k)
    settings = settings or RootSettings()
    g = find_roots(g_polynomial(m, d, k), settings.precision_bits, settings.tolerance, settings.max_iterations)
    ctx = mpmath.MPContext()
    ctx.prec = settings.precision_bits
    ints = [ctx.mpc(-j, 0) for j in range(1, d - k + 1)]
    roots = list(g.roots) + ints
    residuals = list(g.residuals) + [0.0] * len(ints)
    steps = list(g.steps) + [0.0] * len(ints)
    order = sorted(range(len(roots)), key=lambda i: (-roots[i].real, -roots[i].imag))
    return ComplexRootSet(
        tuple(roots[i] for i in order),
        tuple(residuals[i] for i in order),
        settings.precision_bits,
        tuple(steps[i] for i in order),
        theorem_ehrhart(m, d, k),
    )
