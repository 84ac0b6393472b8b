"""Ehrhart polynomials from delta-vectors, and the ``g`` factor of the
two-term family ``binom(d+n, d) + m binom(d+n-k, d)``.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import ArgumentError, IdentityMismatchError
from .lattice import DeltaVector, check_theorem_params, delta_vector, theorem_simplex
from .polynomial import RationalPolynomial, binomial_poly


def ehrhart_from_delta(dv) -> RationalPolynomial:
    """``sum_i delta_i * binom(n + d - i, d)``."""
    if not isinstance(dv, DeltaVector):
        dv = DeltaVector(dv)
    d = dv.dim
    p = RationalPolynomial()
    for i, delta in enumerate(dv):
        if delta:
            p = p + binomial_poly(d - i, d) * delta
    return p


def theorem_delta(m: int, d: int, k: int) -> DeltaVector:
    """The delta-vector ``(1, 0, ..., m at k, ..., 0)`` of length ``d + 1``."""
    check_theorem_params(m, d, k)
    entries = [0] * (d + 1)
    entries[0] = 1
    entries[k] += m
    return DeltaVector(entries)


def theorem_ehrhart(m: int, d: int, k: int) -> RationalPolynomial:
    return ehrhart_from_delta(theorem_delta(m, d, k))


def g_polynomial(m: int, d: int, k: int) -> RationalPolynomial:
    """``prod_{j=d-k+1}^{d} (n + j) + m prod_{j=0}^{k-1} (n - j)``; degree k, leading m+1."""
    check_theorem_params(m, d, k)
    rising = RationalPolynomial.product(RationalPolynomial.linear(j) for j in range(d - k + 1, d + 1))
    falling = RationalPolynomial.product(RationalPolynomial.linear(-j) for j in range(k))
    return rising + falling * m


def trivial_factor(d: int, k: int) -> RationalPolynomial:
    """``prod_{j=1}^{d-k} (n + j)``, the part of f with roots -1, ..., -(d-k)."""
    return RationalPolynomial.product(RationalPolynomial.linear(j) for j in range(1, d - k + 1))


def factor_check(m: int, d: int, k: int) -> bool:
    """Check ``d! * i(P, n) == prod_{j<=d-k}(n+j) * g(n)`` exactly.

    The left side comes from the delta-vector actually enumerated on the
    constructed simplex, so this exercises the whole lattice pipeline.
    Raises :class:`IdentityMismatchError` with both sides attached on failure.
    """
    check_theorem_params(m, d, k)
    lhs = ehrhart_from_delta(delta_vector(theorem_simplex(m, d, k))) * math.factorial(d)
    rhs = trivial_factor(d, k) * g_polynomial(m, d, k)
    if lhs != rhs:
        raise IdentityMismatchError(f"factorization fails for (m, d, k) = ({m}, {d}, {k})", lhs, rhs)
    return True


def generating_function_check(m: int, d: int, k: int, n_terms: int) -> bool:
    """Compare the Ehrhart series with ``(1 + m t^k) / (1 - t)^(d+1)`` term by term.

    The left side evaluates the Ehrhart polynomial at n = 0, 1, ...; the right
    side builds ``1/(1-t)^(d+1)`` by ``d + 1`` rounds of prefix sums, so no
    binomial formula is shared between the two.
    """
    check_theorem_params(m, d, k)
    if n_terms < d + k + 2:
        raise ArgumentError(f"n_terms >= d + k + 2 = {d + k + 2} is violated (n_terms={n_terms})")
    ehr = theorem_ehrhart(m, d, k)
    lhs = [ehr(n) for n in range(n_terms)]

    series = [1] + [0] * (n_terms - 1)
    for _ in range(d + 1):
        acc = 0
        for i, c in enumerate(series):
            acc += c
            series[i] = acc
    numerator = [0] * n_terms
    numerator[0] = 1
    if k < n_terms:
        numerator[k] += m
    rhs = [sum(numerator[j] * series[i - j] for j in range(i + 1)) for i in range(n_terms)]
    if lhs != rhs:
        raise IdentityMismatchError(f"series mismatch for (m, d, k) = ({m}, {d}, {k})", lhs, rhs)
    return True


def discriminant_quadratic(m: int, d: int) -> Fraction:
    """Discriminant of ``g_{m,d,2}(n) = (m+1) n^2 + (2d - m - 1) n + d(d-1)``."""
    return Fraction((2 * d - m - 1) ** 2 - 4 * (m + 1) * d * (d - 1))


def quadratic_complex_real_part(m: int, d: int) -> Fraction:
    """Common real part ``-d/(m+1) + 1/2`` of the roots of ``g_{m,d,2}``.

    Only meaningful when the discriminant is negative.
    """
    return Fraction(-d, m + 1) + Fraction(1, 2)
