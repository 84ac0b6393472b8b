"""Exact univariate polynomials over Q in the dilation variable ``n``."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable


def _frac(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact coefficients")
    return Fraction(x)


@dataclass(frozen=True)
class RationalPolynomial:
    """Coefficients in ascending degree, trailing zeros stripped.

    The zero polynomial has ``coeffs == ()`` and degree ``-1``.
    """

    coeffs: tuple

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c) -> "RationalPolynomial":
        return cls([c])

    @classmethod
    def linear(cls, root_shift) -> "RationalPolynomial":
        """``n + root_shift``."""
        return cls([root_shift, 1])

    @classmethod
    def from_roots(cls, roots, leading=1) -> "RationalPolynomial":
        p = cls([leading])
        for r in roots:
            p = p * cls([-_frac(r), 1])
        return p

    @classmethod
    def product(cls, factors) -> "RationalPolynomial":
        p = cls([1])
        for f in factors:
            p = p * f
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return RationalPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero or other.is_zero:
            return RationalPolynomial()
        a, da = _scaled(self.coeffs)
        b, db = _scaled(other.coeffs)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        den = da * db
        return RationalPolynomial(Fraction(c, den) for c in out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        s = _frac(scalar)
        return RationalPolynomial(c / s for c in self.coeffs)

    def shift(self, s) -> "RationalPolynomial":
        """``p(n + s)`` by repeated synthetic division (Taylor shift)."""
        s = _frac(s)
        c = list(reversed(self.coeffs))
        deg = len(c) - 1
        for i in range(deg):
            for j in range(1, deg - i + 1):
                c[j] += s * c[j - 1]
        return RationalPolynomial(reversed(c))

    def reflect(self) -> "RationalPolynomial":
        """``p(-n)``."""
        return RationalPolynomial(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def integer_coefficients(self) -> list[int]:
        """Ascending integer coefficients of a positive multiple of ``p``."""
        ints, _ = _scaled(self.coeffs)
        g = 0
        for x in ints:
            g = math.gcd(g, x)
        return [x // g for x in ints] if g > 1 else ints

    def to_dict(self) -> dict:
        return {"coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "RationalPolynomial":
        return cls(Fraction(c) for c in json.loads(text)["coeffs"])

    def __repr__(self):
        if self.is_zero:
            return "RationalPolynomial(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" + ("" if i == 0 else "*n" if i == 1 else f"*n^{i}"))
        return "RationalPolynomial(" + " + ".join(terms) + ")"


def _scaled(coeffs):
    """Integers ``c_i * den`` and the common denominator ``den``."""
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def _coerce(x) -> RationalPolynomial:
    if isinstance(x, RationalPolynomial):
        return x
    return RationalPolynomial([x])


N = RationalPolynomial([0, 1])


def binomial_poly(a: int, d: int) -> RationalPolynomial:
    """``binom(n + a, d)`` as a polynomial in ``n``."""
    p = RationalPolynomial.product(RationalPolynomial.linear(a - t) for t in range(d))
    return p / math.factorial(d)


def cauchy_bound(p: RationalPolynomial) -> Fraction:
    """``1 + max |a_i / a_deg|``; every root lies strictly inside this radius."""
    if p.degree < 1:
        raise ValueError("Cauchy bound needs a polynomial of degree >= 1")
    lead = abs(p.leading)
    return 1 + max(abs(c) for c in p.coeffs[:-1]) / lead


def _iroot_ceil(x: int, k: int) -> int:
    """Smallest integer ``r >= 0`` with ``r**k >= x``."""
    if x <= 0:
        return 0
    lo, hi = 0, 1 << (x.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**k >= x:
            hi = mid
        else:
            lo = mid + 1
    return lo


def fujiwara_bound(p: RationalPolynomial, scale_bits: int = 16) -> Fraction:
    """Rational upper bound on ``2 max |a_{d-i}/a_d|^(1/i)`` (last term halved).

    Every root satisfies ``|z| <= bound``; the radicals are rounded upward on
    a grid of ``2**-scale_bits``, so the result stays rigorous.
    """
    if p.degree < 1:
        raise ValueError("Fujiwara bound needs a polynomial of degree >= 1")
    d = p.degree
    lead = abs(p.leading)
    scale = 1 << scale_bits
    best = Fraction(0)
    for i in range(1, d + 1):
        q = abs(p.coeffs[d - i]) / lead
        if i == d:
            q /= 2
        if q == 0:
            continue
        # ceil((q * scale**i) ** (1/i)) / scale >= q ** (1/i)
        num = -((-q.numerator * scale**i) // q.denominator)
        best = max(best, Fraction(_iroot_ceil(num, i), scale))
    return 2 * best


def root_radius_bound(p: RationalPolynomial) -> Fraction:
    return min(cauchy_bound(p), fujiwara_bound(p))
