from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ehrhart_roots.ehrhart import g_polynomial, theorem_ehrhart
from ehrhart_roots.errors import NonConvergenceError
from ehrhart_roots.polynomial import N, RationalPolynomial
from ehrhart_roots.roots import ComplexRootSet, RootSettings, find_roots, full_ehrhart_roots

# Published roots of the degree-8 factor for (m, d, k) = (9, 15, 8), upper half plane.
PUBLISHED_ROOTS = [
    (14.37537447, 25.02096544),
    (-0.77681486, 10.23552765),
    (-2.56596317, 4.52757516),
    (-3.03259644, 1.31223697),
]


def test_published_roots():
    rs = find_roots(g_polynomial(9, 15, 8))
    assert len(rs) == 8
    for a, b in PUBLISHED_ROOTS:
        for t in (complex(a, b), complex(a, -b)):
            z = min((complex(r) for r in rs.roots), key=lambda r: abs(r - t))
            assert abs(z.real - t.real) < 1e-6 and abs(z.imag - t.imag) < 1e-6


@pytest.mark.parametrize("m,d", [(1, 2), (3, 7), (9, 20), (50, 100)])
def test_linear_factor_root(m, d):
    rs = find_roots(g_polynomial(m, d, 1))
    assert abs(complex(rs.roots[0]) - (-d / (m + 1))) < 1e-12


def test_gaussian_integers():
    rs = find_roots(N * N + 1)
    assert [complex(z) for z in rs.roots] == pytest.approx([1j, -1j], abs=1e-30)


def test_rejects_constants():
    with pytest.raises(ValueError):
        find_roots(RationalPolynomial([3]))


def test_settings_validation():
    with pytest.raises(ValueError):
        RootSettings(precision_bits=20)
    with pytest.raises(ValueError):
        RootSettings(tolerance=0)


@pytest.mark.parametrize("mdk", [(9, 15, 8), (2, 12, 5), (1, 20, 10), (7, 31, 16)])
def test_reconstruction_and_conjugates(mdk):
    g = g_polynomial(*mdk)
    rs = find_roots(g)
    with mpmath.workdps(60):
        # expand leading * prod(x - z) in ascending order
        coeffs = [mpmath.mpc(1)]
        for z in rs.roots:
            coeffs = [(coeffs[i - 1] if i else 0) - z * (coeffs[i] if i < len(coeffs) else 0)
                      for i in range(len(coeffs) + 1)]
        coeffs = [c * int(g.leading) for c in coeffs]
        for got, want in zip(coeffs, g.coeffs):
            assert abs(got - mpmath.mpf(want.numerator)) <= 1e-30 * max(1, abs(want))
    conj = sorted((complex(z).real, -complex(z).imag) for z in rs.roots)
    assert conj == pytest.approx(sorted((complex(z).real, complex(z).imag) for z in rs.roots), abs=1e-40)
    assert rs.max_real_part == max(rs.real_parts)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=3, max_size=9).filter(lambda c: c[-1] != 0 and c[0] != 0))
def test_against_mpmath_polyroots(coeffs):
    p = RationalPolynomial(coeffs)
    try:
        rs = find_roots(p)
    except NonConvergenceError:
        # repeated roots can stall the residual test; the oracle comparison is moot then
        return
    with mpmath.workdps(50):
        oracle = mpmath.polyroots(coeffs[::-1], maxsteps=500, extraprec=400)
    for t in oracle:
        dist = min(abs(complex(z) - complex(t)) for z in rs.roots)
        assert dist < 1e-6


def test_deterministic():
    a = find_roots(g_polynomial(3, 40, 20))
    b = find_roots(g_polynomial(3, 40, 20))
    assert a.to_dict() == b.to_dict()


def test_nonconvergence_on_impossible_tolerance():
    with pytest.raises(NonConvergenceError) as info:
        find_roots(g_polynomial(9, 15, 8), precision_bits=53, tolerance=1e-300)
    assert len(info.value.roots) == 8 and len(info.value.residuals) == 8


def test_to_dict_shape():
    d = find_roots(N * N + 1).to_dict()
    assert set(d) == {"roots", "precision_bits"}
    assert set(d["roots"][0]) == {"re", "im", "residual"}


class TestFullRoots:
    def test_counts_and_integers(self):
        rs = full_ehrhart_roots(9, 15, 8)
        assert isinstance(rs, ComplexRootSet)
        assert len(rs) == 15
        assert rs.polynomial == theorem_ehrhart(9, 15, 8)
        ints = sorted(complex(z).real for z in rs.roots if abs(complex(z) - round(complex(z).real)) == 0)
        for j in range(1, 8):
            assert -j in ints

    @pytest.mark.parametrize("d", [4, 9, 16, 25])
    def test_m1_line(self, d):
        for k in range(1, (d + 1) // 2 + 1):
            rs = full_ehrhart_roots(1, d, k)
            for z in rs.roots:
                z = complex(z)
                if abs(z.real + (d - k + 1) / 2) > 1e-9:
                    assert abs(z.imag) < 1e-30 and abs(z.real - round(z.real)) < 1e-30

    def test_k2_real_part(self):
        for m in range(1, 8):
            for d in range(3, 12):
                rs = find_roots(g_polynomial(m, d, 2))
                a, b, c = m + 1, 2 * d - m - 1, d * (d - 1)
                if b * b - 4 * a * c < 0:
                    for z in rs.roots:
                        assert abs(complex(z).real - float(Fraction(-b, 2 * a))) < 1e-12


def test_full_roots_small_case():
    rs = full_ehrhart_roots(1, 2, 1)
    assert [complex(z) for z in rs.roots] == [-1, -1]


@pytest.mark.parametrize("m,d", [(1, 3), (5, 6), (9, 10)])
def test_full_roots_k1(m, d):
    got = sorted(complex(z).real for z in full_ehrhart_roots(m, d, 1).roots)
    want = sorted([-j for j in range(1, d)] + [-d / (m + 1)])
    assert got == pytest.approx(want, abs=1e-12)
