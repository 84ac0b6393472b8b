import itertools
from fractions import Fraction

import pytest
from hypothesis import assume
from hypothesis import strategies as st

from ehrhart_roots.errors import InvalidSimplexError
from ehrhart_roots.lattice import LatticeSimplex, normalized_volume


def solve_row(m, x):
    """Row vector ``lam`` with ``lam @ m == x`` by plain Gaussian elimination on
    the transposed system; deliberately separate from the library's helpers."""
    n = len(m)
    a = [[Fraction(m[j][i]) for j in range(n)] + [Fraction(x[i])] for i in range(n)]
    for c in range(n):
        piv = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c] / a[c][c]
                a[r] = [u - f * v for u, v in zip(a[r], a[c])]
    return [a[i][n] / a[i][i] for i in range(n)]


def brute_parallelepiped(s):
    """Integer points of the half-open parallelepiped by scanning its box."""
    m = s.homogenized()
    n = len(m)
    lo = [sum(min(0, row[j]) for row in m) for j in range(n)]
    hi = [sum(max(0, row[j]) for row in m) for j in range(n)]
    found = []
    for x in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        lam = solve_row(m, x)
        if all(0 <= r < 1 for r in lam):
            found.append(tuple(x))
    return sorted(found, key=lambda p: (p[-1], p))


def brute_delta(s):
    counts = [0] * (s.dim + 1)
    for p in brute_parallelepiped(s):
        counts[p[-1]] += 1
    return counts


@st.composite
def small_simplices(draw, max_dim=3, coord=3, max_volume=200):
    d = draw(st.integers(1, max_dim))
    point = st.lists(st.integers(-coord, coord), min_size=d, max_size=d)
    pts = draw(st.lists(point, min_size=d + 1, max_size=d + 1))
    try:
        s = LatticeSimplex(pts)
    except InvalidSimplexError:
        assume(False)
    assume(normalized_volume(s) <= max_volume)
    return s


CORPUS = [
    LatticeSimplex([[0], [1]]),
    LatticeSimplex([[0], [2]]),
    LatticeSimplex([[0], [5]]),
    LatticeSimplex([[0, 0], [1, 0], [1, 2]]),
    LatticeSimplex([[0, 0], [1, 0], [0, 1]]),
    LatticeSimplex([[0, 0], [3, 1], [1, 3]]),
    LatticeSimplex([[-1, -1], [2, 0], [0, 2]]),
    LatticeSimplex([[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 2]]),
    LatticeSimplex([[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 5]]),
    LatticeSimplex([[0, 0, 0], [2, 0, 0], [0, 3, 0], [0, 0, 1]]),
    LatticeSimplex([[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]]),
]


@pytest.fixture(params=range(len(CORPUS)), ids=lambda i: f"simplex{i}")
def corpus_simplex(request):
    return CORPUS[request.param]


ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[number])
