"""Integral simplices and their delta-vectors.

The delta-vector of a lattice simplex is read off the lattice points of its
half-open fundamental parallelepiped, graded by height.  Those points are in
bijection with the quotient group ``Z^(d+1) / L`` where ``L`` is spanned by
the homogenized vertices ``(v_i, 1)``; the Smith normal form of the vertex
matrix hands us a product-of-cyclic-groups description of that quotient, so
enumeration costs one step per point.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ArgumentError, BudgetExceededError, InvalidSimplexError
from .smith import determinant_and_adjugate, rank, smith_normal_form

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class LatticeSimplex:
    vertices: tuple

    def __init__(self, vertices: Sequence[Sequence[int]]):
        verts = []
        for v in vertices:
            row = []
            for x in v:
                if isinstance(x, bool) or int(x) != x:
                    raise InvalidSimplexError(f"non-integer coordinate {x!r}")
                row.append(int(x))
            verts.append(tuple(row))
        if len(verts) < 2:
            raise InvalidSimplexError("a simplex needs at least two vertices")
        width = len(verts[0])
        if any(len(v) != width for v in verts):
            raise InvalidSimplexError("vertices have inconsistent lengths")
        dim = len(verts) - 1
        if width < dim:
            raise InvalidSimplexError(f"{dim + 1} vertices cannot span dimension {dim} in Z^{width}")
        base = verts[0]
        edges = [[x - y for x, y in zip(v, base)] for v in verts[1:]]
        if rank(edges) != dim:
            raise InvalidSimplexError("vertices are affinely dependent")
        object.__setattr__(self, "vertices", tuple(verts))

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0])

    def homogenized(self) -> list[list[int]]:
        """Rows ``(v_i, 1)``."""
        return [list(v) + [1] for v in self.vertices]

    def to_json(self) -> str:
        return json.dumps({"vertices": [list(v) for v in self.vertices]})

    @classmethod
    def from_json(cls, text: str) -> "LatticeSimplex":
        try:
            data = json.loads(text)
            vertices = data["vertices"]
        except (ValueError, KeyError, TypeError) as exc:
            raise InvalidSimplexError(f"malformed simplex JSON: {exc}") from None
        return cls(vertices)


@dataclass(frozen=True)
class ParallelepipedPoint:
    coords: tuple
    degree: int
    barycentric: tuple


@dataclass(frozen=True)
class DeltaVector:
    entries: tuple

    def __init__(self, entries: Sequence[int]):
        entries = tuple(int(x) for x in entries)
        if not entries or entries[0] != 1:
            raise ArgumentError("delta_0 must equal 1")
        if any(x < 0 for x in entries):
            raise ArgumentError("delta-vector entries must be nonnegative")
        if len(entries) > 1 and entries[1] < entries[-1]:
            raise ArgumentError("delta_1 >= delta_d is violated")
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        return len(self.entries) - 1

    @property
    def volume(self) -> int:
        return sum(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def _square_system(s: LatticeSimplex):
    if s.ambient_dim != s.dim:
        raise InvalidSimplexError(
            f"simplex of dimension {s.dim} given in Z^{s.ambient_dim}; "
            "supply full-dimensional coordinates"
        )
    m = s.homogenized()
    det, adj = determinant_and_adjugate(m)
    if det == 0:
        raise InvalidSimplexError("degenerate simplex: zero determinant")
    return m, det, adj


def normalized_volume(s: LatticeSimplex) -> int:
    _, det, _ = _square_system(s)
    return abs(det)


def enumerate_parallelepiped(s: LatticeSimplex, budget: int = DEFAULT_BUDGET) -> list[ParallelepipedPoint]:
    """Lattice points of the half-open parallelepiped spanned by ``(v_i, 1)``.

    Sorted by degree, then lexicographically by coordinates.
    """
    m, det, adj = _square_system(s)
    vol = abs(det)
    if vol > budget:
        raise BudgetExceededError(
            f"parallelepiped has {vol} points, budget is {budget}", required=vol, budget=budget
        )
    # lambda * vol = x @ scaled_inverse for x = lambda @ m
    sign = 1 if det > 0 else -1
    scaled_inverse = [[sign * x for x in row] for row in adj]
    snf = smith_normal_form(m)
    size = len(m)
    # generators of the quotient: rows of V^-1 with a nontrivial cyclic factor
    gens = []
    for i, e in enumerate(snf.diagonal):
        if e > 1:
            row = snf.right_inverse[i]
            g = [sum(row[l] * scaled_inverse[l][j] for l in range(size)) % vol for j in range(size)]
            gens.append((e, g))

    points = []
    for ys in itertools.product(*(range(e) for e, _ in gens)):
        t = [0] * size
        for y, (_, g) in zip(ys, gens):
            if y:
                t = [a + y * b for a, b in zip(t, g)]
        t = [a % vol for a in t]
        coords = tuple(sum(t[i] * m[i][j] for i in range(size)) // vol for j in range(size))
        bary = tuple(Fraction(a, vol) for a in t)
        points.append(ParallelepipedPoint(coords, coords[-1], bary))
    points.sort(key=lambda p: (p.degree, p.coords))
    return points


def delta_vector(s: LatticeSimplex, budget: int = DEFAULT_BUDGET) -> DeltaVector:
    counts = [0] * (s.dim + 1)
    for p in enumerate_parallelepiped(s, budget):
        counts[p.degree] += 1
    return DeltaVector(counts)


def family_simplex(m: int, d: int) -> LatticeSimplex:
    """Origin plus the rows of the lower triangular matrix with last row
    ``(1,...,1, m,...,m, m+1)`` (``c = (d-1)/2`` ones, ``c`` m's).

    Its delta-vector is 1 at degree 0 and ``m`` at degree ``(d+1)/2``.
    """
    if m < 1:
        raise ArgumentError(f"m >= 1 is violated (m={m})")
    if d < 3 or d % 2 == 0:
        raise ArgumentError(f"d must be an odd integer >= 3 (d={d})")
    c = (d - 1) // 2
    vertices = [[0] * d]
    for i in range(d - 1):
        e = [0] * d
        e[i] = 1
        vertices.append(e)
    vertices.append([1] * c + [m] * c + [m + 1])
    return LatticeSimplex(vertices)


def pyramid_lift(s: LatticeSimplex) -> LatticeSimplex:
    """Lattice pyramid of height one: same delta-vector with a trailing 0."""
    vertices = [list(v) + [0] for v in s.vertices]
    vertices.append([0] * s.ambient_dim + [1])
    return LatticeSimplex(vertices)


def check_theorem_params(m: int, d: int, k: int) -> None:
    if m < 1:
        raise ArgumentError(f"m >= 1 is violated (m={m})")
    if d < 2:
        raise ArgumentError(f"d >= 2 is violated (d={d})")
    if not 1 <= k <= (d + 1) // 2:
        raise ArgumentError(f"1 <= k <= floor((d+1)/2) = {(d + 1) // 2} is violated (k={k})")


def theorem_simplex(m: int, d: int, k: int) -> LatticeSimplex:
    """A d-simplex with delta-vector ``delta_0 = 1``, ``delta_k = m``, zero elsewhere."""
    check_theorem_params(m, d, k)
    if k == 1:
        s = LatticeSimplex([[0], [m + 1]])
    else:
        s = family_simplex(m, 2 * k - 1)
    while s.dim < d:
        s = pyramid_lift(s)
    return s


def _scan_dilate(s: LatticeSimplex, n: int, strict: bool, budget: int) -> int:
    if n < 0:
        raise ArgumentError(f"dilation factor must be nonnegative (n={n})")
    m, det, adj = _square_system(s)
    sign = 1 if det > 0 else -1
    size = len(m)
    d = s.dim
    lo = [n * min(v[j] for v in s.vertices) for j in range(d)]
    hi = [n * max(v[j] for v in s.vertices) for j in range(d)]
    # widest coordinates first; fixing them prunes the most
    order = sorted(range(d), key=lambda j: (-(hi[j] - lo[j]), -j))
    inv = [[sign * adj[j][i] for i in range(size)] for j in range(size)]
    # best achievable contribution of the still-free coordinates to each lambda_i
    slack = [[0] * size for _ in range(d + 1)]
    for depth in range(d - 1, -1, -1):
        j = order[depth]
        slack[depth] = [
            slack[depth + 1][i] + max(inv[j][i] * lo[j], inv[j][i] * hi[j]) for i in range(size)
        ]
    start = [n * inv[d][i] for i in range(size)]
    nodes = 0
    count = 0

    def walk(depth, partial):
        nonlocal nodes, count
        if depth == d:
            count += 1
            return
        j = order[depth]
        row = inv[j]
        rest = slack[depth + 1]
        # need partial_i + x * row_i + rest_i >= 0 (> 0 when strict) for every i
        a, b = lo[j], hi[j]
        for p, r, q in zip(partial, row, rest):
            c = p + q
            if r > 0:
                a = max(a, (-c) // r + 1 if strict else -(c // r))
            elif r < 0:
                b = min(b, -((-c) // -r) - 1 if strict else c // -r)
            elif c < 0 or (strict and c == 0):
                return
        nodes += max(0, b - a + 1)
        if nodes > budget:
            raise BudgetExceededError(f"dilate scan exceeded {budget} nodes", budget=budget)
        for x in range(a, b + 1):
            walk(depth + 1, [p + x * r for p, r in zip(partial, row)])

    walk(0, start)
    return count


def count_dilate_points(s: LatticeSimplex, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """``|nP ∩ Z^d|`` by direct search over the bounding box of ``nP``.

    This is the slow independent reference; subboxes that cannot meet the
    simplex are skipped using interval bounds on the barycentric coordinates.
    """
    return _scan_dilate(s, n, False, budget)


def count_interior_dilate_points(s: LatticeSimplex, n: int, budget: int = DEFAULT_BUDGET) -> int:
    return _scan_dilate(s, n, True, budget)
