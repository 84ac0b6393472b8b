"""Exact delta-vectors and Ehrhart polynomials of lattice simplices, numeric
roots, and Routh-Hurwitz certified bounds on their real parts."""

from .conjecture import ViolationReport, analyze_cell, check_conjecture, scan
from .ehrhart import (
    discriminant_quadratic,
    ehrhart_from_delta,
    factor_check,
    g_polynomial,
    generating_function_check,
)
from .errors import (
    ArgumentError,
    BudgetExceededError,
    CertificationError,
    EhrhartError,
    IdentityMismatchError,
    InvalidSimplexError,
    NonConvergenceError,
)
from .lattice import (
    DeltaVector,
    LatticeSimplex,
    ParallelepipedPoint,
    count_dilate_points,
    count_interior_dilate_points,
    delta_vector,
    enumerate_parallelepiped,
    family_simplex,
    normalized_volume,
    pyramid_lift,
    theorem_simplex,
)
from .polynomial import RationalPolynomial
from .roots import ComplexRootSet, RootSettings, find_roots, full_ehrhart_roots
from .routh import CertifiedBound, Stability, certify_max_real_part, routh_hurwitz_strictly_stable

__all__ = [
    "ArgumentError",
    "BudgetExceededError",
    "CertificationError",
    "CertifiedBound",
    "ComplexRootSet",
    "DeltaVector",
    "EhrhartError",
    "IdentityMismatchError",
    "InvalidSimplexError",
    "LatticeSimplex",
    "NonConvergenceError",
    "ParallelepipedPoint",
    "RationalPolynomial",
    "RootSettings",
    "Stability",
    "ViolationReport",
    "analyze_cell",
    "certify_max_real_part",
    "check_conjecture",
    "count_dilate_points",
    "count_interior_dilate_points",
    "delta_vector",
    "discriminant_quadratic",
    "ehrhart_from_delta",
    "enumerate_parallelepiped",
    "factor_check",
    "family_simplex",
    "find_roots",
    "full_ehrhart_roots",
    "g_polynomial",
    "generating_function_check",
    "normalized_volume",
    "pyramid_lift",
    "routh_hurwitz_strictly_stable",
    "scan",
    "theorem_simplex",
]
