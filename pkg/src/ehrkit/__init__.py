"""ehrkit: exact Ehrhart quasi-polynomials of translated lattice polytopes.

Everything is rational arithmetic end to end; there is no floating
point in the package.
"""

from .characterize import (
    WitnessReport,
    asymmetry_witness,
    classify,
    gcd_violation_witness,
    verify_witness,
)
from .counting import (
    InterpolationGuardFailed,
    count_points,
    count_rational_dilate,
    count_weighted_simplex,
    ehrhart_quasi,
    lost_new_counts,
    rational_dilation_quasi,
    scan_scaled_translate,
    translated_enumerator,
    weighted_simplex_quasi,
)
from .geometry import (
    AffineHull,
    AlmostIntegralPolytope,
    Face,
    HRep,
    LatticePolytope,
    affine_hull,
    faces_of_dim,
    hrep,
    is_centrally_symmetric,
    is_zonotope,
    minkowski_facet_check,
    relative_volume,
)
from .linalg import (
    DimensionMismatch,
    IntMatrix,
    RankDeficient,
    SnfDecomposition,
    affine_lattice_nonempty,
    gcd_maximal_minors,
    snf,
)
from .qpoly import (
    Polynomial,
    QuasiPolynomial,
    evaluate,
    has_gcd_property,
    inflate_period,
    is_symmetric,
    minimal_period,
)
from .zonotopes import (
    TooManyGenerators,
    ZonotopeSpec,
    abm_quasi,
    zonotope_point_bound_check,
    zonotope_vertices,
)

__version__ = "0.1.0"

__all__ = [
    "AffineHull",
    "AlmostIntegralPolytope",
    "DimensionMismatch",
    "Face",
    "HRep",
    "IntMatrix",
    "InterpolationGuardFailed",
    "LatticePolytope",
    "Polynomial",
    "QuasiPolynomial",
    "RankDeficient",
    "SnfDecomposition",
    "TooManyGenerators",
    "WitnessReport",
    "ZonotopeSpec",
    "abm_quasi",
    "affine_hull",
    "affine_lattice_nonempty",
    "asymmetry_witness",
    "classify",
    "count_points",
    "count_rational_dilate",
    "count_weighted_simplex",
    "ehrhart_quasi",
    "evaluate",
    "faces_of_dim",
    "gcd_maximal_minors",
    "gcd_violation_witness",
    "has_gcd_property",
    "hrep",
    "inflate_period",
    "is_centrally_symmetric",
    "is_symmetric",
    "is_zonotope",
    "lost_new_counts",
    "minimal_period",
    "minkowski_facet_check",
    "rational_dilation_quasi",
    "relative_volume",
    "scan_scaled_translate",
    "snf",
    "translated_enumerator",
    "verify_witness",
    "weighted_simplex_quasi",
    "zonotope_point_bound_check",
    "zonotope_vertices",
]
