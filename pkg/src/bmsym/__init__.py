"""Exact arithmetic for the scaled-permutation symmetries of the
product-form (Berwald-Moor) metric, the diagonal determinant-one Lie
group inside it, and an enumeration-based classifier for arbitrary
rational Jacobians."""

from .classify import (
    DEFAULT_MAX_N,
    DegenerateTuple,
    OracleReport,
    PermanentMismatch,
    Symmetry,
    Violation,
    classify_affine,
    degenerate_products_zero,
    extract_pattern,
    invariance_system_check,
    membership_test,
    permanent,
    theorem_oracle,
    witness_violates,
)
from .errors import (
    DimensionCapExceeded,
    DimensionMismatch,
    MalformedInput,
    NegativeRadicand,
    NotIdentityComponent,
    NotMonomial,
    NotSquare,
    TraceNotZero,
    UnitProductViolation,
    ZeroCoordinate,
    ZeroScale,
)
from .group import AffineSymmetry, ScaledPerm, metric, metric_power
from .lie import (
    DiagonalGroupElement,
    TracelessDiagonal,
    as_scaled_perm,
    basis,
    bracket,
    chart,
    component_signature,
    dn1_new,
    lie_exp,
    lie_log,
    mu,
    structure_constants,
)
from .matrix import RationalMatrix, as_fraction, as_vector
from .permutation import Permutation

__version__ = "0.1.0"

__all__ = [
    "AffineSymmetry",
    "DEFAULT_MAX_N",
    "DegenerateTuple",
    "DiagonalGroupElement",
    "DimensionCapExceeded",
    "DimensionMismatch",
    "MalformedInput",
    "NegativeRadicand",
    "NotIdentityComponent",
    "NotMonomial",
    "NotSquare",
    "OracleReport",
    "PermanentMismatch",
    "Permutation",
    "RationalMatrix",
    "ScaledPerm",
    "Symmetry",
    "TraceNotZero",
    "TracelessDiagonal",
    "UnitProductViolation",
    "Violation",
    "ZeroCoordinate",
    "ZeroScale",
    "as_fraction",
    "as_scaled_perm",
    "as_vector",
    "basis",
    "bracket",
    "chart",
    "classify_affine",
    "component_signature",
    "degenerate_products_zero",
    "dn1_new",
    "extract_pattern",
    "invariance_system_check",
    "lie_exp",
    "lie_log",
    "membership_test",
    "metric",
    "metric_power",
    "mu",
    "permanent",
    "structure_constants",
    "theorem_oracle",
    "witness_violates",
    "__version__",
]
