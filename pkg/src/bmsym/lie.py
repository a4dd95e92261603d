"""The commutative Lie group of determinant-one diagonal matrices.

Group elements are diag(a_1..a_n) with entry product 1; the chart drops the
last entry, which is redundant.  The tangent space at the identity consists
of traceless diagonals, with exp/log acting componentwise.  Entries may be
floats or exact rationals: rational elements keep all group arithmetic
exact, while exp/log always produce floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    DimensionMismatch,
    NotIdentityComponent,
    TraceNotZero,
    UnitProductViolation,
    ZeroCoordinate,
)
from .group import ScaledPerm
from .matrix import as_fraction
from .permutation import Permutation

TOLERANCE = 1e-12


def _as_number(value):
    """Floats pass through; ints and Fractions stay exact."""
    if isinstance(value, float):
        return value
    return Fraction(value)


@dataclass(frozen=True)
class DiagonalGroupElement:
    """diag(a_1..a_n) with nonzero entries and product 1 (within TOLERANCE)."""

    diag: tuple

    def __post_init__(self) -> None:
        diag = tuple(_as_number(v) for v in self.diag)
        object.__setattr__(self, "diag", diag)
        if len(diag) < 2:
            raise DimensionMismatch("need at least 2 diagonal entries")
        if any(v == 0 for v in diag):
            raise ZeroCoordinate("diagonal entries must be nonzero")
        product = math.prod(diag)
        if abs(product - 1) > TOLERANCE:
            raise UnitProductViolation(f"entry product is {product}, expected 1")

    @property
    def n(self) -> int:
        return len(self.diag)

    @classmethod
    def identity(cls, n: int) -> "DiagonalGroupElement":
        return cls((Fraction(1),) * n)

    def is_identity(self) -> bool:
        return all(v == 1 for v in self.diag)

    def inverse(self) -> "DiagonalGroupElement":
        return DiagonalGroupElement(tuple(1 / v for v in self.diag))

    def multiply(self, other: "DiagonalGroupElement") -> "DiagonalGroupElement":
        if self.n != other.n:
            raise DimensionMismatch(f"sizes differ: {self.n} vs {other.n}")
        return DiagonalGroupElement(tuple(a * b for a, b in zip(self.diag, other.diag)))

    def __mul__(self, other: "DiagonalGroupElement") -> "DiagonalGroupElement":
        if not isinstance(other, DiagonalGroupElement):
            return NotImplemented
        return self.multiply(other)


@dataclass(frozen=True)
class TracelessDiagonal:
    """diag(t_1..t_n) with zero trace (within TOLERANCE); tangent data for exp."""

    diag: tuple

    def __post_init__(self) -> None:
        diag = tuple(_as_number(v) for v in self.diag)
        object.__setattr__(self, "diag", diag)
        if len(diag) < 2:
            raise DimensionMismatch("need at least 2 diagonal entries")
        trace = sum(diag)
        if abs(trace) > TOLERANCE:
            raise TraceNotZero(f"trace is {trace}, expected 0")

    @property
    def n(self) -> int:
        return len(self.diag)

    @classmethod
    def zero(cls, n: int) -> "TracelessDiagonal":
        return cls((Fraction(0),) * n)

    def __add__(self, other: "TracelessDiagonal") -> "TracelessDiagonal":
        if not isinstance(other, TracelessDiagonal):
            return NotImplemented
        if self.n != other.n:
            raise DimensionMismatch(f"sizes differ: {self.n} vs {other.n}")
        return TracelessDiagonal(tuple(a + b for a, b in zip(self.diag, other.diag)))

    def __neg__(self) -> "TracelessDiagonal":
        return TracelessDiagonal(tuple(-v for v in self.diag))

    def scaled(self, factor) -> "TracelessDiagonal":
        factor = _as_number(factor)
        return TracelessDiagonal(tuple(factor * v for v in self.diag))

    def __rmul__(self, factor) -> "TracelessDiagonal":
        return self.scaled(factor)


def dn1_new(first) -> DiagonalGroupElement:
    """Element from its first n-1 entries; the last is the reciprocal product."""
    entries = tuple(_as_number(v) for v in first)
    if not entries:
        raise DimensionMismatch("need at least one leading entry")
    if any(v == 0 for v in entries):
        raise ZeroCoordinate("chart coordinates must be nonzero")
    product = math.prod(entries)
    return DiagonalGroupElement((*entries, 1 / product))


def chart(a: DiagonalGroupElement) -> tuple:
    """Local coordinates: the first n-1 diagonal entries."""
    return a.diag[:-1]


def mu(a: DiagonalGroupElement, b: DiagonalGroupElement) -> DiagonalGroupElement:
    """The division map a^{-1} b, componentwise b_i / a_i."""
    if a.n != b.n:
        raise DimensionMismatch(f"sizes differ: {a.n} vs {b.n}")
    return DiagonalGroupElement(tuple(bv / av for av, bv in zip(a.diag, b.diag)))


def lie_exp(x: TracelessDiagonal) -> DiagonalGroupElement:
    """Componentwise exponential; lands in the group since the trace is 0."""
    return DiagonalGroupElement(tuple(math.exp(float(v)) for v in x.diag))


def lie_log(a: DiagonalGroupElement) -> TracelessDiagonal:
    """Componentwise logarithm, defined on the all-positive component only."""
    if any(v <= 0 for v in a.diag):
        raise NotIdentityComponent("logarithm needs all diagonal entries positive")
    return TracelessDiagonal(tuple(math.log(float(v)) for v in a.diag))


def basis(n: int, i: int) -> TracelessDiagonal:
    """Basis element with +1 at position i (1-based, i <= n-1) and -1 at position n."""
    if n < 2:
        raise DimensionMismatch("need n >= 2")
    if not 1 <= i <= n - 1:
        raise IndexError(f"basis index {i} outside 1..{n - 1}")
    diag = [Fraction(0)] * n
    diag[i - 1] = Fraction(1)
    diag[n - 1] = Fraction(-1)
    return TracelessDiagonal(tuple(diag))


def bracket(x: TracelessDiagonal, y: TracelessDiagonal) -> TracelessDiagonal:
    """Commutator computed on the dense matrices; diagonal matrices commute."""
    if x.n != y.n:
        raise DimensionMismatch(f"sizes differ: {x.n} vs {y.n}")
    dense_x = np.diag([float(v) for v in x.diag])
    dense_y = np.diag([float(v) for v in y.diag])
    commutator = dense_x @ dense_y - dense_y @ dense_x
    off_diagonal = commutator - np.diag(np.diag(commutator))
    if np.any(off_diagonal != 0.0):
        raise RuntimeError("commutator of diagonal matrices is not diagonal")
    return TracelessDiagonal(tuple(float(v) for v in np.diag(commutator)))


def structure_constants(n: int) -> np.ndarray:
    """Tensor c[i, j, k] with [E_i, E_j] = sum_k c[i, j, k] E_k.

    Computed by expanding each dense commutator in the basis (coefficients
    read off positions 1..n-1), not assumed; the algebra is abelian, so the
    result is the zero tensor.
    """
    if n < 2:
        raise DimensionMismatch("need n >= 2")
    dim = n - 1
    tensor = np.zeros((dim, dim, dim))
    for i in range(1, n):
        for j in range(1, n):
            b = bracket(basis(n, i), basis(n, j))
            coefficients = [float(b.diag[k]) for k in range(dim)]
            # The expansion is faithful only if the dropped last entry agrees.
            if float(b.diag[n - 1]) != -sum(coefficients):
                raise RuntimeError("bracket does not lie in the span of the basis")
            tensor[i - 1, j - 1, :] = coefficients
    return tensor


def component_signature(a: DiagonalGroupElement) -> tuple[int, ...]:
    """Sign pattern of the diagonal; an even number of entries is negative."""
    return tuple(1 if v > 0 else -1 for v in a.diag)


def as_scaled_perm(a: DiagonalGroupElement) -> ScaledPerm:
    """Exact crossover into the monomial-matrix group (identity permutation).

    Requires rational entries with exact unit product; floats are rejected.
    """
    scale = tuple(as_fraction(v) for v in a.diag)
    return ScaledPerm(Permutation.identity(a.n), scale)
