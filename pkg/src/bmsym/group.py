"""Scaled permutation matrices, the affine symmetry group, and the metric.

A scaled permutation (monomial) matrix carries the value ``scale[i]`` in row
``i``, column ``sigma(i)``, and zeros elsewhere.  With the scale product
pinned to 1 these matrices are exactly the linear maps preserving the product
form ``y^1 y^2 ... y^n``; adding an arbitrary translation gives the affine
symmetry group of the metric ``F(y) = (y^1 ... y^n)^(1/n)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    DimensionMismatch,
    NegativeRadicand,
    UnitProductViolation,
    ZeroScale,
)
from .matrix import ONE, ZERO, RationalMatrix, as_fraction, as_vector, vec_add, vec_neg
from .permutation import Permutation


@dataclass(frozen=True)
class ScaledPerm:
    """Monomial matrix with exact rational scales of product 1."""

    sigma: Permutation
    scale: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        scale = tuple(as_fraction(v) for v in self.scale)
        object.__setattr__(self, "scale", scale)
        if len(scale) != self.sigma.n:
            raise DimensionMismatch(
                f"{len(scale)} scales for a permutation of {self.sigma.n} points"
            )
        if any(v == 0 for v in scale):
            raise ZeroScale("scale entries must be nonzero")
        product = math.prod(scale, start=ONE)
        if product != 1:
            raise UnitProductViolation(f"scale product is {product}, expected 1")

    @property
    def n(self) -> int:
        return self.sigma.n

    @classmethod
    def identity(cls, n: int) -> "ScaledPerm":
        return cls(Permutation.identity(n), (ONE,) * n)

    def is_identity(self) -> bool:
        return self.sigma.is_identity() and all(v == 1 for v in self.scale)

    def to_dense(self) -> RationalMatrix:
        rows = [[ZERO] * self.n for _ in range(self.n)]
        for i, (a, s) in enumerate(zip(self.scale, self.sigma.image)):
            rows[i][s - 1] = a
        return RationalMatrix(rows)

    def compose(self, other: "ScaledPerm") -> "ScaledPerm":
        """Group product; the dense form is to_dense(self) @ to_dense(other)."""
        if self.n != other.n:
            raise DimensionMismatch(f"cannot compose sizes {self.n} and {other.n}")
        perm = other.sigma.compose(self.sigma)
        scale = tuple(
            a * other.scale[s - 1] for a, s in zip(self.scale, self.sigma.image)
        )
        return ScaledPerm(perm, scale)

    def __mul__(self, other: "ScaledPerm") -> "ScaledPerm":
        if not isinstance(other, ScaledPerm):
            return NotImplemented
        return self.compose(other)

    def inverse(self) -> "ScaledPerm":
        inv = self.sigma.inverse()
        scale = tuple(ONE / self.scale[inv(i) - 1] for i in range(1, self.n + 1))
        return ScaledPerm(inv, scale)

    def det(self) -> int:
        """The determinant collapses to the permutation sign: the scales multiply to 1."""
        return self.sigma.sign()

    def apply(self, y: Sequence) -> tuple[Fraction, ...]:
        """Componentwise action: result[i] = scale[i] * y[sigma(i)]."""
        vec = as_vector(y)
        if len(vec) != self.n:
            raise DimensionMismatch(f"vector length {len(vec)}, expected {self.n}")
        return tuple(a * vec[s - 1] for a, s in zip(self.scale, self.sigma.image))


@dataclass(frozen=True)
class AffineSymmetry:
    """x -> linear @ x + translation, with a scaled-permutation linear part."""

    linear: ScaledPerm
    translation: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        translation = as_vector(self.translation)
        object.__setattr__(self, "translation", translation)
        if len(translation) != self.linear.n:
            raise DimensionMismatch(
                f"translation length {len(translation)}, expected {self.linear.n}"
            )

    @property
    def n(self) -> int:
        return self.linear.n

    @classmethod
    def identity(cls, n: int) -> "AffineSymmetry":
        return cls(ScaledPerm.identity(n), (ZERO,) * n)

    @classmethod
    def linear_only(cls, linear: ScaledPerm) -> "AffineSymmetry":
        return cls(linear, (ZERO,) * linear.n)

    def is_identity(self) -> bool:
        return self.linear.is_identity() and all(v == 0 for v in self.translation)

    def apply(self, x: Sequence) -> tuple[Fraction, ...]:
        return vec_add(self.linear.apply(x), self.translation)

    def compose(self, other: "AffineSymmetry") -> "AffineSymmetry":
        """self after other: apply(compose(s, t), x) == apply(s, apply(t, x))."""
        if self.n != other.n:
            raise DimensionMismatch(f"cannot compose sizes {self.n} and {other.n}")
        linear = self.linear.compose(other.linear)
        translation = vec_add(self.linear.apply(other.translation), self.translation)
        return AffineSymmetry(linear, translation)

    def __mul__(self, other: "AffineSymmetry") -> "AffineSymmetry":
        if not isinstance(other, AffineSymmetry):
            return NotImplemented
        return self.compose(other)

    def inverse(self) -> "AffineSymmetry":
        linear = self.linear.inverse()
        return AffineSymmetry(linear, vec_neg(linear.apply(self.translation)))


def metric_power(y: Sequence) -> Fraction:
    """Exact product y^1 * ... * y^n (the n-th power of the metric).

    This polynomial form is what the group preserves identically, so all
    exact invariance checks go through it rather than the real root.
    """
    vec = as_vector(y)
    if len(vec) < 2:
        raise DimensionMismatch("the metric needs n >= 2 coordinates")
    return math.prod(vec, start=ONE)


def metric(y: Sequence) -> float:
    """Real n-th root of the product; signed for odd n.

    Even n with a negative product has no real value and raises
    NegativeRadicand.
    """
    values = [float(v) for v in y]
    n = len(values)
    if n < 2:
        raise DimensionMismatch("the metric needs n >= 2 coordinates")
    product = math.prod(values)
    if n % 2 == 0:
        if product < 0:
            raise NegativeRadicand(f"even order {n} with product {product}")
        return product ** (1.0 / n)
    return math.copysign(abs(product) ** (1.0 / n), product)
