"""Dense square matrices and vectors over exact rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotSquare

ZERO = Fraction(0)
ONE = Fraction(1)


def as_fraction(value) -> Fraction:
    """Coerce ints/Fractions/strings; floats are rejected to stay exact."""
    if isinstance(value, float):
        raise TypeError(f"floats are not exact rationals: {value!r}")
    return Fraction(value)


def as_vector(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(as_fraction(v) for v in values)


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths differ: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vec_neg(u: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(-a for a in u)


class RationalMatrix:
    """Immutable n x n matrix of Fractions, row-major."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Iterable[Iterable]) -> None:
        data = tuple(tuple(as_fraction(x) for x in row) for row in rows)
        n = len(data)
        if n == 0 or any(len(row) != n for row in data):
            raise NotSquare(f"expected a square matrix, got row lengths {[len(r) for r in data]}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", data)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int) -> Fraction:
        """1-based entry access."""
        return self.rows[i - 1][j - 1]

    def with_entry(self, i: int, j: int, value) -> "RationalMatrix":
        """Copy with the 1-based (i, j) entry replaced."""
        value = as_fraction(value)
        rows = [list(row) for row in self.rows]
        rows[i - 1][j - 1] = value
        return RationalMatrix(rows)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if self.n != other.n:
            raise DimensionMismatch(f"matrix sizes differ: {self.n} vs {other.n}")
        n = self.n
        out = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            row = self.rows[i]
            acc = out[i]
            for k in range(n):
                a = row[k]
                if not a:
                    continue
                other_row = other.rows[k]
                for j in range(n):
                    b = other_row[j]
                    if b:
                        acc[j] += a * b
        return RationalMatrix(out)

    def apply(self, vector: Sequence) -> tuple[Fraction, ...]:
        vec = as_vector(vector)
        if len(vec) != self.n:
            raise DimensionMismatch(f"vector length {len(vec)} for a {self.n}x{self.n} matrix")
        return tuple(sum((a * x for a, x in zip(row, vec) if a), start=ZERO) for row in self.rows)

    def det(self) -> Fraction:
        """Determinant by cofactor expansion; zero entries are skipped."""
        return _cofactor_det(self.rows)

    def is_diagonal(self) -> bool:
        return all(not v for i, row in enumerate(self.rows) for j, v in enumerate(row) if i != j)

    def diagonal(self) -> tuple[Fraction, ...]:
        return tuple(self.rows[i][i] for i in range(self.n))

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in row) for row in self.rows)
        return f"RationalMatrix[{body}]"


def _cofactor_det(rows: tuple[tuple[Fraction, ...], ...]) -> Fraction:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = ZERO
    for j, coefficient in enumerate(rows[0]):
        if not coefficient:
            continue
        minor = tuple(row[:j] + row[j + 1 :] for row in rows[1:])
        term = coefficient * _cofactor_det(minor)
        total += term if j % 2 == 0 else -term
    return total
