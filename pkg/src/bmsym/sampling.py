"""Seeded random generation of exact group elements.

Scales are ratios of integers in [-9, 9] without zero; the last scale is the
reciprocal of the running product, so unit products hold exactly by
construction.  Every generator takes an explicit random.Random so callers
control reproducibility; trial_rng derives an independent stream per
(seed, index) pair, making batch runs schedule-independent.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .group import AffineSymmetry, ScaledPerm
from .permutation import Permutation

_NONZERO = tuple(v for v in range(-9, 10) if v != 0)
_POSITIVE = tuple(range(1, 10))


def trial_rng(seed: int, index: int) -> random.Random:
    """Deterministic stream for one trial; string seeding is hash-independent."""
    return random.Random(f"{seed}:{index}")


def random_nonzero_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.choice(_NONZERO), rng.choice(_NONZERO))


def random_positive_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.choice(_POSITIVE), rng.choice(_POSITIVE))


def random_rational(rng: random.Random) -> Fraction:
    """May be zero; used for translations and test vectors."""
    return Fraction(rng.randint(-9, 9), rng.choice(_POSITIVE))


def random_permutation(n: int, rng: random.Random) -> Permutation:
    image = list(range(1, n + 1))
    rng.shuffle(image)
    return Permutation(tuple(image))


def random_scaled_perm(n: int, rng: random.Random, *, positive: bool = False) -> ScaledPerm:
    draw = random_positive_rational if positive else random_nonzero_rational
    head = [draw(rng) for _ in range(n - 1)]
    product = math.prod(head, start=Fraction(1))
    return ScaledPerm(random_permutation(n, rng), (*head, 1 / product))


def random_affine_symmetry(n: int, rng: random.Random) -> AffineSymmetry:
    linear = random_scaled_perm(n, rng)
    translation = tuple(random_rational(rng) for _ in range(n))
    return AffineSymmetry(linear, translation)


def random_vector(n: int, rng: random.Random, *, positive: bool = False) -> tuple[Fraction, ...]:
    """Nonzero entries, so product-form checks stay generic."""
    draw = random_positive_rational if positive else random_nonzero_rational
    return tuple(draw(rng) for _ in range(n))
