"""Shared generators and hypothesis strategies for the test suite."""

from fractions import Fraction

from hypothesis import strategies as st

from bmsym import Permutation, ScaledPerm, AffineSymmetry

SMALL = [k for k in range(-9, 10) if k != 0]
POSITIVE = list(range(1, 10))

nonzero_rationals = st.builds(
    Fraction, st.sampled_from(SMALL), st.sampled_from(POSITIVE)
)
rationals = st.builds(
    Fraction, st.integers(min_value=-9, max_value=9), st.sampled_from(POSITIVE)
)


@st.composite
def permutations(draw, min_n=2, max_n=5):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    image = draw(st.permutations(list(range(1, n + 1))))
    return Permutation(tuple(image))


@st.composite
def scaled_perms(draw, n=None, min_n=2, max_n=5):
    if n is None:
        sigma = draw(permutations(min_n=min_n, max_n=max_n))
    else:
        sigma = Permutation(tuple(draw(st.permutations(list(range(1, n + 1))))))
    head = [draw(nonzero_rationals) for _ in range(sigma.n - 1)]
    last = Fraction(1)
    for value in head:
        last /= value
    return ScaledPerm(sigma, tuple(head) + (last,))


@st.composite
def affine_symmetries(draw, n=None, min_n=2, max_n=5):
    linear = draw(scaled_perms(n=n, min_n=min_n, max_n=max_n))
    translation = tuple(draw(rationals) for _ in range(linear.n))
    return AffineSymmetry(linear, translation)


@st.composite
def vectors(draw, n):
    return tuple(draw(nonzero_rationals) for _ in range(n))
