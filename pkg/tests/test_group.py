from fractions import Fraction as F

import pytest
from hypothesis import given

from bmsym import (
    AffineSymmetry,
    DimensionMismatch,
    NegativeRadicand,
    Permutation,
    RationalMatrix,
    ScaledPerm,
    UnitProductViolation,
    ZeroScale,
    metric,
    metric_power,
)
from helpers import affine_symmetries, scaled_perms, vectors

WORKED = ScaledPerm(Permutation((2, 3, 1)), (F(2), F(3), F(1, 6)))


# construction


def test_unit_product_accepted():
    assert WORKED.scale == (F(2), F(3), F(1, 6))


def test_identity_element():
    e = ScaledPerm.identity(3)
    assert e.is_identity()
    assert e.to_dense() == RationalMatrix.identity(3)


def test_rejects_zero_scale():
    with pytest.raises(ZeroScale):
        ScaledPerm(Permutation((2, 1)), (F(0), F(1)))


def test_rejects_non_unit_product():
    with pytest.raises(UnitProductViolation):
        ScaledPerm(Permutation((2, 1)), (F(2), F(2)))


def test_rejects_scale_length_mismatch():
    with pytest.raises(DimensionMismatch):
        ScaledPerm(Permutation((2, 1)), (F(2), F(1), F(1, 2)))


# dense form


def test_to_dense_placement():
    assert WORKED.to_dense() == RationalMatrix(
        [[0, 2, 0], [0, 0, 3], [F(1, 6), 0, 0]]
    )


def test_to_dense_two_by_two():
    p = ScaledPerm(Permutation((2, 1)), (F(3), F(1, 3)))
    assert p.to_dense() == RationalMatrix([[0, 3], [F(1, 3), 0]])


# composition and inverse


def test_compose_worked_example():
    q = ScaledPerm(Permutation((2, 1, 3)), (F(1, 2), F(2), F(1)))
    r = WORKED.compose(q)
    assert r.sigma.image == (1, 3, 2)
    assert r.scale == (F(4), F(3), F(1, 12))


def test_compose_with_identity():
    assert WORKED.compose(ScaledPerm.identity(3)) == WORKED
    assert ScaledPerm.identity(3).compose(WORKED) == WORKED


def test_compose_with_inverse_is_identity():
    assert WORKED.compose(WORKED.inverse()).is_identity()
    assert WORKED.inverse().compose(WORKED).is_identity()


def test_inverse_worked_example():
    inv = WORKED.inverse()
    assert inv.sigma.image == (3, 1, 2)
    assert inv.scale == (F(6), F(1, 2), F(1, 3))


def test_inverse_is_involution():
    assert WORKED.inverse().inverse() == WORKED


def test_not_abelian():
    s = ScaledPerm(Permutation((2, 1, 3)), (F(1),) * 3)
    t = ScaledPerm(Permutation((1, 3, 2)), (F(1),) * 3)
    assert s.compose(t).sigma.image == (3, 1, 2)
    assert t.compose(s).sigma.image == (2, 3, 1)
    assert s.compose(t) != t.compose(s)


def test_det_examples():
    assert ScaledPerm(Permutation((2, 1, 3)), (F(2), F(1, 2), F(1))).det() == -1
    assert ScaledPerm.identity(3).det() == 1
    assert WORKED.det() == 1
    assert WORKED.det() == WORKED.to_dense().det()


# action on vectors


def test_apply_worked_example():
    assert WORKED.apply((F(1), F(2), F(4))) == (F(4), F(12), F(1, 6))


def test_apply_identity():
    y = (F(3), F(-1), F(7))
    assert ScaledPerm.identity(3).apply(y) == y


def test_apply_two_by_two():
    p = ScaledPerm(Permutation((2, 1)), (F(3), F(1, 3)))
    assert p.apply((F(1), F(1))) == (F(3), F(1, 3))


# affine layer


def test_affine_apply_pure_translation():
    s = AffineSymmetry(ScaledPerm.identity(3), (F(1), F(2), F(3)))
    assert s.apply((F(0), F(0), F(0))) == (F(1), F(2), F(3))


def test_affine_apply_zero_translation():
    s = AffineSymmetry(WORKED, (F(0),) * 3)
    assert s.apply((F(1), F(2), F(4))) == (F(4), F(12), F(1, 6))


def test_affine_compose_translations_add():
    u = AffineSymmetry(ScaledPerm.identity(2), (F(1), F(2)))
    v = AffineSymmetry(ScaledPerm.identity(2), (F(3), F(5)))
    w = u.compose(v)
    assert w.linear.is_identity()
    assert w.translation == (F(4), F(7))


def test_affine_compose_worked_example():
    swap = ScaledPerm(Permutation((2, 1)), (F(1), F(1)))
    s = AffineSymmetry(swap, (F(1), F(0)))
    t = AffineSymmetry(ScaledPerm.identity(2), (F(0), F(1)))
    u = s.compose(t)
    assert u.linear == swap
    assert u.translation == (F(2), F(0))


def test_affine_inverse_pure_translation():
    s = AffineSymmetry(ScaledPerm.identity(3), (F(1), F(2), F(3)))
    assert s.inverse().translation == (F(-1), F(-2), F(-3))


def test_affine_inverse_worked_example():
    s = AffineSymmetry(WORKED, (F(1), F(0), F(0)))
    inv = s.inverse()
    assert inv.linear == WORKED.inverse()
    assert inv.translation == (F(0), F(-1, 2), F(0))
    assert s.compose(inv).is_identity()
    assert inv.compose(s).is_identity()


def test_affine_identity_inverse():
    e = AffineSymmetry.identity(3)
    assert e.inverse() == e


def test_affine_translation_length_checked():
    with pytest.raises(DimensionMismatch):
        AffineSymmetry(WORKED, (F(1), F(2)))


# metric


def test_metric_power_examples():
    assert metric_power((F(1), F(2), F(4))) == 8
    assert metric_power((F(4), F(12), F(1, 6))) == 8
    assert metric_power((F(0), F(5), F(7))) == 0


def test_metric_power_needs_two_coordinates():
    with pytest.raises(DimensionMismatch):
        metric_power((F(2),))


def test_metric_examples():
    assert metric((1, 2, 4)) == 2.0
    assert metric((1, 1, 1, 1)) == 1.0


def test_metric_negative_radicand_even_n():
    with pytest.raises(NegativeRadicand):
        metric((-1, 1, 1, 1))


def test_metric_signed_root_odd_n():
    assert metric((-1, 2, 4)) == -2.0
    assert metric((-8.0, 1, 1)) == -2.0


# properties


@given(scaled_perms(n=4), scaled_perms(n=4), scaled_perms(n=4))
def test_scaled_perm_group_axioms(p, q, r):
    assert p.compose(q).compose(r) == p.compose(q.compose(r))
    e = ScaledPerm.identity(4)
    assert p.compose(e) == p and e.compose(p) == p
    assert p.compose(p.inverse()).is_identity()
    assert p.inverse().compose(p).is_identity()


@given(scaled_perms())
def test_closure_scale_product_is_one(p):
    product = F(1)
    for a in p.inverse().scale:
        product *= a
    assert product == 1


@given(scaled_perms(n=3), scaled_perms(n=3))
def test_compose_matches_dense_product(p, q):
    assert p.compose(q).to_dense() == p.to_dense() @ q.to_dense()


@given(scaled_perms())
def test_inverse_matches_dense_inverse(p):
    n = p.n
    assert p.inverse().to_dense() @ p.to_dense() == RationalMatrix.identity(n)
    assert p.to_dense() @ p.inverse().to_dense() == RationalMatrix.identity(n)


@given(scaled_perms())
def test_det_matches_sign_and_cofactor(p):
    assert p.det() == p.sigma.sign() == p.to_dense().det()


@given(scaled_perms(n=3))
def test_metric_power_invariance(p):
    y = (F(1), F(2), F(4))
    assert metric_power(p.apply(y)) == metric_power(y)


@given(scaled_perms(n=3))
def test_action_compatible_with_composition(p):
    q = ScaledPerm(Permutation((3, 1, 2)), (F(5), F(1), F(1, 5)))
    y = (F(1), F(-2), F(3))
    assert p.compose(q).apply(y) == p.apply(q.apply(y))


@given(affine_symmetries(n=3), affine_symmetries(n=3), affine_symmetries(n=3))
def test_affine_group_axioms(s, t, u):
    assert s.compose(t).compose(u) == s.compose(t.compose(u))
    e = AffineSymmetry.identity(3)
    assert s.compose(e) == s and e.compose(s) == s
    assert s.compose(s.inverse()).is_identity()
    assert s.inverse().compose(s).is_identity()


@given(affine_symmetries(n=3), affine_symmetries(n=3))
def test_affine_compose_is_pointwise_composition(s, t):
    for y in ((F(0), F(0), F(0)), (F(1), F(2), F(4)), (F(-3), F(1, 2), F(5))):
        assert s.compose(t).apply(y) == s.apply(t.apply(y))


@given(affine_symmetries(n=3))
def test_translation_does_not_affect_invariance(s):
    # the fiber transformation law uses only the Jacobian
    y = (F(2), F(3), F(5))
    assert metric_power(s.linear.apply(y)) == metric_power(y)
