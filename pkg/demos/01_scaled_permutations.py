"""Tour of the exact scaled-permutation group.

Every element is a permutation sigma plus one nonzero rational per row,
with the scale product pinned to 1.  All arithmetic is exact, so the
group laws below hold with zero tolerance.
"""

from fractions import Fraction as F

from bmsym import AffineSymmetry, Permutation, ScaledPerm


def main():
    p = ScaledPerm(Permutation((2, 3, 1)), (F(2), F(3), F(1, 6)))
    q = ScaledPerm(Permutation((2, 1, 3)), (F(1, 2), F(2), F(1)))

    print("p =", p)
    print("q =", q)
    print()

    print("dense form of p:")
    for row in p.to_dense().rows:
        print("  ", [str(v) for v in row])
    print()

    r = p.compose(q)
    print("p . q has permutation", r.sigma.image, "and scales",
          [str(a) for a in r.scale])
    print("dense oracle agrees:",
          r.to_dense() == p.to_dense() @ q.to_dense())
    print()

    inv = p.inverse()
    print("p^-1 has permutation", inv.sigma.image, "and scales",
          [str(a) for a in inv.scale])
    print("p . p^-1 is the identity:", p.compose(inv).is_identity())
    print("det(p) = sign(sigma) =", p.det())
    print()

    s = ScaledPerm(Permutation((2, 1, 3)), (F(1),) * 3)
    t = ScaledPerm(Permutation((1, 3, 2)), (F(1),) * 3)
    print("the group is not abelian:")
    print("  s.t permutation:", s.compose(t).sigma.image)
    print("  t.s permutation:", t.compose(s).sigma.image)
    print()

    affine = AffineSymmetry(p, (F(1), F(0), F(0)))
    back = affine.inverse()
    print("affine map x -> p x + (1,0,0); its inverse translates by",
          [str(v) for v in back.translation])
    print("their composite is the identity map:",
          affine.compose(back).is_identity())


if __name__ == "__main__":
    main()
