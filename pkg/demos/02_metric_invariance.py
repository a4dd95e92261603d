"""The product form y^1 ... y^n is exactly invariant under the group.

metric_power computes the rational product (the n-th power of the metric),
so invariance is an identity we can test with ==, not a tolerance check.
The real metric is the n-th root, compared here in floating point.
"""

import random
from fractions import Fraction as F

from bmsym import metric, metric_power
from bmsym.sampling import random_scaled_perm, random_vector


def main():
    y = (F(1), F(2), F(4))
    print("y =", [str(v) for v in y])
    print("product form:", metric_power(y), "   real metric:", metric(y))
    print()

    rng = random.Random(0)
    print("applying 5 random symmetries to y; the product never moves:")
    for _ in range(5):
        p = random_scaled_perm(3, rng)
        image = p.apply(y)
        print("  ", [str(v) for v in image], "->", metric_power(image))
    print()

    print("exact invariance over 10000 random (element, point) pairs:")
    for n in range(2, 6):
        hits = 0
        for _ in range(2500):
            p = random_scaled_perm(n, rng)
            v = random_vector(n, rng)
            hits += metric_power(p.apply(v)) == metric_power(v)
        print(f"  n={n}: {hits}/2500 exact matches")
    print()

    print("float cross-check in the positive orthant, positive scales:")
    worst = 0.0
    for _ in range(2000):
        p = random_scaled_perm(4, rng, positive=True)
        v = tuple(F(rng.uniform(0.1, 10.0)) for _ in range(4))
        worst = max(worst, abs(metric(p.apply(v)) - metric(v)) / metric(v))
    print(f"  worst relative error over 2000 samples: {worst:.3e}")


if __name__ == "__main__":
    main()
