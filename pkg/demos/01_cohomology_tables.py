"""Cohomology of line bundles O(a,b) on a product of two projective spaces.

Walks through the four sign regimes of the twist, shows Serre duality in
action, and checks the Euler characteristic against the generalized binomial
product.  Everything is exact integer arithmetic.
"""

from __future__ import annotations

from biproj import (
    AmbientSpace,
    binomial,
    euler_characteristic,
    line_bundle_cohomology,
)


def show(space, d):
    h = line_bundle_cohomology(space, d)
    chi = euler_characteristic(space, d)
    print(f"  O{d!r:10}  h = {h}   chi = {chi}")


def main():
    space = AmbientSpace(1, 2)
    print(f"Ambient: P^{space.m} x P^{space.n}\n")

    print("Sections only (both twists nonnegative):")
    for d in [(0, 0), (1, 1), (4, 1), (2, 3)]:
        show(space, d)

    print("\nFirst factor deep enough below zero moves cohomology to degree m = 1:")
    for d in [(-2, 0), (-3, 1), (-4, 2)]:
        show(space, d)

    print("\nSecond factor negative moves it to degree n = 2:")
    for d in [(0, -3), (2, -4)]:
        show(space, d)

    print("\nBoth negative concentrates in top degree m + n = 3:")
    for d in [(-2, -3), (-3, -4)]:
        show(space, d)

    print("\nThe dead zone -m-1 < a < 0 (here a = -1) kills everything:")
    for d in [(-1, 5), (3, -1), (-1, -1)]:
        show(space, d)

    print("\nSerre duality pairs (a,b) with (-a-m-1, -b-n-1), reversing degrees:")
    for d in [(2, 1), (-3, 4)]:
        a, b = d
        dual = (-a - space.m - 1, -b - space.n - 1)
        print(f"  h{d} = {line_bundle_cohomology(space, d)}")
        print(f"  h{dual} = {line_bundle_cohomology(space, dual)}  (reversed)")

    print("\nEuler characteristic always equals the generalized binomial product:")
    for d in [(3, 3), (-2, 0), (-5, -4)]:
        a, b = d
        product = binomial(space.m + a, space.m) * binomial(space.n + b, space.n)
        print(f"  chi{d} = {euler_characteristic(space, d)} = "
              f"binomial({space.m + a},{space.m}) * binomial({space.n + b},{space.n}) = {product}")


if __name__ == "__main__":
    main()
