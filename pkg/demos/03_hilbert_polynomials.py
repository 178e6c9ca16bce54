"""Hilbert functions, Hilbert polynomials and curve genus by
inclusion-exclusion over the defining bidegrees.

Shows the alternating-sum computation, where the function starts agreeing
with the polynomial, the genus read off p(t) = deg * t + 1 - g, and the
hypersurface bidegrees an Hilbert polynomial cannot distinguish.
"""

from __future__ import annotations

from biproj import (
    AmbientSpace,
    genus_of_curve,
    hilbert_function,
    hilbert_polynomial,
    hypersurface_hp_ambiguity,
    hypersurface_hilbert_polynomial,
    make_spec,
    stabilization_bound,
)


def main():
    spec = make_spec(1, 2, [(2, 2), (1, 2)])
    poly = hilbert_polynomial(spec)
    print(f"Bidegrees {[tuple(d) for d in spec.bidegrees]} on P^1 x P^2:")
    print(f"  Hilbert polynomial p(t) = {poly}")
    print(f"  genus = 1 - p(0) = {genus_of_curve(spec)}")

    bound = stabilization_bound(spec)
    print(f"\n  d :  function  polynomial   (guaranteed equal from d = {bound})")
    for d in range(0, bound + 3):
        hf = hilbert_function(spec, d)
        pv = poly(d)
        marker = "" if hf == pv else "   <- curve still has h^1 here"
        print(f"  {d:2d}:  {hf:8d}  {pv!s:>10}{marker}")

    print("\nGenus of the five reference curves:")
    for mn, pairs in [
        ((1, 2), [(1, 1), (3, 3)]),
        ((1, 3), [(1, 1), (1, 2), (1, 2)]),
        ((2, 2), [(1, 1), (1, 1), (2, 2)]),
        ((2, 2), [(1, 1), (1, 2), (2, 1)]),
        ((1, 4), [(1, 1), (1, 1), (0, 2), (1, 2)]),
    ]:
        s = make_spec(*mn, pairs)
        p = hilbert_polynomial(s)
        print(f"  {pairs} on P^{mn[0]} x P^{mn[1]}: p(t) = {p},  genus {genus_of_curve(s)}")
    print("  (the trigonal (1,1),(3,3) curve has Segre degree 9, not 2g-2 = 12:")
    print("   its dualizing twist is (2,1), so it is not canonically embedded)")

    print("\nHypersurfaces sharing a Hilbert polynomial on P^1 x P^2:")
    X = AmbientSpace(1, 2)
    for d in [(2, 1), (3, 3), (3, 1), (2, 2)]:
        members = hypersurface_hp_ambiguity(X, d)
        p = hypersurface_hilbert_polynomial(X, d)
        print(f"  degree {d}: p(t) = {p}   indistinguishable set {[tuple(e) for e in members]}")


if __name__ == "__main__":
    main()
