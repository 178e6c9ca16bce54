"""Which intersection patterns behave like classical complete intersections?

On a product of projective spaces, unlike on P^N, a complete intersection
need not be arithmetically Cohen-Macaulay.  Two combinatorial tests decide
the good cases: the regular-sequence inequalities and the ordering
conditions.  This script runs them on the instructive small examples.
"""

from __future__ import annotations

from biproj import (
    dualizing_bidegree,
    is_acm,
    is_acm_order,
    is_canonical_ample,
    is_regular_sequence_criterion,
    make_spec,
    regular_criterion_warning,
)


def inspect(m, n, pairs, note=""):
    spec = make_spec(m, n, pairs)
    print(f"P^{m} x P^{n}, bidegrees {pairs}  {note}")
    print(f"  regular sequence : {is_regular_sequence_criterion(spec)}")
    print(f"  ordering         : {is_acm_order(spec)}")
    print(f"  ACM              : {is_acm(spec)}")
    print(f"  canonical ample  : {is_canonical_ample(spec)}")
    print(f"  dualizing twist  : {tuple(dualizing_bidegree(spec))}")
    if regular_criterion_warning(spec):
        print("  note: outside the proven hypothesis of the inequality test "
              "(1-dimensional factor with a reversed twist); the finite-field "
              "oracle can double-check such patterns")
    print()


def main():
    print("The classic failure: a (2,0) divisor on P^1 x P^1 is a double line")
    print("whose coordinate ring is not Cohen-Macaulay.\n")
    inspect(1, 1, [(2, 0)])

    print("A curve of bidegree (a,b) on the quadric P^1 x P^1 is fine as long")
    print("as |a-b| < 2:\n")
    inspect(1, 1, [(3, 3)])
    inspect(1, 1, [(3, 1)])

    print("Two curves on P^1 x P^2 with the SAME Hilbert polynomial 10t - 5,")
    print("but only the first passes the ordering conditions:\n")
    inspect(1, 2, [(2, 2), (1, 2)], "(the well-behaved one)")
    inspect(1, 2, [(3, 2), (0, 2)], "(regular sequence, bad ordering)")

    print("The canonical genus-8 pattern on P^2 x P^2 - ample divisors with")
    print("dualizing twist (1,1), automatically ACM:\n")
    inspect(2, 2, [(1, 1), (1, 2), (2, 1)])


if __name__ == "__main__":
    main()
