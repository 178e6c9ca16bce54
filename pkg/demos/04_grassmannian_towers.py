"""Parameter-space dimensions as towers of Grassmannian bundles.

Each distinct bidegree contributes one level: a Grassmannian of spaces of
forms on the intersection cut out so far.  The fiber dimensions total to the
dimension of the family of such complete intersections; subtracting the
automorphisms of the ambient gives the moduli dimension.
"""

from __future__ import annotations

from biproj import hilbert_scheme_dimension, make_spec

CASES = [
    ((1, 2), [(1, 1), (3, 3)], "trigonal genus-7 curves"),
    ((1, 3), [(1, 1), (1, 2), (1, 2)], "tetragonal genus-7 curves"),
    ((2, 2), [(1, 1), (1, 1), (2, 2)], "genus-7 curves with two (1,1) forms"),
    ((2, 2), [(1, 1), (1, 2), (2, 1)], "pentagonal genus-8 curves"),
]


def main():
    for (m, n), pairs, label in CASES:
        spec = make_spec(m, n, pairs)
        report = hilbert_scheme_dimension(spec)
        print(f"{label}: bidegrees {pairs} on P^{m} x P^{n}")
        print("  level  bidegree  mult  sections  kernel  rank  fiber")
        for i, level in enumerate(report.levels, start=1):
            print(
                f"  {i:5d}  {tuple(level.bidegree)!s:>8}  {level.multiplicity:4d}"
                f"  {level.ambient_sections:8d}  {level.kernel_dim:6d}"
                f"  {level.bundle_rank:4d}  {level.fiber_dim:5d}"
            )
        print(f"  family dimension   = {report.hilbert_dim}")
        print(f"  ambient symmetries = {report.group_dim}")
        print(f"  moduli dimension   = {report.moduli_dim}")
        print(f"  finite stabilizer  = {report.stabilizer_finite}")
        print()

    print("Reading the genus-8 tower: a P^8 of (1,1) forms, then a P^14 of")
    print("(1,2) forms on that hypersurface (18 ambient sections minus a")
    print("3-dimensional kernel, minus one for projectivizing), then another")
    print("P^14 of (2,1) forms: 8 + 14 + 14 = 36, and 36 - 16 = 20 moduli.")


if __name__ == "__main__":
    main()
