"""Enumerate every canonical ample intersection pattern of the small ambients.

A pattern of m+n-1 ample bidegrees with column sums (m+2, n+2) cuts out a
canonically embedded curve; such patterns exist only for m, n <= 3.  Each is
annotated with its genus and the dimensions of its family and moduli space.
"""

from __future__ import annotations

from biproj import AmbientSpace, enumerate_canonical


def main():
    for m in range(1, 4):
        for n in range(m, 4):
            space = AmbientSpace(m, n)
            entries = enumerate_canonical(space)
            if not entries:
                continue
            print(f"P^{m} x P^{n}  (genus bound {(m + 1) * (n + 1)}):")
            for e in entries:
                pattern = ", ".join(str(tuple(d)) for d in e.spec.bidegrees)
                print(
                    f"  [{pattern}]  genus {e.genus:2d}   family dim {e.hilbert_dim:2d}"
                    f"   moduli dim {e.moduli_dim:2d}"
                )
            print()

    print("Notable rows: the (3,3) curve on the quadric is the classical")
    print("genus-4 canonical curve with its 9-dimensional moduli; P^2 x P^2")
    print("carries the genus-7 stratum (moduli 16) and the genus-8 stratum")
    print("(moduli 20).  Larger ambients admit no canonical ample pattern:")
    print(f"  P^1 x P^4 -> {len(enumerate_canonical(AmbientSpace(1, 4)))} entries")


if __name__ == "__main__":
    main()
