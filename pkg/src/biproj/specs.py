"""Complete-intersection patterns on P^m x P^n and their combinatorial criteria.

A pattern is an ambient space together with the multiset of bidegrees
(a_1,b_1), ..., (a_c,b_c) of the defining forms.  Two purely combinatorial
tests govern everything downstream:

* regular-sequence criterion: every nonempty subset S of the generators must
  satisfy sum_S (a_i - b_i) < m + 1 and sum_S (b_i - a_i) < n + 1.  The
  extremal subset keeps exactly the positive terms, so this collapses to the
  closed form sum_i max(a_i - b_i, 0) <= m and sum_i max(b_i - a_i, 0) <= n.

* ordering conditions: for every nonempty subset S and every generator g
  outside S,
      sum_S a < a_g + m + 1   or   b_g < sum_S b,   and
      sum_S b < b_g + n + 1   or   a_g < sum_S a.
  These make all the restriction maps used by the dimension counts
  surjective.  Checked by brute force over all (subset, outsider) pairs.

A pattern passing both tests is called ACM here.  Example: on P^1 x P^2 the
pair (2,2),(1,2) is ACM while (3,2),(0,2) is a regular sequence that fails
the ordering conditions, and the two cut out curves with the same Hilbert
polynomial 10t - 5.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, NamedTuple

from .cohomology import (
    AmbientSpace,
    Bidegree,
    as_bidegree,
    euler_characteristic_polynomial,
)
from .errors import InvalidSpecError, NotAcmError
from .polynomials import RationalPolynomial


@dataclass(frozen=True)
class CiSpec:
    """A complete-intersection pattern; bidegrees are stored sorted
    lexicographically, so equal multisets compare equal."""

    space: AmbientSpace
    bidegrees: tuple[Bidegree, ...]

    @property
    def codimension(self) -> int:
        return len(self.bidegrees)

    @property
    def dimension(self) -> int:
        return self.space.dimension - self.codimension

    def total_bidegree(self) -> Bidegree:
        total = Bidegree(0, 0)
        for d in self.bidegrees:
            total = total + d
        return total

    def swap(self) -> "CiSpec":
        return make_spec(
            self.space.n, self.space.m, [d.swap() for d in self.bidegrees]
        )


class DegreeGroup(NamedTuple):
    """A distinct bidegree together with its multiplicity in the pattern."""

    bidegree: Bidegree
    multiplicity: int


def make_spec(m: int, n: int, pairs: Iterable) -> CiSpec:
    """Validate and canonicalize a pattern.

    Rejects, each with its own diagnostic: codimension outside [1, m+n-1],
    negative bidegree entries, and total degree a+b < 2.
    """
    space = AmbientSpace(m, n)
    bidegrees = sorted(as_bidegree(p) for p in pairs)
    c = len(bidegrees)
    if c == 0:
        raise InvalidSpecError("at least one defining bidegree is required")
    if c > space.dimension - 1:
        raise InvalidSpecError(
            f"codimension {c} exceeds m+n-1 = {space.dimension - 1}; "
            "the intersection would not be positive-dimensional"
        )
    for d in bidegrees:
        if d.a < 0 or d.b < 0:
            raise InvalidSpecError(f"bidegree {tuple(d)} has a negative entry")
        if d.a + d.b < 2:
            raise InvalidSpecError(
                f"bidegree {tuple(d)} has total degree {d.a + d.b}; "
                "each defining form needs a + b >= 2"
            )
    return CiSpec(space, tuple(bidegrees))


def group(spec: CiSpec) -> tuple[DegreeGroup, ...]:
    """Run-length group the sorted bidegrees into (bidegree, multiplicity)."""
    return tuple(
        DegreeGroup(d, len(list(run))) for d, run in groupby(spec.bidegrees)
    )


def is_regular_sequence_criterion(spec: CiSpec) -> bool:
    """Whether generic forms of these bidegrees form a regular sequence.

    Closed form of the subset inequalities; see the module docstring.
    """
    excess_a = sum(max(d.a - d.b, 0) for d in spec.bidegrees)
    excess_b = sum(max(d.b - d.a, 0) for d in spec.bidegrees)
    return excess_a <= spec.space.m and excess_b <= spec.space.n


def regular_criterion_warning(spec: CiSpec) -> bool:
    """True when the regular-sequence criterion is applied outside the
    hypotheses under which it is exact: a one-dimensional factor whose twists
    exceed the other factor's (m = 1 with some a_i > b_i, or symmetrically
    n = 1 with some b_i > a_i).  The criterion is still evaluated verbatim;
    the finite-field oracle offers an independent check in this regime."""
    if spec.space.m == 1 and any(d.a > d.b for d in spec.bidegrees):
        return True
    if spec.space.n == 1 and any(d.b > d.a for d in spec.bidegrees):
        return True
    return False


def is_acm_order(spec: CiSpec) -> bool:
    """Brute-force check of the ordering conditions over all
    (nonempty subset, outside index) pairs; c is at most m+n-1, so the
    2^c * c loop is tiny."""
    m, n = spec.space.m, spec.space.n
    degs = spec.bidegrees
    c = len(degs)
    for mask in range(1, 1 << c):
        sum_a = sum(degs[i].a for i in range(c) if mask >> i & 1)
        sum_b = sum(degs[i].b for i in range(c) if mask >> i & 1)
        for gamma in range(c):
            if mask >> gamma & 1:
                continue
            a_g, b_g = degs[gamma]
            if not (sum_a < a_g + m + 1 or b_g < sum_b):
                return False
            if not (sum_b < b_g + n + 1 or a_g < sum_a):
                return False
    return True


def is_acm(spec: CiSpec) -> bool:
    """Regular-sequence criterion and ordering conditions together."""
    return is_regular_sequence_criterion(spec) and is_acm_order(spec)


def require_regular_sequence(spec: CiSpec) -> None:
    """Raise NotAcmError when the regular-sequence criterion fails."""
    if not is_regular_sequence_criterion(spec):
        raise NotAcmError(
            f"bidegrees {[tuple(d) for d in spec.bidegrees]} on "
            f"P^{spec.space.m} x P^{spec.space.n} fail the regular-sequence "
            "criterion (a subset degree inequality is violated)"
        )


def require_acm(spec: CiSpec) -> None:
    """Raise NotAcmError naming the violated criterion, if any."""
    require_regular_sequence(spec)
    if not is_acm_order(spec):
        raise NotAcmError(
            f"bidegrees {[tuple(d) for d in spec.bidegrees]} on "
            f"P^{spec.space.m} x P^{spec.space.n} fail the ordering conditions"
        )


def dualizing_bidegree(spec: CiSpec) -> Bidegree:
    """The twist realizing the dualizing sheaf: (sum a - m - 1, sum b - n - 1)."""
    total = spec.total_bidegree()
    return Bidegree(total.a - spec.space.m - 1, total.b - spec.space.n - 1)


def is_canonical_ample(spec: CiSpec) -> bool:
    """Whether the pattern cuts a canonical curve out of ample divisors:
    codimension m+n-1, every a_i >= 1 and b_i >= 1, and total bidegree
    (m+2, n+2) so that the dualizing twist is (1,1).  Such a pattern is
    automatically ACM; the test suite checks that as a theorem rather than
    assuming it."""
    if spec.codimension != spec.space.dimension - 1:
        return False
    if any(d.a < 1 or d.b < 1 for d in spec.bidegrees):
        return False
    return spec.total_bidegree() == Bidegree(spec.space.m + 2, spec.space.n + 2)


def hypersurface_hilbert_polynomial(space: AmbientSpace, d) -> RationalPolynomial:
    """Hilbert polynomial of a single hypersurface of bidegree d,
    chi(O(t,t)) - chi(O(t-a, t-b)).  Only Euler characteristics enter, so no
    ACM hypothesis is needed at codimension one."""
    d = as_bidegree(d)
    if d.a < 0 or d.b < 0 or d.a + d.b < 2:
        raise InvalidSpecError(
            f"hypersurface bidegree {tuple(d)} must be effective with a + b >= 2"
        )
    return euler_characteristic_polynomial(
        space, Bidegree(0, 0)
    ) - euler_characteristic_polynomial(space, d)


def hypersurface_hp_ambiguity(space: AmbientSpace, d) -> tuple[Bidegree, ...]:
    """All hypersurface bidegrees on this ambient with the same Hilbert
    polynomial as d.

    The only possible second member is (b + m - n, a) after normalizing to
    a >= b (inputs with a < b are computed on the swapped ambient and swapped
    back).  Rather than trusting the case analysis for when that candidate
    qualifies, membership is decided by actually comparing the two Hilbert
    polynomials; non-effective candidates and candidates with a + b < 2 are
    discarded.  Output is sorted lexicographically.
    """
    d = as_bidegree(d)
    if d.a < 0 or d.b < 0 or d.a + d.b < 2:
        raise InvalidSpecError(
            f"hypersurface bidegree {tuple(d)} must be effective with a + b >= 2"
        )
    if d.a < d.b:
        swapped = hypersurface_hp_ambiguity(space.swap(), d.swap())
        return tuple(sorted(e.swap() for e in swapped))
    members = [d]
    candidate = Bidegree(d.b + space.m - space.n, d.a)
    if (
        candidate.is_effective()
        and candidate.a + candidate.b >= 2
        and candidate != d
        and hypersurface_hilbert_polynomial(space, candidate)
        == hypersurface_hilbert_polynomial(space, d)
    ):
        members.append(candidate)
    return tuple(sorted(members))
