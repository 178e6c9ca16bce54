"""Dimension of the parameter space of complete intersections as a tower of
Grassmannian bundles, and the induced moduli dimension.

Group the pattern into distinct bidegrees (alpha_r, beta_r) with
multiplicities m_r, taken in lexicographic order.  Level r of the tower is
the Grassmannian of m_r-dimensional spaces of forms of bidegree
(alpha_r, beta_r) on the intersection cut out so far:

    ambient_sections  h^0 of O(alpha_r, beta_r) on the ambient,
    kernel_dim        forms already vanishing on the previous stage,
                      counted by inclusion-exclusion over groups 1..r-1,
    bundle_rank       e_r = ambient_sections - kernel_dim,
    fiber_dim         m_r * (e_r - m_r), a projective space when m_r = 1.

The total fiber dimension is the parameter-space dimension; subtracting
dim PGL(m+1) x PGL(n+1) = m^2 + 2m + n^2 + 2n gives the moduli dimension.

The level computation is only valid for group orders in which no later
bidegree is componentwise dominated by an earlier one (otherwise forms of a
later group multiply into an earlier level's degree and the count overstates
the dimension).  Lexicographic order always satisfies this; the order-
explicit helper refuses orders that do not.

>>> from .specs import make_spec
>>> report = hilbert_scheme_dimension(make_spec(2, 2, [(1, 1), (1, 2), (2, 1)]))
>>> [level.fiber_dim for level in report.levels]
[8, 14, 14]
>>> report.hilbert_dim, report.moduli_dim
(36, 20)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .cohomology import AmbientSpace, Bidegree, h0_dim
from .errors import InvalidSpecError
from .koszul import ideal_h0
from .specs import CiSpec, DegreeGroup, group, require_acm


class TowerLevel(NamedTuple):
    bidegree: Bidegree
    multiplicity: int
    ambient_sections: int
    kernel_dim: int
    bundle_rank: int
    fiber_dim: int


@dataclass(frozen=True)
class TowerReport:
    """Per-level data plus the totals; every intermediate is kept so a reader
    can reconcile the count line by line."""

    levels: tuple[TowerLevel, ...]
    hilbert_dim: int
    group_dim: int
    moduli_dim: int
    stabilizer_finite: bool


def stabilizer_is_finite(spec: CiSpec) -> bool:
    """Whether the automorphisms of the ambient fixing a smooth member form a
    finite group: both dualizing twists agree and are positive."""
    total = spec.total_bidegree()
    d_a = total.a - spec.space.m - 1
    d_b = total.b - spec.space.n - 1
    return d_a == d_b and d_a > 0


def _is_admissible_order(groups: Sequence[DegreeGroup]) -> bool:
    """No later group bidegree componentwise below an earlier one."""
    for i, earlier in enumerate(groups):
        for later in groups[i + 1 :]:
            if (
                later.bidegree.a <= earlier.bidegree.a
                and later.bidegree.b <= earlier.bidegree.b
            ):
                return False
    return True


def _levels_for_order(
    space: AmbientSpace, groups: Sequence[DegreeGroup]
) -> list[TowerLevel]:
    if not _is_admissible_order(groups):
        raise InvalidSpecError(
            "group order must respect componentwise dominance; "
            f"got {[tuple(g.bidegree) for g in groups]}"
        )
    levels: list[TowerLevel] = []
    prefix: list[Bidegree] = []
    for g in groups:
        ambient = h0_dim(space, g.bidegree)
        kernel = ideal_h0(space, prefix, g.bidegree)
        rank = ambient - kernel
        if rank < g.multiplicity:
            raise InvalidSpecError(
                f"level {tuple(g.bidegree)} is infeasible: bundle rank {rank} "
                f"is below the multiplicity {g.multiplicity}"
            )
        fiber = g.multiplicity * (rank - g.multiplicity)
        levels.append(
            TowerLevel(g.bidegree, g.multiplicity, ambient, kernel, rank, fiber)
        )
        prefix.extend([g.bidegree] * g.multiplicity)
    return levels


def group_dimension(space: AmbientSpace) -> int:
    """dim PGL(m+1) x PGL(n+1)."""
    m, n = space.m, space.n
    return m * m + 2 * m + n * n + 2 * n


def hilbert_scheme_dimension(spec: CiSpec) -> TowerReport:
    """Build the tower in lexicographic group order and total the fibers."""
    require_acm(spec)
    levels = _levels_for_order(spec.space, group(spec))
    hilbert_dim = sum(level.fiber_dim for level in levels)
    g_dim = group_dimension(spec.space)
    return TowerReport(
        levels=tuple(levels),
        hilbert_dim=hilbert_dim,
        group_dim=g_dim,
        moduli_dim=hilbert_dim - g_dim,
        stabilizer_finite=stabilizer_is_finite(spec),
    )


def moduli_dimension(spec: CiSpec) -> TowerReport:
    """Identical report to hilbert_scheme_dimension; kept as a named entry
    point for the quotient-by-automorphisms reading of moduli_dim."""
    return hilbert_scheme_dimension(spec)
