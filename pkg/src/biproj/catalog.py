"""Enumerate the canonical ample complete-intersection patterns of an ambient
and annotate each with genus and dimension data.

A canonical ample pattern has m+n-1 bidegrees, every entry at least 1, and
column sums (m+2, n+2); the enumeration pairs every composition of m+2 with
every composition of n+2, deduplicates as multisets, and keeps the ACM ones.
On P^2 x P^2 this recovers exactly the genus-7 pattern (1,1),(1,1),(2,2) and
the genus-8 pattern (1,1),(1,2),(2,1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .cohomology import AmbientSpace, Bidegree, weak_compositions
from .koszul import genus_of_curve
from .specs import CiSpec, is_acm, is_canonical_ample, make_spec
from .tower import hilbert_scheme_dimension


@dataclass(frozen=True)
class CatalogEntry:
    spec: CiSpec
    genus: int
    hilbert_dim: int
    moduli_dim: int
    stabilizer_finite: bool


def _positive_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    for comp in weak_compositions(total - parts, parts):
        yield tuple(x + 1 for x in comp)


def canonical_ample_multisets(space: AmbientSpace) -> list[tuple[Bidegree, ...]]:
    """All candidate multisets before the ACM filter, sorted."""
    c = space.dimension - 1
    multisets = {
        tuple(sorted(Bidegree(a, b) for a, b in zip(a_comp, b_comp)))
        for a_comp in _positive_compositions(space.m + 2, c)
        for b_comp in _positive_compositions(space.n + 2, c)
    }
    return sorted(multisets)


def enumerate_canonical(space: AmbientSpace) -> tuple[CatalogEntry, ...]:
    """The catalog of canonical ample patterns, in lexicographic order of
    their bidegree multisets.  Patterns and the pattern order are independent
    of how the enumeration is scheduled."""
    entries = []
    for multiset in canonical_ample_multisets(space):
        spec = make_spec(space.m, space.n, multiset)
        assert is_canonical_ample(spec)
        if not is_acm(spec):
            continue
        report = hilbert_scheme_dimension(spec)
        entries.append(
            CatalogEntry(
                spec=spec,
                genus=genus_of_curve(spec),
                hilbert_dim=report.hilbert_dim,
                moduli_dim=report.moduli_dim,
                stabilizer_finite=report.stabilizer_finite,
            )
        )
    return tuple(entries)


def merge_swap_equivalent(entries: Iterable[CatalogEntry]) -> tuple[CatalogEntry, ...]:
    """Drop entries whose bidegree multiset is the factor swap of an earlier
    one.  Only meaningful when m = n (the swap of an entry otherwise lives in
    the catalog of the swapped ambient); entries on asymmetric ambients pass
    through unchanged."""
    kept = []
    seen = set()
    for entry in entries:
        own = tuple(entry.spec.bidegrees)
        swapped = tuple(sorted(d.swap() for d in entry.spec.bidegrees))
        key = min(own, swapped)
        if key in seen:
            continue
        seen.add(key)
        kept.append(entry)
    return tuple(kept)
