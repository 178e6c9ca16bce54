"""Brute-force verification of the inclusion-exclusion dimension counts by
explicit linear algebra over a prime field.

For each generator bidegree a dense random form is sampled; the degree-d
piece of the ideal they span is materialized as the matrix whose columns are
the coefficient vectors of F_i * mu over all monomials mu of complementary
bidegree, and its rank is computed by Gaussian elimination mod p.  Genericity
makes the rank equal the predicted count with overwhelming probability at the
default prime 32003, and the rank can never exceed the prediction, so a
formula bug shows up as a reproducible mismatch rather than bad luck.

Reproducibility: the coefficient stream of each form is derived from the
string key "form:{seed}:{prime}:{a}:{b}:{ordinal}", so identical inputs give
identical matrices no matter how calls are scheduled.  verify_spec runs its
trials with child seeds seed+0, seed+1, ...
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .cohomology import AmbientSpace, Bidegree, as_bidegree, h0_dim, weak_compositions
from .errors import InvalidSpecError
from .koszul import ideal_h0
from .specs import CiSpec, require_acm

DEFAULT_PRIME = 32003
DEFAULT_TRIALS = 3

# Rank computation keeps entries in int64; products must stay below 2^63.
_MAX_PRIME = 1 << 31

_MILLER_RABIN_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin, exact for every p below 3.3e24."""
    if p < 2:
        return False
    for q in _MILLER_RABIN_BASES:
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in _MILLER_RABIN_BASES:
        x = pow(base, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def _require_prime(p: int) -> None:
    if not isinstance(p, int) or not _is_prime(p):
        raise InvalidSpecError(f"{p} is not prime")
    if p >= _MAX_PRIME:
        raise InvalidSpecError(
            f"prime {p} exceeds the 2^31 limit of the int64 elimination"
        )


@dataclass(frozen=True)
class MonomialBasis:
    """Deterministic monomial basis of the sections of O(a,b): exponent
    vectors (x-part of length m+1, then y-part of length n+1) listed in
    lexicographically decreasing order."""

    space: AmbientSpace
    bidegree: Bidegree
    exponents: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.exponents)


def monomial_basis(space: AmbientSpace, d) -> MonomialBasis:
    d = as_bidegree(d)
    if d.a < 0 or d.b < 0:
        raise InvalidSpecError(f"bidegree {tuple(d)} has no monomials")
    exponents = tuple(
        x + y
        for x in weak_compositions(d.a, space.m + 1)
        for y in weak_compositions(d.b, space.n + 1)
    )
    assert len(exponents) == h0_dim(space, d)
    return MonomialBasis(space, d, exponents)


@dataclass(frozen=True)
class FormSample:
    """A dense random form: one residue mod p per basis monomial."""

    bidegree: Bidegree
    coefficients: tuple[int, ...]
    seed: int


def sample_form(
    space: AmbientSpace, bidegree, prime: int, seed: int, ordinal: int
) -> FormSample:
    """Sample the `ordinal`-th generator form.  Every coefficient is drawn
    uniformly (zero allowed), matching the genericity the counts assume."""
    bidegree = as_bidegree(bidegree)
    basis = monomial_basis(space, bidegree)
    rng = random.Random(f"form:{seed}:{prime}:{bidegree.a}:{bidegree.b}:{ordinal}")
    coefficients = tuple(rng.randrange(prime) for _ in range(len(basis)))
    return FormSample(bidegree, coefficients, seed)


def _rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """Rank over F_p by exact row reduction with partial pivoting in column
    order.  Entries stay below p, so int64 products cannot overflow."""
    a = np.mod(matrix, p)
    n_rows, n_cols = a.shape
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        nonzero = np.nonzero(a[rank:, col])[0]
        if nonzero.size == 0:
            continue
        pivot = rank + int(nonzero[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inverse = pow(int(a[rank, col]), -1, p)
        a[rank, col:] = a[rank, col:] * inverse % p
        below = np.nonzero(a[rank + 1 :, col])[0]
        if below.size:
            rows = rank + 1 + below
            factors = a[rows, col][:, None]
            a[rows, col:] = (a[rows, col:] - factors * a[rank, col:]) % p
        rank += 1
    return rank


def ideal_dim_bruteforce(
    space: AmbientSpace,
    generators: Sequence,
    twist,
    prime: int = DEFAULT_PRIME,
    seed: int = 0,
) -> int:
    """Rank over F_p of the multiplication matrix of random forms.

    Columns are the products F_i * mu over all monomials mu of bidegree
    twist - deg F_i (generators with a negative difference contribute no
    columns); rows are indexed by the monomial basis of the twist.  The
    matrix is assembled sparsely, one generator support per column.
    """
    _require_prime(prime)
    twist = as_bidegree(twist)
    if twist.a < 0 or twist.b < 0:
        raise InvalidSpecError(f"twist {tuple(twist)} must be effective")
    gens = [as_bidegree(g) for g in generators]
    target = monomial_basis(space, twist)
    row_of = {e: i for i, e in enumerate(target.exponents)}

    columns: list[tuple[list[int], tuple[int, ...]]] = []
    for ordinal, g in enumerate(gens):
        diff = twist - g
        if diff.a < 0 or diff.b < 0:
            continue
        form = sample_form(space, g, prime, seed, ordinal)
        support = monomial_basis(space, g).exponents
        for mu in monomial_basis(space, diff).exponents:
            rows = [
                row_of[tuple(e + u for e, u in zip(exp, mu))] for exp in support
            ]
            columns.append((rows, form.coefficients))
    if not columns:
        return 0

    matrix = np.zeros((len(target), len(columns)), dtype=np.int64)
    for j, (rows, coeffs) in enumerate(columns):
        # Coefficients accumulate: distinct support monomials stay distinct
        # after multiplying by mu, so each row receives exactly one term.
        matrix[rows, j] = coeffs
    return _rank_mod_p(matrix, prime)


class OracleRow(NamedTuple):
    d: int
    predicted: int
    observed: tuple[int, ...]
    passed: bool


@dataclass(frozen=True)
class OracleReport:
    prime: int
    seed: int
    trials: int
    rows: tuple[OracleRow, ...]

    @property
    def all_pass(self) -> bool:
        return all(row.passed for row in self.rows)


def verify_spec(
    spec: CiSpec,
    d_max: int,
    prime: int = DEFAULT_PRIME,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
) -> OracleReport:
    """Compare the inclusion-exclusion count with the brute-force rank at
    every diagonal twist (d,d) for d = 0..d_max.

    A row passes when the observed rank equals the prediction in at least one
    trial and never exceeds it: random forms can only lose rank, so any
    excess is a formula bug, while a uniform shortfall across independent
    seeds points at the count rather than at bad luck.
    """
    require_acm(spec)
    _require_prime(prime)
    if trials < 1:
        raise InvalidSpecError("at least one trial is required")
    if d_max < 0:
        raise InvalidSpecError("d_max must be >= 0")
    rows = []
    for d in range(d_max + 1):
        diagonal = Bidegree(d, d)
        predicted = ideal_h0(spec.space, spec.bidegrees, diagonal)
        observed = tuple(
            ideal_dim_bruteforce(
                spec.space, spec.bidegrees, diagonal, prime, seed + trial
            )
            for trial in range(trials)
        )
        passed = any(o == predicted for o in observed) and all(
            o <= predicted for o in observed
        )
        rows.append(OracleRow(d, predicted, observed, passed))
    return OracleReport(prime=prime, seed=seed, trials=trials, rows=tuple(rows))
