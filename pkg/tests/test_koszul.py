"""Ideal piece dimensions, Hilbert functions/polynomials and genus."""

from __future__ import annotations

import pytest

from biproj import (
    AmbientSpace,
    InvalidSpecError,
    NotAcmError,
    RationalPolynomial,
    dualizing_bidegree,
    genus_of_curve,
    hilbert_function,
    hilbert_function_consistency,
    hilbert_polynomial,
    ideal_h0,
    is_canonical_ample,
    make_spec,
    stabilization_bound,
)
from biproj.koszul import alternating_chi_polynomial
from biproj.cohomology import euler_characteristic_polynomial

X12 = AmbientSpace(1, 2)
X22 = AmbientSpace(2, 2)

P = RationalPolynomial.from_coefficients


def test_ideal_h0_examples():
    # two generic (1,1)-forms in twist (2,2): 9 + 9 - 1
    assert ideal_h0(X22, [(1, 1), (1, 1)], (2, 2)) == 17
    # single generator: one multiplication space of dimension 3*6
    assert ideal_h0(X12, [(1, 1)], (3, 3)) == 18
    assert ideal_h0(X12, [], (5, 5)) == 0


def test_ideal_h0_rejects_non_acm_prefix_with_named_criterion():
    with pytest.raises(NotAcmError, match="regular-sequence"):
        ideal_h0(AmbientSpace(1, 1), [(2, 0)], (3, 3))
    with pytest.raises(NotAcmError, match="ordering"):
        ideal_h0(X12, [(3, 2), (0, 2)], (4, 4))


def test_ideal_h0_monotone_in_twist():
    prefix = [(1, 1), (1, 2)]
    for a in range(5):
        for b in range(5):
            here = ideal_h0(X12, prefix, (a, b))
            assert ideal_h0(X12, prefix, (a + 1, b)) >= here
            assert ideal_h0(X12, prefix, (a, b + 1)) >= here


def test_ideal_h0_zero_below_all_generators():
    assert ideal_h0(X22, [(1, 1), (2, 2)], (0, 0)) == 0
    assert ideal_h0(X12, [(2, 2), (1, 2)], (0, 1)) == 0


def test_ideal_h0_permutation_invariant():
    assert ideal_h0(X22, [(2, 1), (1, 2), (1, 1)], (3, 3)) == ideal_h0(
        X22, [(1, 1), (1, 2), (2, 1)], (3, 3)
    )


def test_hilbert_function_examples():
    spec = make_spec(1, 2, [(2, 2), (1, 2)])
    # 40 - (6 + 9); Riemann-Roch cross-check: degree-30 bundle on a genus-6
    # curve has 30 + 1 - 6 = 25 sections
    assert hilbert_function(spec, 3) == 25
    assert hilbert_function(make_spec(1, 2, [(1, 1), (3, 3)]), 1) == 5
    for pairs, mn in [
        ([(2, 2), (1, 2)], (1, 2)),
        ([(1, 1), (3, 3)], (1, 2)),
        ([(1, 1), (1, 2), (2, 1)], (2, 2)),
        ([(3, 3)], (1, 1)),
    ]:
        assert hilbert_function(make_spec(*mn, pairs), 0) == 1  # connectedness


def test_hilbert_function_rejects_bad_input():
    with pytest.raises(NotAcmError):
        hilbert_function(make_spec(1, 2, [(3, 2), (0, 2)]), 3)
    with pytest.raises(InvalidSpecError):
        hilbert_function(make_spec(1, 2, [(2, 2), (1, 2)]), -1)


def test_hilbert_polynomial_examples():
    assert hilbert_polynomial(make_spec(1, 2, [(2, 2), (1, 2)])) == P([-5, 10])
    # trigonal curve: Segre degree 9 (not canonically embedded), genus 7
    assert hilbert_polynomial(make_spec(1, 2, [(1, 1), (3, 3)])) == P([-6, 9])
    assert hilbert_polynomial(make_spec(2, 2, [(1, 1), (1, 2), (2, 1)])) == P([-7, 14])


def test_hilbert_polynomial_via_finite_differences():
    """Independent oracle: interpolate the stabilized Hilbert function by
    first differences and compare coefficients."""
    for pairs, mn in [
        ([(2, 2), (1, 2)], (1, 2)),
        ([(1, 1), (3, 3)], (1, 2)),
        ([(1, 1), (1, 2), (2, 1)], (2, 2)),
    ]:
        spec = make_spec(*mn, pairs)
        poly = hilbert_polynomial(spec)
        assert poly.degree == 1
        d0 = stabilization_bound(spec)
        v0, v1 = hilbert_function(spec, d0), hilbert_function(spec, d0 + 1)
        slope = v1 - v0
        assert poly == P([v0 - slope * d0, slope])


def test_hilbert_polynomial_degree_matches_dimension():
    assert hilbert_polynomial(make_spec(2, 3, [(1, 1), (2, 2)])).degree == 3
    assert hilbert_polynomial(make_spec(1, 1, [(3, 3)])).degree == 1


def test_hilbert_polynomial_empty_generators_is_ambient_euler():
    poly = alternating_chi_polynomial(X12, [])
    assert poly == euler_characteristic_polynomial(X12, (0, 0))
    for t in range(6):
        assert poly(t) == (t + 1) * (t + 1) * (t + 2) // 2


def test_hilbert_polynomial_swap_invariant():
    for pairs, mn in [
        ([(2, 2), (1, 2)], (1, 2)),
        ([(1, 1), (1, 2), (2, 1)], (2, 2)),
        ([(1, 1), (1, 2), (1, 2)], (1, 3)),
    ]:
        spec = make_spec(*mn, pairs)
        assert hilbert_polynomial(spec.swap()) == hilbert_polynomial(spec)


def test_hilbert_polynomial_allows_regular_non_acm_order():
    """Euler characteristics are order-blind: the regular sequence
    (3,2),(0,2) fails the ordering conditions yet has the same Hilbert
    polynomial 10t - 5 as (2,2),(1,2)."""
    assert hilbert_polynomial(make_spec(1, 2, [(3, 2), (0, 2)])) == P([-5, 10])
    with pytest.raises(NotAcmError):
        hilbert_polynomial(make_spec(1, 1, [(2, 0)]))


def test_genus_examples():
    assert genus_of_curve(make_spec(1, 3, [(1, 1), (1, 2), (1, 2)])) == 7
    assert genus_of_curve(make_spec(1, 4, [(1, 1), (1, 1), (0, 2), (1, 2)])) == 8
    assert genus_of_curve(make_spec(1, 2, [(2, 2), (1, 2)])) == 6


def test_genus_rejects_non_curves():
    with pytest.raises(InvalidSpecError, match="not a curve"):
        genus_of_curve(make_spec(1, 2, [(1, 1)]))
    with pytest.raises(InvalidSpecError, match="not a curve"):
        genus_of_curve(make_spec(2, 3, [(1, 1), (2, 2)]))


def test_genus_leading_coefficient_for_canonical_patterns():
    for pairs, mn in [
        ([(1, 1), (1, 2), (2, 1)], (2, 2)),
        ([(1, 1), (1, 1), (2, 2)], (2, 2)),
        ([(1, 1), (1, 2), (1, 2)], (1, 3)),
        ([(3, 3)], (1, 1)),
    ]:
        spec = make_spec(*mn, pairs)
        assert is_canonical_ample(spec)
        assert dualizing_bidegree(spec) == (1, 1)
        poly = hilbert_polynomial(spec)
        assert poly.leading_coefficient == 2 * genus_of_curve(spec) - 2


def test_hilbert_function_consistency_examples():
    assert hilbert_function_consistency(make_spec(1, 2, [(2, 2), (1, 2)]), 7, 12)
    assert hilbert_function_consistency(make_spec(1, 2, [(1, 1), (3, 3)]), 8, 12)
    assert hilbert_function_consistency(make_spec(1, 1, [(3, 3)]), 6, 10)


def test_hilbert_function_consistency_rejects_low_dmin():
    spec = make_spec(1, 2, [(2, 2), (1, 2)])
    assert stabilization_bound(spec) == 7
    with pytest.raises(InvalidSpecError, match="stabilization"):
        hilbert_function_consistency(spec, 6, 12)
