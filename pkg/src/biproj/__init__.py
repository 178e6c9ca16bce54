"""Exact toolkit for complete intersections on a product P^m x P^n of two
projective spaces.

Capabilities, all in exact integer/rational arithmetic:

* cohomology of the twists O(a,b) and their Euler characteristics;
* regular-sequence and ACM criteria for intersection patterns, dualizing
  bidegrees, recognition of canonically embedded ample patterns;
* graded ideal dimensions, Hilbert functions and Hilbert polynomials by
  inclusion-exclusion, curve genus;
* parameter-space dimensions via towers of Grassmannian bundles and the
  induced moduli dimensions;
* independent verification of every dimension count by randomized linear
  algebra over a prime field;
* enumeration of all canonical ample patterns of an ambient.
"""

from .cohomology import (
    AmbientSpace,
    Bidegree,
    binomial,
    euler_characteristic,
    euler_characteristic_polynomial,
    h0_dim,
    line_bundle_cohomology,
)
from .errors import InvalidSpecError, NotAcmError
from .polynomials import RationalPolynomial, binomial_shift_polynomial
from .specs import (
    CiSpec,
    DegreeGroup,
    dualizing_bidegree,
    group,
    hypersurface_hilbert_polynomial,
    hypersurface_hp_ambiguity,
    is_acm,
    is_acm_order,
    is_canonical_ample,
    is_regular_sequence_criterion,
    make_spec,
    regular_criterion_warning,
)
from .koszul import (
    genus_of_curve,
    hilbert_function,
    hilbert_function_consistency,
    hilbert_polynomial,
    ideal_h0,
    stabilization_bound,
)
from .tower import (
    TowerLevel,
    TowerReport,
    hilbert_scheme_dimension,
    moduli_dimension,
    stabilizer_is_finite,
)
from .oracle import (
    FormSample,
    MonomialBasis,
    OracleReport,
    OracleRow,
    ideal_dim_bruteforce,
    monomial_basis,
    sample_form,
    verify_spec,
)
from .catalog import CatalogEntry, enumerate_canonical, merge_swap_equivalent

__version__ = "0.1.0"

__all__ = [
    "AmbientSpace",
    "Bidegree",
    "CatalogEntry",
    "CiSpec",
    "DegreeGroup",
    "FormSample",
    "InvalidSpecError",
    "MonomialBasis",
    "NotAcmError",
    "OracleReport",
    "OracleRow",
    "RationalPolynomial",
    "TowerLevel",
    "TowerReport",
    "binomial",
    "binomial_shift_polynomial",
    "dualizing_bidegree",
    "enumerate_canonical",
    "euler_characteristic",
    "euler_characteristic_polynomial",
    "genus_of_curve",
    "group",
    "h0_dim",
    "hilbert_function",
    "hilbert_function_consistency",
    "hilbert_polynomial",
    "hilbert_scheme_dimension",
    "hypersurface_hilbert_polynomial",
    "hypersurface_hp_ambiguity",
    "ideal_dim_bruteforce",
    "ideal_h0",
    "is_acm",
    "is_acm_order",
    "is_canonical_ample",
    "is_regular_sequence_criterion",
    "line_bundle_cohomology",
    "make_spec",
    "merge_swap_equivalent",
    "moduli_dimension",
    "monomial_basis",
    "regular_criterion_warning",
    "sample_form",
    "stabilization_bound",
    "stabilizer_is_finite",
    "verify_spec",
]
