"""Exact two-point correlators of psi-class intersection numbers.

Two independent closed forms (a weighted coefficient sum and a double-
factorial product form), machine verification of the identities relating
them, and a memoized KdV-recursion oracle for cross-validation.  All
arithmetic is exact big-rational; no floats anywhere.
"""

from .coefficients import bdy_coeff, zograf_coeff
from .correlators import (
    EquivalenceError,
    TwoPointIndex,
    genus_row,
    two_point,
    two_point_bdy,
    two_point_zograf,
)
from .identities import (
    VerificationReport,
    VerificationSummary,
    check_equivalence,
    check_increment,
    check_lemma,
    verify_range,
)
from .oracle import intersection, one_point

__version__ = "0.1.0"

__all__ = [
    "EquivalenceError",
    "TwoPointIndex",
    "VerificationReport",
    "VerificationSummary",
    "bdy_coeff",
    "check_equivalence",
    "check_increment",
    "check_lemma",
    "genus_row",
    "intersection",
    "one_point",
    "two_point",
    "two_point_bdy",
    "two_point_zograf",
    "verify_range",
    "zograf_coeff",
]
