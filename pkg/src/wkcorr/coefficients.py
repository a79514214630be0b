"""The two coefficient families entering the closed-form correlators.

``bdy_coeff(k1, k2)`` is the family supported on index pairs with residues
(1,1), (0,2), (2,0) mod 3; every other pair evaluates to zero.
``zograf_coeff(g, k)`` is the family defined per residue of k mod 3 through
an auxiliary integer j.

Both are deterministic pure functions over the exact integer primitives.
Evaluation counters are kept for benchmark instrumentation only; they do not
affect results.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import double_factorial, factorial, pow24_times_factorial

__all__ = [
    "bdy_coeff",
    "zograf_coeff",
    "classify_bdy_pair",
    "lemma_scale",
    "eval_counts",
    "reset_eval_counts",
]

_ZERO = Fraction(0)

_eval_counts = {"bdy": 0, "zograf": 0}


def eval_counts() -> dict[str, int]:
    """Snapshot of coefficient evaluations since the last reset."""
    return dict(_eval_counts)


def reset_eval_counts() -> None:
    _eval_counts["bdy"] = 0
    _eval_counts["zograf"] = 0


def classify_bdy_pair(k1: int, k2: int) -> tuple[str, int, int] | None:
    """Residue-case classification of an index pair (k1, k2).

    Returns (case, g1, g2) where case is one of "one_one", "zero_two",
    "two_zero", or None when the pair matches no case (value zero).
    """
    r1, r2 = k1 % 3, k2 % 3
    if (r1, r2) == (1, 1):
        return ("one_one", (k1 + 2) // 3, (k2 + 2) // 3)
    if (r1, r2) == (0, 2):
        return ("zero_two", k1 // 3, (k2 + 1) // 3)
    if (r1, r2) == (2, 0):
        return ("two_zero", (k1 + 1) // 3, k2 // 3)
    return None


def bdy_coeff(k1: int, k2: int) -> Fraction:
    """Coefficient a(k1, k2) for k1, k2 >= -1; zero off the three cases."""
    if k1 < -1 or k2 < -1:
        raise ValueError(f"bdy_coeff indices must be >= -1, got ({k1}, {k2})")
    _eval_counts["bdy"] += 1
    case = classify_bdy_pair(k1, k2)
    if case is None:
        return _ZERO
    name, g1, g2 = case
    if name == "one_one":
        # k1 = 3*g1 - 2, k2 = 3*g2 - 2 with g1, g2 >= 1
        num = double_factorial(6 * g1 - 5) * double_factorial(6 * g2 - 5)
        den = 2 * 24 ** (g1 + g2 - 2) * factorial(g1 - 1) * factorial(g2 - 1)
        return Fraction(num, den)
    base = Fraction(
        double_factorial(6 * g1 - 1) * double_factorial(6 * g2 - 1),
        24 ** (g1 + g2) * factorial(g1) * factorial(g2),
    )
    if name == "zero_two":
        # k1 = 3*g1, k2 = 3*g2 - 1; at g2 = 0 the factor is 1/(-1) = -1
        return -base * Fraction(6 * g2 + 1, 6 * g2 - 1)
    # k1 = 3*g1 - 1, k2 = 3*g2
    return -base * Fraction(6 * g1 + 1, 6 * g1 - 1)


def zograf_coeff(g: int, k: int) -> Fraction:
    """Coefficient b(g, k) for g >= 1 and -1 <= k <= 3g - 1.

    Larger k would hit a negative factorial argument; the closed form never
    consumes such indices, so they are rejected.
    """
    if g < 1:
        raise ValueError(f"zograf_coeff requires g >= 1, got g = {g}")
    if not -1 <= k <= 3 * g - 1:
        raise ValueError(f"zograf_coeff requires -1 <= k <= 3g-1, got k = {k} at g = {g}")
    _eval_counts["zograf"] += 1
    prefactor = Fraction(double_factorial(6 * g - 3 - 2 * k), double_factorial(6 * g - 1))
    r = k % 3
    if r == 2:
        j = (k + 1) // 3
        branch = Fraction(
            double_factorial(6 * j - 1) * factorial(g - 1) * (g - 2 * j),
            factorial(j) * factorial(g - j),
        )
    elif r == 0:
        j = k // 3
        branch = Fraction(
            -2 * double_factorial(6 * j + 1) * factorial(g - 1),
            factorial(j) * factorial(g - 1 - j),
        )
    else:
        j = (k - 1) // 3
        branch = Fraction(
            2 * double_factorial(6 * j + 3) * factorial(g - 1),
            factorial(j) * factorial(g - 1 - j),
        )
    return prefactor * branch


def lemma_scale(g: int) -> Fraction:
    """(6g-1)!! / (24**g * g!), the factor bridging the two families."""
    return Fraction(double_factorial(6 * g - 1), pow24_times_factorial(g))
