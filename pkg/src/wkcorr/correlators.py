"""Two-point correlators by each closed form, plus a checking dispatcher.

A two-point correlator of psi-class intersection numbers is non-zero only
when d1 + d2 = 3g - 1 for a positive integer genus g; the residue pair
(d1 mod 3, d2 mod 3) is then one of (1,1), (2,0), (0,2).

``two_point_bdy`` evaluates the weighted-sum closed form over the
``bdy_coeff`` family; ``two_point_zograf`` evaluates the product form over
``zograf_coeff`` partial sums.  Both are O(g) per full genus row thanks to
cached per-genus prefix sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import coefficients
from .exact import double_factorial, pow24_times_factorial

__all__ = [
    "TwoPointIndex",
    "EquivalenceError",
    "two_point",
    "two_point_bdy",
    "two_point_zograf",
    "genus_row",
    "clear_caches",
]


class EquivalenceError(ArithmeticError):
    """Raised when the two closed forms disagree (should never happen)."""

    def __init__(self, d1: int, d2: int, bdy_value: Fraction, zograf_value: Fraction):
        self.d1 = d1
        self.d2 = d2
        self.bdy_value = bdy_value
        self.zograf_value = zograf_value
        super().__init__(
            f"closed forms disagree at (d1, d2) = ({d1}, {d2}): "
            f"weighted-sum form gives {bdy_value}, product form gives {zograf_value}"
        )


@dataclass(frozen=True)
class TwoPointIndex:
    """A validated two-point index pair with derived genus."""

    d1: int
    d2: int

    def __post_init__(self) -> None:
        if self.d1 < 0 or self.d2 < 0:
            raise ValueError(f"indices must be non-negative, got ({self.d1}, {self.d2})")
        if (self.d1 + self.d2) % 3 != 2:
            raise ValueError(
                f"({self.d1}, {self.d2}) violates the dimension constraint "
                "d1 + d2 = 3g - 1; the correlator vanishes"
            )

    @property
    def g(self) -> int:
        return (self.d1 + self.d2 + 1) // 3


@lru_cache(maxsize=None)
def _bdy_weighted_sums(g: int) -> tuple[Fraction, ...]:
    """D[m] = sum_{l=0..m} sum_{i=0..l} a(i-1, 3g-i), for m = 0..3g.

    The weighted numerator sum_{l=0..m} (m+1-l) a(l-1, 3g-l) of the closed
    form equals D[m], so one pass serves the whole genus row.
    """
    sums = []
    prefix = Fraction(0)
    total = Fraction(0)
    for l in range(3 * g + 1):
        prefix += coefficients.bdy_coeff(l - 1, 3 * g - l)
        total += prefix
        sums.append(total)
    return tuple(sums)


@lru_cache(maxsize=None)
def _zograf_partial_sums(g: int) -> tuple[Fraction, ...]:
    """B[m] = sum_{i=1..m} b(g, i), for m = 0..3g-2."""
    sums = [Fraction(0)]
    for i in range(1, 3 * g - 1):
        sums.append(sums[-1] + coefficients.zograf_coeff(g, i))
    return tuple(sums)


def clear_caches() -> None:
    """Drop the per-genus prefix-sum caches (benchmarking, fault injection)."""
    _bdy_weighted_sums.cache_clear()
    _zograf_partial_sums.cache_clear()


def two_point_bdy(idx: TwoPointIndex) -> Fraction:
    """Weighted-sum closed form.

    The published form covers the residue cases (1,1) and (2,0); the (0,2)
    case is evaluated at the swapped index, which is legitimate because the
    correlator is symmetric in its two indices.
    """
    d1, d2 = idx.d1, idx.d2
    if d1 % 3 == 0:
        d1, d2 = d2, d1
    numerator = _bdy_weighted_sums(idx.g)[d1]
    return numerator / (double_factorial(2 * d1 + 1) * double_factorial(2 * d2 + 1))


def two_point_zograf(g: int, k: int) -> Fraction:
    """Product closed form for the pair (k, 3g - 1 - k).

    The partial sum sum_{i=1..k-1} b(g, i) is empty for k = 1.  For k = 0
    the printed sum would also be empty, which breaks both the known value
    at g = 1 and the reflection symmetry k <-> 3g-1-k; the signed convention
    sum_{i=1..-1} b(g, i) := -b(g, 0) restores both and is adopted here.
    """
    if g < 1:
        raise ValueError(f"genus must be >= 1, got {g}")
    if not 0 <= k <= 3 * g - 1:
        raise ValueError(f"k must lie in [0, 3g-1], got k = {k} at g = {g}")
    if k == 0:
        tail = -coefficients.zograf_coeff(g, 0)
    else:
        tail = _zograf_partial_sums(g)[k - 1]
    bracket = Fraction(6 * g - 3, 6 * g - 1) + tail
    prefactor = Fraction(
        double_factorial(6 * g - 1),
        pow24_times_factorial(g) * double_factorial(2 * k + 1) * double_factorial(6 * g - 1 - 2 * k),
    )
    return prefactor * bracket


def two_point(d1: int, d2: int, method: str = "both") -> Fraction:
    """Compute the correlator at (d1, d2) by the requested route.

    method "both" evaluates both closed forms, asserts exact agreement, and
    returns the common value; a mismatch raises EquivalenceError.
    """
    idx = TwoPointIndex(d1, d2)
    if method == "bdy":
        return two_point_bdy(idx)
    if method == "zograf":
        return two_point_zograf(idx.g, d1)
    if method == "both":
        lhs = two_point_bdy(idx)
        rhs = two_point_zograf(idx.g, d1)
        if lhs != rhs:
            raise EquivalenceError(d1, d2, lhs, rhs)
        return lhs
    raise ValueError(f"unknown method {method!r} (expected bdy, zograf, or both)")


def genus_row(g: int, method: str = "both") -> list[tuple[int, int, Fraction]]:
    """All (d1, d2, value) triples at genus g, ordered by d1 ascending."""
    if g < 1:
        raise ValueError(f"genus must be >= 1, got {g}")
    return [(d1, 3 * g - 1 - d1, two_point(d1, 3 * g - 1 - d1, method)) for d1 in range(3 * g)]
