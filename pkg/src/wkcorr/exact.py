"""Exact integer primitives shared by every formula.

All values are arbitrary-precision Python ints; rational results elsewhere
use :class:`fractions.Fraction`, which keeps numerator/denominator in lowest
terms with a positive denominator automatically.
"""

from __future__ import annotations

import math

__all__ = ["factorial", "double_factorial", "pow24_times_factorial"]

# Append-only caches keyed by the integer argument.
_FACTORIAL: dict[int, int] = {0: 1}
_DOUBLE_FACTORIAL: dict[int, int] = {-1: 1, 0: 1}
_POW24_FACTORIAL: dict[int, int] = {0: 1}


def factorial(n: int) -> int:
    """n! for n >= 0, memoized."""
    if n < 0:
        raise ValueError(f"factorial is undefined for n = {n}")
    value = _FACTORIAL.get(n)
    if value is None:
        value = math.factorial(n)
        _FACTORIAL[n] = value
    return value


def double_factorial(n: int) -> int:
    """n!! = n(n-2)(n-4)... down to 1 or 2, with (-1)!! = 0!! = 1.

    Arguments below -1 are rejected: no formula in this library evaluates
    them, so reaching one indicates an index bug.
    """
    if n < -1:
        raise ValueError(f"double factorial is undefined for n = {n}")
    value = _DOUBLE_FACTORIAL.get(n)
    if value is None:
        k = n - 2
        while k not in _DOUBLE_FACTORIAL:
            k -= 2
        value = _DOUBLE_FACTORIAL[k]
        while k < n:
            k += 2
            value *= k
            _DOUBLE_FACTORIAL[k] = value
    return value


def pow24_times_factorial(g: int) -> int:
    """24**g * g! for g >= 0, memoized (the recurring normalization)."""
    if g < 0:
        raise ValueError(f"pow24_times_factorial is undefined for g = {g}")
    value = _POW24_FACTORIAL.get(g)
    if value is None:
        k = g - 1
        while k not in _POW24_FACTORIAL:
            k -= 1
        value = _POW24_FACTORIAL[k]
        while k < g:
            k += 1
            value *= 24 * k
            _POW24_FACTORIAL[k] = value
    return value
