"""Independent ground truth: psi-class intersection numbers by recursion.

Implements the standard KdV/Virasoro (DVV) recursion with string-equation
shortcuts, memoized on the canonical (genus, sorted index tuple) key.  This
module exists only to validate the closed forms; it shares nothing with them
beyond the double-factorial primitive.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import double_factorial

__all__ = ["intersection", "one_point", "clear_memo"]

_ZERO = Fraction(0)
_ONE = Fraction(1)

_MEMO: dict[tuple[int, tuple[int, ...]], Fraction] = {}


def clear_memo() -> None:
    _MEMO.clear()


def intersection(g: int, indices: tuple[int, ...] | list[int]) -> Fraction:
    """<tau_{d1} ... tau_{dn}>_g, zero off the dimension constraint."""
    return _eval(g, tuple(sorted(indices)))


def one_point(g: int) -> Fraction:
    """<tau_{3g-2}>_g, the one-index anchor value 1/(24**g * g!)."""
    if g < 1:
        raise ValueError(f"genus must be >= 1, got {g}")
    return _eval(g, (3 * g - 2,))


def _eval(g: int, d: tuple[int, ...]) -> Fraction:
    if g < 0 or any(x < 0 for x in d):
        return _ZERO
    n = len(d)
    if sum(d) != 3 * g + n - 3:
        return _ZERO
    if g == 0 and n < 3:
        return _ZERO
    key = (g, d)
    cached = _MEMO.get(key)
    if cached is not None:
        return cached
    if key == (0, (0, 0, 0)):
        value = _ONE
    elif key == (1, (1,)):
        value = Fraction(1, 24)
    elif d[0] == 0:
        value = _string_equation(g, d[1:])
    else:
        value = _dvv_step(g, d)
    _MEMO[key] = value
    return value


def _string_equation(g: int, rest: tuple[int, ...]) -> Fraction:
    total = _ZERO
    for j in range(len(rest)):
        lowered = rest[:j] + (rest[j] - 1,) + rest[j + 1 :]
        total += _eval(g, tuple(sorted(lowered)))
    return total


def _dvv_step(g: int, d: tuple[int, ...]) -> Fraction:
    # Apply the recursion to the largest index, written as k + 1.
    k = d[-1] - 1
    rest = d[:-1]
    m = len(rest)

    total = _ZERO
    for j in range(m):
        dj = rest[j]
        merged = rest[:j] + (k + dj,) + rest[j + 1 :]
        total += Fraction(
            double_factorial(2 * k + 2 * dj + 1), double_factorial(2 * dj - 1)
        ) * _eval(g, tuple(sorted(merged)))

    bracket_sum = _ZERO
    for a in range(k):
        b = k - 1 - a
        contribution = _eval(g - 1, tuple(sorted(rest + (a, b))))
        for mask in range(1 << m):
            left = tuple(rest[i] for i in range(m) if mask >> i & 1)
            right = tuple(rest[i] for i in range(m) if not mask >> i & 1)
            for g_left in range(g + 1):
                first = _eval(g_left, tuple(sorted((a,) + left)))
                if first:
                    contribution += first * _eval(g - g_left, tuple(sorted((b,) + right)))
        bracket_sum += double_factorial(2 * a + 1) * double_factorial(2 * b + 1) * contribution

    return (total + bracket_sum / 2) / double_factorial(2 * k + 3)
