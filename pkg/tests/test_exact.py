import pytest
from hypothesis import given, strategies as st

from wkcorr.exact import double_factorial, factorial, pow24_times_factorial


def brute_factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def brute_double_factorial(n):
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


@pytest.mark.parametrize("n,expected", [(0, 1), (5, 120), (20, 2432902008176640000)])
def test_factorial_values(n, expected):
    assert factorial(n) == expected
    assert factorial(n) == brute_factorial(n)


@pytest.mark.parametrize("n,expected", [(-1, 1), (0, 1), (5, 15), (11, 10395)])
def test_double_factorial_values(n, expected):
    assert double_factorial(n) == expected


@pytest.mark.parametrize("g,expected", [(0, 1), (1, 24), (2, 1152)])
def test_pow24_times_factorial_values(g, expected):
    assert pow24_times_factorial(g) == expected
    assert pow24_times_factorial(g) == 24**g * brute_factorial(g)


def test_domain_errors():
    with pytest.raises(ValueError):
        factorial(-1)
    with pytest.raises(ValueError):
        double_factorial(-2)
    with pytest.raises(ValueError):
        double_factorial(-3)
    with pytest.raises(ValueError):
        pow24_times_factorial(-1)


@given(st.integers(min_value=-1, max_value=400))
def test_double_factorial_matches_brute_force(n):
    assert double_factorial(n) == brute_double_factorial(n)


@given(st.integers(min_value=1, max_value=300))
def test_double_factorial_recurrence(n):
    assert double_factorial(n) == n * double_factorial(n - 2)


@given(st.integers(min_value=1, max_value=300))
def test_factorial_splits_into_double_factorials(n):
    assert factorial(n) == double_factorial(n) * double_factorial(n - 1)


@given(st.integers(min_value=0, max_value=150))
def test_even_double_factorial_closed_form(half):
    n = 2 * half
    assert double_factorial(n) == 2**half * factorial(half)
