from fractions import Fraction

import pytest

from wkcorr import correlators
from wkcorr.exact import pow24_times_factorial
from wkcorr.oracle import intersection, one_point


def test_base_cases():
    assert intersection(0, (0, 0, 0)) == 1
    assert intersection(1, (1,)) == Fraction(1, 24)


def test_dimension_constraint_and_stability():
    assert intersection(1, (2,)) == 0  # sum != 3g + n - 3
    assert intersection(0, (1,)) == 0  # unstable
    assert intersection(0, (0, 1)) == 0  # unstable
    assert intersection(2, (1, 7)) == 0  # off-dimension


@pytest.mark.parametrize(
    "g,indices,expected",
    [
        # Genus-0 string-equation chain.
        ((0), (0, 0, 0, 1), Fraction(1)),
        ((0), (0, 0, 1, 1, 0), Fraction(2)),
        # Genus 1.
        ((1), (0, 2), Fraction(1, 24)),
        ((1), (1, 1), Fraction(1, 24)),
        ((1), (0, 0, 3), Fraction(1, 24)),
        ((1), (0, 1, 2), Fraction(1, 12)),
        ((1), (1, 1, 1), Fraction(1, 12)),
        # Genus 2.
        ((2), (4,), Fraction(1, 1152)),
        ((2), (0, 5), Fraction(1, 1152)),
        ((2), (1, 4), Fraction(1, 384)),
        ((2), (2, 3), Fraction(29, 5760)),
        # Genus 3 two-point values.
        ((3), (1, 7), Fraction(5, 82944)),
        ((3), (2, 6), Fraction(77, 414720)),
        ((3), (3, 5), Fraction(503, 1451520)),
        ((3), (4, 4), Fraction(607, 1451520)),
    ],
)
def test_known_values(g, indices, expected):
    assert intersection(g, indices) == expected


def test_symmetry_in_indices():
    assert intersection(2, (3, 2)) == intersection(2, (2, 3))
    assert intersection(1, (2, 1, 0)) == intersection(1, (0, 1, 2))


@pytest.mark.parametrize("g", range(1, 9))
def test_one_point_closed_form(g):
    assert one_point(g) == Fraction(1, pow24_times_factorial(g))


@pytest.mark.parametrize("g", range(1, 6))
def test_string_equation_on_two_point(g):
    # <tau_0 tau_{3g-1} ...> with an extra marked point reduces correctly.
    for d1 in range(1, 3 * g):
        d2 = 3 * g - d1
        lhs = intersection(g, (0, d1, d2))
        rhs = intersection(g, (d1 - 1, d2)) + intersection(g, (d1, d2 - 1))
        assert lhs == rhs


@pytest.mark.parametrize("g", range(1, 6))
def test_dilaton_equation_on_two_point(g):
    # <tau_1 tau_{3g-2} tau_d> = (2g - 2 + 2) <tau_{3g-2} ... > style check
    for d1 in range(3 * g):
        d2 = 3 * g - 1 - d1
        lhs = intersection(g, (1, d1, d2))
        rhs = 2 * g * intersection(g, (d1, d2))
        assert lhs == rhs


@pytest.mark.parametrize("g", range(1, 7))
def test_oracle_matches_closed_forms(g):
    for d1 in range(3 * g):
        d2 = 3 * g - 1 - d1
        assert intersection(g, (d1, d2)) == correlators.two_point(d1, d2, "both")
