"""Rational root extraction, including repeated roots and huge coefficients."""

from __future__ import annotations

from fractions import Fraction

import pytest

from ordens.ratroots import rational_roots_monic


def roots(poly):
    return sorted(rational_roots_monic(poly))


def test_linear():
    assert roots([Fraction(3), Fraction(1)]) == [-3]
    assert roots([Fraction(-1, 2), Fraction(1)]) == [Fraction(1, 2)]


def test_quadratic():
    assert roots([-16, 0, 1]) == [-4, 4]
    assert roots([2, 0, 1]) == []
    assert roots([0, 0, 1]) == [0]  # double root at zero


def test_double_root_not_missed():
    # (x - 2)**2 * (x + 3) = x**3 - x**2 - 8x + 12
    assert roots([12, -8, -1, 1]) == [-3, 2]


def test_cubic_with_repeated_factor():
    # (x + 2)**2 * (x - 4) = x**3 - 12x - 16
    assert roots([-16, -12, 0, 1]) == [-2, 4]


def test_cubic_no_rational_roots():
    assert roots([8, -12, 0, 1]) == []  # x**3 - 12x + 8


def test_rational_coefficients():
    # (x - 1/2)(x - 3)(x + 5/2) = x**3 - x**2 - 29/4 x + 15/4
    assert roots([Fraction(15, 4), Fraction(-29, 4), -1, 1]) == [Fraction(-5, 2), Fraction(1, 2), 3]


def test_quintic_mixed():
    # x(x - 1)(x + 1)(x**2 + 1)
    assert roots([0, -1, 0, 0, 0, 1]) == [-1, 0, 1]


def test_huge_coefficients():
    r = 2 ** 300
    assert roots([-r * r, 0, 1]) == [-r, r]
    # degree 3 with a large exact root
    big = 5 ** 80
    # (x - big)(x**2 + x + 1)
    poly = [-big, 1 - big, 1 - big, 1]
    assert roots(poly) == [big]


def test_requires_monic():
    with pytest.raises(ValueError):
        rational_roots_monic([1, 2])
