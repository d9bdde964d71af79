#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for exact arithmetic in Q[sqrt2]
"""

from fractions import Fraction

import pytest
from sympy import Float, Integer, Rational, sqrt

from src.scalars import (INV_SQRT2, ONE, SQRT2, ZERO, canonical, format_scalar, is_rational, is_zero,
                         power_of_sqrt2, split, to_scalar)


def test_sqrt2_squares_to_two():
    assert SQRT2 * SQRT2 == 2
    assert SQRT2 * INV_SQRT2 == ONE


@pytest.mark.parametrize('exponent, expected', [
    (0, ONE),
    (1, SQRT2),
    (2, Integer(2)),
    (3, 2 * SQRT2),
    (-1, SQRT2 / 2),
    (-2, Rational(1, 2)),
])
def test_power_of_sqrt2(exponent, expected):
    assert power_of_sqrt2(exponent) == expected


def test_canonical_form_rationalizes_and_expands():
    assert canonical(1 / (1 + SQRT2)) == SQRT2 - 1
    assert canonical((1 + SQRT2) ** 2) == 3 + 2 * SQRT2
    assert is_zero((1 + SQRT2) * (1 - SQRT2) + 1)


def test_split():
    assert split(Rational(1, 4) + SQRT2 / 8) == (Rational(1, 4), Rational(1, 8))
    assert split(3) == (3, 0)
    assert split(-INV_SQRT2) == (0, Rational(-1, 2))


def test_conversion_from_python_numbers():
    assert to_scalar(Fraction(1, 2)) == Rational(1, 2)
    assert to_scalar(-3) == Integer(-3)
    assert is_rational(Fraction(2, 3))
    assert not is_rational(INV_SQRT2)
    assert is_zero(ZERO)


@pytest.mark.parametrize('value, text', [
    (ZERO, '0'),
    (Rational(1, 2), '1/2'),
    (Rational(-1, 4), '-1/4'),
    (INV_SQRT2, '1/2*sqrt2'),
    (-INV_SQRT2, '-1/2*sqrt2'),
    (SQRT2, 'sqrt2'),
    (-SQRT2, '-sqrt2'),
    (Rational(1, 4) + SQRT2 / 8, '1/4+1/8*sqrt2'),
    (Rational(1, 4) - SQRT2 / 8, '1/4-1/8*sqrt2'),
])
def test_text_rendering(value, text):
    assert format_scalar(value) == text


@pytest.mark.parametrize('value', [1.5, Float(1.5), sqrt(3), 'x'])
def test_values_outside_the_ring_are_rejected(value):
    with pytest.raises(TypeError):
        to_scalar(value)
