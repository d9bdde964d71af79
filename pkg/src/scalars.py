#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Exact scalars in the ring Q[sqrt 2]
Values are sympy expressions kept in the expanded form a + b*sqrt(2) with
rational a, b, so that structural equality is numeric equality.
"""

from fractions import Fraction
from numbers import Rational as RationalNumber
from typing import Tuple, Union

import sympy
from sympy import Integer, Rational, sqrt

Number = Union[int, Fraction, sympy.Expr]

SQRT2 = sqrt(2)
ZERO = Integer(0)
ONE = Integer(1)
INV_SQRT2 = SQRT2 / 2


def canonical(value: sympy.Expr) -> sympy.Expr:
    if value.is_Rational:
        return value
    return sympy.expand(sympy.radsimp(value))


def split(value: Number) -> Tuple[Rational, Rational]:
    """(a, b) with value = a + b*sqrt(2)"""
    value = to_scalar(value)
    b = value.coeff(SQRT2)
    a = canonical(value - b * SQRT2)
    return a, b


def to_scalar(value: Number) -> sympy.Expr:
    if isinstance(value, sympy.Basic):
        if value.is_Rational:
            return value
        value = canonical(value)
        b = value.coeff(SQRT2)
        if not (b.is_Rational and canonical(value - b * SQRT2).is_Rational):
            raise TypeError(f"cannot use {value} as an element of Q[sqrt2]")
        return value
    if isinstance(value, int):
        return Integer(value)
    if isinstance(value, RationalNumber):
        return Rational(value.numerator, value.denominator)
    raise TypeError(f"cannot use {value!r} as an element of Q[sqrt2]")


def power_of_sqrt2(exponent: int) -> sympy.Expr:
    """sqrt(2)**exponent, exponent may be negative"""
    return SQRT2 ** exponent


def is_rational(value: Number) -> bool:
    return to_scalar(value).is_Rational


def is_zero(value: Number) -> bool:
    return to_scalar(value) == 0


def format_scalar(value: Number) -> str:
    a, b = split(value)
    if b == 0:
        return str(a)
    radical = 'sqrt2' if b == 1 else ('-sqrt2' if b == -1 else f"{b}*sqrt2")
    if a == 0:
        return radical
    if radical.startswith('-'):
        return f"{a}{radical}"
    return f"{a}+{radical}"
