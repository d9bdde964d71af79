#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for the theta relation, first occurrence, Ω and the descent
"""

import pytest

from src.errors import GroupMismatchError, PreconditionError
from src.partitions import parse_bipartition
from src.symbols import (GroupKind, GroupTag, enumerate_group_symbols, enumerate_symbols, lambda_O_I, lambda_O_II,
                         parse_symbol, rank, upsilon_inverse)
from src.theta import (descend_O_plus, first_occurrence, in_theta_relation, minimal_partner_rank, occurrence_gap,
                       omega, omega_sharp, theta_pairs, theta_partners)


def symbols(*texts):
    return [parse_symbol(t) for t in texts]


def test_theta_relation_of_rank_one():
    assert in_theta_relation(parse_symbol('1;0'), parse_symbol('0;-'), 1)
    assert not in_theta_relation(parse_symbol('0;1'), parse_symbol('0;-'), 1)
    assert theta_partners(parse_symbol('1;0'), 1, 1) == symbols('1;-', '1,0;1')


def test_theta_pairs_carry_groups():
    pairs = theta_pairs(parse_symbol('1;0'), 1, 0)
    assert len(pairs) == 1
    assert pairs[0].left_group == GroupTag(GroupKind.O_PLUS, 1)
    assert pairs[0].right_group == GroupTag(GroupKind.SP, 0)


@pytest.mark.parametrize('text, eps, expected', [
    ('1;0', 1, 0),
    ('0;1', 1, 1),
    ('-;-', 1, 0),
])
def test_first_occurrence_examples(text, eps, expected):
    assert first_occurrence(parse_symbol(text), eps) == expected


@pytest.mark.parametrize('k', range(4))
def test_first_occurrence_of_cuspidals(k):
    eps = 1 if k % 2 == 0 else -1
    assert first_occurrence(lambda_O_I(k), eps) == k * (k - 1)
    assert first_occurrence(lambda_O_II(k), eps) == k * (k + 1)


@pytest.mark.parametrize('kind', [GroupKind.O_PLUS, GroupKind.O_MINUS])
@pytest.mark.parametrize('n', range(4))
def test_closed_form_and_gap(kind, n):
    eps = kind.epsilon
    for lam in enumerate_group_symbols(GroupTag(kind, n)):
        n0 = first_occurrence(lam, eps)
        assert n0 == minimal_partner_rank(lam, eps)
        assert n0 - first_occurrence(lam.transpose(), eps) == occurrence_gap(lam, eps)
        assert theta_partners(lam, eps, n0 + 1)


def test_equal_indices_for_a_symmetric_upsilon():
    lam = upsilon_inverse(parse_bipartition('1,1;1'), 0)
    assert occurrence_gap(lam, 1) == 0
    assert first_occurrence(lam, 1) == first_occurrence(lam.transpose(), 1) == 2


def test_omega_golden_cases():
    assert set(omega(parse_symbol('2,0;1'), GroupTag(GroupKind.SP, 2))) == set(
        symbols('3,0;1', '2,1;1', '2,0;2', '3,1,0;2,1'))
    assert set(omega(parse_symbol('1;-'))) == set(symbols('2;-', '2,1;0', '2,0;1'))
    assert set(omega(parse_symbol('1,0;1'))) == set(symbols('2,0;1', '1,0;2', '2,1,0;2,1'))
    assert omega(parse_symbol('-;-')) == symbols('1;0', '0;1')


def test_omega_checks_the_group():
    with pytest.raises(GroupMismatchError):
        omega(parse_symbol('2,0;1'), GroupTag(GroupKind.SP, 3))


def test_omega_sharp_of_the_empty_symbol():
    assert omega_sharp(parse_symbol('-;-')) == symbols('2;0', '2,1;1,0', '0;2', '1,0;2,1')


def test_omega_sharp_is_reached_in_two_steps():
    for lam in enumerate_symbols(2, 1):
        twice = {t for s in omega(lam) for t in omega(s)}
        assert set(omega_sharp(lam)) <= twice


def test_descent_example():
    assert descend_O_plus(parse_symbol('2,1;1,0')) == parse_symbol('1;0')


def test_descent_moves_away_from_a_degenerate_target():
    # lowering the first differing entry would give the degenerate 2,1;2,1
    assert descend_O_plus(parse_symbol('3,1;2,1')) == parse_symbol('3,0;2,1')


@pytest.mark.parametrize('text', ['3,1;2,1', '2,1;3,1', '4,1;3,1', '3,1;4,1', '4,2,1;3,2,1', '3,2,1;4,2,1'])
def test_descent_never_lands_on_a_degenerate_symbol(text):
    lam = parse_symbol(text)
    lower = descend_O_plus(lam)
    assert not lower.is_degenerate
    assert rank(lower) == rank(lam) - 1
    grown = omega(lower)
    assert lam in grown
    assert lam.transpose() not in grown


@pytest.mark.parametrize('n', range(2, 9))
def test_descent_lands_below(n):
    for lam in enumerate_symbols(n, 0):
        if lam.is_degenerate:
            continue
        lower = descend_O_plus(lam)
        assert rank(lower) == n - 1
        grown = omega(lower)
        assert lam in grown
        assert lam.transpose() not in grown


@pytest.mark.parametrize('text', ['1;1', '2,0;-', '1;0'])
def test_descent_preconditions(text):
    with pytest.raises(PreconditionError):
        descend_O_plus(parse_symbol(text))
