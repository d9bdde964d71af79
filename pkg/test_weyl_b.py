#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for the Weyl group of type B, its classes and its character table
"""

import pytest

from src.errors import InvalidElementError, RankBoundError
from src.partitions import BiPartition, Partition, enumerate_bipartitions, parse_bipartition
from src.weyl_b import (SignedClass, brute_force_table, character, character_table, class_of_element,
                        domain_order, enumerate_classes, format_class, inner_product, restriction_equal_on_plus,
                        symmetric_character, weyl_order)

W2_VALUES = (
    (1, 1, 1, 1, 1),
    (1, 1, 1, -1, -1),
    (2, 0, -2, 0, 0),
    (1, -1, 1, 1, -1),
    (1, -1, 1, -1, 1),
)


def test_orders():
    assert [weyl_order(n) for n in range(5)] == [1, 2, 8, 48, 384]
    assert domain_order(2, 'plus') == 4
    assert domain_order(2, 'minus') == 4
    with pytest.raises(ValueError):
        domain_order(2, 'half')


def test_classes_of_w2():
    classes = enumerate_classes(2)
    assert [format_class(c) for c in classes] == ['1,1/-', '1/1', '-/1,1', '2/-', '-/2']
    assert [c.size for c in classes] == [1, 2, 1, 2, 2]
    assert sum(c.size for c in enumerate_classes(3)) == 48


def test_class_of_element():
    assert class_of_element((2, 1)) == SignedClass(Partition((2,)), Partition())
    assert class_of_element((-2, -1)) == SignedClass(Partition((2,)), Partition())
    assert class_of_element((-1, 2)) == SignedClass(Partition((1,)), Partition((1,)))
    assert class_of_element((-2, 1)) == SignedClass(Partition(), Partition((2,)))
    with pytest.raises(InvalidElementError):
        class_of_element((1, 1))


def test_character_table_of_w2():
    table = character_table(2)
    assert [str(bp) for bp in table.rows] == ['2;-', '1,1;-', '1;1', '-;2', '-;1,1']
    assert table.values == W2_VALUES


@pytest.mark.parametrize('n', range(4))
def test_brute_force_agrees(n):
    assert brute_force_table(n) == character_table(n)


def test_brute_force_is_bounded():
    with pytest.raises(RankBoundError):
        brute_force_table(4)


def test_rank_bound():
    with pytest.raises(RankBoundError):
        character_table(3, max_rank=2)


@pytest.mark.parametrize('n', range(5))
def test_row_orthonormality(n):
    table = character_table(n)
    rows = [table.row(bp) for bp in table.rows]
    for i, f in enumerate(rows):
        for j, h in enumerate(rows):
            assert inner_product(f, h) == (1 if i == j else 0)


@pytest.mark.parametrize('n', range(1, 5))
def test_sign_twist_and_restriction(n):
    for bp in enumerate_bipartitions(n):
        assert character(bp).times_sign() == character(bp.transpose())
        assert restriction_equal_on_plus(bp, bp.transpose())
        f = character(bp)
        assert inner_product(f, f, 'plus') == (2 if bp.is_degenerate else 1)


def test_inner_product_needs_one_rank():
    with pytest.raises(RankBoundError):
        inner_product(character(parse_bipartition('1;-')), character(parse_bipartition('2;-')))


@pytest.mark.parametrize('lam, rho, value', [
    ((2, 1), (1, 1, 1), 2),
    ((2, 1), (2, 1), 0),
    ((2, 1), (3,), -1),
    ((3,), (2, 1), 1),
    ((1, 1, 1), (2, 1), -1),
    ((), (), 1),
])
def test_symmetric_characters(lam, rho, value):
    assert symmetric_character(lam, rho) == value


def test_degree_of_induced_character():
    bp = BiPartition(Partition((1,)), Partition((1,)))
    assert character(bp)[enumerate_classes(2)[0]] == 2
