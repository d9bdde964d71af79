#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for partitions and bi-partitions
"""

import pytest

from src.errors import InvalidPartitionError
from src.partitions import (EMPTY, BiPartition, Partition, add_one_box, add_two_boxes_row_or_column,
                            enumerate_bipartitions, enumerate_partitions, format_bipartition, interleaves,
                            parse_bipartition, parse_partition, partition_count, remove_one_box)


def test_enumeration_order():
    assert [p.parts for p in enumerate_partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert enumerate_partitions(0) == [EMPTY]


def test_partition_numbers():
    assert [partition_count(n) for n in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    assert all(len(enumerate_partitions(n)) == partition_count(n) for n in range(9))


def test_bipartitions_of_two():
    assert [format_bipartition(bp) for bp in enumerate_bipartitions(2)] == ['2;-', '1,1;-', '1;1', '-;2', '-;1,1']


def test_parse_and_format():
    assert parse_partition('3,1,1') == Partition((3, 1, 1))
    assert parse_partition('-') == EMPTY
    assert str(parse_bipartition('3,1,1;2')) == '3,1,1;2'
    assert parse_bipartition('-;1') == BiPartition(EMPTY, Partition((1,)))


@pytest.mark.parametrize('text', ['2,3', '0', '1,-1', 'a'])
def test_bad_partition_text(text):
    with pytest.raises(InvalidPartitionError):
        parse_partition(text)


def test_bipartition_needs_one_separator():
    with pytest.raises(InvalidPartitionError):
        parse_bipartition('1;1;1')


def test_transpose_and_size():
    p = Partition((3, 1))
    assert p.transpose() == Partition((2, 1, 1))
    assert p.size == 4 and p.length == 2
    assert p.part(1) == 3 and p.part(5) == 0
    assert BiPartition(p, EMPTY).transpose() == BiPartition(EMPTY, p)


def test_interleaving():
    one, two = Partition((1,)), Partition((2,))
    assert interleaves(one, two)
    assert not interleaves(two, one)
    assert interleaves(EMPTY, one)
    assert interleaves(one, one)
    assert not interleaves(Partition((1, 1)), one)


def test_add_one_box():
    assert add_one_box(Partition((2, 1))) == {Partition((3, 1)), Partition((2, 2)), Partition((2, 1, 1))}
    assert add_one_box(EMPTY) == {Partition((1,))}


def test_remove_one_box():
    assert remove_one_box(Partition((2, 1))) == {Partition((2,)), Partition((1, 1))}
    assert remove_one_box(Partition((2, 2))) == {Partition((2, 1))}
    assert remove_one_box(EMPTY) == set()
    for lam in enumerate_partitions(5):
        assert all(lam in add_one_box(smaller) for smaller in remove_one_box(lam))


def test_add_two_boxes_in_a_row_or_column():
    assert add_two_boxes_row_or_column(Partition((1,))) == {Partition((3,)), Partition((1, 1, 1))}
    assert add_two_boxes_row_or_column(EMPTY) == {Partition((2,)), Partition((1, 1))}
