#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for cells inside special families
"""

import pytest

from src.almost_chars import is_uniform, sum_of_basis_vectors
from src.cells import (Arrangement, PairSubset, all_cells, cell, corrupt_cell, enumerate_arrangements,
                       find_separating_cell, pair_subsets, verify_cell_uniformity)
from src.errors import GroupMismatchError, PreconditionError
from src.special_symbols import SpecialSymbol, family_symbols, special_symbols_of
from src.symbols import GroupKind, GroupTag, format_symbol, parse_symbol

SP4 = GroupTag(GroupKind.SP, 2)
Z = SpecialSymbol(parse_symbol('2,0;1'))


def texts(symbols):
    return sorted(format_symbol(s) for s in symbols)


def test_arrangements_of_a_defect_one_symbol():
    arrangements = enumerate_arrangements(Z)
    assert [(a.pairs, a.isolated) for a in arrangements] == [(((0, 1),), 2), (((2, 1),), 0)]


def test_arrangement_must_use_every_single():
    with pytest.raises(PreconditionError):
        Arrangement(Z, ((2, 1),), None)


def test_cells_of_sp4():
    phi = Arrangement(Z, ((2, 1),), 0)
    empty, full = pair_subsets(phi)
    assert texts(cell(phi, empty, SP4)) == ['-;2,1,0', '2,1;0']
    assert texts(cell(phi, full, SP4)) == ['1,0;2', '2,0;1']
    assert verify_cell_uniformity(phi, empty, SP4)
    assert verify_cell_uniformity(phi, full, SP4)


def test_cells_of_so5_are_transposed():
    so5 = GroupTag(GroupKind.SO_ODD, 2)
    phi = Arrangement(Z, ((2, 1),), 0)
    empty = PairSubset(phi)
    assert texts(cell(phi, empty, so5)) == texts(s.transpose() for s in cell(phi, empty, SP4))
    assert verify_cell_uniformity(phi, empty, so5)


def test_o_minus_cell_of_rank_one():
    g = GroupTag(GroupKind.O_MINUS, 1)
    z = SpecialSymbol(parse_symbol('1;0'))
    phi = enumerate_arrangements(z)[0]
    assert phi.pairs == ((1, 0),)
    members = cell(phi, PairSubset(phi), g)
    assert texts(members) == ['-;1,0', '1,0;-']
    assert verify_cell_uniformity(phi, PairSubset(phi), g)
    with pytest.raises(PreconditionError):
        cell(phi, PairSubset(phi, frozenset(phi.pairs)), g)


def test_cells_are_not_defined_for_special_orthogonal_groups():
    phi = enumerate_arrangements(SpecialSymbol(parse_symbol('1;0')))[0]
    with pytest.raises(GroupMismatchError):
        all_cells(phi.owner, GroupTag(GroupKind.SO_PLUS, 1))


def test_separating_cell():
    l1, l2 = parse_symbol('2,0;1'), parse_symbol('1,0;2')
    phi, psi1, psi2 = find_separating_cell(l1, l2, SP4)
    c1, c2 = cell(phi, psi1, SP4), cell(phi, psi2, SP4)
    assert l1 in c1 and l2 in c2
    assert not set(c1) & set(c2)


def test_separation_preconditions():
    with pytest.raises(PreconditionError):
        find_separating_cell(parse_symbol('2,0;1'), parse_symbol('2,0;1'), SP4)
    with pytest.raises(PreconditionError):
        find_separating_cell(parse_symbol('2;0'), parse_symbol('0;2'), GroupTag(GroupKind.O_PLUS, 2))
    with pytest.raises(PreconditionError):
        find_separating_cell(parse_symbol('2,0;1'), parse_symbol('2;-'), SP4)


def test_dropping_a_member_breaks_uniformity():
    phi = Arrangement(Z, ((2, 1),), 0)
    members = cell(phi, PairSubset(phi), SP4)
    assert not is_uniform(sum_of_basis_vectors(SP4, corrupt_cell(members)))


@pytest.mark.parametrize('kind', [GroupKind.SP, GroupKind.SO_ODD, GroupKind.O_PLUS, GroupKind.O_MINUS])
@pytest.mark.parametrize('n', range(1, 4))
def test_every_cell_is_uniform(kind, n):
    g = GroupTag(kind, n)
    for z in special_symbols_of(g):
        members = set(family_symbols(z, g))
        for phi, psi, c in all_cells(z, g):
            assert set(c) <= members
            assert verify_cell_uniformity(phi, psi, g)
