#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Theta relation between symbols of O^ε_{2n} and Sp_{2n'}, first occurrence
along the symplectic tower, the one-box induction relation Ω, and the descent
from O^+_{2n} to O^+_{2(n-1)}
"""

import logging
from dataclasses import dataclass
from typing import List, Optional

from src.errors import GroupMismatchError, InvalidSymbolError, NotFoundError, PreconditionError
from src.partitions import BiPartition, add_one_box, add_two_boxes_row_or_column, interleaves, remove_one_box
from src.symbols import (GroupKind, GroupTag, Symbol, defect, enumerate_group_symbols, format_symbol,
                         rank, reduce, upsilon, upsilon_inverse)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ThetaPair:
    left_group: GroupTag
    left: Symbol
    right_group: GroupTag
    right: Symbol


def in_theta_relation(lam: Symbol, lamp: Symbol, eps: int) -> bool:
    left, right = upsilon(lam), upsilon(lamp)
    if eps > 0:
        return (defect(lamp) == -defect(lam) + 1
                and interleaves(left.bottom, right.top)
                and interleaves(right.bottom, left.top))
    return (defect(lamp) == -defect(lam) - 1
            and interleaves(left.top, right.bottom)
            and interleaves(right.top, left.bottom))


def theta_partners(lam: Symbol, eps: int, nprime: int) -> List[Symbol]:
    target = GroupTag(GroupKind.SP, nprime)
    return [s for s in enumerate_group_symbols(target) if in_theta_relation(lam, s, eps)]


def theta_pairs(lam: Symbol, eps: int, nprime: int) -> List[ThetaPair]:
    left_group = GroupTag(GroupKind.O_PLUS if eps > 0 else GroupKind.O_MINUS, rank(lam))
    right_group = GroupTag(GroupKind.SP, nprime)
    return [ThetaPair(left_group, lam, right_group, s) for s in theta_partners(lam, eps, nprime)]


def search_bound(lam: Symbol) -> int:
    return rank(lam) + ((abs(defect(lam)) + 3) ** 2) // 4 + 1


def first_occurrence(lam: Symbol, eps: int) -> int:
    for nprime in range(search_bound(lam) + 1):
        if theta_partners(lam, eps, nprime):
            return nprime
    raise NotFoundError(f"{format_symbol(lam)} has no theta partner up to rank {search_bound(lam)}")


def minimal_partner_rank(lam: Symbol, eps: int) -> int:
    """Closed form of first occurrence read off from the interleaving minima"""
    bp = upsilon(lam)
    d = defect(lam)
    if eps > 0:
        return bp.size - bp.top.part(1) + ((1 - d) ** 2) // 4
    return bp.size - bp.bottom.part(1) + ((1 + d) ** 2) // 4


def occurrence_gap(lam: Symbol, eps: int) -> int:
    """n₀(Λ) − n₀(Λ^t) predicted from the first parts of Υ(Λ)"""
    bp = upsilon(lam)
    d = defect(lam)
    if eps > 0:
        return bp.bottom.part(1) - bp.top.part(1) - d
    return bp.top.part(1) - bp.bottom.part(1) + d


def _check_group(lam: Symbol, g: GroupTag) -> None:
    if not g.admits_defect(defect(lam)) or rank(lam) != g.n:
        raise GroupMismatchError(f"{format_symbol(lam)} is not a symbol of {g}")


def omega(lam: Symbol, g: Optional[GroupTag] = None) -> List[Symbol]:
    lam = reduce(lam.unlabeled())
    if g is not None:
        _check_group(lam, g)
    bp = upsilon(lam)
    d = defect(lam)
    grown = [BiPartition(top, bp.bottom) for top in sorted(add_one_box(bp.top), reverse=True)]
    grown += [BiPartition(bp.top, bottom) for bottom in sorted(add_one_box(bp.bottom), reverse=True)]
    return [upsilon_inverse(b, d) for b in grown]


def omega_sharp(lam: Symbol) -> List[Symbol]:
    """Two boxes in one row or one column of either row of Υ(Λ)"""
    lam = reduce(lam.unlabeled())
    bp = upsilon(lam)
    d = defect(lam)
    grown = [BiPartition(top, bp.bottom) for top in sorted(add_two_boxes_row_or_column(bp.top), reverse=True)]
    grown += [BiPartition(bp.top, bottom)
              for bottom in sorted(add_two_boxes_row_or_column(bp.bottom), reverse=True)]
    return [upsilon_inverse(b, d) for b in grown]


def descend_O_plus(lam: Symbol) -> Symbol:
    """
    A Λ₁ of rank n-1 with Λ ∈ Ω(Λ₁) and Λ^t ∉ Ω(Λ₁); i is the largest index
    with a_i ≠ b_i
    """
    lam = reduce(lam.unlabeled())
    if defect(lam) != 0:
        raise PreconditionError(f"{format_symbol(lam)} has defect {defect(lam)}, descent needs 0")
    if lam.is_degenerate:
        raise PreconditionError(f"{format_symbol(lam)} is degenerate")
    if rank(lam) < 2:
        raise PreconditionError(f"descent needs rank at least 2, {format_symbol(lam)} has rank {rank(lam)}")
    a, b = list(lam.top), list(lam.bottom)
    m = len(a)
    i = max(j for j in range(m) if a[j] != b[j])
    if i == m - 1 == 0:
        a1, b1 = a[0], b[0]
        if (a1 >= 2 and b1 == 0) or (b1 > a1 >= 1):
            a[0] -= 1
        elif (a1 == 0 and b1 >= 2) or (a1 > b1 >= 1):
            b[0] -= 1
        else:
            raise PreconditionError(f"no descent case applies to {format_symbol(lam)}")
    elif i == m - 1:
        if a[i] > b[i]:
            if b[i - 1] >= a[i - 1]:
                b[i - 1] -= 1
            else:
                a[i] -= 1
        else:
            if a[i - 1] >= b[i - 1]:
                a[i - 1] -= 1
            else:
                b[i] -= 1
    elif a[i] > b[i]:
        a[i] -= 1
    else:
        b[i] -= 1
    try:
        result = Symbol(tuple(a), tuple(b))
    except InvalidSymbolError:
        result = None
    if result is None or not _descends_to(lam, result):
        result = _descent_by_removal(lam)
    logger.debug(f"descent {format_symbol(lam)} -> {format_symbol(result)}")
    return result


def _descends_to(lam: Symbol, lower: Symbol) -> bool:
    if defect(lower) != 0 or rank(lower) != rank(lam) - 1:
        return False
    grown = omega(lower)
    return lam in grown and lam.transpose() not in grown


def _descent_by_removal(lam: Symbol) -> Symbol:
    """First box removal from Υ(Λ), top row first, that leaves Υ(Λ₁) unsymmetric"""
    bp = upsilon(lam)
    shrunk = [BiPartition(top, bp.bottom) for top in sorted(remove_one_box(bp.top), reverse=True)]
    shrunk += [BiPartition(bp.top, bottom) for bottom in sorted(remove_one_box(bp.bottom), reverse=True)]
    for candidate in shrunk:
        if candidate.is_degenerate:
            continue
        lower = upsilon_inverse(candidate, 0)
        if _descends_to(lam, lower):
            return lower
    raise NotFoundError(f"no descent found for {format_symbol(lam)}")
