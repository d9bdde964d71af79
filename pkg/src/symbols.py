#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Symbols of Lusztig
Similarity classes, rank and defect, the Upsilon bijection to bi-partitions,
the symbol sets of the classical groups and the cuspidal symbols
"""

import logging
import re
from dataclasses import InitVar, dataclass
from enum import Enum
from functools import lru_cache
from typing import List, Optional, Tuple

from src.errors import GroupMismatchError, InvalidSymbolError
from src.partitions import BiPartition, Partition, enumerate_bipartitions, format_partition

logger = logging.getLogger(__name__)

LABELS = (None, 'I', 'II')


class GroupKind(Enum):
    SP = 'sp'
    SO_ODD = 'so'
    O_PLUS = 'o+'
    O_MINUS = 'o-'
    SO_PLUS = 'so+'
    SO_MINUS = 'so-'

    @property
    def residue(self) -> int:
        """Defect residue mod 4 of the symbols of this group"""
        return {
            GroupKind.O_PLUS: 0, GroupKind.SO_PLUS: 0,
            GroupKind.SP: 1,
            GroupKind.O_MINUS: 2, GroupKind.SO_MINUS: 2,
            GroupKind.SO_ODD: 3,
        }[self]

    @property
    def delta0(self) -> int:
        return 1 if self in (GroupKind.SP, GroupKind.SO_ODD) else 0

    @property
    def is_even_orthogonal(self) -> bool:
        return self.delta0 == 0

    @property
    def is_special_orthogonal_even(self) -> bool:
        return self in (GroupKind.SO_PLUS, GroupKind.SO_MINUS)

    @property
    def epsilon(self) -> int:
        """+1 or -1 for the even orthogonal kinds, 0 otherwise"""
        if self in (GroupKind.O_PLUS, GroupKind.SO_PLUS):
            return 1
        if self in (GroupKind.O_MINUS, GroupKind.SO_MINUS):
            return -1
        return 0

    @property
    def orthogonal_counterpart(self) -> 'GroupKind':
        """O^eps for SO^eps, the kind itself otherwise"""
        return {GroupKind.SO_PLUS: GroupKind.O_PLUS,
                GroupKind.SO_MINUS: GroupKind.O_MINUS}.get(self, self)

    @classmethod
    def parse(cls, text: str) -> 'GroupKind':
        aliases = {'sp': cls.SP, 'so': cls.SO_ODD, 'soodd': cls.SO_ODD, 'so_odd': cls.SO_ODD,
                   'o+': cls.O_PLUS, 'oplus': cls.O_PLUS, 'o-': cls.O_MINUS, 'ominus': cls.O_MINUS,
                   'so+': cls.SO_PLUS, 'soplus': cls.SO_PLUS, 'so-': cls.SO_MINUS, 'sominus': cls.SO_MINUS}
        try:
            return aliases[text.strip().lower()]
        except KeyError:
            raise GroupMismatchError(f"unknown group kind {text!r}")


@dataclass(frozen=True)
class GroupTag:
    kind: GroupKind
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise GroupMismatchError(f"group rank must be non-negative, got {self.n}")

    def __str__(self) -> str:
        return f"{self.kind.value}:{self.n}"

    @classmethod
    def parse(cls, text: str) -> 'GroupTag':
        """'o-:2' style text"""
        match = re.fullmatch(r'\s*([a-zA-Z_+-]+)\s*[:~]\s*(\d+)\s*', text)
        if not match:
            raise GroupMismatchError(f"cannot parse group {text!r}")
        return cls(GroupKind.parse(match.group(1)), int(match.group(2)))

    def admits_defect(self, delta: int) -> bool:
        return delta % 4 == self.kind.residue


@dataclass(frozen=True)
class Symbol:
    """
    Ordered pair of strictly decreasing rows of non-negative integers.
    Instances are reduced unless built with normalize=False.
    """
    top: Tuple[int, ...] = ()
    bottom: Tuple[int, ...] = ()
    label: Optional[str] = None
    normalize: InitVar[bool] = True

    def __post_init__(self, normalize: bool):
        top = tuple(int(a) for a in self.top)
        bottom = tuple(int(b) for b in self.bottom)
        for row in (top, bottom):
            if any(x < 0 for x in row):
                raise InvalidSymbolError(f"negative entry in {row}")
            if any(row[i] <= row[i + 1] for i in range(len(row) - 1)):
                raise InvalidSymbolError(f"row {row} is not strictly decreasing")
        if self.label not in LABELS:
            raise InvalidSymbolError(f"unknown label {self.label!r}")
        if normalize:
            top, bottom = _reduce_rows(top, bottom)
        object.__setattr__(self, 'top', top)
        object.__setattr__(self, 'bottom', bottom)

    @classmethod
    def raw(cls, top, bottom, label: Optional[str] = None) -> 'Symbol':
        """An unreduced instance, kept exactly as given"""
        return cls(tuple(top), tuple(bottom), label, normalize=False)

    @property
    def is_degenerate(self) -> bool:
        return self.top == self.bottom

    @property
    def is_reduced(self) -> bool:
        return not (self.top and self.bottom and self.top[-1] == 0 and self.bottom[-1] == 0)

    def transpose(self) -> 'Symbol':
        label = self.label if self.is_degenerate else None
        return Symbol(self.bottom, self.top, label, normalize=False)

    def unlabeled(self) -> 'Symbol':
        return Symbol(self.top, self.bottom, None, normalize=False)

    def with_label(self, label: Optional[str]) -> 'Symbol':
        return Symbol(self.top, self.bottom, label, normalize=False)

    def sort_key(self) -> Tuple:
        return (self.top, self.bottom, LABELS.index(self.label))

    def entries(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return self.top, self.bottom

    def __str__(self) -> str:
        return format_symbol(self)


def _reduce_rows(top: Tuple[int, ...], bottom: Tuple[int, ...]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    while top and bottom and top[-1] == 0 and bottom[-1] == 0:
        top = tuple(a - 1 for a in top[:-1])
        bottom = tuple(b - 1 for b in bottom[:-1])
    return top, bottom


def _format_row(row: Tuple[int, ...]) -> str:
    return ','.join(str(x) for x in row) if row else '-'


def format_symbol(s: Symbol) -> str:
    text = f"{_format_row(s.top)};{_format_row(s.bottom)}"
    return f"{text}#{s.label}" if s.label else text


def _parse_row(text: str) -> Tuple[int, ...]:
    text = text.strip()
    if text in ('', '-'):
        return ()
    try:
        return tuple(int(tok) for tok in text.split(','))
    except ValueError:
        raise InvalidSymbolError(f"cannot parse symbol row {text!r}")


def parse_symbol(text: str, normalize: bool = True) -> Symbol:
    label = None
    if '#' in text:
        text, label = text.split('#', 1)
        label = label.strip()
    if text.count(';') != 1:
        raise InvalidSymbolError(f"symbol needs exactly one ';': {text!r}")
    top, bottom = text.split(';')
    return Symbol(_parse_row(top), _parse_row(bottom), label, normalize=normalize)


def rank(s: Symbol) -> int:
    m = len(s.top) + len(s.bottom)
    return sum(s.top) + sum(s.bottom) - ((m - 1) ** 2) // 4


def defect(s: Symbol) -> int:
    return len(s.top) - len(s.bottom)


def reduce(s: Symbol) -> Symbol:
    top, bottom = _reduce_rows(s.top, s.bottom)
    return Symbol(top, bottom, s.label, normalize=False)


def shift(s: Symbol) -> Symbol:
    """The generator of similarity: add 1 to every entry and append 0 to both rows"""
    return Symbol(tuple(a + 1 for a in s.top) + (0,),
                  tuple(b + 1 for b in s.bottom) + (0,), s.label, normalize=False)


def similar(s1: Symbol, s2: Symbol) -> bool:
    return reduce(s1).entries() == reduce(s2).entries()


def _destaircase(row: Tuple[int, ...]) -> Partition:
    m = len(row)
    return Partition(tuple(a - (m - 1 - i) for i, a in enumerate(row)))


def upsilon(s: Symbol) -> BiPartition:
    return BiPartition(_destaircase(s.top), _destaircase(s.bottom))


def upsilon_inverse(bp: BiPartition, delta: int) -> Symbol:
    mu, nu = bp.top, bp.bottom
    m2 = max(nu.length, mu.length - delta, -delta, 0)
    m1 = m2 + delta
    top = tuple(mu.part(i + 1) + (m1 - 1 - i) for i in range(m1))
    bottom = tuple(nu.part(i + 1) + (m2 - 1 - i) for i in range(m2))
    return Symbol(top, bottom)


def enumerate_symbols(n: int, delta: int) -> List[Symbol]:
    """Reduced representatives of the classes of rank n and defect delta"""
    floor_term = (delta * delta) // 4
    if n < 0 or floor_term > n:
        return []
    return [upsilon_inverse(bp, delta) for bp in enumerate_bipartitions(n - floor_term)]


def defects_of(g: GroupTag) -> List[int]:
    """Admissible defects of the group in the order 1st by |delta|, then positive first"""
    bound = 2 * g.n + 2
    deltas = [d for d in range(-bound, bound + 1)
              if g.admits_defect(d) and (d * d) // 4 <= g.n]
    return sorted(deltas, key=lambda d: (abs(d), -d))


@lru_cache(maxsize=None)
def _group_symbols(g: GroupTag) -> Tuple[Symbol, ...]:
    if g.kind.is_special_orthogonal_even:
        result = []
        for s in _group_symbols(GroupTag(g.kind.orthogonal_counterpart, g.n)):
            if s.is_degenerate:
                result.extend([s.with_label('I'), s.with_label('II')])
            elif s.sort_key() <= s.transpose().sort_key():
                result.append(s)
        return tuple(result)
    result = []
    for delta in defects_of(g):
        result.extend(enumerate_symbols(g.n, delta))
    logger.debug(f"enumerated {len(result)} symbols for {g}")
    return tuple(result)


def enumerate_group_symbols(g: GroupTag) -> List[Symbol]:
    return list(_group_symbols(g))


def group_kind_of_defect(delta: int) -> GroupKind:
    return {0: GroupKind.O_PLUS, 1: GroupKind.SP, 2: GroupKind.O_MINUS, 3: GroupKind.SO_ODD}[delta % 4]


def group_of_defect(n: int, delta: int) -> GroupTag:
    return GroupTag(group_kind_of_defect(delta), n)


def group_of_symbol(s: Symbol) -> GroupTag:
    return group_of_defect(rank(s), defect(s))


def check_in_group(s: Symbol, g: GroupTag) -> None:
    if not g.admits_defect(defect(s)) or rank(s) != g.n:
        raise GroupMismatchError(f"symbol {s} (rank {rank(s)}, defect {defect(s)}) is not in S_{g}")


def is_cuspidal(s: Symbol) -> bool:
    return rank(s) == (defect(s) ** 2) // 4


def _staircase(top_length: int) -> Tuple[int, ...]:
    return tuple(range(top_length - 1, -1, -1))


def lambda_sp(k: int) -> Symbol:
    row = _staircase(2 * k + 1)
    return Symbol(row, ()) if k % 2 == 0 else Symbol((), row)


def lambda_SOodd(k: int) -> Symbol:
    return lambda_sp(k).transpose()


def lambda_O_I(k: int) -> Symbol:
    row = _staircase(2 * k)
    return Symbol(row, ()) if k % 2 == 0 else Symbol((), row)


def lambda_O_II(k: int) -> Symbol:
    return lambda_O_I(k).transpose()


def describe(s: Symbol) -> dict:
    bp = upsilon(s)
    return {
        'symbol': format_symbol(s),
        'rank': rank(s),
        'defect': defect(s),
        'upsilon': f"{format_partition(bp.top)};{format_partition(bp.bottom)}",
    }
