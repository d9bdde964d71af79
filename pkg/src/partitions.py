#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Partitions and bi-partitions
Enumeration, box addition and the interleaving relation used by theta
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import zip_longest
from typing import List, Set, Tuple

from src.errors import InvalidPartitionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers; zero parts are stripped"""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts if p != 0)
        if any(p < 0 for p in parts):
            raise InvalidPartitionError(f"negative part in {self.parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidPartitionError(f"parts not weakly decreasing: {self.parts}")
        object.__setattr__(self, 'parts', parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """i-th part counted from 1, zero beyond the length"""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def transpose(self) -> 'Partition':
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def contains(self, other: 'Partition') -> bool:
        return all(self.part(i) >= other.part(i) for i in range(1, other.length + 1))

    def __str__(self) -> str:
        return format_partition(self)


@dataclass(frozen=True, order=True)
class BiPartition:
    top: Partition = Partition()
    bottom: Partition = Partition()

    @property
    def size(self) -> int:
        return self.top.size + self.bottom.size

    @property
    def is_degenerate(self) -> bool:
        return self.top == self.bottom

    def transpose(self) -> 'BiPartition':
        return BiPartition(self.bottom, self.top)

    def __str__(self) -> str:
        return format_bipartition(self)


EMPTY = Partition()


def format_partition(p: Partition) -> str:
    return ','.join(str(x) for x in p.parts) if p.parts else '-'


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ('', '-'):
        return EMPTY
    try:
        parts = tuple(int(tok) for tok in text.split(','))
    except ValueError:
        raise InvalidPartitionError(f"cannot parse partition {text!r}")
    if any(p <= 0 for p in parts):
        raise InvalidPartitionError(f"parts must be positive in {text!r}")
    return Partition(parts)


def format_bipartition(bp: BiPartition) -> str:
    return f"{format_partition(bp.top)};{format_partition(bp.bottom)}"


def parse_bipartition(text: str) -> BiPartition:
    if text.count(';') != 1:
        raise InvalidPartitionError(f"bipartition needs exactly one ';': {text!r}")
    top, bottom = text.split(';')
    return BiPartition(parse_partition(top), parse_partition(bottom))


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    result = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            result.append((first,) + rest)
    return tuple(result)


def enumerate_partitions(n: int) -> List[Partition]:
    """All partitions of n in lexicographic descending order"""
    if n < 0:
        raise InvalidPartitionError(f"n must be non-negative, got {n}")
    return [Partition(p) for p in _partitions(n, n)]


def partition_count(n: int) -> int:
    """Partition numbers by the coin-change recurrence"""
    counts = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            counts[total] += counts[total - part]
    return counts[n]


def enumerate_bipartitions(n: int) -> List[BiPartition]:
    if n < 0:
        raise InvalidPartitionError(f"n must be non-negative, got {n}")
    result = []
    for k in range(n, -1, -1):
        for mu in enumerate_partitions(k):
            for nu in enumerate_partitions(n - k):
                result.append(BiPartition(mu, nu))
    return result


def interleaves(lam: Partition, mu: Partition) -> bool:
    """lam ⪯ mu: mu_1 >= lam_1 >= mu_2 >= lam_2 >= ... with zero padding"""
    width = max(lam.length, mu.length) + 1
    for i in range(1, width + 1):
        if not mu.part(i) >= lam.part(i) >= mu.part(i + 1):
            return False
    return True


def add_one_box(lam: Partition) -> Set[Partition]:
    result = set()
    for i in range(lam.length + 1):
        # row i (0-based) can grow iff the row above is strictly longer
        if i == 0 or lam.parts[i - 1] > lam.part(i + 1):
            parts = list(lam.parts) + [0]
            parts[i] += 1
            result.add(Partition(tuple(parts)))
    return result


def remove_one_box(lam: Partition) -> Set[Partition]:
    result = set()
    for i in range(lam.length):
        # row i (0-based) can shrink iff the row below is strictly shorter
        if lam.parts[i] > lam.part(i + 2):
            parts = list(lam.parts)
            parts[i] -= 1
            result.add(Partition(tuple(parts)))
    return result


def add_two_boxes_row_or_column(lam: Partition) -> Set[Partition]:
    result = set()
    for grown in add_one_box(lam):
        for again in add_one_box(grown):
            added = _difference_cells(again, lam)
            rows = {r for r, _ in added}
            cols = {c for _, c in added}
            if len(rows) == 1 or len(cols) == 1:
                result.add(again)
    return result


def _difference_cells(big: Partition, small: Partition) -> Set[Tuple[int, int]]:
    cells = set()
    for row, (b, s) in enumerate(zip_longest(big.parts, small.parts, fillvalue=0)):
        cells.update((row, col) for col in range(s, b))
    return cells
