#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Hyperoctahedral group W_n
Conjugacy classes as pairs of partitions, the character table built by
inducing from W_k x W_l, and class-function inner products over W_n and its
two cosets of W_n^+
"""

import logging
import threading
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import sympy
from sympy.combinatorics import Permutation

from src.config import get_settings
from src.errors import InvalidElementError, RankBoundError
from src.partitions import BiPartition, Partition, enumerate_bipartitions, format_partition
from src.scalars import ZERO, Number, canonical, to_scalar

logger = logging.getLogger(__name__)

DOMAINS = ('full', 'plus', 'minus')

SignedPermutation = Tuple[int, ...]


def _z(p: Partition) -> int:
    """Centralizer order of cycle type p in the symmetric group"""
    total = 1
    for part, mult in Counter(p.parts).items():
        total *= part ** mult * factorial(mult)
    return total


def weyl_order(n: int) -> int:
    return 2 ** n * factorial(n)


@dataclass(frozen=True)
class SignedClass:
    pos: Partition
    neg: Partition

    @property
    def n(self) -> int:
        return self.pos.size + self.neg.size

    @property
    def centralizer_order(self) -> int:
        return _z(self.pos) * 2 ** self.pos.length * _z(self.neg) * 2 ** self.neg.length

    @property
    def size(self) -> int:
        return weyl_order(self.n) // self.centralizer_order

    @property
    def in_plus_subgroup(self) -> bool:
        return self.neg.length % 2 == 0

    @property
    def epsilon(self) -> int:
        return 1 if self.in_plus_subgroup else -1

    @property
    def merged(self) -> Partition:
        return Partition(tuple(sorted(self.pos.parts + self.neg.parts, reverse=True)))

    def sort_key(self) -> Tuple:
        return (self.merged.parts, self.neg.size, self.neg.parts)

    def in_domain(self, domain: str) -> bool:
        if domain == 'full':
            return True
        return self.in_plus_subgroup == (domain == 'plus')

    def __str__(self) -> str:
        return format_class(self)


def format_class(c: SignedClass) -> str:
    return f"{format_partition(c.pos)}/{format_partition(c.neg)}"


@lru_cache(maxsize=None)
def _classes(n: int) -> Tuple[SignedClass, ...]:
    classes = [SignedClass(bp.top, bp.bottom) for bp in enumerate_bipartitions(n)]
    return tuple(sorted(classes, key=SignedClass.sort_key))


def enumerate_classes(n: int) -> List[SignedClass]:
    return list(_classes(n))


def class_of_element(perm: Sequence[int]) -> SignedClass:
    """
    perm[i] = ±j says that i+1 is sent to ±j; the sign records whether the
    pair {i+1, (i+1)*} is swapped
    """
    n = len(perm)
    if sorted(abs(x) for x in perm) != list(range(1, n + 1)):
        raise InvalidElementError(f"{tuple(perm)} is not a signed permutation of 1..{n}")
    seen = [False] * n
    pos, neg = [], []
    for start in range(n):
        if seen[start]:
            continue
        length, sign, i = 0, 1, start
        while not seen[i]:
            seen[i] = True
            length += 1
            sign *= 1 if perm[i] > 0 else -1
            i = abs(perm[i]) - 1
        (pos if sign > 0 else neg).append(length)
    return SignedClass(Partition(tuple(sorted(pos, reverse=True))),
                       Partition(tuple(sorted(neg, reverse=True))))


@lru_cache(maxsize=None)
def symmetric_character(lam: Tuple[int, ...], rho: Tuple[int, ...]) -> int:
    """χ_λ(ρ) in S_k by Murnaghan-Nakayama on beta-sets"""
    if not rho:
        return 1 if sum(lam) == 0 else 0
    r, rest = rho[0], rho[1:]
    length = len(lam)
    beta = [part + length - 1 - i for i, part in enumerate(lam)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beta_set:
            continue
        height = sum(1 for x in beta if target < x < b)
        moved = sorted((beta_set - {b}) | {target}, reverse=True)
        smaller = tuple(x - (length - 1 - i) for i, x in enumerate(moved))
        smaller = tuple(p for p in smaller if p > 0)
        total += (-1) ** height * symmetric_character(smaller, rest)
    return total


def _sub_multisets(p: Partition) -> Iterator[Tuple[Partition, Partition]]:
    counts = sorted(Counter(p.parts).items(), reverse=True)
    for choice in product(*(range(m + 1) for _, m in counts)):
        taken, left = [], []
        for (part, mult), k in zip(counts, choice):
            taken += [part] * k
            left += [part] * (mult - k)
        yield Partition(tuple(taken)), Partition(tuple(left))


def induced_value(bp: BiPartition, c: SignedClass) -> int:
    """φ_[μ;ν](c) by the induced-character formula from W_|μ| x W_|ν|"""
    mu, nu = bp.top, bp.bottom
    total = 0
    for pos1, pos2 in _sub_multisets(c.pos):
        for neg1, neg2 in _sub_multisets(c.neg):
            if pos1.size + neg1.size != mu.size:
                continue
            c1, c2 = SignedClass(pos1, neg1), SignedClass(pos2, neg2)
            weight = c.centralizer_order // (c1.centralizer_order * c2.centralizer_order)
            chi_mu = symmetric_character(mu.parts, c1.merged.parts)
            chi_nu = symmetric_character(nu.parts, c2.merged.parts)
            total += weight * chi_mu * chi_nu * (-1) ** neg2.length
    return total


@dataclass(frozen=True)
class ClassFunction:
    """Values listed in the order of enumerate_classes(n)"""
    n: int
    values: Tuple[Number, ...]

    def __post_init__(self):
        if len(self.values) != len(_classes(self.n)):
            raise RankBoundError(f"class function on W_{self.n} needs {len(_classes(self.n))} values")
        object.__setattr__(self, 'values', tuple(self.values))

    @property
    def classes(self) -> Tuple[SignedClass, ...]:
        return _classes(self.n)

    def __getitem__(self, c: SignedClass) -> Number:
        return self.values[self.classes.index(c)]

    def items(self) -> Iterator[Tuple[SignedClass, Number]]:
        return zip(self.classes, self.values)

    def times_sign(self) -> 'ClassFunction':
        return ClassFunction(self.n, tuple(v * c.epsilon for c, v in self.items()))

    def scaled(self, factor: Number) -> 'ClassFunction':
        return ClassFunction(self.n, tuple(v * factor for v in self.values))

    def restricted(self, domain: str) -> 'ClassFunction':
        return ClassFunction(self.n, tuple(v if c.in_domain(domain) else 0 for c, v in self.items()))


@dataclass(frozen=True)
class CharacterTable:
    n: int
    rows: Tuple[BiPartition, ...]
    classes: Tuple[SignedClass, ...]
    values: Tuple[Tuple[int, ...], ...]

    def row(self, bp: BiPartition) -> ClassFunction:
        return ClassFunction(self.n, self.values[self.rows.index(bp)])

    def as_dict(self) -> Dict[BiPartition, Dict[SignedClass, int]]:
        return {bp: dict(zip(self.classes, vals)) for bp, vals in zip(self.rows, self.values)}


_TABLE_LOCK = threading.Lock()
_TABLES: Dict[int, CharacterTable] = {}


def _build_table(n: int) -> CharacterTable:
    logger.info(f"🔄 Building character table of W_{n}")
    rows = tuple(enumerate_bipartitions(n))
    classes = _classes(n)
    values = tuple(tuple(induced_value(bp, c) for c in classes) for bp in rows)
    logger.debug(f"W_{n}: {len(rows)} characters, {len(classes)} classes")
    return CharacterTable(n, rows, classes, values)


def character_table(n: int, max_rank: Optional[int] = None) -> CharacterTable:
    bound = max_rank if max_rank is not None else get_settings().max_weyl_rank
    if n < 0 or n > bound:
        raise RankBoundError(f"W_{n} is outside the configured bound 0..{bound}")
    with _TABLE_LOCK:
        table = _TABLES.get(n)
        if table is None:
            table = _build_table(n)
            _TABLES[n] = table
    return table


def character(bp: BiPartition, max_rank: Optional[int] = None) -> ClassFunction:
    return character_table(bp.size, max_rank).row(bp)


def domain_order(n: int, domain: str) -> int:
    if domain not in DOMAINS:
        raise ValueError(f"unknown domain {domain!r}")
    if domain == 'full':
        return weyl_order(n)
    return sum(c.size for c in _classes(n) if c.in_domain(domain))


def inner_product(f1: ClassFunction, f2: ClassFunction, domain: str = 'full') -> sympy.Expr:
    if f1.n != f2.n:
        raise RankBoundError(f"inner product of class functions on W_{f1.n} and W_{f2.n}")
    order = domain_order(f1.n, domain)
    if order == 0:
        return ZERO
    total = sum((to_scalar(v1) * v2 * c.size for c, v1, v2 in zip(f1.classes, f1.values, f2.values)
                 if c.in_domain(domain)), ZERO)
    return canonical(total / order)


def restriction_equal_on_plus(bp1: BiPartition, bp2: BiPartition) -> bool:
    if bp1.size != bp2.size:
        return False
    row1, row2 = character(bp1), character(bp2)
    return all(v1 == v2 for c, v1, v2 in zip(row1.classes, row1.values, row2.values) if c.in_plus_subgroup)


def _signed_permutations(n: int) -> Iterator[SignedPermutation]:
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            yield tuple(s * p for s, p in zip(signs, perm))


def _as_permutation(w: SignedPermutation) -> Permutation:
    """w acting on the 2n points ±1..±n, numbered 0..n-1 and n..2n-1"""
    n = len(w)
    image = [0] * (2 * n)
    for i, x in enumerate(w):
        j = abs(x) - 1
        image[i], image[n + i] = (j, n + j) if x > 0 else (n + j, j)
    return Permutation(image)


def _as_signed(p: Permutation, n: int) -> SignedPermutation:
    return tuple(t + 1 if t < n else n - t - 1 for t in p.array_form[:n])


def _young_value(bp: BiPartition, h: SignedPermutation) -> Optional[int]:
    """(φ_μ ⊗ ε φ_ν)(h) for h in W_k x W_l, None when h is outside"""
    k = bp.top.size
    if any((abs(x) <= k) != (i < k) for i, x in enumerate(h)):
        return None
    first = class_of_element(h[:k])
    last = class_of_element(tuple((abs(x) - k) * (1 if x > 0 else -1) for x in h[k:]))
    return (symmetric_character(bp.top.parts, first.merged.parts)
            * symmetric_character(bp.bottom.parts, last.merged.parts)
            * (-1) ** last.neg.length)


def brute_force_table(n: int) -> CharacterTable:
    """Explicit induction over the realized group; only practical for n <= 3"""
    if n > 3:
        raise RankBoundError(f"brute force realization of W_{n} is not supported")
    representatives: Dict[SignedClass, SignedPermutation] = {}
    for w in _signed_permutations(n):
        representatives.setdefault(class_of_element(w), w)
    elements = [_as_permutation(w) for w in _signed_permutations(n)]
    classes = _classes(n)
    rows = tuple(enumerate_bipartitions(n))
    values = []
    for bp in rows:
        subgroup_order = weyl_order(bp.top.size) * weyl_order(bp.bottom.size)
        row = []
        for c in classes:
            g = _as_permutation(representatives[c])
            total = 0
            for x in elements:
                value = _young_value(bp, _as_signed(g ^ x, n))
                if value is not None:
                    total += value
            row.append(total // subgroup_order)
        values.append(tuple(row))
    return CharacterTable(n, rows, classes, tuple(values))
