#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Special symbols and their families
A family S_Z^G is the set of symbols Λ_M obtained from a special symbol Z by
swapping a subset M of its singles across the rows.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import FrozenSet, List, Optional, Sequence, Tuple

from src.errors import GroupMismatchError, InvalidSubsetError, InvalidSymbolError, NotSpecialError
from src.symbols import GroupKind, GroupTag, Symbol, defect, enumerate_symbols, format_symbol, rank, reduce

logger = logging.getLogger(__name__)


def is_special(s: Symbol) -> bool:
    d = defect(s)
    if d not in (0, 1):
        return False
    chain = []
    for i in range(len(s.top)):
        chain.append(s.top[i])
        if i < len(s.bottom):
            chain.append(s.bottom[i])
    return all(chain[i] >= chain[i + 1] for i in range(len(chain) - 1))


@dataclass(frozen=True)
class SpecialSymbol:
    z: Symbol

    def __post_init__(self):
        z = reduce(self.z.unlabeled())
        if not is_special(z):
            raise NotSpecialError(f"{format_symbol(z)} is not special")
        object.__setattr__(self, 'z', z)

    @property
    def defect(self) -> int:
        return defect(self.z)

    @property
    def rank(self) -> int:
        return rank(self.z)

    @property
    def is_degenerate(self) -> bool:
        return self.z.is_degenerate

    @property
    def singles(self) -> Symbol:
        return singles(self)

    @property
    def degree(self) -> int:
        return degree(self)

    def __str__(self) -> str:
        return format_symbol(self.z)


@dataclass(frozen=True)
class SinglesSubset:
    """M ⊂ Z_I stored row by row"""
    owner: SpecialSymbol
    top_picks: FrozenSet[int] = field(default_factory=frozenset)
    bottom_picks: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, 'top_picks', frozenset(self.top_picks))
        object.__setattr__(self, 'bottom_picks', frozenset(self.bottom_picks))
        z_singles = singles(self.owner)
        if not self.top_picks <= set(z_singles.top) or not self.bottom_picks <= set(z_singles.bottom):
            raise InvalidSubsetError(
                f"picks {sorted(self.top_picks)}/{sorted(self.bottom_picks)} are not singles of {self.owner}")

    @property
    def size(self) -> int:
        return len(self.top_picks) + len(self.bottom_picks)

    @property
    def balanced(self) -> bool:
        return len(self.top_picks) == len(self.bottom_picks)

    @property
    def symbol(self) -> Symbol:
        return lambda_of_subset(self)

    def complement(self) -> 'SinglesSubset':
        z_singles = singles(self.owner)
        return SinglesSubset(self.owner,
                             frozenset(z_singles.top) - self.top_picks,
                             frozenset(z_singles.bottom) - self.bottom_picks)


def singles(z: SpecialSymbol) -> Symbol:
    top, bottom = z.z.top, z.z.bottom
    shared = set(top) & set(bottom)
    return Symbol.raw(tuple(a for a in top if a not in shared),
                      tuple(b for b in bottom if b not in shared))


def degree(z: SpecialSymbol) -> int:
    z_singles = singles(z)
    return (len(z_singles.top) + len(z_singles.bottom) - z.defect) // 2


def lambda_of_subset(m: SinglesSubset) -> Symbol:
    z = m.owner.z
    top = sorted((set(z.top) - m.top_picks) | m.bottom_picks, reverse=True)
    bottom = sorted((set(z.bottom) - m.bottom_picks) | m.top_picks, reverse=True)
    return Symbol(tuple(top), tuple(bottom))


def _all_subsets(z: SpecialSymbol) -> List[SinglesSubset]:
    """Every M ⊂ Z_I, ordered by |M| and then by the picked entries"""
    z_singles = singles(z)
    tagged = [(0, a) for a in z_singles.top] + [(1, b) for b in z_singles.bottom]
    result = []
    for size in range(len(tagged) + 1):
        for chosen in combinations(tagged, size):
            result.append(SinglesSubset(z,
                                        frozenset(v for row, v in chosen if row == 0),
                                        frozenset(v for row, v in chosen if row == 1)))
    return result


def _parity_of(kind: GroupKind) -> int:
    return 0 if kind in (GroupKind.SP, GroupKind.O_PLUS, GroupKind.SO_PLUS) else 1


def _check_defect(z: SpecialSymbol, g: GroupTag) -> None:
    if z.defect != g.kind.delta0:
        raise GroupMismatchError(f"special symbol {z} of defect {z.defect} does not index a family of {g}")


@lru_cache(maxsize=None)
def _family(z: SpecialSymbol, g: GroupTag) -> Tuple[Tuple[SinglesSubset, Symbol], ...]:
    _check_defect(z, g)
    if g.kind.is_special_orthogonal_even:
        if z.is_degenerate:
            if g.kind.epsilon < 0:
                return ()
            empty = SinglesSubset(z)
            return ((empty, z.z.with_label('I')), (empty, z.z.with_label('II')))
        members = []
        for m, lam in _family(z, GroupTag(g.kind.orthogonal_counterpart, g.n)):
            if lam.sort_key() <= lam.transpose().sort_key():
                members.append((m, lam))
        return tuple(members)
    parity = _parity_of(g.kind)
    return tuple((m, lambda_of_subset(m)) for m in _all_subsets(z) if m.size % 2 == parity)


def family(z: SpecialSymbol, g: GroupTag) -> List[Tuple[SinglesSubset, Symbol]]:
    return list(_family(z, g))


def family_symbols(z: SpecialSymbol, g: GroupTag) -> List[Symbol]:
    return [lam for _, lam in _family(z, g)]


def pairing(l1: SinglesSubset, l2: SinglesSubset) -> int:
    if l1.owner != l2.owner:
        raise InvalidSubsetError(f"subsets of different special symbols {l1.owner} and {l2.owner}")
    return (len(l1.top_picks & l2.top_picks) + len(l1.bottom_picks & l2.bottom_picks)) % 2


def family_of_symbol(s: Symbol) -> Tuple[SpecialSymbol, SinglesSubset]:
    s = reduce(s.unlabeled())
    shared = set(s.top) & set(s.bottom)
    loose = sorted(set(s.top) ^ set(s.bottom), reverse=True)
    z_top_singles = loose[0::2]
    z_bottom_singles = loose[1::2]
    if (len(z_top_singles) - len(z_bottom_singles)) % 2 != defect(s) % 2:
        raise InvalidSymbolError(f"no special symbol matches {format_symbol(s)}")
    z = Symbol(tuple(sorted(shared | set(z_top_singles), reverse=True)),
               tuple(sorted(shared | set(z_bottom_singles), reverse=True)))
    try:
        owner = SpecialSymbol(z)
    except NotSpecialError:
        raise InvalidSymbolError(f"no special symbol matches {format_symbol(s)}")
    m = SinglesSubset(owner,
                      frozenset(z_top_singles) & set(s.bottom),
                      frozenset(z_bottom_singles) & set(s.top))
    return owner, m


def symbol_pairing(lam: Symbol, sigma: Symbol) -> int:
    """⟨Λ,Σ⟩ for two symbols sharing a special symbol"""
    _, m1 = family_of_symbol(lam)
    _, m2 = family_of_symbol(sigma)
    return pairing(m1, m2)


def same_family(lam: Symbol, sigma: Symbol) -> bool:
    return family_of_symbol(lam)[0] == family_of_symbol(sigma)[0]


def balanced_subsets(z: SpecialSymbol) -> List[SinglesSubset]:
    """The M with as many top as bottom picks; their Λ_M make up S_{Z,δ₀}"""
    return [m for m in _all_subsets(z) if m.balanced]


def special_symbols_of(g: GroupTag) -> List[SpecialSymbol]:
    result = [SpecialSymbol(s) for s in enumerate_symbols(g.n, g.kind.delta0) if is_special(s)]
    if g.kind.epsilon < 0:
        result = [z for z in result if not z.is_degenerate]
    logger.debug(f"{len(result)} special symbols index the families of {g}")
    return result


def expected_family_size(z: SpecialSymbol, g: GroupTag) -> int:
    """Family cardinality by the closed formula"""
    d = z.degree
    if g.kind in (GroupKind.SP, GroupKind.SO_ODD):
        return 2 ** (2 * d)
    if d == 0:
        if g.kind == GroupKind.O_PLUS:
            return 1
        if g.kind == GroupKind.SO_PLUS:
            return 2
        return 0
    if g.kind.is_special_orthogonal_even:
        return 2 ** (2 * d - 2)
    return 2 ** (2 * d - 1)


@dataclass(frozen=True)
class SignTable:
    rows: Tuple[Symbol, ...]
    columns: Tuple[Symbol, ...]
    signs: Tuple[Tuple[int, ...], ...]


def sign_matrix(z: SpecialSymbol, g: GroupTag, sharp: Optional[Sequence[Symbol]] = None) -> SignTable:
    """
    (−1)^⟨Λ,Σ⟩ with Σ along the rows and Λ ∈ S_Z^G along the columns.
    Without an explicit sharp set the rows are all of S_{Z,δ₀}.
    """
    columns = tuple(family_symbols(z, g))
    rows = tuple(sharp) if sharp is not None else tuple(m.symbol for m in balanced_subsets(z))
    signs = tuple(tuple(-1 if symbol_pairing(lam, sigma) else 1 for lam in columns) for sigma in rows)
    return SignTable(rows, columns, signs)
