#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Cells C_{Φ,Ψ} inside a special family

An arrangement Φ pairs every top single of Z with a bottom single, leaving one
top single isolated when Z has defect 1. A cell is cut out of the family by
one parity condition per pair p of Φ:

    |M ∩ p| ≡ 0 (mod 2) if p ∈ Ψ, else 1

which is the per-pair form of |M∩Ψ'| ≡ #((Φ∖Ψ)∩Ψ') over all Ψ' ≤ Φ.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import FrozenSet, List, Optional, Sequence, Tuple

from src.almost_chars import is_uniform, sum_of_basis_vectors
from src.errors import GroupMismatchError, NotFoundError, PreconditionError
from src.special_symbols import SpecialSymbol, family, family_of_symbol, singles
from src.symbols import GroupKind, GroupTag, Symbol, format_symbol, reduce

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class Arrangement:
    owner: SpecialSymbol
    pairs: Tuple[Pair, ...]
    isolated: Optional[int] = None

    def __post_init__(self):
        z_singles = singles(self.owner)
        tops = [a for a, _ in self.pairs] + ([self.isolated] if self.isolated is not None else [])
        bottoms = [b for _, b in self.pairs]
        if sorted(tops) != sorted(z_singles.top) or sorted(bottoms) != sorted(z_singles.bottom):
            raise PreconditionError(f"pairs {self.pairs} do not arrange the singles of {self.owner}")
        object.__setattr__(self, 'pairs', tuple(sorted(self.pairs, reverse=True)))

    def __str__(self) -> str:
        text = ' '.join(f"({a},{b})" for a, b in self.pairs) or '∅'
        return f"{text} | {self.isolated}" if self.isolated is not None else text


@dataclass(frozen=True)
class PairSubset:
    owner: Arrangement
    chosen: FrozenSet[Pair] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, 'chosen', frozenset(self.chosen))
        if not self.chosen <= set(self.owner.pairs):
            raise PreconditionError(f"{sorted(self.chosen)} is not a subset of the pairs of {self.owner}")

    @property
    def unchosen(self) -> int:
        return len(self.owner.pairs) - len(self.chosen)

    def admissible(self, eps: int) -> bool:
        """#(Φ∖Ψ) is even for ε=+ and odd for ε=−"""
        return self.unchosen % 2 == (0 if eps > 0 else 1)

    def __str__(self) -> str:
        return ' '.join(f"({a},{b})" for a, b in sorted(self.chosen, reverse=True)) or '∅'


def enumerate_arrangements(z: SpecialSymbol) -> List[Arrangement]:
    z_singles = singles(z)
    tops, bottoms = list(z_singles.top), list(z_singles.bottom)
    result = []
    if z.defect == 1:
        for isolated in tops:
            rest = [a for a in tops if a != isolated]
            for matched in permutations(bottoms):
                result.append(Arrangement(z, tuple(zip(rest, matched)), isolated))
    else:
        for matched in permutations(bottoms):
            result.append(Arrangement(z, tuple(zip(tops, matched))))
    logger.debug(f"{len(result)} arrangements of {z}")
    return result


def pair_subsets(phi: Arrangement) -> List[PairSubset]:
    result = []
    for size in range(len(phi.pairs) + 1):
        for chosen in combinations(phi.pairs, size):
            result.append(PairSubset(phi, frozenset(chosen)))
    return result


def _cell_group(g: GroupTag) -> GroupTag:
    if g.kind.is_special_orthogonal_even:
        raise GroupMismatchError(f"cells are not defined for {g}")
    return GroupTag(GroupKind.SP, g.n) if g.kind == GroupKind.SO_ODD else g


def _hits(m, pair: Pair) -> int:
    """|M ∩ p|"""
    top, bottom = pair
    return (top in m.top_picks) + (bottom in m.bottom_picks)


def cell(phi: Arrangement, psi: PairSubset, g: GroupTag) -> List[Symbol]:
    if psi.owner != phi:
        raise PreconditionError("the pair subset belongs to another arrangement")
    base = _cell_group(g)
    if base.kind.is_even_orthogonal and not psi.admissible(base.kind.epsilon):
        raise PreconditionError(f"Ψ={psi} is not admissible for {g}: #(Φ∖Ψ)={psi.unchosen}")
    members = [lam for m, lam in family(phi.owner, base)
               if all(_hits(m, p) % 2 == (0 if p in psi.chosen else 1) for p in phi.pairs)]
    if g.kind == GroupKind.SO_ODD:
        members = [lam.transpose() for lam in members]
    return members


def verify_cell_uniformity(phi: Arrangement, psi: PairSubset, g: GroupTag) -> bool:
    return is_uniform(sum_of_basis_vectors(g, cell(phi, psi, g)))


def admissible_subsets(phi: Arrangement, g: GroupTag) -> List[PairSubset]:
    subsets = pair_subsets(phi)
    if g.kind in (GroupKind.O_PLUS, GroupKind.O_MINUS):
        subsets = [psi for psi in subsets if psi.admissible(g.kind.epsilon)]
    return subsets


def all_cells(z: SpecialSymbol, g: GroupTag) -> List[Tuple[Arrangement, PairSubset, List[Symbol]]]:
    _cell_group(g)
    return [(phi, psi, cell(phi, psi, g))
            for phi in enumerate_arrangements(z) for psi in admissible_subsets(phi, g)]


def find_separating_cell(l1: Symbol, l2: Symbol, g: GroupTag) -> Tuple[Arrangement, PairSubset, PairSubset]:
    l1, l2 = reduce(l1), reduce(l2)
    z1, _ = family_of_symbol(l1)
    z2, _ = family_of_symbol(l2)
    if z1 != z2:
        raise PreconditionError(f"{format_symbol(l1)} and {format_symbol(l2)} lie in different families")
    if l1 == l2 or (g.kind.is_even_orthogonal and l1 == l2.transpose()):
        raise PreconditionError(f"{format_symbol(l1)} and {format_symbol(l2)} cannot be separated in {g}")
    for phi in enumerate_arrangements(z1):
        subsets = admissible_subsets(phi, g)
        cells = [(psi, set(cell(phi, psi, g))) for psi in subsets]
        for psi1, c1 in cells:
            if l1 not in c1:
                continue
            for psi2, c2 in cells:
                if l2 in c2 and not (c1 & c2):
                    return phi, psi1, psi2
    raise NotFoundError(f"no cell separates {format_symbol(l1)} from {format_symbol(l2)} in {g}")


def corrupt_cell(members: Sequence[Symbol]) -> List[Symbol]:
    """A cell with its last member dropped, for negative checks"""
    return list(members[:-1])
