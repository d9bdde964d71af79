#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Almost characters and uniform projections
Vectors live in the span of the unipotent basis ρ_Λ. Almost characters R_Σ
are expressed through the Fourier coefficients (−1)^⟨Λ,Σ⟩/c_Z, and on the
Weyl side through the character table of W_n.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Tuple

import sympy
from sympy import ImmutableMatrix, Rational

from src.errors import GroupMismatchError
from src.scalars import INV_SQRT2, ONE, SQRT2, ZERO, canonical, format_scalar, power_of_sqrt2, to_scalar
from src.special_symbols import SpecialSymbol, family_of_symbol, family_symbols, pairing
from src.symbols import (GroupKind, GroupTag, Symbol, defect, enumerate_group_symbols,
                         enumerate_symbols, format_symbol, upsilon)
from src.weyl_b import ClassFunction, character, domain_order, enumerate_classes, inner_product

logger = logging.getLogger(__name__)

OrientationPolicy = Callable[[Symbol, Symbol], Symbol]


def lexicographic_min(sigma: Symbol, sigma_t: Symbol) -> Symbol:
    return min(sigma, sigma_t, key=lambda s: (s.top, s.bottom))


def lexicographic_max(sigma: Symbol, sigma_t: Symbol) -> Symbol:
    return max(sigma, sigma_t, key=lambda s: (s.top, s.bottom))


POLICIES: Dict[str, OrientationPolicy] = {
    'min': lexicographic_min,
    'max': lexicographic_max,
}


@dataclass(frozen=True)
class AlmostCharacterIndex:
    sigma: Symbol
    group: GroupTag

    def __post_init__(self):
        if defect(self.sigma) != self.group.kind.delta0:
            raise GroupMismatchError(f"{self.sigma} has defect {defect(self.sigma)}, "
                                     f"almost characters of {self.group} need {self.group.kind.delta0}")
        if self.group.kind.epsilon < 0 and self.sigma.is_degenerate:
            raise GroupMismatchError(f"degenerate {self.sigma} does not index an almost character of {self.group}")

    def __str__(self) -> str:
        return format_symbol(self.sigma)


@dataclass(frozen=True)
class UnipotentVector:
    """
    Sparse vector over the basis ρ_Λ (basis='rho') or R_Σ (basis='R').
    Only non-zero coefficients are stored, in symbol order.
    """
    group: GroupTag
    coeffs: Tuple[Tuple[Symbol, sympy.Expr], ...] = ()
    basis: str = 'rho'

    @classmethod
    def from_mapping(cls, group: GroupTag, coeffs: Mapping[Symbol, object], basis: str = 'rho') -> 'UnipotentVector':
        items = [(s, to_scalar(v)) for s, v in coeffs.items()]
        items = [(s, v) for s, v in items if v != 0]
        items.sort(key=lambda item: item[0].sort_key())
        if basis == 'rho':
            allowed = set(enumerate_group_symbols(group))
            stray = [s for s, _ in items if s not in allowed]
            if stray:
                raise GroupMismatchError(f"{format_symbol(stray[0])} is not a unipotent symbol of {group}")
        return cls(group, tuple(items), basis)

    @classmethod
    def basis_vector(cls, group: GroupTag, symbol: Symbol) -> 'UnipotentVector':
        return cls.from_mapping(group, {symbol: ONE})

    def as_dict(self) -> Dict[Symbol, sympy.Expr]:
        return dict(self.coeffs)

    def __getitem__(self, symbol: Symbol) -> sympy.Expr:
        return self.as_dict().get(symbol, ZERO)

    def support(self) -> List[Symbol]:
        return [s for s, _ in self.coeffs]

    def __add__(self, other: 'UnipotentVector') -> 'UnipotentVector':
        if self.group != other.group or self.basis != other.basis:
            raise GroupMismatchError("cannot add vectors of different groups or bases")
        total = self.as_dict()
        for s, v in other.coeffs:
            total[s] = total.get(s, ZERO) + v
        return UnipotentVector.from_mapping(self.group, total, self.basis)

    def scaled(self, factor) -> 'UnipotentVector':
        return UnipotentVector.from_mapping(self.group, {s: v * factor for s, v in self.coeffs}, self.basis)


def _domain(g: GroupTag) -> str:
    if g.kind.epsilon > 0:
        return 'plus'
    if g.kind.epsilon < 0:
        return 'minus'
    return 'full'


def sharp_index_set(g: GroupTag, choice: OrientationPolicy = lexicographic_min) -> List[AlmostCharacterIndex]:
    delta0 = g.kind.delta0
    candidates = enumerate_symbols(g.n, delta0)
    if delta0 == 1:
        return [AlmostCharacterIndex(s, g) for s in candidates]
    result, seen = [], set()
    for s in candidates:
        if s.is_degenerate:
            if g.kind.epsilon > 0:
                result.append(AlmostCharacterIndex(s, g))
            continue
        representative = choice(s, s.transpose())
        if representative not in seen:
            seen.add(representative)
            result.append(AlmostCharacterIndex(representative, g))
    return result


def c_z(z: SpecialSymbol, g: GroupTag) -> sympy.Expr:
    """Normalizing constant of the Fourier coefficients on the family of Z, as a power of sqrt2"""
    d = z.degree
    if g.kind in (GroupKind.SP, GroupKind.SO_ODD):
        return power_of_sqrt2(2 * d)
    if z.is_degenerate:
        # degree is 0 here
        return ONE if g.kind == GroupKind.O_PLUS else SQRT2
    if g.kind.is_special_orthogonal_even:
        return power_of_sqrt2(2 * d - 2)
    return power_of_sqrt2(2 * d - 1)


@lru_cache(maxsize=None)
def fourier_coefficient(lam: Symbol, sigma: AlmostCharacterIndex, g: GroupTag) -> sympy.Expr:
    z_lam, m_lam = family_of_symbol(lam)
    z_sigma, m_sigma = family_of_symbol(sigma.sigma)
    if z_lam != z_sigma:
        return ZERO
    sign = -1 if pairing(m_lam, m_sigma) else 1
    return canonical(sign / c_z(z_lam, g))


def uniform_projection(lam: Symbol, g: GroupTag,
                       choice: OrientationPolicy = lexicographic_min) -> UnipotentVector:
    """ρ_Λ^♯ in the R_Σ basis"""
    coeffs = {idx.sigma: fourier_coefficient(lam, idx, g) for idx in sharp_index_set(g, choice)}
    return UnipotentVector.from_mapping(g, coeffs, basis='R')


def _so_scale(sigma: Symbol, g: GroupTag) -> sympy.Expr:
    # W_0^+ = W_0, so the degenerate row of rank 0 keeps norm 1
    if g.kind.epsilon > 0 and sigma.is_degenerate and g.n > 0:
        return INV_SQRT2
    return ONE


def _weyl_row(sigma: AlmostCharacterIndex, g: GroupTag) -> ClassFunction:
    s = sigma.sigma.transpose() if g.kind == GroupKind.SO_ODD else sigma.sigma
    return character(upsilon(s))


def almost_character_as_weyl_data(sigma: AlmostCharacterIndex, g: GroupTag) -> ClassFunction:
    """Coefficient of the class sum of R_{T_w,1} over each class of W_n"""
    domain = _domain(g)
    scale = _so_scale(sigma.sigma, g)
    if g.kind.is_even_orthogonal and not g.kind.is_special_orthogonal_even:
        scale = scale * INV_SQRT2
    phi = _weyl_row(sigma, g)
    order = domain_order(g.n, domain)
    values = []
    for c, value in phi.items():
        if c.in_domain(domain):
            values.append(canonical(value * c.size * scale / order))
        else:
            values.append(ZERO)
    return ClassFunction(g.n, tuple(values))


@dataclass(frozen=True)
class GramMatrix:
    indices: Tuple[AlmostCharacterIndex, ...]
    entries: ImmutableMatrix

    def is_identity(self) -> bool:
        return self.entries == sympy.eye(len(self.indices))


def gram_matrix(g: GroupTag, choice: OrientationPolicy = lexicographic_min) -> GramMatrix:
    indices = tuple(sharp_index_set(g, choice))
    domain = _domain(g)
    rows = [_weyl_row(idx, g) for idx in indices]
    scales = [_so_scale(idx.sigma, g) for idx in indices]
    k = len(indices)
    entries = ImmutableMatrix(k, k, lambda i, j: canonical(
        inner_product(rows[i], rows[j], domain) * scales[i] * scales[j]))
    return GramMatrix(indices, entries)


def gram_matrix_formal(g: GroupTag, choice: OrientationPolicy = lexicographic_min) -> GramMatrix:
    """
    Pairs the class coefficients of almost_character_as_weyl_data with the
    formal norms |W_dom|/|c| of the class sums; O groups count twice the
    SO norm since |O| = 2|SO|
    """
    indices = tuple(sharp_index_set(g, choice))
    domain = _domain(g)
    order = domain_order(g.n, domain)
    doubling = 2 if g.kind.is_even_orthogonal and not g.kind.is_special_orthogonal_even else 1
    data = [almost_character_as_weyl_data(idx, g) for idx in indices]
    classes = enumerate_classes(g.n)
    weights = sympy.diag(*[Rational(order * doubling, c.size) if c.in_domain(domain) else 0 for c in classes])
    coefficients = ImmutableMatrix(len(data), len(classes), lambda i, j: data[i].values[j])
    entries = (coefficients * weights * coefficients.T).applyfunc(canonical)
    return GramMatrix(indices, ImmutableMatrix(entries))


@dataclass(frozen=True)
class FourierBlock:
    special: SpecialSymbol
    c_z: sympy.Expr
    rows: Tuple[Symbol, ...]
    columns: Tuple[Symbol, ...]
    entries: Tuple[Tuple[sympy.Expr, ...], ...]


def fourier_matrix(z: SpecialSymbol, g: GroupTag, choice: OrientationPolicy = lexicographic_min) -> FourierBlock:
    rows = tuple(family_symbols(z, g))
    columns = tuple(idx for idx in sharp_index_set(g, choice) if family_of_symbol(idx.sigma)[0] == z)
    entries = tuple(tuple(fourier_coefficient(lam, idx, g) for idx in columns) for lam in rows)
    return FourierBlock(z, c_z(z, g), rows, tuple(idx.sigma for idx in columns), entries)


def to_rho_basis(vector: UnipotentVector, choice: OrientationPolicy = lexicographic_min) -> UnipotentVector:
    """Rewrite an R_Σ-basis vector through R_Σ = Σ_Λ F[Λ,Σ] ρ_Λ"""
    if vector.basis == 'rho':
        return vector
    g = vector.group
    indices = {idx.sigma: idx for idx in sharp_index_set(g, choice)}
    coeffs: Dict[Symbol, sympy.Expr] = {}
    for sigma, weight in vector.coeffs:
        idx = indices.get(sigma) or AlmostCharacterIndex(sigma, g)
        for lam in enumerate_group_symbols(g):
            f = fourier_coefficient(lam, idx, g)
            if f != 0:
                coeffs[lam] = coeffs.get(lam, ZERO) + weight * f
    return UnipotentVector.from_mapping(g, coeffs)


def project(vector: UnipotentVector, choice: OrientationPolicy = lexicographic_min) -> UnipotentVector:
    """Uniform projection P v = F Fᵀ v of a ρ-basis vector, in the ρ basis"""
    g = vector.group
    r_coeffs = {}
    for idx in sharp_index_set(g, choice):
        total = ZERO
        for lam, value in vector.coeffs:
            total = total + value * fourier_coefficient(lam, idx, g)
        r_coeffs[idx.sigma] = total
    return to_rho_basis(UnipotentVector.from_mapping(g, r_coeffs, basis='R'), choice)


def is_uniform(rho_vector: UnipotentVector, choice: OrientationPolicy = lexicographic_min) -> bool:
    return project(rho_vector, choice) == rho_vector


def projection_in_rho_basis(lam: Symbol, g: GroupTag,
                            choice: OrientationPolicy = lexicographic_min) -> UnipotentVector:
    """ρ_Λ^♯ in ρ coordinates; the result does not depend on the orientation policy"""
    return to_rho_basis(uniform_projection(lam, g, choice), choice)


def sum_of_basis_vectors(g: GroupTag, symbols: Iterable[Symbol]) -> UnipotentVector:
    return UnipotentVector.from_mapping(g, {s: ONE for s in symbols})


def describe_projection(lam: Symbol, g: GroupTag, choice: Optional[OrientationPolicy] = None) -> List[dict]:
    vector = uniform_projection(lam, g, choice or lexicographic_min)
    return [{'sigma': format_symbol(sigma), 'coefficient': format_scalar(value)} for sigma, value in vector.coeffs]
