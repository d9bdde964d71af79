#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Parameter algebra of the modified Lusztig correspondence

A Lusztig series E(G,s) is described by the shape of the dual centralizer
C_{G*}(s) = G^(0) x G^(-) x G^(+); its members are triples (x, Λ₁, Λ₂).
The sgn, conjugation and spinor twists act on triples, and theta
correspondence reads off as conditions on the coordinates.
"""

import logging
import re
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from src.errors import DescriptorError, GroupMismatchError, LusztigError, NotBasicError
from src.partitions import Partition, format_partition, parse_partition, partition_count
from src.symbols import (GroupKind, GroupTag, Symbol, defect, enumerate_group_symbols, format_symbol,
                         is_cuspidal, parse_symbol, reduce)
from src.theta import in_theta_relation

logger = logging.getLogger(__name__)

ORTHOGONAL = (GroupKind.O_PLUS, GroupKind.O_MINUS)
RANK_ONE_LABELS = (Symbol((1,), (0,)), Symbol((0,), (1,)))


@dataclass(frozen=True)
class ZeroFactor:
    """GL or U factor of rank `size` over the degree `field_degree` extension"""
    field_degree: int
    kind: str
    size: int

    def __post_init__(self):
        if self.kind not in ('GL', 'U'):
            raise DescriptorError(f"zero factor kind must be GL or U, got {self.kind!r}")
        if self.field_degree < 1 or self.size < 1:
            raise DescriptorError(f"zero factor {self.kind}{self.size}x{self.field_degree} needs positive size and degree")

    @property
    def rank(self) -> int:
        return self.field_degree * self.size

    def __str__(self) -> str:
        suffix = f"x{self.field_degree}" if self.field_degree != 1 else ''
        return f"{self.kind}{self.size}{suffix}"


def parse_factor(text: str) -> ZeroFactor:
    match = re.fullmatch(r'\s*(GL|U)(\d+)(?:x(\d+))?\s*', text)
    if not match:
        raise DescriptorError(f"cannot parse zero factor {text!r}")
    return ZeroFactor(int(match.group(3) or 1), match.group(1), int(match.group(2)))


def _sign_of(g: GroupTag) -> int:
    return g.kind.epsilon


@dataclass(frozen=True)
class CentralizerDescriptor:
    group: GroupTag
    zero_part: Tuple[ZeroFactor, ...]
    minus_part: GroupTag
    plus_part: GroupTag

    def __post_init__(self):
        object.__setattr__(self, 'zero_part', tuple(self.zero_part))

    def problems(self) -> List[str]:
        """Every violated shape or rank rule, empty when the descriptor is valid"""
        issues = []
        kind = self.group.kind
        minus, plus = self.minus_part.kind, self.plus_part.kind
        if kind == GroupKind.SO_ODD:
            if minus != GroupKind.SP or plus != GroupKind.SP:
                issues.append(f"{self.group} needs symplectic minus and plus parts")
        elif kind == GroupKind.SP:
            if minus not in ORTHOGONAL or plus != GroupKind.SP:
                issues.append(f"{self.group} needs an orthogonal minus part and a symplectic plus part")
        elif kind in ORTHOGONAL:
            if minus not in ORTHOGONAL or plus not in ORTHOGONAL:
                issues.append(f"{self.group} needs orthogonal minus and plus parts")
            else:
                sign = _sign_of(self.minus_part) * _sign_of(self.plus_part)
                for factor in self.zero_part:
                    if factor.kind == 'U':
                        sign *= (-1) ** factor.size
                if sign != kind.epsilon:
                    issues.append(f"signs of the parts multiply to {sign:+d}, {self.group} needs {kind.epsilon:+d}")
        else:
            issues.append(f"descriptors of {self.group} are not supported")
        for part in (self.minus_part, self.plus_part):
            if part.kind == GroupKind.O_MINUS and part.n == 0:
                issues.append("O^-_0 has no unipotent symbols")
        total = sum(f.rank for f in self.zero_part) + self.minus_part.n + self.plus_part.n
        if total != self.group.n:
            issues.append(f"ranks add up to {total}, {self.group} has rank {self.group.n}")
        return issues

    def is_valid(self) -> bool:
        return not self.problems()

    def check(self) -> None:
        issues = self.problems()
        if issues:
            raise DescriptorError('; '.join(issues))

    def swapped(self) -> 'CentralizerDescriptor':
        return CentralizerDescriptor(self.group, self.zero_part, self.plus_part, self.minus_part)

    def __str__(self) -> str:
        return format_descriptor(self)


def _format_tag(g: GroupTag) -> str:
    return f"{g.kind.value}~{g.n}"


def format_descriptor(d: CentralizerDescriptor) -> str:
    zero = ', '.join(str(f) for f in d.zero_part) or '-'
    return f"{d.group} | 0: {zero} | -: {_format_tag(d.minus_part)} | +: {_format_tag(d.plus_part)}"


def parse_descriptor(text: str) -> CentralizerDescriptor:
    """'o-:1 | 0: U1 | -: o+~0 | +: o+~0'"""
    segments = [seg.strip() for seg in text.split('|')]
    if len(segments) < 3:
        raise DescriptorError(f"descriptor needs the group, minus and plus parts: {text!r}")
    try:
        group = GroupTag.parse(segments[0])
        zero, minus, plus = (), None, None
        for seg in segments[1:]:
            label, _, body = seg.partition(':')
            label, body = label.strip(), body.strip()
            if label == '0':
                zero = () if body in ('', '-') else tuple(parse_factor(tok) for tok in body.split(','))
            elif label == '-':
                minus = GroupTag.parse(body)
            elif label == '+':
                plus = GroupTag.parse(body)
            else:
                raise DescriptorError(f"unknown descriptor segment {seg!r}")
    except GroupMismatchError as e:
        raise DescriptorError(str(e))
    if minus is None or plus is None:
        raise DescriptorError(f"descriptor lacks a minus or plus part: {text!r}")
    return CentralizerDescriptor(group, zero, minus, plus)


@dataclass(frozen=True)
class ParamTriple:
    x: Tuple[Partition, ...] = field(default_factory=tuple)
    lambda1: Symbol = Symbol()
    lambda2: Symbol = Symbol()

    def __post_init__(self):
        object.__setattr__(self, 'x', tuple(self.x))

    def __str__(self) -> str:
        return format_triple(self)


def format_triple(t: ParamTriple) -> str:
    x = '/'.join(format_partition(p) for p in t.x) or '-'
    return f"{x} | {format_symbol(t.lambda1)} | {format_symbol(t.lambda2)}"


def parse_triple(text: str) -> ParamTriple:
    segments = [seg.strip() for seg in text.split('|')]
    if len(segments) != 3:
        raise DescriptorError(f"triple needs three '|'-separated parts: {text!r}")
    x_text, l1, l2 = segments
    try:
        x = () if x_text == '-' else tuple(parse_partition(tok) for tok in x_text.split('/'))
        return ParamTriple(x, parse_symbol(l1), parse_symbol(l2))
    except LusztigError as e:
        raise DescriptorError(f"cannot parse triple {text!r}: {e}")


def validate(d: CentralizerDescriptor, t: ParamTriple) -> bool:
    if not d.is_valid():
        logger.debug(f"invalid descriptor {d}: {d.problems()}")
        return False
    if len(t.x) != len(d.zero_part):
        return False
    if any(p.size != f.size for p, f in zip(t.x, d.zero_part)):
        return False
    return (t.lambda1 in enumerate_group_symbols(d.minus_part)
            and t.lambda2 in enumerate_group_symbols(d.plus_part))


def sgn_action(t: ParamTriple, g: GroupTag) -> ParamTriple:
    if g.kind not in ORTHOGONAL:
        raise GroupMismatchError(f"sgn acts on parameters of O^±, not {g}")
    return ParamTriple(t.x, t.lambda1.transpose(), t.lambda2.transpose())


def conjugate_action(t: ParamTriple, g: GroupTag) -> ParamTriple:
    if g.kind not in ORTHOGONAL + (GroupKind.SP,):
        raise GroupMismatchError(f"conjugation acts on parameters of Sp and O^±, not {g}")
    return ParamTriple(t.x, t.lambda1.transpose(), t.lambda2)


def spinor_action(t: ParamTriple, d: CentralizerDescriptor) -> Tuple[ParamTriple, CentralizerDescriptor]:
    if d.group.kind not in ORTHOGONAL + (GroupKind.SO_ODD,):
        raise GroupMismatchError(f"the spinor twist acts on parameters of SO_odd and O^±, not {d.group}")
    return ParamTriple(t.x, t.lambda2, t.lambda1), d.swapped()


def uniform_fiber(t: ParamTriple, g: GroupTag) -> List[ParamTriple]:
    if g.kind == GroupKind.SO_ODD:
        members = [t]
    elif g.kind == GroupKind.SP:
        members = [t, conjugate_action(t, g)]
    elif g.kind in ORTHOGONAL:
        c = conjugate_action(t, g)
        members = [t, c, sgn_action(t, g), sgn_action(c, g)]
    else:
        raise GroupMismatchError(f"no uniform fiber rule for {g}")
    unique = []
    for member in members:
        if member not in unique:
            unique.append(member)
    return unique


def is_basic_component(lam: Symbol) -> bool:
    lam = reduce(lam.unlabeled())
    return is_cuspidal(lam) or lam in RANK_ONE_LABELS


def _basic_index(lam: Symbol) -> int:
    lam = reduce(lam.unlabeled())
    if lam in RANK_ONE_LABELS:
        return 1
    if is_cuspidal(lam) and defect(lam) % 2 == 0:
        return abs(defect(lam)) // 2
    raise NotBasicError(f"{format_symbol(lam)} is neither cuspidal nor a rank one label")


def first_occurrence_indices(t: ParamTriple, d: CentralizerDescriptor) -> Tuple[int, int]:
    """(k', h') read off from Λ₂ and Λ₁ of a basic character of O^ε"""
    if d.group.kind not in ORTHOGONAL:
        raise GroupMismatchError(f"first occurrence indices are defined for O^±, not {d.group}")
    return _basic_index(t.lambda2), _basic_index(t.lambda1)


def _normal_form(lam: Symbol) -> Symbol:
    """Λ_k^II to Λ_k^I and (0;1) to (1;0)"""
    lam = reduce(lam.unlabeled())
    if lam in RANK_ONE_LABELS:
        return RANK_ONE_LABELS[0]
    if not is_basic_component(lam):
        raise NotBasicError(f"{format_symbol(lam)} is not a basic component")
    return lam if defect(lam) * (-1) ** (abs(defect(lam)) // 2) >= 0 else lam.transpose()


def canonical_basic_triple(t: ParamTriple, d: CentralizerDescriptor) -> Dict[str, ParamTriple]:
    g = d.group
    if g.kind not in ORTHOGONAL:
        raise GroupMismatchError(f"basic characters are normalized on O^±, not {g}")
    rho = ParamTriple(t.x, _normal_form(t.lambda1), _normal_form(t.lambda2))
    rho_c = conjugate_action(rho, g)
    return {
        'rho': rho,
        'rho^c': rho_c,
        'rho^c*sgn': sgn_action(rho_c, g),
        'rho*sgn': sgn_action(rho, g),
    }


def _same_zero_data(t: ParamTriple, d: CentralizerDescriptor,
                    tprime: ParamTriple, dprime: CentralizerDescriptor) -> bool:
    return d.zero_part == dprime.zero_part and t.x == tprime.x


def theta_coordinates_sp_soodd(t: ParamTriple, d: CentralizerDescriptor,
                               tprime: ParamTriple, dprime: CentralizerDescriptor,
                               psi_twist: bool = False) -> bool:
    if d.group.kind != GroupKind.SP or dprime.group.kind != GroupKind.SO_ODD:
        raise DescriptorError(f"expected (Sp, SO_odd) descriptors, got ({d.group}, {dprime.group})")
    lambda1 = t.lambda1.transpose() if psi_twist else t.lambda1
    return (_same_zero_data(t, d, tprime, dprime)
            and t.lambda2 == tprime.lambda1
            and in_theta_relation(lambda1, tprime.lambda2, d.minus_part.kind.epsilon))


def theta_coordinates_sp_oeven(t: ParamTriple, d: CentralizerDescriptor,
                               tprime: ParamTriple, dprime: CentralizerDescriptor,
                               psi_twist: bool = False) -> bool:
    if d.group.kind != GroupKind.SP or dprime.group.kind not in ORTHOGONAL:
        raise DescriptorError(f"expected (Sp, O^±) descriptors, got ({d.group}, {dprime.group})")
    lambda1 = t.lambda1.transpose() if psi_twist else t.lambda1
    return (_same_zero_data(t, d, tprime, dprime)
            and lambda1 == tprime.lambda1
            and in_theta_relation(tprime.lambda2, t.lambda2, dprime.plus_part.kind.epsilon))


def series_size(d: CentralizerDescriptor) -> int:
    total = 1
    for factor in d.zero_part:
        total *= partition_count(factor.size)
    return total * len(enumerate_group_symbols(d.minus_part)) * len(enumerate_group_symbols(d.plus_part))


@dataclass(frozen=True)
class ExampleRow:
    zero: str
    minus: str
    plus: str
    name: str
    descriptor: CentralizerDescriptor
    triple: ParamTriple


_EXAMPLES = {
    'o-2': [
        ('-', '-', 'O^-_2', '1', 'o-:1 | 0: - | -: o+~0 | +: o-~1', '- | -;- | -;1,0'),
        ('-', '-', 'O^-_2', 'sgn', 'o-:1 | 0: - | -: o+~0 | +: o-~1', '- | -;- | 1,0;-'),
        ('-', 'O^-_2', '-', 'chi', 'o-:1 | 0: - | -: o-~1 | +: o+~0', '- | -;1,0 | -;-'),
        ('-', 'O^-_2', '-', 'chi*sgn', 'o-:1 | 0: - | -: o-~1 | +: o+~0', '- | 1,0;- | -;-'),
        ('U1', '-', '-', 'chi^(k)', 'o-:1 | 0: U1 | -: o+~0 | +: o+~0', '1 | -;- | -;-'),
    ],
    'so3': [
        ('-', '-', 'Sp_2', '1', 'so:1 | 0: - | -: sp~0 | +: sp~1', '- | 0;- | 1;-'),
        ('-', '-', 'Sp_2', 'St', 'so:1 | 0: - | -: sp~0 | +: sp~1', '- | 0;- | 1,0;1'),
        ('-', 'Sp_2', '-', 'chi', 'so:1 | 0: - | -: sp~1 | +: sp~0', '- | 1;- | 0;-'),
        ('-', 'Sp_2', '-', 'St*chi', 'so:1 | 0: - | -: sp~1 | +: sp~0', '- | 1,0;1 | 0;-'),
        ('GL1', '-', '-', 'rho_GL1', 'so:1 | 0: GL1 | -: sp~0 | +: sp~0', '1 | 0;- | 0;-'),
        ('U1', '-', '-', 'rho_U1', 'so:1 | 0: U1 | -: sp~0 | +: sp~0', '1 | 0;- | 0;-'),
    ],
}


def example_table(name: str) -> List[ExampleRow]:
    """Unipotent and rank one series of O^-_2 ('o-2') and SO_3 ('so3')"""
    try:
        rows = _EXAMPLES[name.lower()]
    except KeyError:
        raise DescriptorError(f"no example table named {name!r}; choose from {sorted(_EXAMPLES)}")
    return [ExampleRow(zero, minus, plus, label, parse_descriptor(desc), parse_triple(triple))
            for zero, minus, plus, label, desc, triple in rows]
