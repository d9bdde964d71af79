#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Lemma verifier
Exhaustive property suites at small rank, fanned out over a worker pool and
reported in submission order
"""

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from src.almost_chars import (POLICIES, gram_matrix, gram_matrix_formal, is_uniform,
                              projection_in_rho_basis, sum_of_basis_vectors)
from src.cells import all_cells, corrupt_cell, find_separating_cell
from src.config import get_settings
from src.errors import LusztigError
from src.lusztig import (CentralizerDescriptor, ParamTriple, conjugate_action, example_table,
                         sgn_action, spinor_action, theta_coordinates_sp_oeven,
                         theta_coordinates_sp_soodd, uniform_fiber, validate)
from src.partitions import (enumerate_bipartitions, enumerate_partitions, interleaves,
                            parse_partition, partition_count)
from src.special_symbols import (SpecialSymbol, balanced_subsets, expected_family_size,
                                 family_symbols, is_special, special_symbols_of, symbol_pairing)
from src.symbols import (GroupKind, GroupTag, Symbol, defect, enumerate_group_symbols, enumerate_symbols,
                         format_symbol, lambda_O_I, lambda_O_II, lambda_SOodd, lambda_sp, parse_symbol,
                         rank, upsilon, upsilon_inverse)
from src.theta import (descend_O_plus, first_occurrence, in_theta_relation, minimal_partner_rank,
                       occurrence_gap, omega, omega_sharp, theta_partners)
from src.weyl_b import brute_force_table, character_table, inner_product

logger = logging.getLogger(__name__)

MAX_FAILURES = 5
ALL_KINDS = tuple(GroupKind)
CELL_KINDS = (GroupKind.SP, GroupKind.SO_ODD, GroupKind.O_PLUS, GroupKind.O_MINUS)
O_KINDS = (GroupKind.O_PLUS, GroupKind.O_MINUS)


@dataclass
class SuiteResult:
    name: str
    passed: bool = True
    checked: int = 0
    failures: List[Dict] = field(default_factory=list)
    error: Optional[str] = None
    max_rank: Optional[int] = None
    max_n: Optional[int] = None

    def check(self, condition: bool, **counterexample) -> None:
        self.checked += 1
        if not condition:
            self.passed = False
            if len(self.failures) < MAX_FAILURES:
                self.failures.append(counterexample)

    def as_record(self) -> Dict:
        record = {'suite': self.name, 'passed': self.passed, 'checked': self.checked,
                  'failures': self.failures}
        if self.max_rank is not None:
            record['max_rank'], record['max_n'] = self.max_rank, self.max_n
        if self.error:
            record['error'] = self.error
        return record


@dataclass(frozen=True)
class SuiteScope:
    """Bounds of one suite run; kinds restricts every sweep over groups"""
    max_rank: int
    max_n: int
    kinds: Tuple[GroupKind, ...] = ALL_KINDS

    def groups(self, kinds: Sequence[GroupKind], cap: Optional[int] = None) -> List[GroupTag]:
        top = self.max_rank if cap is None else min(self.max_rank, cap)
        return [GroupTag(kind, n) for n in range(top + 1) for kind in kinds if kind in self.kinds]


def _s(symbol: Symbol) -> str:
    return format_symbol(symbol)


def check_partitions(result: SuiteResult, scope: SuiteScope) -> None:
    for n in range(scope.max_n + 3):
        parts = enumerate_partitions(n)
        result.check(len(parts) == partition_count(n), n=n, found=len(parts))
        result.check(parts == sorted(parts, reverse=True), n=n, issue='order')
        bps = enumerate_bipartitions(n)
        expected = sum(partition_count(k) * partition_count(n - k) for k in range(n + 1))
        result.check(len(bps) == expected, n=n, found=len(bps))
    result.check(interleaves(parse_partition('1'), parse_partition('2')), case='1 ⪯ 2')
    result.check(not interleaves(parse_partition('2'), parse_partition('1')), case='2 ⪯ 1')


def check_symbols(result: SuiteResult, scope: SuiteScope) -> None:
    for g in scope.groups(ALL_KINDS):
        symbols = enumerate_group_symbols(g)
        result.check(len(symbols) == len(set(symbols)), group=str(g), issue='duplicates')
        for s in symbols:
            result.check(s.is_reduced and rank(s) == g.n and g.admits_defect(defect(s)),
                         group=str(g), symbol=_s(s))
            if s.label is None:
                result.check(upsilon_inverse(upsilon(s), defect(s)) == s, group=str(g), symbol=_s(s))
        if g.kind.is_special_orthogonal_even:
            full = enumerate_group_symbols(GroupTag(g.kind.orthogonal_counterpart, g.n))
            degenerate = sum(1 for s in full if s.is_degenerate)
            result.check(len(symbols) == (len(full) - degenerate) // 2 + 2 * degenerate,
                         group=str(g), found=len(symbols))
    for k in range(4):
        result.check(rank(lambda_sp(k)) == k * (k + 1) == rank(lambda_SOodd(k)), k=k, issue='cuspidal rank')
        result.check(rank(lambda_O_I(k)) == k * k == rank(lambda_O_II(k)), k=k, issue='cuspidal rank')


def check_pairing_lemma(result: SuiteResult, scope: SuiteScope) -> None:
    for g in scope.groups(CELL_KINDS):
        for z in special_symbols_of(g):
            sigmas = [m.symbol for m in balanced_subsets(z)]
            for lam in family_symbols(z, g):
                for sigma in sigmas:
                    value = symbol_pairing(lam, sigma)
                    result.check(value == symbol_pairing(lam.transpose(), sigma),
                                 group=str(g), lam=_s(lam), sigma=_s(sigma), part=1)
                    if g.kind in O_KINDS:
                        flipped = symbol_pairing(lam, sigma.transpose())
                        expected_equal = g.kind == GroupKind.O_PLUS
                        result.check((value == flipped) == expected_equal,
                                     group=str(g), lam=_s(lam), sigma=_s(sigma), part=2)


def check_cardinality(result: SuiteResult, scope: SuiteScope) -> None:
    for g in scope.groups(ALL_KINDS):
        union = []
        for s in enumerate_symbols(g.n, g.kind.delta0):
            if not is_special(s):
                continue
            z = SpecialSymbol(s)
            members = family_symbols(z, g)
            result.check(len(members) == expected_family_size(z, g),
                         group=str(g), special=_s(s), found=len(members))
            union.extend(members)
        symbols = enumerate_group_symbols(g)
        result.check(len(union) == len(set(union)) and set(union) == set(symbols),
                     group=str(g), issue='families do not partition the symbol set')


def check_weyl(result: SuiteResult, scope: SuiteScope) -> None:
    for n in range(scope.max_n + 1):
        table = character_table(n)
        rows = [table.row(bp) for bp in table.rows]
        if n <= 3:
            result.check(brute_force_table(n) == table, n=n, issue='brute force mismatch')
        for j, c in enumerate(table.classes):
            result.check(sum(v[j] ** 2 for v in table.values) == c.centralizer_order,
                         n=n, klass=str(c), issue='column orthogonality')
        for i, f in enumerate(rows):
            for j, h in enumerate(rows):
                result.check(inner_product(f, h) == (1 if i == j else 0),
                             n=n, left=str(table.rows[i]), right=str(table.rows[j]))
            bp = table.rows[i]
            result.check(f.times_sign() == table.row(bp.transpose()), n=n, row=str(bp), issue='sign twist')
            if n > 0:
                norm = inner_product(f, f, 'plus')
                result.check(norm == (2 if bp.is_degenerate else 1), n=n, row=str(bp), issue='norm on W^+')
        trivial = [bp for bp in table.rows if bp.bottom.size == 0 and bp.top.length <= 1]
        result.check(all(v == 1 for v in table.row(trivial[0]).values), n=n, issue='trivial row')


def check_gram(result: SuiteResult, scope: SuiteScope) -> None:
    for g in scope.groups(ALL_KINDS):
        for label, policy in POLICIES.items():
            result.check(gram_matrix(g, policy).is_identity(), group=str(g), policy=label, issue='gram')
        result.check(gram_matrix_formal(g).is_identity(), group=str(g), issue='formal gram')


def check_fibers(result: SuiteResult, scope: SuiteScope) -> None:
    kinds = (GroupKind.SP, GroupKind.SO_ODD) + O_KINDS
    for g in scope.groups(kinds):
        symbols = enumerate_group_symbols(g)
        projections = {s: projection_in_rho_basis(s, g, POLICIES['min']) for s in symbols}
        for s in symbols:
            result.check(projections[s] == projection_in_rho_basis(s, g, POLICIES['max']),
                         group=str(g), symbol=_s(s), issue='choice dependence')
        for s1 in symbols:
            for s2 in symbols:
                same = projections[s1] == projections[s2]
                if g.kind in O_KINDS:
                    expected = s2 in (s1, s1.transpose())
                else:
                    expected = s1 == s2
                result.check(same == expected, group=str(g), left=_s(s1), right=_s(s2))


def check_cells(result: SuiteResult, scope: SuiteScope) -> None:
    for g in scope.groups(CELL_KINDS):
        for z in special_symbols_of(g):
            members = family_symbols(z, g)
            for phi, psi, members_of_cell in all_cells(z, g):
                vector = sum_of_basis_vectors(g, members_of_cell)
                result.check(is_uniform(vector), group=str(g), special=str(z), phi=str(phi), psi=str(psi))
                result.check(set(members_of_cell) <= set(members), group=str(g), special=str(z),
                             phi=str(phi), psi=str(psi), issue='cell leaves the family')
                if g.kind in O_KINDS:
                    closed = all(lam.transpose() in members_of_cell for lam in members_of_cell)
                    result.check(closed, group=str(g), special=str(z), phi=str(phi), psi=str(psi),
                                 issue='transpose closure')
                if len(members_of_cell) > 1 and g.kind in (GroupKind.SP, GroupKind.SO_ODD):
                    broken = sum_of_basis_vectors(g, corrupt_cell(members_of_cell))
                    result.check(not is_uniform(broken), group=str(g), special=str(z), issue='negative control')
            for i, l1 in enumerate(members):
                for l2 in members[i + 1:]:
                    if g.kind in O_KINDS and l2 == l1.transpose():
                        continue
                    try:
                        find_separating_cell(l1, l2, g)
                        result.check(True)
                    except LusztigError as e:
                        result.check(False, group=str(g), left=_s(l1), right=_s(l2), error=str(e))


def _eps_of_cuspidal(k: int) -> int:
    return 1 if k % 2 == 0 else -1


def check_theta(result: SuiteResult, scope: SuiteScope) -> None:
    result.check(first_occurrence(parse_symbol('1;0'), 1) == 0, case='(1;0)')
    result.check(first_occurrence(parse_symbol('0;1'), 1) == 1, case='(0;1)')
    for k in range(4):
        eps = _eps_of_cuspidal(k)
        result.check(first_occurrence(lambda_O_I(k), eps) == k * (k - 1), k=k, label='I')
        result.check(first_occurrence(lambda_O_II(k), eps) == k * (k + 1), k=k, label='II')
    for g in scope.groups(O_KINDS, 3):
        eps = g.kind.epsilon
        for lam in enumerate_group_symbols(g):
            n0 = first_occurrence(lam, eps)
            result.check(n0 == minimal_partner_rank(lam, eps), group=str(g), symbol=_s(lam), found=n0)
            for extra in (1, 2):
                result.check(bool(theta_partners(lam, eps, n0 + extra)), group=str(g), symbol=_s(lam),
                             issue='stability', nprime=n0 + extra)
            gap = n0 - first_occurrence(lam.transpose(), eps)
            result.check(gap == occurrence_gap(lam, eps), group=str(g), symbol=_s(lam), gap=gap)


def _symbols(*texts: str) -> set:
    return {parse_symbol(t) for t in texts}


def check_omega(result: SuiteResult, scope: SuiteScope) -> None:
    sp, o_plus = GroupKind.SP, GroupKind.O_PLUS
    golden = [
        ('2,0;1', GroupTag(sp, 2), _symbols('3,0;1', '2,1;1', '2,0;2', '3,1,0;2,1')),
        ('1;-', GroupTag(sp, 1), _symbols('2;-', '2,1;0', '2,0;1')),
        ('1,0;1', GroupTag(sp, 1), _symbols('2,0;1', '1,0;2', '2,1,0;2,1')),
        ('-;-', GroupTag(o_plus, 0), _symbols('1;0', '0;1')),
    ]
    for text, g, expected in golden:
        found = set(omega(parse_symbol(text), g))
        result.check(found == expected, symbol=text, found=sorted(_s(s) for s in found))
    for g in scope.groups(CELL_KINDS):
        for lam in enumerate_group_symbols(g):
            grown = omega(lam, g)
            result.check(all(defect(s) == defect(lam) and rank(s) == g.n + 1 for s in grown),
                         group=str(g), symbol=_s(lam), issue='defect or rank')
            result.check(len(set(grown)) == len(grown), group=str(g), symbol=_s(lam), issue='repeated symbol')
            twice = {t for s in grown for t in omega(s)}
            result.check(set(omega_sharp(lam)) <= twice, group=str(g), symbol=_s(lam), issue='two boxes')


def check_descent(result: SuiteResult, scope: SuiteScope) -> None:
    for n in range(2, scope.max_n + 1):
        for lam in enumerate_symbols(n, 0):
            if lam.is_degenerate:
                continue
            try:
                lower = descend_O_plus(lam)
            except LusztigError as e:
                result.check(False, symbol=_s(lam), error=str(e))
                continue
            grown = omega(lower)
            result.check(rank(lower) == n - 1 and defect(lower) == 0
                         and lam in grown and lam.transpose() not in grown,
                         symbol=_s(lam), descent=_s(lower))


def _orthogonal_descriptors(scope: SuiteScope) -> List[CentralizerDescriptor]:
    descriptors = []
    for g in scope.groups(O_KINDS, 3):
        for a in range(g.n + 1):
            for minus_kind in O_KINDS:
                for plus_kind in O_KINDS:
                    d = CentralizerDescriptor(g, (), GroupTag(minus_kind, a), GroupTag(plus_kind, g.n - a))
                    if d.is_valid():
                        descriptors.append(d)
    return descriptors


def check_lusztig(result: SuiteResult, scope: SuiteScope) -> None:
    for name in ('o-2', 'so3'):
        rows = example_table(name)
        for row in rows:
            result.check(validate(row.descriptor, row.triple), table=name, row=row.name)
        by_name = {row.name: row for row in rows}
        swaps = [('1', 'chi'), ('sgn', 'chi*sgn')] if name == 'o-2' else [('1', 'chi'), ('St', 'St*chi')]
        for left, right in swaps:
            image, descriptor = spinor_action(by_name[left].triple, by_name[left].descriptor)
            result.check(image == by_name[right].triple and descriptor == by_name[right].descriptor,
                         table=name, left=left, right=right)
    for d in _orthogonal_descriptors(scope):
        g = d.group
        for l1 in enumerate_group_symbols(d.minus_part):
            for l2 in enumerate_group_symbols(d.plus_part):
                t = ParamTriple((), l1, l2)
                c, s = conjugate_action(t, g), sgn_action(t, g)
                result.check(conjugate_action(c, g) == t and sgn_action(s, g) == t
                             and sgn_action(c, g) == conjugate_action(s, g),
                             descriptor=str(d), triple=str(t), issue='Klein four')
                result.check(validate(d, c) and validate(d, s), descriptor=str(d), triple=str(t))
                spun, d_spun = spinor_action(t, d)
                result.check(validate(d_spun, spun), descriptor=str(d), triple=str(t), issue='spinor')
                lhs, _ = spinor_action(conjugate_action(t, g), d)
                rhs = sgn_action(conjugate_action(spinor_action(t, d)[0], g), g)
                result.check(lhs == rhs, descriptor=str(d), triple=str(t), issue='spinor and conjugation')
                expected = 4 // (2 if l1.is_degenerate else 1) // (2 if l2.is_degenerate else 1)
                result.check(len(uniform_fiber(t, g)) == expected, descriptor=str(d), triple=str(t))
    for g in scope.groups((GroupKind.SP,), 3):
        n = g.n
        for a in range(n + 1):
            d = CentralizerDescriptor(g, (), GroupTag(GroupKind.O_PLUS, a), GroupTag(GroupKind.SP, n - a))
            for l1 in enumerate_group_symbols(d.minus_part):
                for l2 in enumerate_group_symbols(d.plus_part):
                    t = ParamTriple((), l1, l2)
                    result.check(validate(d, t), descriptor=str(d), triple=str(t))
                    expected = 1 if l1.is_degenerate else 2
                    result.check(len(uniform_fiber(t, g)) == expected, descriptor=str(d), triple=str(t))


def check_coordinates(result: SuiteResult, scope: SuiteScope) -> None:
    bound = min(scope.max_rank, 3)
    empty_o = Symbol()
    empty_sp = enumerate_group_symbols(GroupTag(GroupKind.SP, 0))[0]
    for g in scope.groups(O_KINDS, bound):
        eps = g.kind.epsilon
        for nprime in range(bound + 1):
            sp_plus = CentralizerDescriptor(GroupTag(GroupKind.SP, nprime), (),
                                            GroupTag(GroupKind.O_PLUS, 0), GroupTag(GroupKind.SP, nprime))
            o_side = CentralizerDescriptor(g, (), GroupTag(GroupKind.O_PLUS, 0), g)
            sp_minus = CentralizerDescriptor(GroupTag(GroupKind.SP, g.n), (), g, GroupTag(GroupKind.SP, 0))
            so_side = CentralizerDescriptor(GroupTag(GroupKind.SO_ODD, nprime), (),
                                            GroupTag(GroupKind.SP, 0), GroupTag(GroupKind.SP, nprime))
            for lam in enumerate_group_symbols(g):
                for lamp in enumerate_group_symbols(GroupTag(GroupKind.SP, nprime)):
                    expected = in_theta_relation(lam, lamp, eps)
                    oeven = theta_coordinates_sp_oeven(ParamTriple((), empty_o, lamp), sp_plus,
                                                       ParamTriple((), empty_o, lam), o_side)
                    soodd = theta_coordinates_sp_soodd(ParamTriple((), lam, empty_sp), sp_minus,
                                                       ParamTriple((), empty_sp, lamp), so_side)
                    result.check(oeven == expected == soodd, group=str(g), lam=_s(lam), lamp=_s(lamp))


SUITES: Dict[str, Callable[[SuiteResult, SuiteScope], None]] = {
    'partitions': check_partitions,
    'symbols': check_symbols,
    'pairing-lemma': check_pairing_lemma,
    'cardinality': check_cardinality,
    'weyl': check_weyl,
    'gram': check_gram,
    'fibers': check_fibers,
    'cells': check_cells,
    'theta': check_theta,
    'omega': check_omega,
    'descent': check_descent,
    'lusztig': check_lusztig,
    'coordinates': check_coordinates,
}

# (max_rank, max_n) a suite covers at least unless bounds are given explicitly
ACCEPTANCE_BOUNDS: Dict[str, Tuple[Optional[int], Optional[int]]] = {
    'pairing-lemma': (5, None),
    'cardinality': (5, None),
    'descent': (None, 8),
}


def run_suite(name: str, max_rank: int, max_n: int, kinds: Sequence[GroupKind] = ALL_KINDS) -> SuiteResult:
    result = SuiteResult(name, max_rank=max_rank, max_n=max_n)
    SUITES[name](result, SuiteScope(max_rank, max_n, tuple(kinds)))
    return result


def expand(names: Sequence[str]) -> List[str]:
    if 'all' in names:
        return list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suites: {', '.join(unknown)}")
    return list(names)


class LemmaVerifier:
    def __init__(self, max_rank: Optional[int] = None, max_n: Optional[int] = None,
                 workers: Optional[int] = None, kinds: Optional[Sequence[GroupKind]] = None):
        settings = get_settings()
        self.max_rank = max_rank if max_rank is not None else settings.verify_rank
        self.max_n = max_n if max_n is not None else settings.verify_weyl_n
        self.workers = workers if workers is not None else settings.workers
        self.kinds = tuple(kinds) if kinds else ALL_KINDS
        self._explicit_rank = max_rank is not None
        self._explicit_n = max_n is not None

    def bounds(self, name: str) -> Tuple[int, int]:
        rank_floor, n_floor = ACCEPTANCE_BOUNDS.get(name, (None, None))
        max_rank = self.max_rank
        if not self._explicit_rank and rank_floor is not None:
            max_rank = max(max_rank, rank_floor)
        max_n = self.max_n
        if not self._explicit_n and n_floor is not None:
            max_n = max(max_n, n_floor)
        return max_rank, max_n

    async def _inline(self, name: str) -> SuiteResult:
        return run_suite(name, *self.bounds(name), self.kinds)

    async def verify(self, names: Sequence[str]) -> List[SuiteResult]:
        """Run the named suites; a suite that raises is reported as failed"""
        names = expand(names)
        logger.info(f"Starting verification of {len(names)} suites "
                    f"(max rank {self.max_rank}, max n {self.max_n}, workers {self.workers})")
        if self.workers > 1:
            loop = asyncio.get_running_loop()
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                tasks = [loop.run_in_executor(pool, run_suite, name, *self.bounds(name), self.kinds)
                         for name in names]
                outcomes = await asyncio.gather(*tasks, return_exceptions=True)
        else:
            outcomes = await asyncio.gather(*(self._inline(name) for name in names), return_exceptions=True)

        results = []
        for name, outcome in zip(names, outcomes):
            if isinstance(outcome, SuiteResult):
                result = outcome
            else:
                logger.error(f"Suite {name} crashed: {outcome}")
                max_rank, max_n = self.bounds(name)
                result = SuiteResult(name, passed=False, error=repr(outcome), max_rank=max_rank, max_n=max_n)
            if result.passed:
                logger.info(f"✅ {name}: {result.checked} checks passed")
            else:
                logger.error(f"❌ {name}: {len(result.failures)} counterexamples shown")
                for failure in result.failures:
                    logger.error(f"   {name} counterexample: {failure}")
            results.append(result)
        return results

    def run(self, names: Sequence[str]) -> List[SuiteResult]:
        return asyncio.run(self.verify(names))
