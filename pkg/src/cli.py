#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Command line front end
Data goes to stdout in TSV or JSON lines, logs go to stderr.

Symbols whose text starts with '-' must be passed in the --opt=value form,
e.g. --symbol=-;2,1,0
"""

import argparse
import json
import logging
import sys
from typing import Dict, List, Optional, Sequence

from src.almost_chars import POLICIES, fourier_matrix, projection_in_rho_basis, uniform_projection
from src.config import get_settings
from src.errors import LusztigError
from src.formatter import FORMATS, TableFormatter
from src.lusztig import (example_table, format_triple, parse_descriptor, parse_triple, theta_coordinates_sp_oeven,
                         theta_coordinates_sp_soodd, uniform_fiber, validate)
from src.special_symbols import SpecialSymbol, family_symbols, sign_matrix, special_symbols_of
from src.symbols import GroupKind, GroupTag, check_in_group, enumerate_group_symbols, enumerate_symbols, parse_symbol
from src.theta import descend_O_plus, first_occurrence, minimal_partner_rank, omega, theta_partners
from src.verifier import SUITES, LemmaVerifier
from src.weyl_b import character_table

logger = logging.getLogger(__name__)

EPSILONS = {'+': 1, '-': -1}


def _epsilon(text: str) -> int:
    try:
        return EPSILONS[text]
    except KeyError:
        raise argparse.ArgumentTypeError(f"epsilon must be '+' or '-', got {text!r}")


def _emit(formatter: TableFormatter, records: List[Dict], columns: Optional[Sequence[str]] = None) -> None:
    sys.stdout.write(formatter.render(records, columns))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=FORMATS, default='tsv', help='output format (default: tsv)')

    parser = argparse.ArgumentParser(prog='lusztig', description='Unipotent symbol toolkit')
    verbs = parser.add_subparsers(dest='verb', required=True)

    symbols = verbs.add_parser('symbols', help='enumerate symbols').add_subparsers(dest='action', required=True)
    p = symbols.add_parser('enumerate', parents=[common], help='reduced symbols of given rank and defect')
    p.add_argument('--rank', '--n', dest='n', type=int, required=True)
    p.add_argument('--defect', type=int, required=True)
    p = symbols.add_parser('group', parents=[common], help='the unipotent symbols of a group')
    p.add_argument('--group', '--kind', dest='kind', type=GroupKind.parse, required=True)
    p.add_argument('--n', type=int, required=True)

    p = verbs.add_parser('family', parents=[common], help='family of a special symbol')
    p.add_argument('--special', type=parse_symbol, required=True)
    p.add_argument('--group', '--kind', dest='kind', type=GroupKind.parse, required=True)
    p.add_argument('--signs', action='store_true', help='print the sign table instead of the members')

    weyl = verbs.add_parser('weyl', help='Weyl group of type B').add_subparsers(dest='action', required=True)
    p = weyl.add_parser('table', parents=[common], help='character table of W_n')
    p.add_argument('--n', type=int, required=True)

    p = verbs.add_parser('fourier', parents=[common], help='Fourier coefficients of every family of a group')
    p.add_argument('--group', '--kind', dest='kind', type=GroupKind.parse, required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--policy', choices=sorted(POLICIES), default='min')

    p = verbs.add_parser('project', parents=[common], help='uniform projection of a unipotent character')
    p.add_argument('--group', '--kind', dest='kind', type=GroupKind.parse, required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--symbol', type=parse_symbol, required=True)
    p.add_argument('--basis', choices=('R', 'rho'), default='R')
    p.add_argument('--policy', choices=sorted(POLICIES), default='min')

    theta = verbs.add_parser('theta', help='theta relation on symbols').add_subparsers(dest='action', required=True)
    p = theta.add_parser('first', parents=[common], help='first occurrence along the symplectic tower')
    p.add_argument('--symbol', type=parse_symbol, required=True)
    p.add_argument('--eps', type=_epsilon, required=True)
    p = theta.add_parser('partners', parents=[common], help='theta partners in Sp_{2n\'}')
    p.add_argument('--symbol', type=parse_symbol, required=True)
    p.add_argument('--eps', type=_epsilon, required=True)
    p.add_argument('--nprime', type=int, required=True)
    p = theta.add_parser('omega', parents=[common], help='one-box induction relation')
    p.add_argument('--symbol', type=parse_symbol, required=True)
    p = theta.add_parser('descend', parents=[common], help='descent from O^+_{2n} to O^+_{2(n-1)}')
    p.add_argument('--symbol', type=parse_symbol, required=True)

    lusztig = verbs.add_parser('lusztig', help='parameter algebra').add_subparsers(dest='action', required=True)
    p = lusztig.add_parser('validate', parents=[common], help='check a triple against a descriptor')
    p.add_argument('--descriptor', type=parse_descriptor, required=True)
    p.add_argument('--triple', type=parse_triple, required=True)
    p = lusztig.add_parser('fiber', parents=[common], help='triples sharing a uniform projection')
    where = p.add_mutually_exclusive_group(required=True)
    where.add_argument('--group', type=GroupTag.parse)
    where.add_argument('--descriptor', type=parse_descriptor, help='take the group from a descriptor')
    p.add_argument('--triple', type=parse_triple, required=True)
    p = lusztig.add_parser('theta', parents=[common], help='theta condition on coordinates')
    p.add_argument('--descriptor', type=parse_descriptor, required=True, help='Sp side')
    p.add_argument('--triple', type=parse_triple, required=True, help='Sp side')
    p.add_argument('--partner-descriptor', type=parse_descriptor, required=True)
    p.add_argument('--partner-triple', type=parse_triple, required=True)
    p.add_argument('--psi-twist', action='store_true')
    p = lusztig.add_parser('table', parents=[common], help='example series tables')
    p.add_argument('--name', choices=('o-2', 'so3'), required=True)

    p = verbs.add_parser('verify', parents=[common], help='run verification suites')
    p.add_argument('suites', nargs='+', choices=list(SUITES) + ['all'])
    p.add_argument('--max-rank', type=int)
    p.add_argument('--max-n', type=int)
    p.add_argument('--workers', type=int)
    p.add_argument('--group', dest='kinds', type=GroupKind.parse, action='append',
                   help='only sweep groups of this kind (repeatable)')
    p.add_argument('--report', help='write a JSON report to this path')
    return parser


def _run_symbols(args, formatter: TableFormatter) -> int:
    if args.action == 'enumerate':
        symbols = enumerate_symbols(args.n, args.defect)
    else:
        symbols = enumerate_group_symbols(GroupTag(args.kind, args.n))
    _emit(formatter, formatter.symbol_records(symbols), ['symbol', 'rank', 'defect', 'upsilon'])
    return 0


def _run_family(args, formatter: TableFormatter) -> int:
    z = SpecialSymbol(args.special)
    g = GroupTag(args.kind, z.rank)
    if args.signs:
        _emit(formatter, formatter.sign_table_records(sign_matrix(z, g)))
    else:
        _emit(formatter, formatter.symbol_records(family_symbols(z, g)), ['symbol', 'rank', 'defect', 'upsilon'])
    return 0


def _run_weyl(args, formatter: TableFormatter) -> int:
    table = character_table(args.n, get_settings().max_weyl_rank)
    _emit(formatter, formatter.character_table_records(table))
    return 0


def _run_fourier(args, formatter: TableFormatter) -> int:
    g = GroupTag(args.kind, args.n)
    records = []
    for z in special_symbols_of(g):
        records.extend(formatter.fourier_records(fourier_matrix(z, g, POLICIES[args.policy])))
    _emit(formatter, records, ['special', 'c_z', 'lambda', 'sigma', 'coefficient'])
    return 0


def _run_project(args, formatter: TableFormatter) -> int:
    g = GroupTag(args.kind, args.n)
    check_in_group(args.symbol, g)
    policy = POLICIES[args.policy]
    if args.basis == 'rho':
        vector = projection_in_rho_basis(args.symbol, g, policy)
        columns = ['lambda', 'coefficient']
    else:
        vector = uniform_projection(args.symbol, g, policy)
        columns = ['sigma', 'coefficient']
    _emit(formatter, formatter.vector_records(vector), columns)
    return 0


def _run_theta(args, formatter: TableFormatter) -> int:
    columns = ['symbol', 'rank', 'defect', 'upsilon']
    if args.action == 'first':
        records = [{
            'symbol': str(args.symbol),
            'eps': '+' if args.eps > 0 else '-',
            'first_occurrence': first_occurrence(args.symbol, args.eps),
            'closed_form': minimal_partner_rank(args.symbol, args.eps),
        }]
        _emit(formatter, records)
    elif args.action == 'partners':
        _emit(formatter, formatter.symbol_records(theta_partners(args.symbol, args.eps, args.nprime)), columns)
    elif args.action == 'omega':
        _emit(formatter, formatter.symbol_records(omega(args.symbol)), columns)
    else:
        _emit(formatter, formatter.symbol_records([descend_O_plus(args.symbol)]), columns)
    return 0


def _run_lusztig(args, formatter: TableFormatter) -> int:
    if args.action == 'validate':
        d = args.descriptor
        records = [{
            'descriptor': str(d),
            'triple': format_triple(args.triple),
            'valid': validate(d, args.triple),
            'problems': '; '.join(d.problems()),
        }]
        _emit(formatter, records)
    elif args.action == 'fiber':
        g = args.group or args.descriptor.group
        _emit(formatter, [{'triple': format_triple(t)} for t in uniform_fiber(args.triple, g)], ['triple'])
    elif args.action == 'theta':
        partner_kind = args.partner_descriptor.group.kind
        check = theta_coordinates_sp_soodd if partner_kind == GroupKind.SO_ODD else theta_coordinates_sp_oeven
        related = check(args.triple, args.descriptor, args.partner_triple, args.partner_descriptor,
                        psi_twist=args.psi_twist)
        _emit(formatter, [{'related': related}])
    else:
        _emit(formatter, formatter.example_records(example_table(args.name)),
              ['G0', 'G-', 'G+', 'name', 'triple'])
    return 0


def _run_verify(args, formatter: TableFormatter) -> int:
    verifier = LemmaVerifier(args.max_rank, args.max_n, args.workers, args.kinds)
    results = verifier.run(args.suites)
    records = []
    for result in results:
        record = result.as_record()
        if formatter.fmt == 'tsv':
            record['failures'] = json.dumps(record['failures'], sort_keys=True, ensure_ascii=False)
        records.append(record)
    _emit(formatter, records, ['suite', 'passed', 'checked', 'failures'])
    if args.report:
        settings = {'max_rank': verifier.max_rank, 'max_n': verifier.max_n, 'workers': verifier.workers,
                    'kinds': [kind.value for kind in verifier.kinds]}
        formatter.save_report(formatter.build_report(results, settings), args.report)
    return 0 if all(r.passed for r in results) else 1


HANDLERS = {
    'symbols': _run_symbols,
    'family': _run_family,
    'weyl': _run_weyl,
    'fourier': _run_fourier,
    'project': _run_project,
    'theta': _run_theta,
    'lusztig': _run_lusztig,
    'verify': _run_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    formatter = TableFormatter(args.format)
    try:
        return HANDLERS[args.verb](args, formatter)
    except LusztigError as e:
        logger.error(f"❌ {args.verb} failed: {e}")
        sys.stderr.write(f"error: {e}\n")
        return 1
