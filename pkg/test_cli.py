#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for the command line front end
"""

import json
from pathlib import Path

import pytest

from src.cli import main

GOLDEN = Path(__file__).parent / 'golden'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out.splitlines()


def test_group_symbols_as_json(capsys):
    code, lines = run(capsys, 'symbols', 'group', '--kind', 'sp', '--n', '2', '--format', 'json')
    assert code == 0
    records = [json.loads(line) for line in lines]
    assert len(records) == 6
    assert all(r['schema_version'] == 1 for r in records)
    assert {r['symbol'] for r in records} == {'2;-', '2,1;0', '2,0;1', '1,0;2', '2,1,0;2,1', '-;2,1,0'}


def test_enumerate_symbols_header(capsys):
    code, lines = run(capsys, 'symbols', 'enumerate', '--n', '1', '--defect', '0')
    assert code == 0
    assert lines[0] == 'symbol\trank\tdefect\tupsilon'
    assert len(lines) == 3


def test_weyl_table_matches_golden(capsys):
    code = main(['weyl', 'table', '--n', '2'])
    out = capsys.readouterr().out
    assert code == 0
    assert out == (GOLDEN / 'weyl_table_n2.tsv').read_text(encoding='utf-8')


def test_first_occurrence(capsys):
    code, lines = run(capsys, 'theta', 'first', '--symbol=0;1', '--eps', '+')
    assert code == 0
    assert lines == ['symbol\teps\tfirst_occurrence\tclosed_form', '0;1\t+\t1\t1']


def test_omega(capsys):
    code, lines = run(capsys, 'theta', 'omega', '--symbol=-;-')
    assert code == 0
    assert [line.split('\t')[0] for line in lines[1:]] == ['1;0', '0;1']


def test_sign_table(capsys):
    code, lines = run(capsys, 'family', '--special', '2,0;1', '--kind', 'sp', '--signs')
    assert code == 0
    assert lines[0] == 'sigma\t2,0;1\t-;2,1,0\t1,0;2\t2,1;0'
    assert len(lines) == 4


def test_projection_of_the_cuspidal(capsys):
    code, lines = run(capsys, 'project', '--kind', 'sp', '--n', '2', '--symbol=-;2,1,0')
    assert code == 0
    assert lines == ['sigma\tcoefficient', '1,0;2\t-1/2', '2,0;1\t1/2', '2,1;0\t-1/2']


def test_projection_rejects_foreign_symbol(capsys):
    code = main(['project', '--kind', 'sp', '--n', '2', '--symbol', '1;1'])
    captured = capsys.readouterr()
    assert code == 1
    assert 'error:' in captured.err


def test_descent_of_degenerate_symbol_fails(capsys):
    code = main(['theta', 'descend', '--symbol', '1;1'])
    assert code == 1
    assert 'error:' in capsys.readouterr().err


def test_lusztig_table(capsys):
    code, lines = run(capsys, 'lusztig', 'table', '--name', 'so3')
    assert code == 0
    assert lines[0] == 'G0\tG-\tG+\tname\ttriple'
    assert len(lines) == 7


def test_lusztig_validate(capsys):
    code, lines = run(capsys, 'lusztig', 'validate', '--descriptor', 'o-:1 | 0: U1 | -: o+~0 | +: o+~0',
                      '--triple', '1 | -;- | -;-', '--format', 'json')
    assert code == 0
    record = json.loads(lines[0])
    assert record['valid'] is True
    assert record['problems'] == ''


@pytest.mark.parametrize('argv', [
    [],
    ['symbols', 'group', '--kind', 'xx', '--n', '2'],
    ['theta', 'first', '--symbol=0;1', '--eps', '0'],
    ['verify', 'nonsense'],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_verify_writes_report(capsys, tmp_path):
    report = tmp_path / 'report.json'
    code, lines = run(capsys, 'verify', 'pairing-lemma', 'omega', '--max-rank', '3', '--workers', '1',
                      '--report', str(report))
    assert code == 0
    assert lines[0] == 'suite\tpassed\tchecked\tfailures'
    data = json.loads(report.read_text(encoding='utf-8'))
    assert data['passed'] is True
    assert [s['suite'] for s in data['suites']] == ['pairing-lemma', 'omega']
    assert data['settings']['max_rank'] == 3


def test_rank_is_an_alias_of_n(capsys):
    _, by_n = run(capsys, 'symbols', 'enumerate', '--n', '2', '--defect', '1')
    code, by_rank = run(capsys, 'symbols', 'enumerate', '--rank', '2', '--defect', '1')
    assert code == 0
    assert by_rank == by_n


def test_family_accepts_group(capsys):
    code, lines = run(capsys, 'family', '--special', '2,0;1', '--group', 'sp', '--signs')
    assert code == 0
    assert lines[0] == 'sigma\t2,0;1\t-;2,1,0\t1,0;2\t2,1;0'


def test_fourier_accepts_group(capsys):
    _, by_kind = run(capsys, 'fourier', '--kind', 'sp', '--n', '2')
    code, by_group = run(capsys, 'fourier', '--group', 'sp', '--n', '2')
    assert code == 0
    assert by_group[0] == 'special\tc_z\tlambda\tsigma\tcoefficient'
    assert by_group == by_kind


def test_project_accepts_group(capsys):
    code, lines = run(capsys, 'project', '--group', 'o-', '--n', '2', '--symbol=-;2,0')
    assert code == 0
    assert lines[0] == 'sigma\tcoefficient'
    assert len(lines) > 1


def test_fiber_takes_the_group_from_a_descriptor(capsys):
    triple = '1 | -;- | -;-'
    _, by_group = run(capsys, 'lusztig', 'fiber', '--group', 'o-:1', '--triple', triple)
    code, by_descriptor = run(capsys, 'lusztig', 'fiber', '--descriptor', 'o-:1 | 0: U1 | -: o+~0 | +: o+~0',
                              '--triple', triple)
    assert code == 0
    assert by_descriptor == by_group
    assert by_descriptor[0] == 'triple'


def test_fiber_needs_exactly_one_group_source(capsys):
    assert main(['lusztig', 'fiber', '--triple', '1 | -;- | -;-']) == 2


def test_verify_restricted_to_one_group_kind(capsys, tmp_path):
    report = tmp_path / 'report.json'
    code, lines = run(capsys, 'verify', 'cells', '--group', 'sp', '--max-rank', '2', '--workers', '1',
                      '--report', str(report))
    assert code == 0
    data = json.loads(report.read_text(encoding='utf-8'))
    assert data['settings']['kinds'] == ['sp']
    assert data['suites'][0]['max_rank'] == 2
