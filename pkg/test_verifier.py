#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for the lemma verifier and its suites
"""

import pytest

from src.config import get_settings
from src.symbols import GroupKind, GroupTag
from src.verifier import MAX_FAILURES, SUITES, LemmaVerifier, SuiteResult, SuiteScope, expand, run_suite


@pytest.mark.parametrize('name', list(SUITES))
def test_every_suite_passes_at_small_rank(name):
    result = run_suite(name, 2, 3)
    assert result.passed, result.failures
    assert result.checked > 0


def test_failures_are_capped():
    result = SuiteResult('demo')
    for i in range(MAX_FAILURES + 3):
        result.check(False, index=i)
    result.check(True)
    assert not result.passed
    assert result.checked == MAX_FAILURES + 4
    assert [f['index'] for f in result.failures] == list(range(MAX_FAILURES))


def test_record_shape():
    record = SuiteResult('demo', checked=3).as_record()
    assert record == {'suite': 'demo', 'passed': True, 'checked': 3, 'failures': []}
    assert SuiteResult('demo', passed=False, error='boom').as_record()['error'] == 'boom'


def test_expand():
    assert expand(['all']) == list(SUITES)
    assert expand(['omega', 'gram']) == ['omega', 'gram']
    with pytest.raises(KeyError):
        expand(['nonsense'])


def test_verifier_keeps_submission_order():
    results = LemmaVerifier(max_rank=2, max_n=2, workers=1).run(['symbols', 'partitions', 'gram'])
    assert [r.name for r in results] == ['symbols', 'partitions', 'gram']
    assert all(r.passed for r in results)


def test_crashing_suite_is_reported(monkeypatch):
    def boom(result, scope):
        raise RuntimeError('suite exploded')

    monkeypatch.setitem(SUITES, 'partitions', boom)
    results = LemmaVerifier(max_rank=1, max_n=1, workers=1).run(['partitions', 'symbols'])
    crashed, fine = results
    assert not crashed.passed
    assert 'suite exploded' in crashed.error
    assert fine.passed


def test_defaults_come_from_settings(monkeypatch):
    monkeypatch.setenv('LUSZTIG_VERIFY_RANK', '3')
    monkeypatch.setenv('LUSZTIG_WORKERS', '1')
    get_settings.cache_clear()
    try:
        verifier = LemmaVerifier()
        assert verifier.max_rank == 3
        assert verifier.workers == 1
    finally:
        get_settings.cache_clear()


@pytest.mark.parametrize('name, max_rank, max_n', [
    ('pairing-lemma', 5, 3),
    ('cardinality', 5, 3),
    ('descent', 2, 8),
])
def test_suites_pass_over_their_acceptance_range(name, max_rank, max_n):
    result = run_suite(name, max_rank, max_n)
    assert result.passed, result.failures
    assert result.as_record()['max_rank'] == max_rank


def test_default_bounds_cover_acceptance_ranges(monkeypatch):
    monkeypatch.delenv('LUSZTIG_VERIFY_RANK', raising=False)
    monkeypatch.delenv('LUSZTIG_VERIFY_WEYL_N', raising=False)
    get_settings.cache_clear()
    try:
        verifier = LemmaVerifier(workers=1)
        assert verifier.bounds('pairing-lemma') == (5, 5)
        assert verifier.bounds('cardinality') == (5, 5)
        assert verifier.bounds('descent') == (4, 8)
        assert verifier.bounds('gram') == (4, 5)
    finally:
        get_settings.cache_clear()


def test_explicit_bounds_are_not_raised():
    verifier = LemmaVerifier(max_rank=2, max_n=3, workers=1)
    assert verifier.bounds('pairing-lemma') == (2, 3)
    assert verifier.bounds('descent') == (2, 3)


def test_scope_restricts_group_kinds():
    scope = SuiteScope(2, 3, (GroupKind.SP,))
    assert scope.groups((GroupKind.SP, GroupKind.O_PLUS)) == [GroupTag(GroupKind.SP, n) for n in range(3)]
    assert scope.groups((GroupKind.O_PLUS,)) == []
    assert len(SuiteScope(5, 3).groups((GroupKind.O_PLUS,), 3)) == 4


def test_kind_filter_narrows_a_suite():
    everything = run_suite('cells', 2, 3)
    symplectic = run_suite('cells', 2, 3, (GroupKind.SP,))
    assert symplectic.passed
    assert 0 < symplectic.checked < everything.checked


def test_verifier_passes_kinds_to_suites():
    result, = LemmaVerifier(max_rank=2, max_n=2, workers=1, kinds=[GroupKind.SP]).run(['cells'])
    assert result.passed
    assert result.checked == run_suite('cells', 2, 2, (GroupKind.SP,)).checked
