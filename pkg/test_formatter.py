#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for record rendering and the verification report
"""

import json

import pytest

from src.config import get_settings
from src.formatter import TableFormatter
from src.verifier import SuiteResult


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    monkeypatch.delenv('LUSZTIG_TIMEZONE', raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


def report_for(formatter):
    return formatter.build_report([SuiteResult('demo', checked=1)], {'max_rank': 1})


def test_report_uses_configured_timezone(monkeypatch):
    monkeypatch.setenv('LUSZTIG_TIMEZONE', 'UTC')
    report = report_for(TableFormatter())
    assert report['generated_at'].endswith('+00:00')


def test_report_defaults_to_india_standard_time():
    assert report_for(TableFormatter())['generated_at'].endswith('+05:30')


def test_explicit_timezone_wins(monkeypatch):
    monkeypatch.setenv('LUSZTIG_TIMEZONE', 'UTC')
    assert report_for(TableFormatter(timezone='Asia/Kolkata'))['generated_at'].endswith('+05:30')


def test_tsv_and_json_lines():
    records = [{'symbol': '1;0', 'rank': 1}, {'symbol': '0;1', 'rank': 1}]
    assert TableFormatter('tsv').render(records) == 'symbol\trank\n1;0\t1\n0;1\t1\n'
    lines = TableFormatter('json').render(records).splitlines()
    assert [json.loads(line)['symbol'] for line in lines] == ['1;0', '0;1']


def test_unknown_format():
    with pytest.raises(ValueError):
        TableFormatter('xml')
