#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Output formatter
Renders records as TSV tables or JSON lines, and builds the timestamped
verification report
"""

import json
import logging
from datetime import datetime
from typing import Dict, Iterable, List, Optional, Sequence

import pandas as pd
import pytz

from src.almost_chars import FourierBlock, UnipotentVector
from src.config import get_settings
from src.lusztig import ExampleRow, format_triple
from src.partitions import format_bipartition
from src.scalars import format_scalar
from src.special_symbols import SignTable
from src.symbols import Symbol, defect, format_symbol, rank, upsilon
from src.weyl_b import CharacterTable, ClassFunction, format_class

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
FORMATS = ('tsv', 'json')


class TableFormatter:
    def __init__(self, fmt: str = 'tsv', timezone: Optional[str] = None):
        if fmt not in FORMATS:
            raise ValueError(f"unknown output format {fmt!r}")
        self.fmt = fmt
        self.tz = pytz.timezone(timezone or get_settings().timezone)

    def render(self, records: List[Dict], columns: Optional[Sequence[str]] = None) -> str:
        """Records in the configured format, always newline terminated"""
        if self.fmt == 'json':
            return self.to_jsonl(records)
        return self.to_tsv(records, columns)

    def to_tsv(self, records: List[Dict], columns: Optional[Sequence[str]] = None) -> str:
        if columns is None:
            columns = list(records[0].keys()) if records else []
        frame = pd.DataFrame(records, columns=list(columns))
        return frame.to_csv(sep='\t', index=False, lineterminator='\n')

    def to_jsonl(self, records: Iterable[Dict]) -> str:
        lines = []
        for record in records:
            payload = dict(record)
            payload['schema_version'] = SCHEMA_VERSION
            lines.append(json.dumps(payload, sort_keys=True, ensure_ascii=False))
        return ''.join(line + '\n' for line in lines)

    # record builders

    def symbol_records(self, symbols: Iterable[Symbol]) -> List[Dict]:
        return [{
            'symbol': format_symbol(s),
            'rank': rank(s),
            'defect': defect(s),
            'upsilon': format_bipartition(upsilon(s)),
        } for s in symbols]

    def character_table_records(self, table: CharacterTable) -> List[Dict]:
        records = []
        for bp, values in zip(table.rows, table.values):
            record = {'character': format_bipartition(bp)}
            record.update({format_class(c): v for c, v in zip(table.classes, values)})
            records.append(record)
        return records

    def class_function_records(self, f: ClassFunction) -> List[Dict]:
        return [{'class': format_class(c), 'size': c.size, 'value': format_scalar(v)} for c, v in f.items()]

    def sign_table_records(self, table: SignTable) -> List[Dict]:
        records = []
        for sigma, signs in zip(table.rows, table.signs):
            record = {'sigma': format_symbol(sigma)}
            record.update({format_symbol(lam): sign for lam, sign in zip(table.columns, signs)})
            records.append(record)
        return records

    def fourier_records(self, block: FourierBlock) -> List[Dict]:
        """One record per (Λ, Σ) entry so that blocks of one group share a header"""
        return [{
            'special': str(block.special),
            'c_z': format_scalar(block.c_z),
            'lambda': format_symbol(lam),
            'sigma': format_symbol(sigma),
            'coefficient': format_scalar(v),
        } for lam, row in zip(block.rows, block.entries) for sigma, v in zip(block.columns, row)]

    def vector_records(self, vector: UnipotentVector) -> List[Dict]:
        key = 'sigma' if vector.basis == 'R' else 'lambda'
        return [{key: format_symbol(s), 'coefficient': format_scalar(v)} for s, v in vector.coeffs]

    def example_records(self, rows: Iterable[ExampleRow]) -> List[Dict]:
        return [{
            'G0': row.zero,
            'G-': row.minus,
            'G+': row.plus,
            'name': row.name,
            'triple': format_triple(row.triple),
        } for row in rows]

    # report

    def build_report(self, results: Sequence, settings: Optional[Dict] = None) -> Dict:
        report = {
            'schema_version': SCHEMA_VERSION,
            'generated_at': datetime.now(self.tz).isoformat(),
            'passed': all(r.passed for r in results),
            'suites': [r.as_record() for r in results],
        }
        if settings:
            report['settings'] = settings
        return report

    def save_report(self, report: Dict, path: str) -> None:
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(report, f, ensure_ascii=False, indent=2)
        logger.info(f"💾 Report saved to {path}")
