"""
표 출력 유틸리티
행 목록을 csv, json, pretty 형식의 결정적 문자열로 변환
"""

import json
import logging
from fractions import Fraction

import numpy as np
import pandas as pd

logger = logging.getLogger(__name__)

TABLE_FORMATS = ("csv", "json", "pretty")


def to_jsonable(value):
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value, key=repr) if isinstance(value, (set, frozenset)) else value
        return [to_jsonable(v) for v in items]
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if hasattr(value, 'to_json'):
        return to_jsonable(value.to_json())
    return value


def _cell(value):
    value = to_jsonable(value)
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True, separators=(',', ':'))
    if value is None:
        return ''
    return value


def render_table(rows, columns=None, fmt='csv', formula=None):
    """
    dict 행 목록을 결정적 바이트로 출력

    csv/pretty 는 첫 줄에 '# formula: <name>' 을 쓴다
    """
    if fmt not in TABLE_FORMATS:
        raise ValueError(f"unknown output format '{fmt}' (expected one of {', '.join(TABLE_FORMATS)})")

    rows = list(rows)
    if columns is None:
        columns = list(rows[0].keys()) if rows else []
    logger.debug(f"Rendering {len(rows)} rows as {fmt}")

    if fmt == 'json':
        payload = {'formula': formula, 'rows': [{c: to_jsonable(row.get(c)) for c in columns} for row in rows]}
        return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + '\n'

    df = pd.DataFrame([[_cell(row.get(c)) for c in columns] for row in rows], columns=columns)
    header = f"# formula: {formula}\n" if formula else ''
    if fmt == 'csv':
        return header + df.to_csv(index=False, lineterminator='\n')
    body = df.to_string(index=False) if rows else '(no rows)'
    return header + body + '\n'


def render_json(payload, indent=2, ensure_ascii=False):
    return json.dumps(to_jsonable(payload), sort_keys=True, indent=indent, ensure_ascii=ensure_ascii) + '\n'
