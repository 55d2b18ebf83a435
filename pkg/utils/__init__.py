"""
Output formatting utilities for f1points
"""

from .table_util import TABLE_FORMATS, render_json, render_table, to_jsonable

__all__ = [
    'TABLE_FORMATS',
    'render_json',
    'render_table',
    'to_jsonable'
]
