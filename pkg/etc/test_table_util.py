#!/usr/bin/env python3
"""
표 출력 유틸리티 테스트
"""

import json
import logging
from fractions import Fraction

import numpy as np
import pytest

from utils import table_util
from utils.table_util import render_table, to_jsonable


def test_module_logger_name():
    assert table_util.logger.name == "utils.table_util"


def test_render_logs_row_count(caplog):
    with caplog.at_level(logging.DEBUG, logger="utils.table_util"):
        render_table([{"n": 1}, {"n": 2}], fmt="json", formula="binomial")
    assert "Rendering 2 rows as json" in caplog.text


def test_csv_header_and_nested_cells():
    out = render_table([{"w": "s1", "inv": (1, 2)}], fmt="csv", formula="weyl")
    assert out.splitlines() == ["# formula: weyl", "w,inv", 's1,"[1,2]"']


def test_json_payload():
    payload = json.loads(render_table([{"q": np.int64(3), "x": Fraction(1, 2)}], fmt="json", formula="f"))
    assert payload == {"formula": "f", "rows": [{"q": 3, "x": "1/2"}]}


def test_to_jsonable_sets_are_sorted():
    assert to_jsonable({"s": {3, 1, 2}}) == {"s": [1, 2, 3]}


def test_unknown_format():
    with pytest.raises(ValueError):
        render_table([], fmt="xml")
