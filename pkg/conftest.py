"""
공용 pytest 설정과 픽스처
"""

import os
import sys

import pytest

# 프로젝트 루트를 Python 경로에 추가
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from config.config_manager import BUDGET_ENV_VAR
from core.arith import field_of_order, group_make
from core.roots import root_system


@pytest.fixture(autouse=True)
def _clear_budget_env(monkeypatch):
    monkeypatch.delenv(BUDGET_ENV_VAR, raising=False)


@pytest.fixture
def a1():
    return root_system("A1")


@pytest.fixture
def a2():
    return root_system("A2")


@pytest.fixture
def z2():
    """Z/2, ε = 1"""
    return group_make([2], 1)


@pytest.fixture
def z4():
    """Z/4, ε = 2"""
    return group_make([4], 2)


@pytest.fixture
def f3():
    return field_of_order(3)
