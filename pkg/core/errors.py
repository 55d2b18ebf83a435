#!/usr/bin/env python3
"""
예외 정의 모듈
열거 한도 초과와 근계 공리 위반을 나타내는 예외
"""

from typing import Optional


class BudgetExceededError(RuntimeError):
    """열거 크기가 설정된 한도를 넘을 때 발생"""

    def __init__(self, what: str, requested: int, budget: int, hint: Optional[str] = None):
        self.what = what
        self.requested = requested
        self.budget = budget
        message = f"{what}: {requested} exceeds budget {budget}"
        if hint:
            message += f" ({hint})"
        super().__init__(message)


class RootSystemError(ValueError):
    """근계 공리 위반 또는 근 개수 한도 초과"""
