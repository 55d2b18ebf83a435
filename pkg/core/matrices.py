#!/usr/bin/env python3
"""
환 행렬 모듈
유한체, Z, 축약 군환, 원분 정수환, 다항식환 위의 정사각 행렬 연산
"""

import itertools
import logging
from typing import Any, Callable, List, Optional, Sequence, Tuple

from .arith import Ring

logger = logging.getLogger(__name__)


def permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


class RingMatrix:
    """환 원소의 정사각 행렬 (불변)"""

    __slots__ = ("ring", "rows", "_hash")

    def __init__(self, ring: Ring, rows: Sequence[Sequence[Any]]):
        self.ring = ring
        self.rows: Tuple[Tuple[Any, ...], ...] = tuple(tuple(ring(x) for x in row) for row in rows)
        if any(len(row) != len(self.rows) for row in self.rows):
            raise ValueError("ring matrices must be square")
        self._hash: Optional[int] = None

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "RingMatrix":
        return cls(ring, [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)])

    @classmethod
    def elementary(cls, ring: Ring, n: int, i: int, j: int, t: Any) -> "RingMatrix":
        """I + t·E_ij"""
        rows = [[ring.one if a == b else ring.zero for b in range(n)] for a in range(n)]
        rows[i][j] = rows[i][j] + ring(t)
        return cls(ring, rows)

    @classmethod
    def diagonal(cls, ring: Ring, values: Sequence[Any]) -> "RingMatrix":
        n = len(values)
        return cls(ring, [[values[i] if i == j else ring.zero for j in range(n)] for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: Tuple[int, int]) -> Any:
        i, j = index
        return self.rows[i][j]

    def __mul__(self, other: "RingMatrix") -> "RingMatrix":
        if not isinstance(other, RingMatrix):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch {self.dim} vs {other.dim}")
        columns = list(zip(*other.rows))
        zero = self.ring.zero
        rows = []
        for row in self.rows:
            out = []
            for col in columns:
                total = zero
                for a, b in zip(row, col):
                    if a and b:
                        total = total + a * b
                out.append(total)
            rows.append(out)
        return RingMatrix(self.ring, rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def map_entries(self, fn: Callable[[Any], Any], ring: Ring) -> "RingMatrix":
        return RingMatrix(ring, [[fn(x) for x in row] for row in self.rows])

    def det(self) -> Any:
        """라이프니츠 전개 (작은 차원 전용)"""
        total = self.ring.zero
        for perm in itertools.permutations(range(self.dim)):
            term = self.ring.one
            for i, j in enumerate(perm):
                term = term * self.rows[i][j]
                if not term:
                    break
            if term:
                total = total + term if permutation_sign(perm) > 0 else total - term
        return total

    def inverse(self) -> "RingMatrix":
        """
        가우스-조르당 소거 (각 열에서 단원 피벗을 찾음)

        Raises:
            ValueError: 단원 피벗이 없을 때
        """
        n = self.dim
        ring = self.ring
        work: List[List[Any]] = [list(row) + [ring.one if i == j else ring.zero for j in range(n)]
                                 for i, row in enumerate(self.rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col] and ring.is_unit(work[r][col])), None)
            if pivot is None:
                raise ValueError(f"matrix is not invertible over {ring.name} (no unit pivot in column {col})")
            work[col], work[pivot] = work[pivot], work[col]
            scale = ring.inverse(work[col][col])
            work[col] = [x * scale for x in work[col]]
            for r in range(n):
                if r != col and work[r][col]:
                    factor = work[r][col]
                    work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
        return RingMatrix(ring, [row[n:] for row in work])

    def is_identity(self) -> bool:
        return all((x == self.ring.one) if i == j else not x
                   for i, row in enumerate(self.rows) for j, x in enumerate(row))

    def is_diagonal(self) -> bool:
        return all(not x for i, row in enumerate(self.rows) for j, x in enumerate(row) if i != j)

    def is_upper_unitriangular(self) -> bool:
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                if j < i and x:
                    return False
                if j == i and x != self.ring.one:
                    return False
        return True

    def pattern(self) -> Tuple[Optional[int], ...]:
        """행마다 유일한 0 아닌 열 (단항 행렬이 아니면 None 포함)"""
        result = []
        for row in self.rows:
            nonzero = [j for j, x in enumerate(row) if x]
            result.append(nonzero[0] if len(nonzero) == 1 else None)
        return tuple(result)

    def to_json(self) -> List[List[Any]]:
        return [[self.ring.to_json(x) for x in row] for row in self.rows]

    def __repr__(self) -> str:
        return f"RingMatrix({self.ring.name}, {[[str(x) for x in row] for row in self.rows]})"
