#!/usr/bin/env python3
"""
바일 군 모듈
근 집합 위의 치환으로 바일 군을 열거하고 축약어, 길이, 역전 집합,
콕서터 행렬, 최장원, 푸앵카레 다항식을 제공
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from .errors import BudgetExceededError, RootSystemError
from .polynomial import CountingPolynomial
from .roots import RootSystem

logger = logging.getLogger(__name__)

DEFAULT_WEYL_CAP = 10 ** 5


@dataclass(frozen=True, eq=False)
class WeylElement:
    """근 번호의 치환과 저장된 축약어 (동일성은 치환으로만 판단)"""
    perm: Tuple[int, ...]
    word: Tuple[int, ...]
    length: int
    index: int = field(default=-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.perm == other.perm

    def __hash__(self) -> int:
        return hash(self.perm)

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return self.length, self.word

    def __lt__(self, other: "WeylElement") -> bool:
        return self.sort_key < other.sort_key

    def __call__(self, root_index: int) -> int:
        return self.perm[root_index]

    @property
    def is_identity(self) -> bool:
        return self.length == 0

    def word_string(self) -> str:
        return "".join(f"s{i + 1}" for i in self.word) or "e"

    def __repr__(self) -> str:
        return f"WeylElement({self.word_string()})"


def inversion_set(w: WeylElement) -> FrozenSet[int]:
    """Φ_w = {r ∈ Φ⁺ : w(r) < 0} (양근 번호)"""
    n_positive = len(w.perm) // 2
    return frozenset(i for i in range(n_positive) if w.perm[i] >= n_positive)


class WeylGroup:
    """바일 군 W (단순 반사의 오른쪽 곱에 대한 너비 우선 닫힘)"""

    def __init__(self, rs: RootSystem, cap: int = DEFAULT_WEYL_CAP):
        self.rs = rs
        self.cap = cap
        self.rank = rs.rank
        self._simple_perms = [tuple(int(x) for x in rs.reflection_table[rs.simple[j]])
                              for j in range(rs.rank)]
        self._enumerate()
        self.identity = self.elements[0]
        self.simple_reflections = [self._by_perm[p] for p in self._simple_perms]
        logger.info(f"Weyl group of {rs.label}: {len(self.elements)} elements")

    def _enumerate(self):
        identity = tuple(range(len(self.rs.roots)))
        words: Dict[Tuple[int, ...], Tuple[int, ...]] = {identity: ()}
        frontier = [identity]
        level = 0
        while frontier:
            level += 1
            next_frontier = []
            for perm in sorted(frontier, key=lambda p: words[p]):
                for j, s in enumerate(self._simple_perms):
                    product = tuple(perm[s[i]] for i in range(len(perm)))
                    if product not in words:
                        words[product] = words[perm] + (j,)
                        next_frontier.append(product)
                        if len(words) > self.cap:
                            raise BudgetExceededError(f"Weyl group of {self.rs.label}", len(words), self.cap)
            frontier = next_frontier

        n_positive = self.rs.n_positive
        elements = []
        for perm, word in words.items():
            length = sum(1 for i in range(n_positive) if perm[i] >= n_positive)
            if length != len(word):
                raise RootSystemError(f"BFS word {word} is not reduced")
            elements.append((length, word, perm))
        elements.sort()
        self.elements: List[WeylElement] = [
            WeylElement(perm, word, length, k) for k, (length, word, perm) in enumerate(elements)]
        self._by_perm: Dict[Tuple[int, ...], WeylElement] = {w.perm: w for w in self.elements}

    # ------------------------------------------------------------------
    # 군 연산
    # ------------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def element(self, perm: Sequence[int]) -> WeylElement:
        return self._by_perm[tuple(perm)]

    def multiply(self, a: WeylElement, b: WeylElement) -> WeylElement:
        return self._by_perm[tuple(a.perm[i] for i in b.perm)]

    def inverse(self, w: WeylElement) -> WeylElement:
        inv = [0] * len(w.perm)
        for i, j in enumerate(w.perm):
            inv[j] = i
        return self._by_perm[tuple(inv)]

    def from_word(self, word: Sequence[int]) -> WeylElement:
        w = self.identity
        for j in word:
            w = self.multiply(w, self.simple_reflections[j])
        return w

    def reflection(self, root_index: int) -> WeylElement:
        return self._by_perm[tuple(int(x) for x in self.rs.reflection_table[root_index])]

    def word_product(self, word: Sequence[int]) -> Tuple[int, ...]:
        """단순 반사들의 치환 곱 (원소 조회 없이)"""
        perm = tuple(range(len(self.rs.roots)))
        for j in word:
            s = self._simple_perms[j]
            perm = tuple(perm[s[i]] for i in range(len(perm)))
        return perm

    def inversion_set(self, w: WeylElement) -> FrozenSet[int]:
        return inversion_set(w)

    def inversion_roots(self, w: WeylElement) -> List[Tuple[int, ...]]:
        return [self.rs.roots[i] for i in sorted(inversion_set(w))]

    # ------------------------------------------------------------------
    # 구조 정보
    # ------------------------------------------------------------------

    def longest_element(self) -> WeylElement:
        top = self.elements[-1]
        if len([w for w in self.elements if w.length == top.length]) != 1:
            raise RootSystemError("longest element is not unique")
        return top

    def length_census(self) -> Dict[int, int]:
        return dict(sorted(Counter(w.length for w in self.elements).items()))

    def poincare_polynomial(self) -> CountingPolynomial:
        census = self.length_census()
        return CountingPolynomial(census.get(k, 0) for k in range(max(census) + 1))

    def coxeter_matrix(self) -> np.ndarray:
        return coxeter_matrix(self.rs)

    def element_order(self, w: WeylElement) -> int:
        power, order = w, 1
        while not power.is_identity:
            power = self.multiply(power, w)
            order += 1
        return order

    def lattice_matrix(self, w: WeylElement) -> np.ndarray:
        """L 위의 작용 행렬 (단순 반사 행렬 I - α_j ⊗ n_{α_j} 의 곱)"""
        return self._lattice_matrix(w.perm)

    @lru_cache(maxsize=None)
    def _lattice_matrix(self, perm: Tuple[int, ...]) -> np.ndarray:
        rs = self.rs
        result = np.eye(rs.rank, dtype=np.int64)
        for j in self._by_perm[perm].word:
            i = rs.simple[j]
            step = np.eye(rs.rank, dtype=np.int64) - np.outer(rs.lattice_roots[i], rs.covectors[i])
            result = result @ step
        return result

    def reduced_words(self, w: WeylElement) -> List[Tuple[int, ...]]:
        """w 의 모든 축약어 (사전식 정렬)"""
        return sorted(self._reduced_words(w.perm))

    @lru_cache(maxsize=None)
    def _reduced_words(self, perm: Tuple[int, ...]) -> Tuple[Tuple[int, ...], ...]:
        w = self._by_perm[perm]
        if w.is_identity:
            return ((),)
        words = []
        for j, s in enumerate(self.simple_reflections):
            shorter = self.multiply(w, s)
            if shorter.length < w.length:
                words.extend(u + (j,) for u in self._reduced_words(shorter.perm))
        return tuple(words)

    def check_length_parity(self) -> bool:
        """ℓ(w s_i) = ℓ(w) ± 1"""
        return all(abs(self.multiply(w, s).length - w.length) == 1
                   for w in self.elements for s in self.simple_reflections)

    def check_word_reconstruction(self) -> bool:
        return all(self.word_product(w.word) == w.perm for w in self.elements)

    def check_braid_relations(self) -> bool:
        M = self.coxeter_matrix()
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                m = int(M[i, j])
                left = [(i, j)[k % 2] for k in range(m)]
                right = [(j, i)[k % 2] for k in range(m)]
                if self.word_product(left) != self.word_product(right):
                    return False
                if self.element_order(self.from_word([i, j])) != m:
                    return False
        return True

    def check_lattice_action(self) -> bool:
        """작용 행렬이 근 치환과 일치"""
        rs = self.rs
        for w in self.elements:
            images = rs.lattice_roots @ self.lattice_matrix(w).T
            if not (images == rs.lattice_roots[list(w.perm)]).all():
                return False
        return True


def weyl_enumerate(rs: RootSystem, cap: int = DEFAULT_WEYL_CAP) -> List[WeylElement]:
    """(길이, 축약어) 순으로 정렬된 바일 군 원소 목록"""
    return list(WeylGroup(rs, cap).elements)


def coxeter_matrix(rs: RootSystem) -> np.ndarray:
    """
    콕서터 행렬 m_ij = (span{α_i, α_j} 안의 근 수) / 2

    Raises:
        RootSystemError: 2차 부분 공간의 근 수가 홀수일 때
    """
    M = np.ones((rs.rank, rs.rank), dtype=np.int64)
    for i in range(rs.rank):
        for j in range(i + 1, rs.rank):
            count = sum(1 for k in range(len(rs.roots)) if set(rs.support(k)) <= {i, j})
            if count % 2:
                raise RootSystemError(f"odd root count {count} in the span of α_{i + 1}, α_{j + 1}")
            M[i, j] = M[j, i] = count // 2
    return M


def longest_element(W: WeylGroup) -> WeylElement:
    return W.longest_element()


def poincare_polynomial(W: WeylGroup) -> CountingPolynomial:
    return W.poincare_polynomial()
