#!/usr/bin/env python3
"""
근계 모듈
카르탄 행렬로부터 근계 {L, Φ, n_r} 를 구성하고 공리를 검증
"""

import json
import logging
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import RootSystemError

logger = logging.getLogger(__name__)

DEFAULT_ROOT_CAP = 240
LATTICE_TAGS = ("sc", "adjoint")

Vector = Tuple[int, ...]


def _chain(rank: int) -> np.ndarray:
    cartan = 2 * np.eye(rank, dtype=np.int64)
    for i in range(rank - 1):
        cartan[i, i + 1] = cartan[i + 1, i] = -1
    return cartan


def cartan_matrix(letter: str, rank: int) -> np.ndarray:
    """
    유한형 카르탄 행렬 (cartan[i][j] = n_{α_i}(α_j))

    Args:
        letter: 형 문자 (A-G)
        rank: 계수

    Returns:
        정수 행렬
    """
    letter = letter.upper()
    if letter == "A" and rank >= 1:
        return _chain(rank)
    if letter == "B" and rank >= 2:
        cartan = _chain(rank)
        cartan[rank - 1, rank - 2] = -2
        return cartan
    if letter == "C" and rank >= 2:
        return cartan_matrix("B", rank).T.copy()
    if letter == "D" and rank >= 3:
        cartan = _chain(rank - 1)
        cartan = np.pad(cartan, ((0, 1), (0, 1)))
        cartan[rank - 1, rank - 1] = 2
        cartan[rank - 1, rank - 3] = cartan[rank - 3, rank - 1] = -1
        return cartan
    if letter == "E" and rank in (6, 7, 8):
        cartan = 2 * np.eye(rank, dtype=np.int64)
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, rank - 1)]
        for i, j in edges:
            cartan[i, j] = cartan[j, i] = -1
        return cartan
    if letter == "F" and rank == 4:
        cartan = _chain(4)
        cartan[2, 1] = -2
        return cartan
    if letter == "G" and rank == 2:
        return np.array([[2, -1], [-3, 2]], dtype=np.int64)
    raise ValueError(f"unknown Cartan type {letter}{rank}")


def block_diagonal(blocks: Sequence[np.ndarray]) -> np.ndarray:
    size = sum(b.shape[0] for b in blocks)
    result = np.zeros((size, size), dtype=np.int64)
    offset = 0
    for b in blocks:
        n = b.shape[0]
        result[offset:offset + n, offset:offset + n] = b
        offset += n
    return result


class RootSystem:
    """
    근계 {L, Φ, n_r}

    근은 격자 태그와 무관하게 단순근 좌표로 저장한다. 격자 L 은 기저만 바꾼다.
      - sc: 기본 가중치 기저, n_r 은 쌍대근 좌표 d_r, 근의 L 좌표는 cartan @ r
      - adjoint: 단순근 기저, n_r = d_r @ cartan
    양근이 먼저 (높이, 사전식) 순으로 오고 음근이 같은 순서로 뒤따른다.
    """

    def __init__(self,
                 cartan: Union[Sequence[Sequence[int]], np.ndarray],
                 lattice: str = "sc",
                 name: Optional[str] = None,
                 root_cap: int = DEFAULT_ROOT_CAP):
        if lattice not in LATTICE_TAGS:
            raise ValueError(f"lattice tag must be one of {LATTICE_TAGS}, got '{lattice}'")

        self.cartan = np.array(cartan, dtype=np.int64)
        self._validate_cartan()
        self.rank = self.cartan.shape[0]
        self.lattice = lattice
        self.name = name or json.dumps(self.cartan.tolist())
        self.root_cap = root_cap

        positives, coroot_of = self._close_under_reflections()
        self._index_roots(positives, coroot_of)
        self._verify_axioms()
        self.diagonal_characters = self._diagonal_characters() if self.is_type_a else None

        logger.debug(f"Root system {self.label}: {len(self.roots)} roots, {self.n_positive} positive")

    # ------------------------------------------------------------------
    # 구성
    # ------------------------------------------------------------------

    def _validate_cartan(self):
        C = self.cartan
        if C.ndim != 2 or C.shape[0] != C.shape[1] or C.shape[0] == 0:
            raise RootSystemError(f"Cartan matrix must be square and non-empty, got shape {C.shape}")
        off = ~np.eye(C.shape[0], dtype=bool)
        if (np.diag(C) != 2).any():
            raise RootSystemError("Cartan matrix must have 2 on the diagonal")
        if (C[off] > 0).any():
            raise RootSystemError("off-diagonal Cartan entries must be non-positive")
        if ((C == 0) != (C.T == 0)).any():
            raise RootSystemError("Cartan zero pattern must be symmetric")

    def _close_under_reflections(self) -> Tuple[List[Vector], Dict[Vector, Vector]]:
        """단순근에서 출발해 단순 반사로 닫으며 근과 쌍대근을 함께 추적"""
        C = self.cartan
        rank = self.rank
        coroot_of: Dict[Vector, Vector] = {}
        queue: deque = deque()
        for i in range(rank):
            e = tuple(int(i == j) for j in range(rank))
            coroot_of[e] = e
            queue.append(e)

        while queue:
            r = queue.popleft()
            d = coroot_of[r]
            pairing = C @ np.array(r)        # n_{α_j}(r)
            covector = np.array(d) @ C       # <α_j, d>
            for j in range(rank):
                new_r = list(r)
                new_r[j] -= int(pairing[j])
                new_d = list(d)
                new_d[j] -= int(covector[j])
                new_r, new_d = tuple(new_r), tuple(new_d)
                known = coroot_of.get(new_r)
                if known is None:
                    coroot_of[new_r] = new_d
                    queue.append(new_r)
                    if len(coroot_of) > self.root_cap:
                        raise RootSystemError(
                            f"root closure exceeded cap {self.root_cap}; Cartan matrix is not of finite type")
                elif known != new_d:
                    raise RootSystemError(f"inconsistent coroots for root {new_r}")

        positives = []
        for r in coroot_of:
            if all(c >= 0 for c in r):
                positives.append(r)
            elif not all(c <= 0 for c in r):
                raise RootSystemError(f"root {r} has mixed-sign coefficients")
        positives.sort(key=lambda r: (sum(r), r))
        return positives, coroot_of

    def _index_roots(self, positives: List[Vector], coroot_of: Dict[Vector, Vector]):
        negatives = [tuple(-c for c in r) for r in positives]
        ordered = positives + negatives
        if len(ordered) != len(coroot_of):
            raise RootSystemError("roots are not symmetric under negation")

        self.n_positive = len(positives)
        self.roots: List[Vector] = ordered
        self.index: Dict[Vector, int] = {r: i for i, r in enumerate(ordered)}
        self.simple: List[int] = [self.index[tuple(int(i == j) for j in range(self.rank))]
                                  for i in range(self.rank)]

        self.root_array = np.array(ordered, dtype=np.int64)
        self.coroot_array = np.array([coroot_of[r] for r in ordered], dtype=np.int64)
        if self.lattice == "sc":
            self.covectors = self.coroot_array.copy()
            self.lattice_roots = self.root_array @ self.cartan.T
        else:
            self.covectors = self.coroot_array @ self.cartan
            self.lattice_roots = self.root_array.copy()

        # pairing[i, j] = n_{r_j}(r_i)
        self.pairing = self.lattice_roots @ self.covectors.T
        reflected = self.root_array[None, :, :] - self.pairing.T[:, :, None] * self.root_array[:, None, :]
        table = np.full((len(ordered), len(ordered)), -1, dtype=np.int64)
        for i in range(len(ordered)):
            for j in range(len(ordered)):
                table[i, j] = self.index.get(tuple(int(c) for c in reflected[i, j]), -1)
        # reflection_table[i, j] = s_{r_i}(r_j) 의 번호
        self.reflection_table = table

    def _verify_axioms(self):
        if np.linalg.matrix_rank(self.lattice_roots.astype(float)) != self.rank:
            raise RootSystemError("roots do not span L ⊗ Q")
        if (np.diag(self.pairing) != 2).any():
            raise RootSystemError("n_r(r) = 2 fails")
        if (self.reflection_table < 0).any():
            i, j = map(int, np.argwhere(self.reflection_table < 0)[0])
            raise RootSystemError(f"s_{self.roots[i]}({self.roots[j]}) is not a root")
        # 양근끼리 비례하면 원시 벡터가 겹친다
        primitive: Dict[Vector, Vector] = {}
        for r in self.roots[:self.n_positive]:
            g = int(np.gcd.reduce(np.array(r)))
            key = tuple(c // g for c in r)
            if key in primitive:
                raise RootSystemError(f"roots {primitive[key]} and {r} are proportional")
            primitive[key] = r

    # ------------------------------------------------------------------
    # A 형 대각 지표
    # ------------------------------------------------------------------

    @property
    def is_type_a(self) -> bool:
        return bool((self.cartan == _chain(self.rank)).all())

    def _diagonal_characters(self) -> List[Tuple[Fraction, ...]]:
        """e_1..e_{ℓ+1} 의 L 좌표 (α_i = e_i - e_{i+1}, Σ e_i = 0)"""
        rank = self.rank
        e = [Fraction(rank - i, rank + 1) for i in range(rank)]
        in_roots = [tuple(e)]
        for i in range(rank):
            e = [c - (1 if j == i else 0) for j, c in enumerate(e)]
            in_roots.append(tuple(e))

        if self.lattice == "sc":
            chars = [tuple(sum(Fraction(int(self.cartan[j, k])) * v[k] for k in range(rank))
                           for j in range(rank)) for v in in_roots]
        else:
            chars = in_roots

        for i in range(rank):
            cov = self.covectors[self.simple[i]]
            for j, v in enumerate(chars):
                expected = (1 if j == i else 0) - (1 if j == i + 1 else 0)
                if sum(int(cov[k]) * v[k] for k in range(rank)) != expected:
                    raise RootSystemError(f"diagonal character e_{j + 1} is inconsistent with α_{i + 1}")
        return chars

    @property
    def diagonal_is_integral(self) -> bool:
        return self.diagonal_characters is not None and all(
            c.denominator == 1 for v in self.diagonal_characters for c in v)

    # ------------------------------------------------------------------
    # 조회
    # ------------------------------------------------------------------

    @property
    def label(self) -> str:
        return f"{self.name}:{self.lattice}"

    def index_of(self, root: Union[int, Sequence[int]]) -> int:
        if isinstance(root, (int, np.integer)):
            if not 0 <= int(root) < len(self.roots):
                raise ValueError(f"root index {root} out of range")
            return int(root)
        key = tuple(int(c) for c in root)
        if key not in self.index:
            raise ValueError(f"{key} is not a root of {self.label}")
        return self.index[key]

    def neg(self, i: int) -> int:
        return (i + self.n_positive) % (2 * self.n_positive)

    def is_positive(self, i: int) -> bool:
        return i < self.n_positive

    def height(self, i: int) -> int:
        return int(sum(self.roots[i]))

    def support(self, i: int) -> Tuple[int, ...]:
        return tuple(k for k, c in enumerate(self.roots[i]) if c)

    def root_in_lattice(self, root: Union[int, Sequence[int]]) -> np.ndarray:
        return self.lattice_roots[self.index_of(root)].copy()

    def coroot_form(self, root: Union[int, Sequence[int]]) -> np.ndarray:
        """n_r 의 L 기저 위 값"""
        return self.covectors[self.index_of(root)].copy()

    def reflect(self, root: Union[int, Sequence[int]], x: Sequence[int]) -> np.ndarray:
        """
        반사 s_r(x) = x - n_r(x) r

        Args:
            root: 근 (단순근 좌표 또는 번호)
            x: L 좌표 벡터

        Returns:
            L 좌표 벡터
        """
        i = self.index_of(root)
        x = np.array(x, dtype=np.int64)
        return x - int(self.covectors[i] @ x) * self.lattice_roots[i]

    def reflect_root(self, i: int, j: int) -> int:
        return int(self.reflection_table[i, j])

    def positivity_is_additive(self) -> bool:
        for i in range(self.n_positive):
            for j in range(self.n_positive):
                total = tuple(a + b for a, b in zip(self.roots[i], self.roots[j]))
                if total in self.index and not self.is_positive(self.index[total]):
                    return False
        return True

    def describe(self) -> List[Dict[str, Any]]:
        return [{
            "index": i,
            "root": list(r),
            "height": self.height(i),
            "positive": self.is_positive(i),
            "coroot_form": [int(c) for c in self.covectors[i]],
        } for i, r in enumerate(self.roots)]

    def __repr__(self) -> str:
        return f"RootSystem({self.label})"


@dataclass(frozen=True)
class LatticeMap:
    """격자 사상 φ: L -> L̃ (정수 행렬, 열 j 는 φ(v_j))"""
    matrix: Tuple[Tuple[int, ...], ...]
    source: RootSystem
    target: RootSystem

    @property
    def array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64)

    def apply(self, x: Sequence[int]) -> np.ndarray:
        return self.array @ np.array(x, dtype=np.int64)

    @property
    def index(self) -> int:
        return abs(int(round(np.linalg.det(self.array.astype(float)))))

    @property
    def is_identity(self) -> bool:
        return bool((self.array == np.eye(len(self.matrix), dtype=np.int64)).all())

    def verify(self) -> bool:
        """φ(Φ) = Φ̃ 이고 n_r = n_{φ(r)} ∘ φ"""
        images = self.source.lattice_roots @ self.array.T
        if not (images == self.target.lattice_roots).all():
            return False
        return bool((self.source.covectors == self.target.covectors @ self.array).all())


def simply_connected_cover(rs: RootSystem) -> Tuple[RootSystem, LatticeMap]:
    """
    단순연결 덮개

    Returns:
        (기본 가중치 격자의 근계, 포함 사상 φ)
    """
    if rs.lattice == "sc":
        identity = tuple(tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank))
        return rs, LatticeMap(identity, rs, rs)

    target = RootSystem(rs.cartan, "sc", rs.name, rs.root_cap)
    phi = LatticeMap(tuple(tuple(int(c) for c in row) for row in rs.cartan), rs, target)
    if not phi.verify():
        raise RootSystemError(f"cover map for {rs.label} does not respect roots and coroots")
    logger.info(f"Simply connected cover of {rs.label} has index {phi.index}")
    return target, phi


_NAME_RE = re.compile(r"^([A-Ga-g])(\d+)$")


def parse_cartan_spec(spec: str) -> Tuple[np.ndarray, str]:
    """'A2', 'A1xA1', 'G2' 또는 JSON 행렬을 카르탄 행렬로"""
    text = spec.strip()
    if text.startswith("["):
        try:
            matrix = np.array(json.loads(text), dtype=np.int64)
        except (ValueError, TypeError) as e:
            raise ValueError(f"invalid Cartan matrix JSON '{spec}': {e}")
        return matrix, json.dumps(matrix.tolist())
    blocks = []
    for factor in text.split("x"):
        match = _NAME_RE.match(factor.strip())
        if not match:
            raise ValueError(f"invalid root system name '{spec}' (expected e.g. A2, G2, A1xA1)")
        blocks.append(cartan_matrix(match.group(1), int(match.group(2))))
    return block_diagonal(blocks), "x".join(f.strip().upper() for f in text.split("x"))


@lru_cache(maxsize=64)
def _cached_root_system(spec: str, lattice: str, root_cap: int) -> RootSystem:
    cartan, name = parse_cartan_spec(spec)
    return RootSystem(cartan, lattice, name, root_cap)


def root_system(spec: Union[str, Sequence[Sequence[int]], np.ndarray],
                lattice: Optional[str] = None,
                root_cap: int = DEFAULT_ROOT_CAP) -> RootSystem:
    """
    근계 생성

    Args:
        spec: 'A2', 'A3:adjoint', 'A1xA1', JSON 행렬 문자열 또는 카르탄 행렬
        lattice: 'sc' 또는 'adjoint' (문자열 접미사보다 우선)
        root_cap: 근 개수 상한

    Returns:
        검증된 RootSystem
    """
    if isinstance(spec, str):
        text, tag = spec, None
        if ":" in spec and not spec.strip().startswith("["):
            text, tag = spec.rsplit(":", 1)
        lattice = lattice or (tag.strip() if tag else "sc")
        return _cached_root_system(text.strip(), lattice, root_cap)
    return RootSystem(spec, lattice or "sc", None, root_cap)
