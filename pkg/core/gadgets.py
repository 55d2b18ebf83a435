#!/usr/bin/env python3
"""
등급 점 함자 모듈
Spec D, G_m, A^F, P^d, 슈발레 군의 F1 점 집합과 모노이드 확장,
셈 다항식, 평가 사상의 자연성 검사 기능 제공
"""

import itertools
import logging
import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .arith import (Character, CyclotomicRing, GroupElement, GroupHom, MonoidWithZero,
                    PointedAbelianGroup, hom_set)
from .errors import BudgetExceededError
from .polynomial import CountingPolynomial
from .roots import RootSystem, simply_connected_cover
from .tits import ExtWeylElement, TitsExtension, TorusPoint, restricted_torus
from .weyl import WeylGroup

logger = logging.getLogger(__name__)

DEFAULT_POINT_BUDGET = 10 ** 6
GADGET_KINDS = ("gm", "affine", "pd", "spec", "chevalley")

AffinePoint = Tuple[Optional[GroupElement], ...]


def canonical_key(value: Any) -> Tuple:
    """등급 집합 정렬용 결정적 키"""
    if value is None:
        return (0,)
    if isinstance(value, ExtWeylElement):
        return (2, value.sort_key)
    if isinstance(value, GroupHom):
        return (1, value.images)
    if isinstance(value, GPoint):
        return (4, value.sort_key)
    if isinstance(value, tuple):
        if all(isinstance(v, int) for v in value):
            return (1, value)
        return (3, tuple(canonical_key(v) for v in value))
    if hasattr(value, "value"):
        return (1, (int(value.value),))
    return (1, (int(value),))


def _is_zero(x: Any) -> bool:
    """모노이드 영원소 (덧붙인 0 은 None, 환 원소는 0)"""
    if x is None:
        return True
    if isinstance(x, tuple):
        return False
    return not x


@dataclass(frozen=True)
class GradedSet:
    """(차수, 원소) 목록, (차수, 원소) 순으로 정렬"""
    items: Tuple[Tuple[int, Any], ...]

    @classmethod
    def build(cls, items: Iterable[Tuple[int, Any]]) -> "GradedSet":
        return cls(tuple(sorted(items, key=lambda item: (item[0], canonical_key(item[1])))))

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def payloads(self) -> List[Any]:
        return [payload for _, payload in self.items]

    def degree(self, k: int) -> List[Any]:
        return [payload for d, payload in self.items if d == k]

    def counts(self) -> Dict[int, int]:
        return dict(sorted(Counter(d for d, _ in self.items).items()))

    def census(self) -> Tuple[int, ...]:
        """차수 0 부터 최고 차수까지의 개수"""
        counts = self.counts()
        if not counts:
            return ()
        return tuple(counts.get(k, 0) for k in range(max(counts) + 1))

    @property
    def min_degree(self) -> Optional[int]:
        return self.items[0][0] if self.items else None


@dataclass(frozen=True)
class GPoint:
    """
    슈발레 점 (a, n, b)

    a 는 양근 번호 순서의 좌표, b 는 정렬된 Φ_w 순서의 좌표.
    좌표는 D 원소 또는 None (등급 판), 혹은 모노이드 원소.
    """
    a: Tuple[Any, ...]
    n: ExtWeylElement
    b: Tuple[Any, ...]

    @property
    def w(self):
        return self.n.w

    @property
    def degree(self) -> int:
        support = sum(1 for x in self.a if not _is_zero(x)) + sum(1 for x in self.b if not _is_zero(x))
        return support + len(self.n.t)

    @property
    def sort_key(self) -> Tuple:
        return (tuple(canonical_key(x) for x in self.a), self.n.sort_key,
                tuple(canonical_key(x) for x in self.b))

    def to_json(self) -> Dict[str, Any]:
        def coord(x):
            if x is None:
                return None
            if isinstance(x, tuple):
                return list(x)
            return x.to_json() if hasattr(x, "to_json") else x

        return {"a": [coord(x) for x in self.a], "n": self.n.to_json(), "b": [coord(x) for x in self.b]}


# ---------------------------------------------------------------------------
# 기본 함자
# ---------------------------------------------------------------------------

def _check_budget(what: str, requested: int, budget: Optional[int], hint: Optional[str] = None):
    if budget is not None and requested > budget:
        raise BudgetExceededError(what, requested, budget, hint)


def _index_set(F: Union[int, Sequence[Any]]) -> List[Any]:
    return list(range(F)) if isinstance(F, int) else list(F)


def gm_points(D: PointedAbelianGroup) -> GradedSet:
    """G_m(D) = D, 전부 차수 1"""
    return GradedSet.build((1, g) for g in D.elements())


def affine_points(F: Union[int, Sequence[Any]], D: PointedAbelianGroup,
                  budget: Optional[int] = DEFAULT_POINT_BUDGET) -> GradedSet:
    """
    A^F(D) = ({0} ∪ D)^F, 차수는 지지 집합의 크기

    Args:
        F: 좌표 개수 또는 좌표 이름 목록
        D: 값 군
        budget: 점 개수 상한

    Returns:
        좌표 튜플 (0 은 None) 의 등급 집합
    """
    size = len(_index_set(F))
    _check_budget(f"A^{size} over {D.name}", (D.order + 1) ** size, budget)
    values = [None] + D.elements()
    return GradedSet.build((sum(1 for x in point if x is not None), point)
                           for point in itertools.product(values, repeat=size))


def e_F(D: PointedAbelianGroup, chi: Character, x: AffinePoint) -> Tuple[Optional[Fraction], ...]:
    """
    평가 사상: 지지 좌표는 χ(g_j), 나머지는 0

    단위근은 Q/Z 의 기약 분수 각도로, 0 은 None 으로 나타낸다.
    """
    if chi.group != D:
        raise ValueError(f"character of {chi.group.name} cannot evaluate points over {D.name}")
    return tuple(None if g is None else chi(g) for g in x)


def proj_points(d: int, D: PointedAbelianGroup,
                budget: Optional[int] = DEFAULT_POINT_BUDGET) -> GradedSet:
    """
    P^d(D) = ⊔_{|Y|=k+1} D^Y / D

    대각 작용의 궤도 대표는 min(Y) 좌표를 단위원으로 맞춘 것.
    차수 0 점은 좌표 번호 0..d 하나만 지지하는 점이다.
    """
    if d < 0:
        raise ValueError(f"projective dimension must be non-negative, got {d}")
    _check_budget(f"P^{d} over {D.name}", sum((D.order + 1) ** j for j in range(d + 1)), budget)
    items = []
    for k in range(d + 1):
        for Y in itertools.combinations(range(d + 1), k + 1):
            for free in itertools.product(D.elements(), repeat=k):
                point: List[Optional[GroupElement]] = [None] * (d + 1)
                point[Y[0]] = D.zero
                for j, g in zip(Y[1:], free):
                    point[j] = g
                items.append((k, tuple(point)))
    return GradedSet.build(items)


def spec_points(D0: PointedAbelianGroup, D: PointedAbelianGroup) -> GradedSet:
    """Spec D0 (D) = Hom(D0, D), 차수 0"""
    return GradedSet.build((0, f) for f in hom_set(D0, D))


# ---------------------------------------------------------------------------
# 슈발레 점
# ---------------------------------------------------------------------------

def chevalley_census(rs: RootSystem, n: int, weyl: Optional[WeylGroup] = None,
                     torus_size: Optional[int] = None) -> Tuple[int, ...]:
    """
    차수별 점 개수: (1+nx)^N · τ x^ℓ · Σ_w (1+nx)^{ℓ(w)} 의 계수

    Args:
        rs: 근계
        n: |D|
        weyl: 미리 만든 바일 군
        torus_size: τ (기본값 n^ℓ)
    """
    weyl = weyl or WeylGroup(rs)
    tau = n ** rs.rank if torus_size is None else torus_size
    step = CountingPolynomial([1, n])
    cells = CountingPolynomial.constant(0)
    for length, count in weyl.length_census().items():
        cells = cells + step ** length * count
    total = step ** rs.n_positive * CountingPolynomial.monomial(rs.rank, tau) * cells
    return tuple(total.coefficient(k) for k in range(total.degree + 1))


def restricted_chevalley_census(rs: RootSystem, D: PointedAbelianGroup,
                                weyl: Optional[WeylGroup] = None) -> Tuple[int, ...]:
    """토러스를 단순연결 덮개에서 제한한 상 T' 로 바꾼 부분 함자의 차수별 개수"""
    _, phi = simply_connected_cover(rs)
    torus = restricted_torus(phi, D)
    return chevalley_census(rs, D.order, weyl, torus_size=len(torus))


def _coordinate_tuples(values: Sequence[Any], size: int) -> List[Tuple[Any, ...]]:
    return list(itertools.product(values, repeat=size))


def _enumerate_points(ext: TitsExtension, values: Sequence[Any], torus: Sequence[TorusPoint],
                      max_workers: int) -> List[GPoint]:
    weyl = ext.weyl
    a_choices = _coordinate_tuples(values, ext.rs.n_positive)
    by_length: Dict[int, List[Tuple[Any, ...]]] = {}

    def build(w) -> List[GPoint]:
        b_choices = by_length.get(w.length)
        if b_choices is None:
            b_choices = by_length.setdefault(w.length, _coordinate_tuples(values, w.length))
        fiber = [ext.element(t, w) for t in torus]
        return [GPoint(a, n, b) for a in a_choices for n in fiber for b in b_choices]

    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            shards = list(executor.map(build, weyl.elements))
    else:
        shards = [build(w) for w in weyl.elements]
    return [point for shard in shards for point in shard]


def chevalley_points(rs: RootSystem, D: PointedAbelianGroup,
                     budget: Optional[int] = DEFAULT_POINT_BUDGET,
                     weyl: Optional[WeylGroup] = None,
                     ext: Optional[TitsExtension] = None,
                     restricted: bool = False,
                     max_workers: int = 1) -> GradedSet:
    """
    G(D) = A^{Φ⁺}(D) × ∐_w (p^{-1}(w) × A^{Φ_w}(D))

    Args:
        rs: 근계
        D: 점 있는 아벨군
        budget: 점 개수 상한, 넘으면 BudgetExceededError (chevalley_census 로 개수만 구할 것)
        weyl: 미리 만든 바일 군
        ext: 미리 만든 확장 바일 군
        restricted: True 이면 각 올에서 토러스를 T' 로 제한
        max_workers: w 별 분할 스레드 수 (출력 순서와 무관)

    Returns:
        GPoint 의 등급 집합
    """
    ext = ext or TitsExtension(rs, D, weyl)
    if restricted:
        _, phi = simply_connected_cover(rs)
        torus = restricted_torus(phi, D)
    else:
        torus = ext.torus_elements()
    total = sum(chevalley_census(rs, D.order, ext.weyl, torus_size=len(torus)))
    _check_budget(f"G({D.name}) for {rs.label}", total, budget, "use chevalley_census for counts only")

    points = _enumerate_points(ext, [None] + D.elements(), torus, max_workers)
    logger.info(f"Enumerated {len(points)} points of G({D.name}) for {rs.label}")
    return GradedSet.build((p.degree, p) for p in points)


def degree_slice_is_group(points: GradedSet, ext: TitsExtension) -> bool:
    """최저 차수 ℓ 의 점들이 N 과 일치하고 곱에 닫혀 있는지"""
    if points.min_degree != ext.rank:
        return False
    members = [p.n for p in points.degree(ext.rank)]
    member_set = set(members)
    if len(member_set) != len(members) or member_set != set(ext.elements()):
        return False
    return all(ext.multiply(a, b) in member_set for a in members for b in members)


def chevalley_points_monoid(rs: RootSystem, M: MonoidWithZero,
                            budget: Optional[int] = DEFAULT_POINT_BUDGET,
                            weyl: Optional[WeylGroup] = None,
                            max_workers: int = 1) -> List[GPoint]:
    """
    G(M, ε) = M^{Φ⁺} × ∐_w (p^{-1}(w) × M^{Φ_w}), 확장 바일 군은 M 의 단원군 위에서 만든다

    Raises:
        ValueError: M 이 무한일 때
        BudgetExceededError: 점 개수가 상한을 넘을 때
    """
    if not M.is_finite:
        raise ValueError(f"monoid {M.name} is infinite; only lazily evaluated operations are available")
    units = M.unit_group()
    values = M.elements()
    ext = TitsExtension(rs, units.group, weyl)
    m = len(values)
    total = m ** rs.n_positive * ext.torus_order * sum(m ** w.length for w in ext.weyl.elements)
    _check_budget(f"G({M.name}) for {rs.label}", total, budget)

    points = _enumerate_points(ext, values, ext.torus_elements(), max_workers)
    points.sort(key=lambda p: p.sort_key)
    logger.info(f"Enumerated {len(points)} monoid points of G({M.name}) for {rs.label}")
    return points


# ---------------------------------------------------------------------------
# 셈 다항식
# ---------------------------------------------------------------------------

def counting_polynomial(kind: str, rs: Optional[RootSystem] = None, d: Optional[int] = None,
                        variable: str = "q", weyl: Optional[WeylGroup] = None) -> CountingPolynomial:
    """
    셈 다항식 N(q) (variable='n' 이면 q = n+1 대입 후 전개)

    Args:
        kind: 'gm', 'affine' (d = |F|), 'pd' (d = 차원), 'spec', 'chevalley' (rs 필요)
        rs: 근계
        d: 차원 또는 좌표 개수
        variable: 'q' 또는 'n'
    """
    if kind == "gm":
        poly = CountingPolynomial.linear(-1, 1)
    elif kind == "affine":
        poly = CountingPolynomial.monomial(_require(d, "d"))
    elif kind == "pd":
        poly = CountingPolynomial([1] * (_require(d, "d") + 1))
    elif kind == "spec":
        poly = CountingPolynomial.constant(1)
    elif kind == "chevalley":
        if rs is None:
            raise ValueError("chevalley counting polynomial needs a root system")
        weyl = weyl or WeylGroup(rs)
        poly = (CountingPolynomial.linear(-1, 1) ** rs.rank
                * CountingPolynomial.monomial(rs.n_positive)
                * weyl.poincare_polynomial())
    else:
        raise ValueError(f"unknown gadget kind '{kind}' (expected one of {', '.join(GADGET_KINDS)})")

    if variable == "q":
        return poly
    if variable == "n":
        return poly.compose_shift(1)
    raise ValueError(f"variable must be 'q' or 'n', got '{variable}'")


def _require(value: Optional[int], name: str) -> int:
    if value is None:
        raise ValueError(f"parameter '{name}' is required for this gadget")
    if value < 0:
        raise ValueError(f"parameter '{name}' must be non-negative, got {value}")
    return value


def census_matches_polynomial(census: Sequence[int], poly_in_n: CountingPolynomial, n: int) -> bool:
    """차수 k 개수 = (n 변수 다항식의 k 차 계수) · n^k"""
    size = max(len(census), poly_in_n.degree + 1)
    return all((census[k] if k < len(census) else 0) == poly_in_n.coefficient(k) * n ** k
               for k in range(size))


# ---------------------------------------------------------------------------
# 자연성
# ---------------------------------------------------------------------------

def _map_affine(f: GroupHom, x: AffinePoint) -> AffinePoint:
    return tuple(None if g is None else f(g) for g in x)


def naturality_check(gadget: str, f: GroupHom, chi: Character,
                     rs: Optional[RootSystem] = None, d: Optional[int] = None,
                     source: Optional[PointedAbelianGroup] = None,
                     budget: Optional[int] = DEFAULT_POINT_BUDGET) -> bool:
    """
    e_X(χ'∘f) = e_X(χ') ∘ X(f) 를 X(D) 전체에서 확인

    Args:
        gadget: 'gm', 'affine', 'pd', 'spec', 'chevalley'
        f: (D,ε) -> (D',ε')
        chi: D' 의 지표
        rs: 슈발레 함자의 근계
        d: 아핀 좌표 개수 또는 사영 차원
        source: spec 함자의 정의 군 D0
    """
    if chi.group != f.target:
        raise ValueError("character must be defined on the target of the homomorphism")
    D, pulled = f.source, chi.pullback(f)

    if gadget == "gm":
        return all(pulled(g) == chi(f(g)) for g in D.elements())

    if gadget in ("affine", "pd"):
        points = affine_points(_require(d, "d"), D, budget) if gadget == "affine" else proj_points(_require(d, "d"), D, budget)
        return all(e_F(D, pulled, x) == e_F(f.target, chi, _map_affine(f, x)) for x in points.payloads())

    if gadget == "spec":
        D0 = source or D
        for h in hom_set(D0, D):
            image = f.compose(h)
            if tuple(pulled(g) for g in h.images) != tuple(chi(g) for g in image.images):
                return False
        return True

    if gadget == "chevalley":
        from .chevalley import realization_over_character

        if rs is None:
            raise ValueError("chevalley naturality needs a root system")
        ext_source = TitsExtension(rs, D)
        ext_target = TitsExtension(rs, f.target, ext_source.weyl)
        points = chevalley_points(rs, D, budget, ext=ext_source)
        ring = CyclotomicRing(math.lcm(D.exponent, f.target.exponent))
        left = realization_over_character(rs, pulled, ring=ring, ext=ext_source)
        right = realization_over_character(rs, chi, ring=ring, ext=ext_target)
        for p in points.payloads():
            mapped = GPoint(_map_affine(f, p.a), ext_target.element(tuple(f(v) for v in p.n.t), p.n.w),
                            _map_affine(f, p.b))
            if left.e_G(p) != right.e_G(mapped):
                return False
        return True

    raise ValueError(f"unknown gadget kind '{gadget}' (expected one of {', '.join(GADGET_KINDS)})")
