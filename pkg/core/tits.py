#!/usr/bin/env python3
"""
확장 바일 군 모듈
티츠 확장 1 -> Hom(L,D) -> N_{D,ε}(L,Φ) -> W -> 1 을 (t, w) 정규형과
재귀 코사이클로 구현하고 확장 군의 법칙들을 전수 검사

D 는 덧셈으로 쓴다. 토러스 원소 t 는 L 기저 위의 값 튜플이다.
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

from .arith import GroupElement, GroupHom, PointedAbelianGroup, group_make
from .errors import BudgetExceededError
from .roots import LatticeMap, RootSystem
from .weyl import WeylElement, WeylGroup

logger = logging.getLogger(__name__)

TorusPoint = Tuple[GroupElement, ...]

DEFAULT_EXTENSION_CAP = 5000
DEFAULT_TRIPLE_LIMIT = 10 ** 6


@dataclass(frozen=True)
class ExtWeylElement:
    """N_{D,ε}(L,Φ) 의 원소 (t, w)"""
    t: TorusPoint
    w: WeylElement
    parent: "TitsExtension" = field(compare=False, repr=False)

    @property
    def sort_key(self) -> Tuple:
        return self.w.sort_key, self.t

    def __lt__(self, other: "ExtWeylElement") -> bool:
        return self.sort_key < other.sort_key

    def __mul__(self, other: "ExtWeylElement") -> "ExtWeylElement":
        return self.parent.multiply(self, other)

    @property
    def in_torus(self) -> bool:
        return self.w.is_identity

    def to_json(self) -> Dict[str, Any]:
        return {"t": [list(v) for v in self.t], "w": list(self.w.word)}


class TitsExtension:
    """
    확장 바일 군 N_{D,ε}(L,Φ)

    곱셈: (t1,w1)(t2,w2) = (t1 + w1(t2) + c(w1,w2), w1 w2)
    코사이클 c 는 w2 의 저장된 축약어 첫 글자 i 와 v = s_i w2 에 대해
      c(w, e) = 0
      ℓ(w1 s_i) > ℓ(w1) 이면 c(w1,w2) = c(w1 s_i, v)
      아니면 c(w1,w2) = (w1 s_i)(h_{α_i}) + c(w1 s_i, v)
    """

    def __init__(self, rs: RootSystem, group: PointedAbelianGroup, weyl: Optional[WeylGroup] = None):
        self.rs = rs
        self.group = group
        self.weyl = weyl or WeylGroup(rs)
        self.rank = rs.rank

        # (w t)(v_i) = Σ_k (W_L^{-1})_{k,i} t(v_k)
        self._action: Dict[int, List[List[int]]] = {}
        for w in self.weyl.elements:
            inv = self.weyl.lattice_matrix(self.weyl.inverse(w))
            self._action[w.index] = [[int(inv[k, i]) for k in range(self.rank)] for i in range(self.rank)]

        self._cocycle: Dict[Tuple[int, int], TorusPoint] = {}
        self._simple_h = [self.h(rs.simple[i]) for i in range(self.rank)]
        self._reflection_lifts: Dict[int, ExtWeylElement] = {}
        self.identity = ExtWeylElement(self.torus_zero, self.weyl.identity, self)

        logger.debug(f"Tits extension over {group.name} for {rs.label}: order {self.order}")

    # ------------------------------------------------------------------
    # 토러스 Hom(L, D)
    # ------------------------------------------------------------------

    @property
    def torus_zero(self) -> TorusPoint:
        return tuple(self.group.zero for _ in range(self.rank))

    @property
    def torus_order(self) -> int:
        return self.group.order ** self.rank

    @property
    def order(self) -> int:
        return self.torus_order * len(self.weyl)

    def torus_elements(self) -> List[TorusPoint]:
        return list(itertools.product(self.group.elements(), repeat=self.rank))

    def torus_add(self, a: TorusPoint, b: TorusPoint) -> TorusPoint:
        return tuple(self.group.add(x, y) for x, y in zip(a, b))

    def torus_neg(self, a: TorusPoint) -> TorusPoint:
        return tuple(self.group.neg(x) for x in a)

    def torus_sub(self, a: TorusPoint, b: TorusPoint) -> TorusPoint:
        return tuple(self.group.sub(x, y) for x, y in zip(a, b))

    def evaluate(self, t: TorusPoint, x: Sequence[int]) -> GroupElement:
        """t(x), x 는 L 좌표"""
        value = self.group.zero
        for coeff, tv in zip(x, t):
            value = self.group.add(value, self.group.scale(tv, int(coeff)))
        return value

    def act(self, w: WeylElement, t: TorusPoint) -> TorusPoint:
        """w(t) = t ∘ w^{-1}"""
        if w.is_identity:
            return t
        return tuple(self.evaluate(t, column) for column in self._action[w.index])

    def h(self, root: int) -> TorusPoint:
        """h_s(x) = ε^{n_r(x)}"""
        cov = self.rs.covectors[self.rs.index_of(root)]
        return tuple(self.group.scale(self.group.eps, int(c)) for c in cov)

    def torus_subgroup(self, root: int) -> List[TorusPoint]:
        """T_s = {x ↦ a^{ν0(x)}}, ν0 는 n_r 에 비례하는 원시 정수 여형식"""
        cov = self.rs.covectors[self.rs.index_of(root)]
        g = int(np.gcd.reduce(np.abs(cov)))
        nu = [int(c) // g for c in cov]
        return sorted({tuple(self.group.scale(a, c) for c in nu) for a in self.group.elements()})

    # ------------------------------------------------------------------
    # 군 연산
    # ------------------------------------------------------------------

    def element(self, t: TorusPoint, w: WeylElement) -> ExtWeylElement:
        return ExtWeylElement(tuple(tuple(v) for v in t), w, self)

    def lift(self, w: WeylElement) -> ExtWeylElement:
        """저장된 축약어를 따른 단순 리프트의 곱 (0, w)"""
        return ExtWeylElement(self.torus_zero, w, self)

    def simple_lift(self, i: int) -> ExtWeylElement:
        return self.lift(self.weyl.simple_reflections[i])

    def torus_element(self, t: TorusPoint) -> ExtWeylElement:
        return self.element(t, self.weyl.identity)

    def cocycle(self, w1: WeylElement, w2: WeylElement) -> TorusPoint:
        key = (w1.index, w2.index)
        cached = self._cocycle.get(key)
        if cached is not None:
            return cached
        acc = self.torus_zero
        a, b = w1, w2
        while not b.is_identity:
            i = b.word[0]
            s = self.weyl.simple_reflections[i]
            a_s = self.weyl.multiply(a, s)
            if a_s.length < a.length:
                acc = self.torus_add(acc, self.act(a_s, self._simple_h[i]))
            a, b = a_s, self.weyl.multiply(s, b)
        self._cocycle[key] = acc
        return acc

    def _check_parent(self, *elements: ExtWeylElement):
        for x in elements:
            if x.parent is not self and (x.parent.rs is not self.rs or x.parent.group != self.group):
                raise ValueError("elements belong to different extended Weyl groups")

    def multiply(self, a: ExtWeylElement, b: ExtWeylElement) -> ExtWeylElement:
        self._check_parent(a, b)
        t = self.torus_add(self.torus_add(a.t, self.act(a.w, b.t)), self.cocycle(a.w, b.w))
        return ExtWeylElement(t, self.weyl.multiply(a.w, b.w), self)

    def inverse(self, a: ExtWeylElement) -> ExtWeylElement:
        self._check_parent(a)
        w_inv = self.weyl.inverse(a.w)
        c = self.cocycle(a.w, w_inv)
        t = self.act(w_inv, self.torus_neg(self.torus_add(a.t, c)))
        return ExtWeylElement(t, w_inv, self)

    def power(self, a: ExtWeylElement, k: int) -> ExtWeylElement:
        result = self.identity
        for _ in range(k):
            result = self.multiply(result, a)
        return result

    def element_order(self, a: ExtWeylElement) -> int:
        power, order = a, 1
        while power != self.identity:
            power = self.multiply(power, a)
            order += 1
        return order

    def conjugate(self, n: ExtWeylElement, a: ExtWeylElement) -> ExtWeylElement:
        return self.multiply(self.multiply(n, a), self.inverse(n))

    def project(self, a: ExtWeylElement) -> WeylElement:
        return a.w

    def product(self, elements: Iterable[ExtWeylElement]) -> ExtWeylElement:
        result = self.identity
        for x in elements:
            result = self.multiply(result, x)
        return result

    def fiber(self, w: WeylElement) -> List[ExtWeylElement]:
        """p^{-1}(w)"""
        return [ExtWeylElement(t, w, self) for t in self.torus_elements()]

    def elements(self) -> List[ExtWeylElement]:
        return [ExtWeylElement(t, w, self) for w in self.weyl.elements for t in self.torus_elements()]

    # ------------------------------------------------------------------
    # 반사별 부분군 N_s
    # ------------------------------------------------------------------

    def reflection_lift(self, root: int) -> ExtWeylElement:
        """ñ_s = σ(u) n_i σ(u)^{-1}, u(α_i) = ±r 인 첫 (u, i)"""
        root = self.rs.index_of(root)
        key = min(root, self.rs.neg(root))
        if key in self._reflection_lifts:
            return self._reflection_lifts[key]
        targets = {root, self.rs.neg(root)}
        for u in self.weyl.elements:
            for i in range(self.rank):
                if u.perm[self.rs.simple[i]] in targets:
                    sigma = self.lift(u)
                    lift = self.conjugate(sigma, self.simple_lift(i))
                    self._reflection_lifts[key] = lift
                    return lift
        raise ValueError(f"root {self.rs.roots[root]} is not W-conjugate to a simple root")

    def reflection_subgroup(self, root: int) -> List[ExtWeylElement]:
        """N_s = T_s ∪ T_s·ñ_s"""
        lift = self.reflection_lift(root)
        torus = [self.torus_element(t) for t in self.torus_subgroup(root)]
        return sorted(set(torus) | {self.multiply(x, lift) for x in torus})

    def fiber_squares(self, root: int) -> bool:
        """N_s \\ T_s 의 모든 원소의 제곱이 h_s 인지 (p^{-1}(s) 전체에서는 성립하지 않음)"""
        target = self.torus_element(self.h(root))
        return all(self.multiply(a, a) == target
                   for a in self.reflection_subgroup(root) if not a.in_torus)

    # ------------------------------------------------------------------
    # 법칙 검사
    # ------------------------------------------------------------------

    def _generators(self) -> List[ExtWeylElement]:
        gens = [self.simple_lift(i) for i in range(self.rank)]
        for k in range(self.rank):
            for g in self.group.generators():
                t = tuple(g if j == k else self.group.zero for j in range(self.rank))
                gens.append(self.torus_element(t))
        return gens

    def check_kernel_abelian(self) -> bool:
        torus = [self.torus_element(t) for t in self.torus_elements()]
        return all(self.multiply(a, b) == self.multiply(b, a) for a in torus for b in torus)

    def check_normalizes(self, exhaustive: bool = True) -> bool:
        """n N_s n^{-1} = N_{p(n)(s)}"""
        conjugators = self.elements() if exhaustive else self._generators()
        subgroups = {r: set(self.reflection_subgroup(r)) for r in range(self.rs.n_positive)}
        for n in conjugators:
            for r, members in subgroups.items():
                image_root = n.w.perm[r]
                expected = subgroups[min(image_root, self.rs.neg(image_root))]
                if {self.conjugate(n, a) for a in members} != expected:
                    return False
        return True

    def check_projection(self) -> bool:
        """p(N_s) = {1, s} 이고 N_s ∩ T = T_s"""
        for r in range(self.rs.n_positive):
            members = self.reflection_subgroup(r)
            s = self.weyl.reflection(r)
            if {self.project(a) for a in members} != {self.weyl.identity, s}:
                return False
            if sorted(a.t for a in members if a.in_torus) != self.torus_subgroup(r):
                return False
        return True

    def check_torus_properties(self) -> Dict[str, bool]:
        """
        성질 (1)-(5):
          w(T_s) = T_{w(s)}, w(h_s) = h_{w(s)}, h_s ∈ T_s,
          s(t) - t ∈ T_s, T_s 위에서 s(t) = -t
        """
        result = {"w_T_s": True, "w_h_s": True, "h_s_in_T_s": True, "s_t_minus_t": True, "s_inverts_T_s": True}
        torus = self.torus_elements()
        for r in range(self.rs.n_positive):
            T_s = set(self.torus_subgroup(r))
            h_s = self.h(r)
            s = self.weyl.reflection(r)
            if h_s not in T_s:
                result["h_s_in_T_s"] = False
            if any(self.torus_sub(self.act(s, t), t) not in T_s for t in torus):
                result["s_t_minus_t"] = False
            if any(self.act(s, t) != self.torus_neg(t) for t in T_s):
                result["s_inverts_T_s"] = False
            for w in self.weyl.elements:
                image = w.perm[r]
                if {self.act(w, t) for t in T_s} != set(self.torus_subgroup(image)):
                    result["w_T_s"] = False
                if self.act(w, h_s) != self.h(image):
                    result["w_h_s"] = False
        return result

    def check_squares(self) -> bool:
        """모든 양근 r 에 대해 fiber_squares(r)"""
        return all(self.fiber_squares(r) for r in range(self.rs.n_positive))

    def check_braid_relations(self) -> bool:
        """a_i ∈ N_{α_i} ∩ p^{-1}(s_i) 에 대해 prod(m; a_i, a_j) = prod(m; a_j, a_i)"""
        M = self.weyl.coxeter_matrix()
        lifts = []
        for i in range(self.rank):
            root = self.rs.simple[i]
            lifts.append([a for a in self.reflection_subgroup(root) if not a.in_torus])
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                m = int(M[i, j])
                for a in lifts[i]:
                    for b in lifts[j]:
                        left = self.product((a, b)[k % 2] for k in range(m))
                        right = self.product((b, a)[k % 2] for k in range(m))
                        if left != right:
                            return False
        return True

    def check_reduced_words(self) -> bool:
        """모든 축약어를 따른 단순 리프트의 곱이 같은 원소"""
        for w in self.weyl.elements:
            expected = self.lift(w)
            for word in self.weyl.reduced_words(w):
                if self.product(self.simple_lift(i) for i in word) != expected:
                    return False
        return True

    def check_associativity(self, limit: int = DEFAULT_TRIPLE_LIMIT, seed: int = 0) -> bool:
        """전수 (|N|³ ≤ limit) 또는 시드 고정 표본으로 결합법칙 검사"""
        elements = self.elements()
        size = len(elements)
        if size ** 3 <= limit:
            triples: Iterable = itertools.product(elements, repeat=3)
        else:
            rng = np.random.default_rng(seed)
            picks = rng.integers(0, size, size=(min(limit, 20000), 3))
            triples = ((elements[i], elements[j], elements[k]) for i, j, k in picks)
        return all(self.multiply(self.multiply(a, b), c) == self.multiply(a, self.multiply(b, c))
                   for a, b, c in triples)

    def check_inverse(self) -> bool:
        return all(self.multiply(a, self.inverse(a)) == self.identity for a in self.elements())

    def law_report(self, exhaustive_limit: int = DEFAULT_EXTENSION_CAP) -> Dict[str, bool]:
        """확장 군 법칙 전체"""
        if self.order > exhaustive_limit:
            raise BudgetExceededError(f"N over {self.group.name} for {self.rs.label}",
                                      self.order, exhaustive_limit)
        report = {
            "kernel_abelian": self.check_kernel_abelian(),
            "normalizes": self.check_normalizes(exhaustive=self.order <= 1000),
            "projection": self.check_projection(),
            "squares": self.check_squares(),
            "braid": self.check_braid_relations(),
            "reduced_words": self.check_reduced_words(),
            "associative": self.check_associativity(),
            "inverse": self.check_inverse(),
        }
        report.update(self.check_torus_properties())
        return report

    def element_orders(self) -> Dict[int, int]:
        return dict(sorted(Counter(self.element_order(a) for a in self.elements()).items()))

    def table_digest(self) -> Dict[str, Any]:
        orders = self.element_orders()
        return {
            "root_system": self.rs.label,
            "group": self.group.name,
            "order": self.order,
            "torus_order": self.torus_order,
            "weyl_order": len(self.weyl),
            "element_orders": {str(k): v for k, v in orders.items()},
            "involutions": orders.get(2, 0),
        }


# ---------------------------------------------------------------------------
# 함자성과 부분 확장
# ---------------------------------------------------------------------------

def induced_map(f: GroupHom, source: TitsExtension, target: TitsExtension) -> Callable[[ExtWeylElement], ExtWeylElement]:
    """(D,ε) -> (D',ε') 가 유도하는 N -> N' : (t, w) ↦ (f∘t, w)"""
    if source.rs is not target.rs:
        raise ValueError("induced maps need a common root system")
    if not f.is_pointed:
        raise ValueError(f"homomorphism does not send eps {f.source.eps} to {f.target.eps}")

    def apply(a: ExtWeylElement) -> ExtWeylElement:
        return target.element(tuple(f(v) for v in a.t), a.w)

    return apply


def check_functoriality(f: GroupHom, source: TitsExtension, target: TitsExtension,
                        limit: int = DEFAULT_TRIPLE_LIMIT, seed: int = 0) -> bool:
    """유도 사상이 p 와 가환인 준동형인지"""
    F = induced_map(f, source, target)
    elements = source.elements()
    if len(elements) ** 2 <= limit:
        pairs: Iterable = itertools.product(elements, repeat=2)
    else:
        rng = np.random.default_rng(seed)
        picks = rng.integers(0, len(elements), size=(20000, 2))
        pairs = ((elements[i], elements[j]) for i, j in picks)
    for a, b in pairs:
        if F(source.multiply(a, b)) != target.multiply(F(a), F(b)):
            return False
    return all(F(a).w == a.w for a in elements)


def amalgamated_check(rs: RootSystem, D: PointedAbelianGroup,
                      weyl: Optional[WeylGroup] = None,
                      cap: int = DEFAULT_EXTENSION_CAP) -> Dict[str, Any]:
    """
    N_{D,ε} 가 T 와 N_{Z/2,gen} 의 표준 상으로 생성되는지 확인

    Returns:
        생성된 부분군의 위수, 기대 위수, 준동형 여부, 통과 여부
    """
    weyl = weyl or WeylGroup(rs)
    N = TitsExtension(rs, D, weyl)
    if N.order > cap:
        raise BudgetExceededError(f"N over {D.name} for {rs.label}", N.order, cap)
    base = TitsExtension(rs, group_make([2], 1), weyl)
    f = GroupHom(base.group, D, (D.eps,))
    F = induced_map(f, base, N)

    base_elements = base.elements()
    homomorphism = all(F(base.multiply(a, b)) == N.multiply(F(a), F(b))
                       for a in base_elements for b in base_elements)

    generators = sorted({F(a) for a in base_elements} | {N.torus_element(t) for t in N.torus_elements()})
    generated: Set[ExtWeylElement] = {N.identity}
    frontier = [N.identity]
    while frontier:
        next_frontier = []
        for x in frontier:
            for g in generators:
                y = N.multiply(x, g)
                if y not in generated:
                    generated.add(y)
                    next_frontier.append(y)
        frontier = next_frontier

    passed = homomorphism and len(generated) == N.order
    logger.info(f"Amalgamated check {rs.label} over {D.name}: generated {len(generated)}/{N.order}")
    return {
        "root_system": rs.label,
        "group": D.name,
        "generated": len(generated),
        "expected": N.order,
        "homomorphism": homomorphism,
        "passed": passed,
    }


def restricted_torus(phi: LatticeMap, D: PointedAbelianGroup) -> List[TorusPoint]:
    """
    Hom(L̃, D) -> Hom(L, D), t' ↦ t' ∘ φ 의 상

    Args:
        phi: simply_connected_cover 가 준 사상
        D: 값 군

    Returns:
        정렬된 토러스 원소 목록
    """
    matrix = phi.array
    rank_source = matrix.shape[1]
    image = set()
    for t_cover in itertools.product(D.elements(), repeat=matrix.shape[0]):
        values = []
        for j in range(rank_source):
            value = D.zero
            for i, tv in enumerate(t_cover):
                value = D.add(value, D.scale(tv, int(matrix[i, j])))
            values.append(value)
        image.add(tuple(values))
    return sorted(image)


def restricted_subgroup(ext: TitsExtension, torus: Sequence[TorusPoint]) -> List[ExtWeylElement]:
    """N' = {(t, w) : t ∈ T'}"""
    return [ext.element(t, w) for w in ext.weyl.elements for t in torus]


def check_restricted_subgroup(ext: TitsExtension, torus: Sequence[TorusPoint]) -> bool:
    """N' 이 곱과 역원에 닫힌 부분군인지"""
    members = set(restricted_subgroup(ext, torus))
    if ext.identity not in members:
        return False
    return all(ext.inverse(a) in members and all(ext.multiply(a, b) in members for b in members)
               for a in members)
