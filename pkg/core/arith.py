#!/usr/bin/env python3
"""
정밀 산술 모듈
유한체, 점 있는 유한 아벨군, 군환 Z[D] 와 축약 군환 Z[D,ε], 지표,
영원소를 갖는 모노이드를 제공

부동소수점은 사용하지 않는다. 1의 거듭제곱근은 Q/Z 의 분수로,
그 합은 원분 정수환 Z[ζ_M] 의 원소로 표현한다.
"""

import itertools
import logging
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import BudgetExceededError

logger = logging.getLogger(__name__)

GroupElement = Tuple[int, ...]

SUPPORTED_PRIMES = (2, 3, 5, 7)
MAX_FIELD_ORDER = 81

# (p, k) -> 기약 모닉 다항식 계수, 낮은 차수부터
IRREDUCIBLE_TABLE: Dict[Tuple[int, int], Tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (7, 2): (3, 6, 1),
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def _reduce_monic(coeffs: List[int], modulus: Sequence[int], mod: Optional[int] = None) -> List[int]:
    """모닉 다항식 modulus 로 나눈 나머지 (mod 가 주어지면 계수도 축약)"""
    k = len(modulus) - 1
    values = list(coeffs) + [0] * max(0, k - len(coeffs))
    for d in range(len(values) - 1, k - 1, -1):
        c = values[d]
        if c:
            for i in range(k + 1):
                values[d - k + i] -= c * modulus[i]
    values = values[:k]
    if mod is not None:
        values = [v % mod for v in values]
    return values


# ---------------------------------------------------------------------------
# 환 인터페이스
# ---------------------------------------------------------------------------

class Ring:
    """정확한 가환환의 공통 인터페이스"""

    name: str = "ring"
    is_field: bool = False
    is_finite: bool = False

    def __call__(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def is_unit(self, x) -> bool:
        raise NotImplementedError

    def inverse(self, x):
        raise NotImplementedError

    def elements(self) -> List[Any]:
        raise ValueError(f"{self.name} is infinite; elements cannot be enumerated")

    def to_json(self, x) -> Any:
        return x

    def __repr__(self) -> str:
        return self.name


# ---------------------------------------------------------------------------
# 유한체
# ---------------------------------------------------------------------------

class FieldElement:
    """유한체 원소 (계수 벡터의 p진 인코딩 값)"""

    __slots__ = ("field", "value")

    def __init__(self, field: "FiniteField", value: int):
        self.field = field
        self.value = value

    def _coerce(self, other) -> Optional[int]:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError(f"mixed fields: {self.field.name} and {other.field.name}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.field(int(other)).value
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self.field._elements[self.field.add_table[self.value, v]]

    __radd__ = __add__

    def __neg__(self):
        return self.field._elements[self.field.neg_table[self.value]]

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self + self.field._elements[self.field.neg_table[v]]

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self.field._elements[self.field.mul_table[self.value, v]]

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self.field.name}")
        return self.field._elements[self.field.inv_table[self.value]]

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self * self.field._elements[v].inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int):
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        result = self.field.one
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == self.field(int(other)).value
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.q, self.value))

    def __lt__(self, other: "FieldElement") -> bool:
        return self.value < other.value

    def __bool__(self) -> bool:
        return self.value != 0

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return tuple(self.field._coeffs(self.value))

    def to_json(self) -> Union[int, List[int]]:
        if self.field.k == 1:
            return self.value
        return list(self.coeffs)

    def __repr__(self) -> str:
        if self.field.k == 1:
            return str(self.value)
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms) if terms else "0"


class FiniteField(Ring):
    """소수 p 와 차수 k 로 정해지는 유한체 GF(p^k)"""

    is_field = True
    is_finite = True

    def __init__(self, p: int, k: int = 1):
        if not _is_prime(p) or p not in SUPPORTED_PRIMES:
            raise ValueError(f"characteristic must be one of {SUPPORTED_PRIMES}, got {p}")
        if k < 1 or p ** k > MAX_FIELD_ORDER:
            raise ValueError(f"field order {p}^{k} is outside 2..{MAX_FIELD_ORDER}")
        if k == 1:
            modulus = (0, 1)
        elif (p, k) in IRREDUCIBLE_TABLE:
            modulus = IRREDUCIBLE_TABLE[(p, k)]
        else:
            raise ValueError(f"no irreducible polynomial stored for q={p ** k}")

        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = modulus
        self.name = f"GF({self.q})"

        self._build_tables()
        self._elements = [FieldElement(self, v) for v in range(self.q)]
        self._verify_irreducible()

    def _coeffs(self, value: int) -> List[int]:
        return [(value // self.p ** i) % self.p for i in range(self.k)]

    def _encode(self, coeffs: Sequence[int]) -> int:
        return sum((int(c) % self.p) * self.p ** i for i, c in enumerate(coeffs))

    def _mulmod(self, a: List[int], b: List[int]) -> List[int]:
        product = [0] * (2 * self.k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    product[i + j] += x * y
        return _reduce_monic(product, self.modulus, self.p)

    def _build_tables(self):
        q = self.q
        coeffs = [self._coeffs(v) for v in range(q)]
        self.add_table = np.zeros((q, q), dtype=np.int64)
        self.mul_table = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(a, q):
                s = self._encode([x + y for x, y in zip(coeffs[a], coeffs[b])])
                m = self._encode(self._mulmod(coeffs[a], coeffs[b]))
                self.add_table[a, b] = self.add_table[b, a] = s
                self.mul_table[a, b] = self.mul_table[b, a] = m
        self.neg_table = np.argmax(self.add_table == 0, axis=1)
        self.inv_table = np.zeros(q, dtype=np.int64)
        self.inv_table[1:] = np.argmax(self.mul_table[1:] == 1, axis=1)

    def _verify_irreducible(self):
        # 영인자가 없으면 몫환이 체, 즉 modulus 가 기약
        if (self.mul_table[1:, 1:] == 0).any():
            raise ValueError(f"modulus {self.modulus} is reducible over F_{self.p}")

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError(f"element of {value.field.name} is not in {self.name}")
            return value
        if isinstance(value, (list, tuple)):
            return self._elements[self._encode(value)]
        return self._elements[int(value) % self.p]

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self) -> int:
        return hash(("GF", self.p, self.k))

    def elements(self) -> List[FieldElement]:
        return list(self._elements)

    def units(self) -> List[FieldElement]:
        return self._elements[1:]

    def is_unit(self, x: FieldElement) -> bool:
        return self(x).value != 0

    def inverse(self, x: FieldElement) -> FieldElement:
        return self(x).inverse()

    @property
    def gen(self) -> FieldElement:
        """다항식 변수 x 의 상 (소수체에서는 원시원)"""
        if self.k == 1:
            return self.primitive_element
        return self._elements[self.p]

    def multiplicative_order(self, x: FieldElement) -> int:
        x = self(x)
        if x.value == 0:
            raise ValueError("0 has no multiplicative order")
        power, order = x, 1
        while power.value != 1:
            power = power * x
            order += 1
        return order

    @cached_property
    def primitive_element(self) -> FieldElement:
        for x in self._elements[1:]:
            if self.multiplicative_order(x) == self.q - 1:
                return x
        raise ValueError(f"{self.name} has no primitive element")

    @cached_property
    def _log_table(self) -> Dict[int, int]:
        logs, power = {}, self.one
        for e in range(self.q - 1):
            logs[power.value] = e
            power = power * self.primitive_element
        return logs

    def discrete_log(self, x: FieldElement) -> int:
        x = self(x)
        if x.value == 0:
            raise ValueError("discrete log of 0 is undefined")
        return self._log_table[x.value]

    def frobenius(self, x: FieldElement) -> FieldElement:
        return self(x) ** self.p

    def to_json(self, x: FieldElement) -> Union[int, List[int]]:
        return self(x).to_json()


@lru_cache(maxsize=None)
def gf_make(p: int, k: int = 1) -> FiniteField:
    """
    유한체 생성

    Args:
        p: 표수 (2, 3, 5, 7)
        k: 확대 차수

    Returns:
        q = p^k 개의 원소를 갖는 체
    """
    field_ = FiniteField(p, k)
    logger.debug(f"Constructed {field_.name} with modulus {field_.modulus}")
    return field_


def field_of_order(q: int) -> FiniteField:
    """위수 q 의 유한체"""
    for p in SUPPORTED_PRIMES:
        k, rest = 0, q
        while rest % p == 0:
            rest //= p
            k += 1
        if rest == 1 and k >= 1:
            return gf_make(p, k)
    raise ValueError(f"{q} is not a supported prime power")


def is_supported_field_order(q: int) -> bool:
    try:
        field_of_order(q)
        return True
    except ValueError:
        return False


def check_field_axioms(F: FiniteField) -> Dict[str, bool]:
    """덧셈/곱셈 표에 대해 체 공리를 전수 검사"""
    A, M = F.add_table, F.mul_table
    a, b, c = np.meshgrid(np.arange(F.q), np.arange(F.q), np.arange(F.q), indexing="ij")
    frob = np.array([F.frobenius(x).value for x in F.elements()])
    return {
        "add_associative": bool((A[A[a, b], c] == A[a, A[b, c]]).all()),
        "mul_associative": bool((M[M[a, b], c] == M[a, M[b, c]]).all()),
        "distributive": bool((M[a, A[b, c]] == A[M[a, b], M[a, c]]).all()),
        "commutative": bool((A == A.T).all() and (M == M.T).all()),
        "inverses": bool((M[np.arange(1, F.q), F.inv_table[1:]] == 1).all()),
        "frobenius_additive": bool((frob[A] == A[frob[:, None], frob[None, :]]).all()),
    }


# ---------------------------------------------------------------------------
# 정수환과 Z/m
# ---------------------------------------------------------------------------

class IntegerRing(Ring):
    """정수환 Z (원소는 파이썬 int)"""

    name = "Z"

    def __call__(self, value) -> int:
        return int(value)

    def is_unit(self, x: int) -> bool:
        return x in (1, -1)

    def inverse(self, x: int) -> int:
        if not self.is_unit(x):
            raise ValueError(f"{x} is not a unit in Z")
        return x


ZZ = IntegerRing()


class ModInt:
    """Z/m 의 원소"""

    __slots__ = ("ring", "value")

    def __init__(self, ring: "IntegersMod", value: int):
        self.ring = ring
        self.value = value % ring.m

    def _coerce(self, other) -> Optional[int]:
        if isinstance(other, ModInt):
            if other.ring.m != self.ring.m:
                raise ValueError(f"mixed moduli {self.ring.m} and {other.ring.m}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other)
        return None

    def __add__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is None else ModInt(self.ring, self.value + v)

    __radd__ = __add__

    def __neg__(self):
        return ModInt(self.ring, -self.value)

    def __sub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is None else ModInt(self.ring, self.value - v)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is None else ModInt(self.ring, self.value * v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is None else self * self.ring.inverse(ModInt(self.ring, v))

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.ring.inverse(self) ** (-exponent)
        return ModInt(self.ring, pow(self.value, exponent, self.ring.m))

    def __eq__(self, other) -> bool:
        if isinstance(other, ModInt):
            return self.ring.m == other.ring.m and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == int(other) % self.ring.m
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Zmod", self.ring.m, self.value))

    def __lt__(self, other: "ModInt") -> bool:
        return self.value < other.value

    def __bool__(self) -> bool:
        return self.value != 0

    def to_json(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return str(self.value)


class IntegersMod(Ring):
    """정수 잉여환 Z/m"""

    is_finite = True

    def __init__(self, m: int):
        if m < 2:
            raise ValueError(f"modulus must be at least 2, got {m}")
        self.m = m
        self.name = f"Z/{m}"
        self.is_field = _is_prime(m)
        self._elements = [ModInt(self, v) for v in range(m)]

    def __call__(self, value) -> ModInt:
        if isinstance(value, ModInt):
            return ModInt(self, value.value)
        return self._elements[int(value) % self.m]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntegersMod) and self.m == other.m

    def __hash__(self) -> int:
        return hash(("Zmod", self.m))

    def elements(self) -> List[ModInt]:
        return list(self._elements)

    def units(self) -> List[ModInt]:
        return [x for x in self._elements if math.gcd(x.value, self.m) == 1]

    def is_unit(self, x: ModInt) -> bool:
        return math.gcd(self(x).value, self.m) == 1

    def inverse(self, x: ModInt) -> ModInt:
        x = self(x)
        if not self.is_unit(x):
            raise ValueError(f"{x.value} is not a unit mod {self.m}")
        return ModInt(self, pow(x.value, -1, self.m))

    @cached_property
    def unit_generator(self) -> Optional[ModInt]:
        """단원군이 순환군이면 생성원, 아니면 None"""
        units = self.units()
        for u in units:
            power, order = u, 1
            while power.value != 1:
                power = power * u
                order += 1
            if order == len(units):
                return u
        return None

    def to_json(self, x: ModInt) -> int:
        return self(x).value


# ---------------------------------------------------------------------------
# 점 있는 유한 아벨군
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PointedAbelianGroup:
    """순환군들의 곱 D = Z/m_1 x ... x Z/m_k 와 2ε = 0 인 지정 원소 ε"""
    orders: Tuple[int, ...]
    eps: Tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(m) for m in self.orders)
        if not orders or any(m < 1 for m in orders):
            raise ValueError(f"cyclic factor orders must be positive, got {self.orders}")
        eps = tuple(int(e) for e in self.eps)
        if len(eps) != len(orders):
            raise ValueError(f"eps {self.eps} does not match factors {orders}")
        eps = tuple(e % m for e, m in zip(eps, orders))
        object.__setattr__(self, "orders", orders)
        object.__setattr__(self, "eps", eps)
        if any((2 * e) % m for e, m in zip(eps, orders)):
            raise ValueError(f"eps={eps} has order greater than 2 in {self._factor_name()}")

    def _factor_name(self) -> str:
        return "x".join(f"Z/{m}" for m in self.orders)

    @property
    def name(self) -> str:
        base = self._factor_name()
        if not self.is_pointed:
            return base
        if len(self.orders) == 1:
            return f"{base}:eps={self.eps[0]}"
        return f"{base}:eps=({','.join(str(e) for e in self.eps)})"

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.orders)

    @property
    def is_pointed(self) -> bool:
        return any(self.eps)

    @property
    def zero(self) -> GroupElement:
        return tuple(0 for _ in self.orders)

    @cached_property
    def _elements(self) -> Tuple[GroupElement, ...]:
        return tuple(itertools.product(*(range(m) for m in self.orders)))

    def elements(self) -> List[GroupElement]:
        """사전식 순서의 모든 원소"""
        return list(self._elements)

    def generators(self) -> List[GroupElement]:
        return [tuple(1 if j == i else 0 for j in range(len(self.orders))) for i in range(len(self.orders))]

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.orders))

    def neg(self, a: GroupElement) -> GroupElement:
        return tuple((-x) % m for x, m in zip(a, self.orders))

    def sub(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return tuple((x - y) % m for x, y, m in zip(a, b, self.orders))

    def scale(self, a: GroupElement, n: int) -> GroupElement:
        return tuple((int(n) * x) % m for x, m in zip(a, self.orders))

    def element_order(self, a: GroupElement) -> int:
        return math.lcm(*(m // math.gcd(x, m) for x, m in zip(a, self.orders)))

    def __repr__(self) -> str:
        return f"PointedAbelianGroup({self.name})"


def group_make(orders: Sequence[int], eps: Union[int, Sequence[int], None] = None) -> PointedAbelianGroup:
    """
    점 있는 아벨군 생성

    Args:
        orders: 순환 인자들의 위수
        eps: 지정 원소 (정수 하나 또는 튜플, 기본값 0)

    Returns:
        검증된 PointedAbelianGroup
    """
    orders = tuple(orders)
    if eps is None:
        eps = tuple(0 for _ in orders)
    elif isinstance(eps, int):
        eps = (eps,) + tuple(0 for _ in orders[1:])
    return PointedAbelianGroup(orders, tuple(eps))


_GROUP_RE = re.compile(r"^\s*(?P<factors>Z/\d+(?:\s*x\s*Z/\d+)*)\s*(?::\s*eps\s*=\s*(?P<eps>\(?[\d,\s]+\)?))?\s*$")


def group_from_spec(spec: str) -> PointedAbelianGroup:
    """'Z/2xZ/4:eps=(0,2)' 형식의 문자열 해석"""
    match = _GROUP_RE.match(spec)
    if not match:
        raise ValueError(f"invalid group spec '{spec}' (expected e.g. Z/2xZ/4:eps=(0,2))")
    orders = tuple(int(f.strip()[2:]) for f in match.group("factors").split("x"))
    eps_text = match.group("eps")
    if eps_text is None:
        return group_make(orders)
    values = tuple(int(v) for v in eps_text.strip("() ").split(",") if v.strip())
    if len(values) != len(orders):
        raise ValueError(f"eps '{eps_text}' needs one entry per factor of {match.group('factors')}")
    return group_make(orders, values)


def cyclic_test_group(n: int, pointed: bool = True) -> PointedAbelianGroup:
    """F_{1^n} 용 D = Z/n (n 짝수이고 pointed 이면 ε = n/2)"""
    if pointed and n % 2 == 0:
        return group_make([n], n // 2)
    return group_make([n])


@dataclass(frozen=True)
class GroupHom:
    """생성원의 상으로 정해지는 준동형 D0 -> D"""
    source: PointedAbelianGroup
    target: PointedAbelianGroup
    images: Tuple[GroupElement, ...]

    def __post_init__(self):
        if len(self.images) != len(self.source.orders):
            raise ValueError("one image per cyclic factor is required")
        for img, m in zip(self.images, self.source.orders):
            if self.target.scale(img, m) != self.target.zero:
                raise ValueError(f"image {img} does not have order dividing {m}")

    def __call__(self, g: GroupElement) -> GroupElement:
        result = self.target.zero
        for x, img in zip(g, self.images):
            result = self.target.add(result, self.target.scale(img, x))
        return result

    @property
    def is_pointed(self) -> bool:
        return self(self.source.eps) == self.target.eps

    def compose(self, other: "GroupHom") -> "GroupHom":
        """self ∘ other"""
        return GroupHom(other.source, self.target, tuple(self(img) for img in other.images))

    @classmethod
    def identity(cls, D: PointedAbelianGroup) -> "GroupHom":
        return cls(D, D, tuple(D.generators()))


def hom_set(D0: PointedAbelianGroup, D: PointedAbelianGroup) -> List[GroupHom]:
    """
    준동형 집합 Hom(D0, D)

    두 군 모두 ε 가 자명하지 않으면 ε 를 ε 로 보내는 것만 남긴다.
    """
    candidates = [[g for g in D.elements() if D.scale(g, m) == D.zero] for m in D0.orders]
    pointed = D0.is_pointed and D.is_pointed
    homs = []
    for images in itertools.product(*candidates):
        hom = GroupHom(D0, D, tuple(images))
        if pointed and not hom.is_pointed:
            continue
        homs.append(hom)
    return homs


# ---------------------------------------------------------------------------
# 원분 정수환과 지표
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> Tuple[int, ...]:
    """원분다항식 Φ_m 의 계수 (낮은 차수부터)"""
    numerator = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            numerator = _exact_division(numerator, cyclotomic_polynomial(d))
    return tuple(numerator)


def _exact_division(numerator: List[int], divisor: Sequence[int]) -> List[int]:
    k = len(divisor) - 1
    rest = list(numerator)
    quotient = [0] * (len(rest) - k)
    for d in range(len(rest) - 1, k - 1, -1):
        c = rest[d]
        if c:
            quotient[d - k] = c
            for i in range(k + 1):
                rest[d - k + i] -= c * divisor[i]
    if any(rest[:k]):
        raise ValueError("polynomial division is not exact")
    return quotient


class CyclotomicInteger:
    """Z[ζ_M] 의 원소 (Φ_M 으로 축약한 계수 벡터)"""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: "CyclotomicRing", coeffs: Sequence[int]):
        self.ring = ring
        self.coeffs = tuple(_reduce_monic(list(coeffs), ring.modulus))

    def _coerce(self, other) -> Optional["CyclotomicInteger"]:
        if isinstance(other, CyclotomicInteger):
            if other.ring.m != self.ring.m:
                raise ValueError(f"mixed cyclotomic rings Z[z{self.ring.m}] and Z[z{other.ring.m}]")
            return other
        if isinstance(other, (int, np.integer)):
            return self.ring(int(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicInteger(self.ring, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger(self.ring, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        product = np.convolve(np.array(self.coeffs, dtype=object), np.array(o.coeffs, dtype=object))
        return CyclotomicInteger(self.ring, product.tolist())

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, (CyclotomicInteger, int, np.integer)):
            return NotImplemented
        return self.coeffs == self._coerce(other).coeffs

    def __hash__(self) -> int:
        return hash(("cyclotomic", self.ring.m, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def to_json(self) -> List[int]:
        return list(self.coeffs)

    def __repr__(self) -> str:
        terms = [f"{c}*z^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


class CyclotomicRing(Ring):
    """원분 정수환 Z[ζ_M] = Z[x]/(Φ_M)"""

    def __init__(self, m: int):
        if m < 1:
            raise ValueError(f"cyclotomic order must be positive, got {m}")
        self.m = m
        self.modulus = cyclotomic_polynomial(m)
        self.degree = len(self.modulus) - 1
        self.name = f"Z[z{m}]"

    def __call__(self, value) -> CyclotomicInteger:
        if isinstance(value, CyclotomicInteger):
            return value
        return CyclotomicInteger(self, [int(value)])

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclotomicRing) and self.m == other.m

    def __hash__(self) -> int:
        return hash(("cyclotomic", self.m))

    def root_of_unity(self, angle: Fraction) -> CyclotomicInteger:
        """exp(2πi·angle) 에 해당하는 원소"""
        exponent = Fraction(angle) * self.m
        if exponent.denominator != 1:
            raise ValueError(f"angle {angle} is not an {self.m}-th root of unity")
        coeffs = [0] * (int(exponent) % self.m) + [1]
        return CyclotomicInteger(self, coeffs)

    def _unit_root(self, x: CyclotomicInteger) -> Optional[Tuple[int, int]]:
        for e in range(self.m):
            root = self.root_of_unity(Fraction(e, self.m))
            if x == root:
                return 1, e
            if x == -root:
                return -1, e
        return None

    def is_unit(self, x: CyclotomicInteger) -> bool:
        """±ζ^e 꼴의 단원만 인식"""
        return self._unit_root(self(x)) is not None

    def inverse(self, x: CyclotomicInteger) -> CyclotomicInteger:
        found = self._unit_root(self(x))
        if found is None:
            raise ValueError(f"{x} is not a recognised unit of {self.name}")
        sign, e = found
        return self.root_of_unity(Fraction(-e, self.m)) * sign

    def to_json(self, x: CyclotomicInteger) -> List[int]:
        return self(x).to_json()


@dataclass(frozen=True)
class Character:
    """D 의 지표 (각 순환 인자 생성원의 각도 a_i/m_i ∈ Q/Z)"""
    group: PointedAbelianGroup
    angles: Tuple[Fraction, ...]

    def __call__(self, g: GroupElement) -> Fraction:
        value = sum((a * x for a, x in zip(self.angles, g)), Fraction(0))
        return value - math.floor(value)

    def value(self, g: GroupElement) -> CyclotomicInteger:
        return CyclotomicRing(self.group.exponent).root_of_unity(self(g))

    def pullback(self, f: GroupHom) -> "Character":
        """χ ∘ f"""
        if f.target != self.group:
            raise ValueError("character and homomorphism targets differ")
        return Character(f.source, tuple(self(img) for img in f.images))

    def is_injective(self) -> bool:
        return len({self(g) for g in self.group.elements()}) == self.group.order

    def to_json(self) -> List[str]:
        return [str(a) for a in self.angles]


def characters(D: PointedAbelianGroup) -> List[Character]:
    """
    지표 목록

    ε 가 자명하지 않으면 χ(ε) = -1 (각도 1/2) 인 것만, 아니면 |D| 개 전부
    """
    result = []
    for numerators in itertools.product(*(range(m) for m in D.orders)):
        chi = Character(D, tuple(Fraction(a, m) for a, m in zip(numerators, D.orders)))
        if D.is_pointed and chi(D.eps) != Fraction(1, 2):
            continue
        result.append(chi)
    return result


def separates_points(D: PointedAbelianGroup, chars: Sequence[Character]) -> bool:
    signatures = {tuple(chi(g) for chi in chars) for g in D.elements()}
    return len(signatures) == D.order


# ---------------------------------------------------------------------------
# 군환
# ---------------------------------------------------------------------------

class GroupRingElement:
    """Z[D] 또는 Z[D,ε] 의 원소 (정규 대표원 위의 유한 지지 정수 함수)"""

    __slots__ = ("ring", "support")

    def __init__(self, ring: "GroupRing", terms: Dict[GroupElement, int]):
        self.ring = ring
        canonical: Dict[GroupElement, int] = {}
        for g, c in terms.items():
            rep, sign = ring.canonical(g)
            canonical[rep] = canonical.get(rep, 0) + sign * c
        self.support = tuple(sorted((g, c) for g, c in canonical.items() if c))

    def _coerce(self, other) -> Optional["GroupRingElement"]:
        if isinstance(other, GroupRingElement):
            if other.ring != self.ring:
                raise ValueError(f"mixed group rings {self.ring.name} and {other.ring.name}")
            return other
        if isinstance(other, (int, np.integer)):
            return self.ring(int(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.support)
        for g, c in o.support:
            terms[g] = terms.get(g, 0) + c
        return GroupRingElement(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement(self.ring, {g: -c for g, c in self.support})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        D = self.ring.group
        terms: Dict[GroupElement, int] = {}
        for g1, c1 in self.support:
            for g2, c2 in o.support:
                rep, sign = self.ring.canonical(D.add(g1, g2))
                terms[rep] = terms.get(rep, 0) + sign * c1 * c2
        return GroupRingElement(self.ring, terms)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (GroupRingElement, int, np.integer)):
            o = self._coerce(other)
            return self.support == o.support
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring.name, self.support))

    def __bool__(self) -> bool:
        return bool(self.support)

    def to_json(self) -> Dict[str, list]:
        return {"support": [[list(g), c] for g, c in self.support]}

    def __repr__(self) -> str:
        if not self.support:
            return "0"
        return " + ".join(f"{c}*[{','.join(map(str, g))}]" for g, c in self.support)


class GroupRing(Ring):
    """군환 Z[D] (reduced=True 이면 Z[D,ε] = Z[D]/(1+ε))"""

    def __init__(self, group: PointedAbelianGroup, reduced: bool = True):
        if reduced and not group.is_pointed:
            reduced = False
        self.group = group
        self.reduced = reduced
        self.name = f"Z[{group.name}{',eps' if reduced else ''}]"

    def canonical(self, g: GroupElement) -> Tuple[GroupElement, int]:
        """ε-궤도 {g, g+ε} 의 사전식 최소 대표원과 부호"""
        if not self.reduced:
            return g, 1
        h = self.group.add(g, self.group.eps)
        return (g, 1) if g <= h else (h, -1)

    def __call__(self, value) -> GroupRingElement:
        if isinstance(value, GroupRingElement):
            return value
        return GroupRingElement(self, {self.group.zero: int(value)})

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupRing) and (self.group, self.reduced) == (other.group, other.reduced)

    def __hash__(self) -> int:
        return hash(("group_ring", self.group, self.reduced))

    def embed(self, g: GroupElement) -> GroupRingElement:
        """자연 사상 D -> Z[D,ε]"""
        return GroupRingElement(self, {g: 1})

    def basis(self) -> List[GroupElement]:
        return sorted({self.canonical(g)[0] for g in self.group.elements()})

    @property
    def rank(self) -> int:
        return len(self.basis())

    def _monomial(self, x: GroupRingElement) -> Optional[Tuple[GroupElement, int]]:
        x = self(x)
        if len(x.support) == 1 and x.support[0][1] in (1, -1):
            return x.support[0]
        return None

    def is_unit(self, x: GroupRingElement) -> bool:
        """±g 꼴의 단원만 인식"""
        return self._monomial(x) is not None

    def inverse(self, x: GroupRingElement) -> GroupRingElement:
        found = self._monomial(x)
        if found is None:
            raise ValueError(f"{x} is not a recognised unit of {self.name}")
        g, c = found
        return GroupRingElement(self, {self.group.neg(g): c})

    def specialize(self, x: GroupRingElement, chi: Character) -> CyclotomicInteger:
        """지표 χ 로 원소를 평가 (Z[ζ_M], M = D 의 지수)"""
        target = CyclotomicRing(self.group.exponent)
        total = target.zero
        for g, c in self(x).support:
            total = total + target.root_of_unity(chi(g)) * c
        return total

    def to_json(self, x: GroupRingElement) -> Dict[str, list]:
        return self(x).to_json()


def reduced_group_ring(D: PointedAbelianGroup) -> GroupRing:
    """축약 군환 Z[D,ε] (ε = 0 이면 Z[D])"""
    return GroupRing(D, reduced=D.is_pointed)


def group_ring(D: PointedAbelianGroup) -> GroupRing:
    return GroupRing(D, reduced=False)


# ---------------------------------------------------------------------------
# 영원소를 갖는 모노이드
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UnitGroupData:
    """모노이드 단원군의 점 있는 아벨군 모델과 상호 변환"""
    group: PointedAbelianGroup
    to_monoid: Callable[[GroupElement], Any] = field(compare=False)
    from_monoid: Callable[[Any], GroupElement] = field(compare=False)


class MonoidWithZero:
    """0 과 1, 지정 원소 ε 를 갖는 가환 모노이드"""

    name: str = "monoid"
    is_finite: bool = True

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    @property
    def eps(self):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def is_zero(self, x) -> bool:
        return x == self.zero

    def elements(self) -> List[Any]:
        raise NotImplementedError

    def unit_group(self) -> UnitGroupData:
        raise NotImplementedError

    def __repr__(self) -> str:
        return self.name


class RingMonoid(MonoidWithZero):
    """환 A 의 곱셈 모노이드 β*(A) = (A, -1)"""

    def __init__(self, ring: Ring):
        self.ring = ring
        self.name = f"({ring.name}, *)"
        self.is_finite = ring.is_finite

    @property
    def zero(self):
        return self.ring.zero

    @property
    def one(self):
        return self.ring.one

    @property
    def eps(self):
        return -self.ring.one

    def mul(self, x, y):
        return x * y

    def elements(self) -> List[Any]:
        if not self.is_finite:
            raise ValueError(f"monoid of {self.ring.name} is infinite")
        return self.ring.elements()

    @cached_property
    def _unit_group(self) -> UnitGroupData:
        if isinstance(self.ring, FiniteField):
            generator = self.ring.primitive_element
            order = self.ring.q - 1
        elif isinstance(self.ring, IntegersMod):
            generator = self.ring.unit_generator
            if generator is None:
                raise ValueError(f"unit group of {self.ring.name} is not cyclic")
            order = len(self.ring.units())
        else:
            raise ValueError(f"unit group of {self.ring.name} is not available")

        powers = [self.ring.one]
        for _ in range(order - 1):
            powers.append(powers[-1] * generator)
        logs = {p: e for e, p in enumerate(powers)}
        minus_one = logs[-self.ring.one]
        D = group_make([order], minus_one)

        def from_monoid(x) -> GroupElement:
            x = self.ring(x)
            if x not in logs:
                raise ValueError(f"{x} is not a unit of {self.ring.name}")
            return (logs[x],)

        return UnitGroupData(D, lambda g: powers[g[0]], from_monoid)

    def unit_group(self) -> UnitGroupData:
        return self._unit_group


class AdjoinedZeroMonoid(MonoidWithZero):
    """D ∪ {0} (영원소는 None)"""

    def __init__(self, group: PointedAbelianGroup):
        self.group = group
        self.name = f"{group.name}+0"

    @property
    def zero(self):
        return None

    @property
    def one(self) -> GroupElement:
        return self.group.zero

    @property
    def eps(self) -> GroupElement:
        return self.group.eps

    def mul(self, x, y):
        if x is None or y is None:
            return None
        return self.group.add(x, y)

    def is_zero(self, x) -> bool:
        return x is None

    def elements(self) -> List[Any]:
        return [None] + self.group.elements()

    def unit_group(self) -> UnitGroupData:
        return UnitGroupData(self.group, lambda g: g, lambda x: x)


def adjoin_zero(D: PointedAbelianGroup) -> AdjoinedZeroMonoid:
    return AdjoinedZeroMonoid(D)


def monoid_of_ring(A: Ring) -> RingMonoid:
    return RingMonoid(A)


def monoid_from_spec(spec: str) -> MonoidWithZero:
    """'F3', 'Zmod4', 'Z/2:eps=1+0' 형식의 문자열 해석"""
    text = spec.strip()
    if text.endswith("+0"):
        return adjoin_zero(group_from_spec(text[:-2]))
    if re.fullmatch(r"F\d+", text):
        return monoid_of_ring(field_of_order(int(text[1:])))
    if re.fullmatch(r"Zmod\d+", text):
        return monoid_of_ring(IntegersMod(int(text[4:])))
    raise ValueError(f"invalid monoid spec '{spec}' (expected F<q>, Zmod<m> or <group>+0)")


def adjunction_check(D: PointedAbelianGroup, A: Ring, limit: int = 10 ** 5) -> Dict[str, Any]:
    """
    Hom(Z[D,ε], A) 와 Hom((D,ε), β*(A)) 를 각각 열거해 제한 사상이 전단사인지 확인

    Args:
        D: 점 있는 유한 아벨군
        A: 유한 환
        limit: 환 준동형 후보 수의 상한

    Returns:
        양쪽 개수와 전단사 여부
    """
    R = reduced_group_ring(D)
    basis = R.basis()
    values = A.elements()
    candidates = len(values) ** len(basis)
    if candidates > limit:
        raise BudgetExceededError("adjunction candidates", candidates, limit)

    basis_products = {(b1, b2): R.embed(b1) * R.embed(b2) for b1 in basis for b2 in basis}

    ring_homs = []
    for images in itertools.product(values, repeat=len(basis)):
        image_of = dict(zip(basis, images))

        def apply(x: GroupRingElement):
            total = A.zero
            for g, c in x.support:
                total = total + image_of[g] * c
            return total

        if apply(R.one) != A.one:
            continue
        if all(apply(basis_products[(b1, b2)]) == image_of[b1] * image_of[b2]
               for b1 in basis for b2 in basis):
            ring_homs.append(tuple(apply(R.embed(g)) for g in D.generators()))

    units = [x for x in values if A.is_unit(x)]
    minus_one = -A.one
    monoid_homs = []
    for images in itertools.product(units, repeat=len(D.orders)):
        if any(u ** m != A.one for u, m in zip(images, D.orders)):
            continue
        if R.reduced:
            eps_image = A.one
            for u, e in zip(images, D.eps):
                eps_image = eps_image * u ** e
            if eps_image != minus_one:
                continue
        monoid_homs.append(tuple(images))

    bijective = len(set(ring_homs)) == len(ring_homs) and set(ring_homs) == set(monoid_homs)
    logger.debug(f"Adjunction {D.name} -> {A.name}: {len(ring_homs)} ring homs, {len(monoid_homs)} monoid homs")
    return {
        "ring_homs": len(ring_homs),
        "monoid_homs": len(monoid_homs),
        "bijective": bijective,
    }
