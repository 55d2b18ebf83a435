#!/usr/bin/env python3
"""
계수 다항식 모듈
정수 계수 일변수 다항식 (셈 다항식, 푸앵카레 다항식, 차수별 센서스)
"""

import logging
from typing import Iterable, List, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)


def _trim(coeffs: Sequence[int]) -> Tuple[int, ...]:
    values = [int(c) for c in coeffs]
    while len(values) > 1 and values[-1] == 0:
        values.pop()
    return tuple(values) if values else (0,)


class CountingPolynomial:
    """정수 계수 다항식 (계수는 낮은 차수부터)"""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        self.coeffs = _trim(list(coeffs))

    @classmethod
    def constant(cls, value: int) -> "CountingPolynomial":
        return cls([value])

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "CountingPolynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def linear(cls, constant: int, slope: int) -> "CountingPolynomial":
        return cls([constant, slope])

    @property
    def degree(self) -> int:
        if self.coeffs == (0,):
            return -1
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __add__(self, other: "CountingPolynomial") -> "CountingPolynomial":
        other = _as_poly(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return CountingPolynomial(self.coefficient(i) + other.coefficient(i) for i in range(size))

    __radd__ = __add__

    def __neg__(self) -> "CountingPolynomial":
        return CountingPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "CountingPolynomial") -> "CountingPolynomial":
        return self + (-_as_poly(other))

    def __mul__(self, other: "CountingPolynomial") -> "CountingPolynomial":
        other = _as_poly(other)
        # object dtype keeps Python integers exact
        product = np.convolve(np.array(self.coeffs, dtype=object), np.array(other.coeffs, dtype=object))
        return CountingPolynomial(product.tolist())

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "CountingPolynomial":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = CountingPolynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def compose_shift(self, shift: int) -> "CountingPolynomial":
        """p(x) 를 p(y + shift) 로 전개"""
        result = CountingPolynomial.constant(0)
        step = CountingPolynomial.linear(shift, 1)
        for c in reversed(self.coeffs):
            result = result * step + CountingPolynomial.constant(c)
        return result

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, CountingPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == (other,)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def to_string(self, variable: str = "q") -> str:
        terms: List[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*{variable}" if c != 1 else variable)
            else:
                terms.append(f"{c}*{variable}^{k}" if c != 1 else f"{variable}^{k}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def to_json(self) -> List[int]:
        return list(self.coeffs)

    def __repr__(self) -> str:
        return f"CountingPolynomial({self.to_string()})"


def _as_poly(value) -> CountingPolynomial:
    if isinstance(value, CountingPolynomial):
        return value
    if isinstance(value, int):
        return CountingPolynomial.constant(value)
    raise TypeError(f"cannot combine CountingPolynomial with {type(value).__name__}")
