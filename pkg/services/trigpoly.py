"""
Exact trigonometric polynomials and power-basis expansions.

Coefficients are fractions.Fraction values. A TrigPolynomial stores the value
of its constant term (a0/2 in Fourier notation) and sparse maps from harmonic
index n >= 1 to the coefficients of cos(nt) and sin(nt), never holding zeros.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Tuple, Union

import numpy as np

from services.errors import DomainError

logger = logging.getLogger(__name__)

Rational = Fraction
RationalLike = Union[Fraction, int, str]
RealInput = Union[float, np.ndarray]


class Base(str, Enum):
    COS = "cos"
    SIN = "sin"


def _normal_terms(terms: Mapping[int, RationalLike]) -> Mapping[int, Fraction]:
    normal: Dict[int, Fraction] = {}
    for index, value in terms.items():
        index = int(index)
        if index < 1:
            raise DomainError(f"harmonic index must be >= 1, got {index}")
        value = Fraction(value)
        if value:
            normal[index] = value
    return MappingProxyType(dict(sorted(normal.items())))


@dataclass(frozen=True)
class TrigPolynomial:
    """c + sum a_n cos(nt) + sum b_n sin(nt) with rational coefficients"""
    constant: Fraction = Fraction(0)
    # read-only views
    cos_terms: Mapping[int, Fraction] = field(default_factory=dict)
    sin_terms: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "constant", Fraction(self.constant))
        object.__setattr__(self, "cos_terms", _normal_terms(self.cos_terms))
        object.__setattr__(self, "sin_terms", _normal_terms(self.sin_terms))

    def __hash__(self):
        return hash((self.constant, tuple(self.cos_terms.items()), tuple(self.sin_terms.items())))

    @classmethod
    def cos(cls, n: int, coefficient: RationalLike = 1) -> "TrigPolynomial":
        """coefficient * cos(nt); n = 0 gives the constant"""
        if n == 0:
            return cls(constant=Fraction(coefficient))
        return cls(cos_terms={abs(n): Fraction(coefficient)})

    @classmethod
    def sin(cls, n: int, coefficient: RationalLike = 1) -> "TrigPolynomial":
        """coefficient * sin(nt); sin(-nt) folds to -sin(nt)"""
        if n == 0:
            return cls()
        sign = 1 if n > 0 else -1
        return cls(sin_terms={abs(n): sign * Fraction(coefficient)})

    @property
    def degree(self) -> int:
        """Highest harmonic present (0 for constants)"""
        return max([0, *self.cos_terms, *self.sin_terms])

    def is_zero(self) -> bool:
        return not self.constant and not self.cos_terms and not self.sin_terms

    def normalized(self) -> "TrigPolynomial":
        return TrigPolynomial(self.constant, self.cos_terms, self.sin_terms)

    def __add__(self, other: "TrigPolynomial") -> "TrigPolynomial":
        return tp_combine(self, other, 1, 1)

    def __sub__(self, other: "TrigPolynomial") -> "TrigPolynomial":
        return tp_combine(self, other, 1, -1)

    def __neg__(self) -> "TrigPolynomial":
        return tp_combine(self, self, -1, 0)

    def __mul__(self, other: Union["TrigPolynomial", RationalLike]) -> "TrigPolynomial":
        if isinstance(other, TrigPolynomial):
            return tp_mul(self, other)
        return tp_combine(self, self, Fraction(other), 0)

    __rmul__ = __mul__


def tp_combine(p: TrigPolynomial, q: TrigPolynomial, c: RationalLike, d: RationalLike) -> TrigPolynomial:
    """c*p + d*q in normal form"""
    c = Fraction(c)
    d = Fraction(d)
    cos_terms: Dict[int, Fraction] = {}
    sin_terms: Dict[int, Fraction] = {}
    for weight, poly in ((c, p), (d, q)):
        if not weight:
            continue
        for index, value in poly.cos_terms.items():
            cos_terms[index] = cos_terms.get(index, Fraction(0)) + weight * value
        for index, value in poly.sin_terms.items():
            sin_terms[index] = sin_terms.get(index, Fraction(0)) + weight * value
    return TrigPolynomial(c * p.constant + d * q.constant, cos_terms, sin_terms)


def _terms(p: TrigPolynomial) -> Iterable[Tuple[Base, int, Fraction]]:
    # constant is cos(0t)
    if p.constant:
        yield Base.COS, 0, p.constant
    for index, value in p.cos_terms.items():
        yield Base.COS, index, value
    for index, value in p.sin_terms.items():
        yield Base.SIN, index, value


def tp_mul(p: TrigPolynomial, q: TrigPolynomial) -> TrigPolynomial:
    """
    Exact product through the product-to-sum identities

        cos A cos B = (cos(A-B) + cos(A+B)) / 2
        sin A sin B = (cos(A-B) - cos(A+B)) / 2
        sin A cos B = (sin(A-B) + sin(A+B)) / 2

    with negative harmonics folded back (cos(-nt) = cos(nt), sin(-nt) = -sin(nt)).
    """
    cos_acc: Dict[int, Fraction] = {}
    sin_acc: Dict[int, Fraction] = {}

    def add_cos(index: int, value: Fraction):
        index = abs(index)
        cos_acc[index] = cos_acc.get(index, Fraction(0)) + value

    def add_sin(index: int, value: Fraction):
        if index == 0:
            return
        if index < 0:
            index, value = -index, -value
        sin_acc[index] = sin_acc.get(index, Fraction(0)) + value

    for base_a, a, x in _terms(p):
        for base_b, b, y in _terms(q):
            half = x * y / 2
            if base_a is Base.COS and base_b is Base.COS:
                add_cos(a - b, half)
                add_cos(a + b, half)
            elif base_a is Base.SIN and base_b is Base.SIN:
                add_cos(a - b, half)
                add_cos(a + b, -half)
            elif base_a is Base.SIN:
                add_sin(a - b, half)
                add_sin(a + b, half)
            else:
                add_sin(b - a, half)
                add_sin(a + b, half)

    constant = cos_acc.pop(0, Fraction(0))
    return TrigPolynomial(constant, cos_acc, sin_acc)


def tp_mean_square(p: TrigPolynomial) -> Fraction:
    """Mean of p(t)^2 over a period: constant^2 + (sum a_n^2 + sum b_n^2) / 2"""
    squares = sum(v * v for v in p.cos_terms.values()) + sum(v * v for v in p.sin_terms.values())
    return p.constant * p.constant + Fraction(squares) / 2


def tp_value_at_zero(p: TrigPolynomial) -> Fraction:
    """Exact value at t = 0, where every cosine is 1 and every sine 0"""
    return p.constant + sum(p.cos_terms.values(), Fraction(0))


def tp_eval(p: TrigPolynomial, t: RealInput) -> RealInput:
    """Double-precision value of p at t (scalar or numpy array)"""
    t_arr = np.asarray(t, dtype=float)
    total = np.full(t_arr.shape, float(p.constant))
    for index, value in p.cos_terms.items():
        total = total + float(value) * np.cos(index * t_arr)
    for index, value in p.sin_terms.items():
        total = total + float(value) * np.sin(index * t_arr)
    if total.ndim == 0:
        return float(total)
    return total


@dataclass(frozen=True)
class PowerExpansion:
    """sum coeffs[e] * base(t)^e, optionally times cos(t)"""
    base: Base
    coeffs: Mapping[int, Fraction] = field(default_factory=dict)
    cos_cofactor: bool = False

    def __post_init__(self):
        object.__setattr__(self, "base", Base(self.base))
        normal: Dict[int, Fraction] = {}
        for exponent, value in self.coeffs.items():
            exponent = int(exponent)
            if exponent < 0:
                raise DomainError(f"exponent must be >= 0, got {exponent}")
            value = Fraction(value)
            if value:
                normal[exponent] = value
        if self.cos_cofactor:
            if self.base is not Base.SIN:
                raise DomainError("a cos(t) cofactor is only allowed on a sine-power expansion")
            if any(exponent % 2 == 0 for exponent in normal):
                raise DomainError("a cos(t) cofactor expansion must hold odd exponents only")
        object.__setattr__(self, "coeffs", MappingProxyType(dict(sorted(normal.items()))))

    def __hash__(self):
        return hash((self.base, tuple(self.coeffs.items()), self.cos_cofactor))

    @property
    def degree(self) -> int:
        return max(self.coeffs, default=0)

    def negated(self) -> "PowerExpansion":
        return PowerExpansion(self.base, {e: -v for e, v in self.coeffs.items()}, self.cos_cofactor)


def _exact_polynomial_value(coeffs: Mapping[int, Fraction], x: float) -> float:
    """sum coeffs[e] * x^e accumulated exactly at the binary value of x, rounded once"""
    if not coeffs:
        return 0.0
    degree = max(coeffs)
    denominator = math.lcm(*(value.denominator for value in coeffs.values()))
    p, q = float(x).as_integer_ratio()
    acc = 0
    q_power = 1
    for exponent in range(degree, -1, -1):
        numerator = coeffs.get(exponent, Fraction(0)) * denominator
        acc = acc * p + int(numerator) * q_power
        q_power *= q
    # q_power ran one step past q^degree
    return acc / (denominator * (q_power // q))


def pe_eval(p: PowerExpansion, t: RealInput) -> RealInput:
    """
    Value of a power expansion at t (scalar or numpy array).

    The polynomial part is summed exactly at the double value of base(t); only
    the final division rounds. High-degree expansions alternate in sign with
    coefficients up to 2^(n-1), so plain double Horner would cancel badly.
    """
    trig = np.cos if p.base is Base.COS else np.sin
    t_arr = np.asarray(t, dtype=float)
    flat = t_arr.reshape(-1)
    values = np.empty(flat.shape)
    for i, point in enumerate(flat):
        value = _exact_polynomial_value(p.coeffs, float(trig(point)))
        if p.cos_cofactor:
            value *= float(np.cos(point))
        values[i] = value
    if t_arr.ndim == 0:
        return float(values[0])
    return values.reshape(t_arr.shape)


def pe_to_trig(p: PowerExpansion, power_fourier) -> TrigPolynomial:
    """
    Substitute a power-reduction table into a power expansion.

    Args:
        p: expansion in cos t or sin t
        power_fourier: callable (base, e) -> TrigPolynomial of base(t)^e

    Returns:
        TrigPolynomial: the same function in the Fourier basis
    """
    total = TrigPolynomial()
    for exponent, value in p.coeffs.items():
        total = tp_combine(total, power_fourier(p.base, exponent), 1, value)
    if p.cos_cofactor:
        total = tp_mul(total, TrigPolynomial.cos(1))
    return total
