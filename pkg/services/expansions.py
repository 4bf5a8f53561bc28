"""
Multiple-angle expansions of cos(nt) and sin(nt) as polynomials in cos t / sin t,
and power-reduction formulas for cos^n(t) and sin^n(t) as trigonometric polynomials.

Each generator has independent oracles: the Chebyshev recurrence and the
de Moivre expansion for the multiple-angle side, repeated product-to-sum
multiplication for the power-reduction side.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Tuple

from services.coefficient_cache import coefficient_cache
from services.errors import require
from services.kernels import SummationMode, binomial, kernel_alpha, lemma2_sum
from services.trigpoly import Base, PowerExpansion, TrigPolynomial, pe_to_trig, tp_mul

logger = logging.getLogger(__name__)


class ParityKind(str, Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class Parity:
    """n decoded as 2k (EVEN) or 2k + 1 (ODD)"""
    kind: ParityKind
    k: int

    @classmethod
    def of(cls, n: int) -> "Parity":
        require(n >= 0, "Parity.of: n must be >= 0, got %s", n)
        return cls(ParityKind.ODD if n % 2 else ParityKind.EVEN, n // 2)

    @property
    def n(self) -> int:
        return 2 * self.k + (1 if self.kind is ParityKind.ODD else 0)


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


# --- Multiple-angle expansions ---

def cos_multiple_angle(n: int) -> PowerExpansion:
    """cos(nt) = sum_s (-1)^s alpha_{n,s} cos^(n-2s)(t)"""
    require(n >= 1, "cos_multiple_angle: n must be >= 1, got %s", n)
    coeffs = {n - 2 * s: _sign(s) * kernel_alpha(n, s) for s in range(n // 2 + 1)}
    logger.debug("cos(%dt) expanded into %d powers", n, len(coeffs))
    return PowerExpansion(Base.COS, coeffs)


def sin_multiple_angle(n: int) -> PowerExpansion:
    """
    sin(nt) as a polynomial in u = sin t.

    Odd n = 2k+1:  sum_s (-4)^(k-s) (C(2k+1-s,s) + C(2k-s,s-1)) u^(2k+1-2s)
    Even n = 2k:   cos(t) * sum_{s=1}^{k} (-1)^(s-1) 2^(2s-1) C(k+s-1,2s-1) u^(2s-1)
    """
    require(n >= 1, "sin_multiple_angle: n must be >= 1, got %s", n)
    parity = Parity.of(n)
    k = parity.k
    if parity.kind is ParityKind.ODD:
        coeffs = {}
        for s in range(k + 1):
            second = binomial(2 * k - s, s - 1) if s >= 1 else 0
            coeffs[2 * k + 1 - 2 * s] = (-4) ** (k - s) * (binomial(2 * k + 1 - s, s) + second)
        return PowerExpansion(Base.SIN, coeffs)

    coeffs = {
        2 * s - 1: _sign(s - 1) * lemma2_sum(k, s, SummationMode.CLOSED_FORM)
        for s in range(1, k + 1)
    }
    return PowerExpansion(Base.SIN, coeffs, cos_cofactor=True)


def multiple_angle(base: Base, n: int) -> PowerExpansion:
    return cos_multiple_angle(n) if Base(base) is Base.COS else sin_multiple_angle(n)


def _chebyshev_step(current: Tuple[int, ...], previous: Tuple[int, ...]) -> Tuple[int, ...]:
    # T_{m+1} = 2x T_m - T_{m-1}, coefficients in ascending powers
    row = [0] * (len(current) + 1)
    for i, value in enumerate(current):
        row[i + 1] += 2 * value
    for i, value in enumerate(previous):
        row[i] -= value
    return tuple(row)


def chebyshev_oracle(n: int) -> PowerExpansion:
    """T_n via T_0 = 1, T_1 = x, T_{n+1} = 2x T_n - T_{n-1}"""
    require(n >= 0, "chebyshev_oracle: n must be >= 0, got %s", n)
    previous, current = (1,), (0, 1)
    if n == 0:
        current = previous
    for m in range(2, n + 1):
        previous, current = current, coefficient_cache.get_or_compute(
            ("chebyshev", m), lambda a=current, b=previous: _chebyshev_step(a, b)
        )
    return PowerExpansion(Base.COS, dict(enumerate(current)))


def moivre_cos_oracle(n: int) -> PowerExpansion:
    """cos(nt) = sum_j (-1)^j C(n,2j) x^(n-2j) (1-x^2)^j, expanded directly"""
    require(n >= 0, "moivre_cos_oracle: n must be >= 0, got %s", n)
    coeffs: Dict[int, int] = {}
    for j in range(n // 2 + 1):
        outer = _sign(j) * binomial(n, 2 * j)
        for ell in range(j + 1):
            exponent = n - 2 * j + 2 * ell
            coeffs[exponent] = coeffs.get(exponent, 0) + outer * _sign(ell) * binomial(j, ell)
    return PowerExpansion(Base.COS, coeffs)


def moivre_sin_oracle(n: int) -> PowerExpansion:
    """
    sin(nt) = sum_j (-1)^j C(n,2j+1) cos^(n-2j-1)(t) u^(2j+1), with the even power
    of cos t rewritten as (1-u^2)^m; a leftover odd power keeps one cos(t) factor.
    """
    require(n >= 1, "moivre_sin_oracle: n must be >= 1, got %s", n)
    coeffs: Dict[int, int] = {}
    for j in range((n - 1) // 2 + 1):
        outer = _sign(j) * binomial(n, 2 * j + 1)
        m = (n - 2 * j - 1) // 2
        for ell in range(m + 1):
            exponent = 2 * j + 1 + 2 * ell
            coeffs[exponent] = coeffs.get(exponent, 0) + outer * _sign(ell) * binomial(m, ell)
    return PowerExpansion(Base.SIN, coeffs, cos_cofactor=(n % 2 == 0))


# --- Power reduction ---

def cos_power_fourier(n: int) -> TrigPolynomial:
    """
    cos^(2k)(t)   = 2^(1-2k) sum_{j<k} C(2k,j) cos((2k-2j)t) + C(2k,k) / 2^(2k)
    cos^(2k+1)(t) = 2^(-2k) sum_{j<=k} C(2k+1,j) cos((2k+1-2j)t)
    """
    require(n >= 0, "cos_power_fourier: n must be >= 0, got %s", n)
    parity = Parity.of(n)
    k = parity.k
    if parity.kind is ParityKind.EVEN:
        cos_terms = {2 * k - 2 * j: Fraction(2 * binomial(2 * k, j), 4 ** k) for j in range(k)}
        return TrigPolynomial(Fraction(binomial(2 * k, k), 4 ** k), cos_terms)
    cos_terms = {2 * k + 1 - 2 * j: Fraction(binomial(2 * k + 1, j), 4 ** k) for j in range(k + 1)}
    return TrigPolynomial(Fraction(0), cos_terms)


def sin_power_fourier(n: int) -> TrigPolynomial:
    """
    sin^(2k)(t)   = 2^(1-2k) sum_{j<k} (-1)^(k-j) C(2k,j) cos((2k-2j)t) + C(2k,k) / 2^(2k)
    sin^(2k+1)(t) = 2^(-2k) sum_{j<=k} (-1)^(k-j) C(2k+1,j) sin((2k+1-2j)t)
    """
    require(n >= 0, "sin_power_fourier: n must be >= 0, got %s", n)
    parity = Parity.of(n)
    k = parity.k
    if parity.kind is ParityKind.EVEN:
        cos_terms = {
            2 * k - 2 * j: Fraction(_sign(k - j) * 2 * binomial(2 * k, j), 4 ** k) for j in range(k)
        }
        return TrigPolynomial(Fraction(binomial(2 * k, k), 4 ** k), cos_terms)
    sin_terms = {
        2 * k + 1 - 2 * j: Fraction(_sign(k - j) * binomial(2 * k + 1, j), 4 ** k) for j in range(k + 1)
    }
    return TrigPolynomial(Fraction(0), sin_terms=sin_terms)


def power_fourier(base: Base, n: int) -> TrigPolynomial:
    return cos_power_fourier(n) if Base(base) is Base.COS else sin_power_fourier(n)


def power_product_oracle(base: Base, n: int) -> TrigPolynomial:
    """base(t)^n by n-fold product-to-sum multiplication of the single harmonic"""
    base = Base(base)
    require(n >= 0, "power_product_oracle: n must be >= 0, got %s", n)
    factor = TrigPolynomial.cos(1) if base is Base.COS else TrigPolynomial.sin(1)
    result = TrigPolynomial(Fraction(1))
    for m in range(1, n + 1):
        result = coefficient_cache.get_or_compute(
            ("product", base.value, m), lambda acc=result: tp_mul(acc, factor)
        )
    return result


def even_power_betas(k: int) -> List[Fraction]:
    """beta_l = C(2k, k-l) / 2^(2k-1) for 0 <= l <= k, so cos^(2k) = beta_0/2 + sum beta_l cos(2lt)"""
    require(k >= 0, "even_power_betas: k must be >= 0, got %s", k)
    return [Fraction(2 * binomial(2 * k, k - ell), 4 ** k) for ell in range(k + 1)]


def single_harmonic(base: Base, n: int) -> TrigPolynomial:
    return TrigPolynomial.cos(n) if Base(base) is Base.COS else TrigPolynomial.sin(n)


def expansion_to_fourier(p: PowerExpansion) -> TrigPolynomial:
    """Rewrite a power expansion in the Fourier basis using the power-reduction formulas"""
    return pe_to_trig(p, power_fourier)


def has_power_of_two_denominators(p: TrigPolynomial) -> bool:
    values = [p.constant, *p.cos_terms.values(), *p.sin_terms.values()]
    return all(value.denominator & (value.denominator - 1) == 0 for value in values)
