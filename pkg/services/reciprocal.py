"""
Fourier series of f(t) = 1/(a - cos t) and g(t) = 1/(a - sin t) for |a| > 1.

With s = sqrt(1 - a^-2) and r = a (1 - s) = a - sign(a) sqrt(a^2 - 1), the cosine
coefficients of f are a_n = (2 / (a s)) r^n, a geometric sequence with |r| < 1.
g(t) = f(t - pi/2), so g carries (-1)^k a_2k on cos(2kt) and (-1)^k a_(2k+1)
on sin((2k+1)t).
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from services.errors import DomainError, require

logger = logging.getLogger(__name__)

# |a| must clear 1 by this margin
MIN_MARGIN = 1e-9


@dataclass(frozen=True)
class ReciprocalParams:
    """Validated parameter a with |a| > 1 and the derived s and r"""
    a: float
    s_val: float = field(init=False)
    ratio: float = field(init=False)

    def __post_init__(self):
        a = float(self.a)
        if not math.isfinite(a) or abs(a) <= 1.0 + MIN_MARGIN:
            raise DomainError(f"reciprocal series need a finite |a| > 1 + {MIN_MARGIN:g}, got a={self.a!r}")
        inv_sq = 1.0 / (a * a)
        s_val = math.sqrt(1.0 - inv_sq)
        # 1 - s computed without cancellation
        one_minus_s = inv_sq / (1.0 + s_val)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "s_val", s_val)
        object.__setattr__(self, "ratio", a * one_minus_s)

    @property
    def scale(self) -> float:
        """a_0 = 2 / (a s)"""
        return 2.0 / (self.a * self.s_val)


@dataclass
class RealTrigSeries:
    """Truncated real Fourier series; cos_terms[i] and sin_terms[i] belong to harmonic i + 1"""
    constant: float
    cos_terms: List[float] = field(default_factory=list)
    sin_terms: List[float] = field(default_factory=list)
    tail_bound: float = 0.0
    samples: Optional[int] = None

    @property
    def harmonics(self) -> int:
        return max(len(self.cos_terms), len(self.sin_terms))

    def cos_coeff(self, n: int) -> float:
        return self.cos_terms[n - 1] if n <= len(self.cos_terms) else 0.0

    def sin_coeff(self, n: int) -> float:
        return self.sin_terms[n - 1] if n <= len(self.sin_terms) else 0.0


def series_eval(series: RealTrigSeries, t):
    """Value of a truncated series at t (scalar or numpy array)"""
    t_arr = np.asarray(t, dtype=float)
    total = np.full(t_arr.shape, series.constant)
    for index, value in enumerate(series.cos_terms, start=1):
        if value:
            total = total + value * np.cos(index * t_arr)
    for index, value in enumerate(series.sin_terms, start=1):
        if value:
            total = total + value * np.sin(index * t_arr)
    if total.ndim == 0:
        return float(total)
    return total


def recip_cos_coeff(p: ReciprocalParams, n: int) -> float:
    """a_n = 2 a^(n-1) (1 - s)^n / s, evaluated as (2 / (a s)) r^n"""
    require(n >= 0, "recip_cos_coeff: n must be >= 0, got %s", n)
    return p.scale * p.ratio ** n


def recip_tail_bound(p: ReciprocalParams, N: int) -> float:
    """sum_{n > N} |a_n| = |a_(N+1)| / (1 - |r|)"""
    require(N >= 0, "recip_tail_bound: N must be >= 0, got %s", N)
    return abs(recip_cos_coeff(p, N + 1)) / (1.0 - abs(p.ratio))


def recip_cos_series(p: ReciprocalParams, N: int) -> RealTrigSeries:
    """1/(a - cos t) truncated after harmonic N"""
    require(N >= 0, "recip_cos_series: N must be >= 0, got %s", N)
    return RealTrigSeries(
        constant=recip_cos_coeff(p, 0) / 2.0,
        cos_terms=[recip_cos_coeff(p, n) for n in range(1, N + 1)],
        sin_terms=[],
        tail_bound=recip_tail_bound(p, N),
    )


def recip_sin_series(p: ReciprocalParams, N: int) -> RealTrigSeries:
    """1/(a - sin t) truncated after harmonic N"""
    require(N >= 0, "recip_sin_series: N must be >= 0, got %s", N)
    cos_terms = [0.0] * N
    sin_terms = [0.0] * N
    for n in range(1, N + 1):
        k, odd = divmod(n, 2)
        sign = -1.0 if k % 2 else 1.0
        if odd:
            sin_terms[n - 1] = sign * recip_cos_coeff(p, n)
        else:
            cos_terms[n - 1] = sign * recip_cos_coeff(p, n)
    return RealTrigSeries(
        constant=recip_cos_coeff(p, 0) / 2.0,
        cos_terms=cos_terms,
        sin_terms=sin_terms,
        tail_bound=recip_tail_bound(p, N),
    )


def recip_function(p: ReciprocalParams, target: str = "cos"):
    """The function the series represent, vectorized over numpy arrays"""
    if target not in ("cos", "sin"):
        raise DomainError(f"target must be 'cos' or 'sin', got {target!r}")
    trig = np.cos if target == "cos" else np.sin
    return lambda t: 1.0 / (p.a - trig(t))


def recip_series(p: ReciprocalParams, N: int, target: str = "cos") -> RealTrigSeries:
    if target == "cos":
        return recip_cos_series(p, N)
    if target == "sin":
        return recip_sin_series(p, N)
    raise DomainError(f"target must be 'cos' or 'sin', got {target!r}")


def recip_partial_sum_oracle(p: ReciprocalParams, n: int, K: int) -> float:
    """
    (2/a) sum_{k=0}^{K} (2a)^(-n-2k) C(n+2k, k), the power-series route to a_n.

    Terms are generated by their ratio
    C(n+2k+2, k+1) / C(n+2k, k) = (n+2k+2)(n+2k+1) / ((k+1)(n+k+1)),
    so no large binomials or powers are formed.
    """
    require(n >= 0 and K >= 0, "recip_partial_sum_oracle: need n, K >= 0, got n=%s, K=%s", n, K)
    x = 1.0 / (2.0 * p.a)
    x_sq = x * x
    term = x ** n
    terms = [term]
    for k in range(K):
        term *= x_sq * (n + 2 * k + 2) * (n + 2 * k + 1) / ((k + 1) * (n + k + 1))
        terms.append(term)
    return 2.0 / p.a * math.fsum(terms)


def recip_a0_series(p: ReciprocalParams, K: int) -> float:
    """(2/a) sum_{k<=K} C(2k,k) (2a)^(-2k); tends to 2/(a s)"""
    require(K >= 0, "recip_a0_series: K must be >= 0, got %s", K)
    q = 1.0 / (4.0 * p.a * p.a)
    term = 1.0
    terms = [term]
    for k in range(K):
        # C(2k+2, k+1) / C(2k, k) = 2(2k+1)/(k+1)
        term *= q * 2.0 * (2 * k + 1) / (k + 1)
        terms.append(term)
    return 2.0 / p.a * math.fsum(terms)


def lemas_residual(p: ReciprocalParams, n: int) -> float:
    """|(a_(n-1) - a a_n) a_0 - 2 a_n| / |a_n| for n >= 1"""
    require(n >= 1, "lemas_residual: n must be >= 1, got %s", n)
    a_n = recip_cos_coeff(p, n)
    residual = (recip_cos_coeff(p, n - 1) - p.a * a_n) * recip_cos_coeff(p, 0) - 2.0 * a_n
    return abs(residual) / abs(a_n)


def truncation_deviation(p: ReciprocalParams, series: RealTrigSeries, samples: int = 1000,
                         target: str = "cos") -> Tuple[float, float]:
    """
    Sup-norm deviation of a truncated series from its function over uniform samples,
    and the double-precision rounding floor that deviation may legitimately reach.
    """
    require(samples >= 1, "truncation_deviation: samples must be >= 1, got %s", samples)
    t = np.arange(samples) * (2.0 * np.pi / samples)
    exact = recip_function(p, target)(t)
    deviation = float(np.max(np.abs(series_eval(series, t) - exact)))
    magnitude = float(np.max(np.abs(exact))) + abs(series.constant)
    magnitude += math.fsum(abs(v) for v in series.cos_terms) + math.fsum(abs(v) for v in series.sin_terms)
    floor = 16.0 * np.finfo(float).eps * magnitude
    return deviation, floor


def printed_sqrt3_coeff(n: int) -> float:
    """Coefficients printed for a = sqrt(3): constant 1/(2 sqrt 3), then (-sqrt 3)^n / sqrt 3"""
    require(n >= 0, "printed_sqrt3_coeff: n must be >= 0, got %s", n)
    root3 = math.sqrt(3.0)
    if n == 0:
        return 1.0 / (2.0 * root3)
    return (-root3) ** n / root3


def printed_sqrt3_sin_coeffs(n: int) -> Tuple[float, float]:
    """(cos, sin) coefficients printed for 1/(sqrt 3 - sin t) at harmonic n (constant at n = 0)"""
    require(n >= 0, "printed_sqrt3_sin_coeffs: n must be >= 0, got %s", n)
    root3 = math.sqrt(3.0)
    if n == 0:
        return 1.0 / (2.0 * root3), 0.0
    k, odd = divmod(n, 2)
    if odd:
        return 0.0, -float((-3) ** k)
    return (-3) ** k / root3, 0.0
