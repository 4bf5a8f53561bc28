"""
Exact binomial kernels and the four combinatorial identities behind the
multiple-angle and power-reduction formulas.

Every closed form is paired with a brute-force oracle that evaluates the
defining sum literally. All values are Python ints, so nothing overflows.
"""

import logging
from enum import Enum
from functools import lru_cache
from math import comb
from typing import Tuple

from services.errors import DomainError, require

logger = logging.getLogger(__name__)


class KernelKind(str, Enum):
    """The three sums alpha, alpha' and alpha''"""
    ALPHA = "alpha"
    ALPHA_PRIME = "alpha-prime"
    ALPHA_DOUBLE_PRIME = "alpha-dprime"


class SummationMode(str, Enum):
    CLOSED_FORM = "closed"
    BRUTE_FORCE = "brute"


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0; zero when k < 0 or k > n"""
    if n < 0:
        raise DomainError(f"binomial: upper index must be >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def _lower(n: int, k: int) -> int:
    # C(n, k) where k < 0 short-circuits before the upper index is checked
    return 0 if k < 0 else binomial(n, k)


def _scale_pow2(value: int, exponent: int) -> int:
    """value * 2**exponent, exact; negative exponents must divide evenly"""
    if exponent >= 0:
        return value << exponent
    quotient, remainder = divmod(value, 1 << -exponent)
    if remainder:
        raise ArithmeticError(f"{value} is not divisible by 2^{-exponent}")
    return quotient


def kernel_alpha(n: int, s: int) -> int:
    """
    Closed form of alpha_{n,s} = sum_j C(n,2j) C(j,s).

    Args:
        n: row index, n >= 1
        s: column index, s >= 0

    Returns:
        int: 2^(n-2s-1) (C(n-s,s) + C(n-s-1,s-1)), zero for s > n//2
    """
    require(n >= 1, "kernel_alpha: n must be >= 1, got %s", n)
    require(s >= 0, "kernel_alpha: s must be >= 0, got %s", s)
    if s > n // 2:
        return 0
    total = binomial(n - s, s) + _lower(n - s - 1, s - 1)
    return _scale_pow2(total, n - 2 * s - 1)


def kernel_alpha_prime(n: int, s: int) -> int:
    """
    Closed form of alpha'_{n,s} = sum_j C(n,2j-1) C(j,s).

    Args:
        n: row index, n >= 1
        s: column index, s >= 0

    Returns:
        int: 2^(n-2s-1) (C(n+1-s,s) + 2C(n-s,s-1) + C(n-s-1,s-2)), zero for s > (n+1)//2
    """
    require(n >= 1, "kernel_alpha_prime: n must be >= 1, got %s", n)
    require(s >= 0, "kernel_alpha_prime: s must be >= 0, got %s", s)
    if s > (n + 1) // 2:
        return 0
    if n - s - 1 < 0:
        # only (n, s) == (1, 1); the closed form needs C(-1, -1) = 1 here
        third = 1
    else:
        third = _lower(n - s - 1, s - 2)
    total = binomial(n + 1 - s, s) + 2 * _lower(n - s, s - 1) + third
    return _scale_pow2(total, n - 2 * s - 1)


def kernel_alpha_dprime(n: int, s: int) -> int:
    """
    Closed form of alpha''_{n,s} = sum_j C(n,2j+1) C(j,s).

    Args:
        n: row index, n >= 1
        s: column index, s >= 0

    Returns:
        int: 2^(n-2s-1) C(n-s-1,s), zero for s > (n-1)//2
    """
    require(n >= 1, "kernel_alpha_dprime: n must be >= 1, got %s", n)
    require(s >= 0, "kernel_alpha_dprime: s must be >= 0, got %s", s)
    if s > (n - 1) // 2:
        return 0
    return _scale_pow2(binomial(n - s - 1, s), n - 2 * s - 1)


# Offset of the row index inside C(n, 2j + offset) for each kind
_ROW_OFFSET = {
    KernelKind.ALPHA: 0,
    KernelKind.ALPHA_PRIME: -1,
    KernelKind.ALPHA_DOUBLE_PRIME: 1,
}

_CLOSED_FORMS = {
    KernelKind.ALPHA: kernel_alpha,
    KernelKind.ALPHA_PRIME: kernel_alpha_prime,
    KernelKind.ALPHA_DOUBLE_PRIME: kernel_alpha_dprime,
}


@lru_cache(maxsize=64)
def _pascal_row(n: int) -> Tuple[int, ...]:
    return tuple(comb(n, k) for k in range(n + 1))


def kernel_bruteforce(kind: KernelKind, n: int, s: int) -> int:
    """Literal sum over j of C(n, 2j + offset) C(j, s); defined for n >= 0"""
    kind = KernelKind(kind)
    require(n >= 0 and s >= 0, "kernel_bruteforce: n and s must be >= 0, got n=%s, s=%s", n, s)
    offset = _ROW_OFFSET[kind]
    row_values = _pascal_row(n)
    total = 0
    # C(j, s) vanishes for j < s and C(n, 2j + offset) for 2j + offset > n
    for j in range(s, n + 1):
        row = 2 * j + offset
        if row < 0:
            continue
        if row > n:
            break
        total += row_values[row] * comb(j, s)
    return total


def kernel_closed_form(kind: KernelKind, n: int, s: int) -> int:
    """Dispatch to the closed form of the given kind"""
    return _CLOSED_FORMS[KernelKind(kind)](n, s)


def kernel_value(kind: KernelKind, n: int, s: int, mode: SummationMode = SummationMode.CLOSED_FORM) -> int:
    if SummationMode(mode) is SummationMode.BRUTE_FORCE:
        return kernel_bruteforce(kind, n, s)
    return kernel_closed_form(kind, n, s)


def alpha_recurrence_holds(n: int, s: int) -> bool:
    """alpha_{n+1,s} = alpha_{n,s} + alpha'_{n,s}, and for s >= 1
    alpha'_{n+1,s} = alpha'_{n,s} + alpha_{n,s} + alpha_{n,s-1}"""
    require(n >= 1 and s >= 0, "alpha_recurrence_holds: need n >= 1, s >= 0, got n=%s, s=%s", n, s)
    first = kernel_alpha(n, s) + kernel_alpha_prime(n, s) == kernel_alpha(n + 1, s)
    if s == 0:
        return first
    second = kernel_alpha_prime(n + 1, s) == (
        kernel_alpha_prime(n, s) + kernel_alpha(n, s) + kernel_alpha(n, s - 1)
    )
    return first and second


def dprime_recurrence_holds(n: int, s: int) -> bool:
    """alpha''_{n,s} = alpha''_{n-1,s} + alpha_{n-1,s} for n, s >= 1"""
    require(n >= 1 and s >= 1, "dprime_recurrence_holds: need n, s >= 1, got n=%s, s=%s", n, s)
    if n == 1:
        # row 0 has only the definitional sums (alpha_{0,s} = 0 for s >= 1)
        previous_dprime = kernel_bruteforce(KernelKind.ALPHA_DOUBLE_PRIME, 0, s)
        previous_alpha = kernel_bruteforce(KernelKind.ALPHA, 0, s)
    else:
        previous_dprime = kernel_alpha_dprime(n - 1, s)
        previous_alpha = kernel_alpha(n - 1, s)
    return kernel_alpha_dprime(n, s) == previous_dprime + previous_alpha


def lemma2_sum(k: int, s: int, mode: SummationMode = SummationMode.CLOSED_FORM) -> int:
    """
    sum_{j=1}^{s} C(2k, 2j-1) C(k-j, s-j) = 2^(2s-1) C(k+s-1, 2s-1) for 0 <= s <= k.
    """
    require(0 <= s <= k, "lemma2_sum: need 0 <= s <= k, got k=%s, s=%s", k, s)
    if SummationMode(mode) is SummationMode.BRUTE_FORCE:
        return sum(binomial(2 * k, 2 * j - 1) * binomial(k - j, s - j) for j in range(1, s + 1))
    if s == 0:
        # C(k-1, -1) = 0
        return 0
    return binomial(k + s - 1, 2 * s - 1) << (2 * s - 1)


def cooc_half_sums(ell: int, t: int) -> tuple[int, int]:
    """The two alternating sums that make up cooc_sum:
    sum_s (-1)^s C(2ell+s, s) C(2t+2ell, t-s) and sum_s (-1)^s C(2ell+s-1, s-1) C(2t+2ell, t-s)"""
    require(ell >= 0 and t >= 0, "cooc_half_sums: arguments must be >= 0, got ell=%s, t=%s", ell, t)
    first = 0
    second = 0
    for s in range(t + 1):
        sign = -1 if s % 2 else 1
        outer = binomial(2 * t + 2 * ell, t - s)
        first += sign * binomial(2 * ell + s, s) * outer
        if s >= 1:
            second += sign * binomial(2 * ell + s - 1, s - 1) * outer
    return first, second


def cooc_sum(ell: int, t: int) -> int:
    """Literal alternating sum; 0 for every t >= 1 and 1 for t = 0"""
    first, second = cooc_half_sums(ell, t)
    return first + second


def cheie_sum(n: int, ell: int, mode: SummationMode = SummationMode.CLOSED_FORM) -> int:
    """
    sum_{k=0}^{ell} (C(n+2k-1, k) - C(n+2k-1, k-1)) C(2(ell-k), ell-k) = C(n+2ell, ell).
    """
    require(n >= 0 and ell >= 0, "cheie_sum: arguments must be >= 0, got n=%s, ell=%s", n, ell)
    if SummationMode(mode) is SummationMode.CLOSED_FORM:
        return binomial(n + 2 * ell, ell)
    total = 0
    for k in range(ell + 1):
        if n == 0 and k == 0:
            # C(-1, 0) - C(-1, -1) = 1 - 0
            weight = 1
        else:
            weight = binomial(n + 2 * k - 1, k) - _lower(n + 2 * k - 1, k - 1)
        total += weight * binomial(2 * (ell - k), ell - k)
    return total
