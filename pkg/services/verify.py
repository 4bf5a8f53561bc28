"""
Numeric Fourier analysis by the periodic trapezoidal rule and comparison
of exact or closed-form expansions against it.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Union

import numpy as np

from services.errors import DomainError, EvaluationError, require
from services.reciprocal import RealTrigSeries
from services.trigpoly import TrigPolynomial

logger = logging.getLogger(__name__)

PeriodicFunction = Callable[[np.ndarray], np.ndarray]


def _sample(f: PeriodicFunction, nodes: np.ndarray) -> np.ndarray:
    try:
        values = np.asarray(f(nodes), dtype=float)
        if values.shape != nodes.shape:
            values = np.broadcast_to(values, nodes.shape).astype(float)
    except (TypeError, ValueError):
        # f only accepts scalars
        values = np.array([_sample_scalar(f, float(t)) for t in nodes])
    return values


def _sample_scalar(f: PeriodicFunction, t: float) -> float:
    try:
        return float(f(t))
    except ArithmeticError as e:
        raise EvaluationError(f"numeric_fourier: f raised {type(e).__name__} at t={t!r}") from e


def numeric_fourier(f: PeriodicFunction, N: int, M: int = 4096) -> RealTrigSeries:
    """
    Fourier coefficients of a 2pi-periodic function from M uniform samples.

    The trapezoidal rule on t_m = 2 pi m / M is the discrete Fourier transform:
    with F_n = sum_m f(t_m) exp(-i n t_m),
    a_n = 2 Re(F_n) / M, b_n = -2 Im(F_n) / M and the constant is Re(F_0) / M.

    Args:
        f: function of t, vectorized over numpy arrays or scalar-only
        N: highest harmonic to extract
        M: number of quadrature nodes, at least 2N + 1

    Returns:
        RealTrigSeries: constant, cos and sin lists of length N, tail_bound 0
    """
    require(N >= 0, "numeric_fourier: N must be >= 0, got %s", N)
    if M < 2 * N + 1:
        raise DomainError(f"numeric_fourier: M={M} aliases harmonics up to N={N}; need M >= {2 * N + 1}")

    nodes = np.arange(M) * (2.0 * np.pi / M)
    values = _sample(f, nodes)
    if not np.all(np.isfinite(values)):
        bad = int(np.argmax(~np.isfinite(values)))
        raise EvaluationError(f"numeric_fourier: non-finite sample at t={nodes[bad]!r}")

    spectrum = np.fft.rfft(values)
    harmonics = spectrum[1:N + 1]
    logger.debug("🧮 quadrature with M=%d nodes, N=%d harmonics", M, N)
    return RealTrigSeries(
        constant=float(spectrum[0].real / M),
        cos_terms=[float(v) for v in 2.0 * harmonics.real / M],
        sin_terms=[float(v) for v in -2.0 * harmonics.imag / M],
        tail_bound=0.0,
        samples=M,
    )


@dataclass
class VerificationReport:
    """Per-coefficient absolute errors between two expansions

    samples_used is the quadrature node count of the numeric side, None when
    that side was not produced by sampling.
    """
    errors_constant: float
    errors_cos: List[float] = field(default_factory=list)
    errors_sin: List[float] = field(default_factory=list)
    samples_used: Optional[int] = None
    harmonics_checked: int = 0

    @property
    def max_abs_error(self) -> float:
        return max([self.errors_constant, *self.errors_cos, *self.errors_sin])

    def passed(self, tol: float) -> bool:
        return self.max_abs_error <= tol


def _exact_lists(exact: Union[RealTrigSeries, TrigPolynomial], N: int):
    if isinstance(exact, TrigPolynomial):
        if exact.degree > N:
            raise DomainError(f"compare: exact expansion has harmonic {exact.degree} beyond N={N}")
        cos_terms = [float(exact.cos_terms.get(n, 0)) for n in range(1, N + 1)]
        sin_terms = [float(exact.sin_terms.get(n, 0)) for n in range(1, N + 1)]
        return float(exact.constant), cos_terms, sin_terms
    return exact.constant, _padded(exact.cos_terms, N, "exact cos"), _padded(exact.sin_terms, N, "exact sin")


def _padded(values: Sequence[float], N: int, label: str) -> List[float]:
    # an empty list stands for an identically zero family
    if not values:
        return [0.0] * N
    if len(values) < N:
        raise DomainError(f"compare: {label} terms cover {len(values)} harmonics, need {N}")
    return list(values[:N])


def compare(exact: Union[RealTrigSeries, TrigPolynomial], numeric: RealTrigSeries, N: int) -> VerificationReport:
    """Absolute differences for the constant and harmonics 1..N"""
    require(N >= 0, "compare: N must be >= 0, got %s", N)
    constant, cos_terms, sin_terms = _exact_lists(exact, N)
    numeric_cos = _padded(numeric.cos_terms, N, "numeric cos")
    numeric_sin = _padded(numeric.sin_terms, N, "numeric sin")
    report = VerificationReport(
        errors_constant=abs(constant - numeric.constant),
        errors_cos=[abs(x - y) for x, y in zip(cos_terms, numeric_cos)],
        errors_sin=[abs(x - y) for x, y in zip(sin_terms, numeric_sin)],
        samples_used=numeric.samples,
        harmonics_checked=N,
    )
    logger.debug("compare: max abs error %.3e over %d harmonics", report.max_abs_error, N)
    return report
