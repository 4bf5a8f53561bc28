"""
Named oracle suites behind `run.py verify` and the /verify endpoint.

Every check pits a closed form against an independent oracle: brute-force
sums, the Chebyshev recurrence, de Moivre expansion, product-to-sum
multiplication, direct floating evaluation or trapezoidal quadrature.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional

import numpy as np

from config import DEFAULT_SETTINGS, Settings
from services.errors import DomainError
from services.expansions import (
    chebyshev_oracle,
    cos_multiple_angle,
    expansion_to_fourier,
    has_power_of_two_denominators,
    moivre_cos_oracle,
    moivre_sin_oracle,
    multiple_angle,
    power_fourier,
    power_product_oracle,
    sin_multiple_angle,
    single_harmonic,
    even_power_betas,
)
from services.kernels import (
    KernelKind,
    SummationMode,
    alpha_recurrence_holds,
    binomial,
    cheie_sum,
    cooc_half_sums,
    cooc_sum,
    dprime_recurrence_holds,
    kernel_bruteforce,
    kernel_closed_form,
    lemma2_sum,
)
from services.reciprocal import (
    RealTrigSeries,
    ReciprocalParams,
    printed_sqrt3_coeff,
    printed_sqrt3_sin_coeffs,
    lemas_residual,
    recip_a0_series,
    recip_cos_coeff,
    recip_cos_series,
    recip_function,
    recip_partial_sum_oracle,
    recip_series,
    truncation_deviation,
)
from services.trigpoly import Base, pe_eval, tp_eval, tp_mean_square, tp_value_at_zero
from services.verify import compare, numeric_fourier
from services.worked_examples import MULTIPLE_ANGLE_EXAMPLES, POWER_EXAMPLES, PRINTED_SIN4, golden_texts

logger = logging.getLogger(__name__)

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "data" / "golden"

QUADRATURE_PARAMETERS = (1.5, -1.5, 2.0, -2.0, math.sqrt(3.0), 10.0)
TRUNCATION_PARAMETERS = (1.5, 2.0, 10.0)
TRUNCATION_HARMONICS = (5, 15, 25)
PARSEVAL_MAX_N = 16
LEMAS_MAX_N = 50
RELATIVE_TOLERANCE = 1e-13
LEMAS_TOLERANCE = 1e-12
PARTIAL_SUM_TOLERANCE = 1e-10
SQRT3 = math.sqrt(3.0)


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""
    max_error: Optional[float] = None


@dataclass
class SuiteReport:
    suite: str
    tol: float
    samples: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


def _first_failure(label: str, failures: List[str], count: int) -> str:
    if failures:
        return f"{len(failures)} of {count} failed, first {failures[0]}"
    return f"{count} {label} checked"


class VerificationSuite:
    """
    Runs the oracle suites for one set of settings.
    """

    def __init__(self, settings: Settings = DEFAULT_SETTINGS, golden_dir: Path = GOLDEN_DIR):
        self.settings = settings
        self.golden_dir = golden_dir
        self.catalogue: Dict[str, Callable[[], List[CheckResult]]] = {
            "fixtures": self.fixtures,
            "kernels": self.kernels,
            "lemmas": self.lemmas,
            "expansions": self.expansions,
            "pointwise": self.pointwise,
            "reciprocal": self.reciprocal,
            "erratum": self.erratum,
        }

    @property
    def suite_names(self) -> List[str]:
        return ["all", *self.catalogue]

    def run(self, suite: str = "all") -> SuiteReport:
        """
        Run one suite, or every suite in catalogue order for "all".

        Args:
            suite: a name from suite_names

        Returns:
            SuiteReport: checks in catalogue order
        """
        if suite != "all" and suite not in self.catalogue:
            raise DomainError(f"unknown suite {suite!r}; choose from {', '.join(self.suite_names)}")
        selected = list(self.catalogue) if suite == "all" else [suite]
        logger.info("🧮 running suites %s with tol=%g, M=%d", selected, self.settings.tolerance,
                    self.settings.samples)

        with ThreadPoolExecutor(max_workers=self.settings.workers) as executor:
            results = list(executor.map(lambda name: self.catalogue[name](), selected))

        report = SuiteReport(suite=suite, tol=self.settings.tolerance, samples=self.settings.samples)
        for checks in results:
            report.checks.extend(checks)
        for check in report.checks:
            if not check.passed:
                logger.warning("❌ [%s] %s: %s", check.suite, check.name, check.detail)
        logger.info("%s %d checks, passed=%s", "✅" if report.passed else "❌", len(report.checks), report.passed)
        return report

    # --- fixtures ---

    def fixtures(self) -> List[CheckResult]:
        checks = []
        for example in MULTIPLE_ANGLE_EXAMPLES:
            got = multiple_angle(example.base, example.n)
            checks.append(CheckResult("fixtures", example.name, got == example.expected))
        for example in POWER_EXAMPLES:
            got = power_fourier(example.base, example.n)
            checks.append(CheckResult("fixtures", example.name, got == example.expected))

        shipped = sin_multiple_angle(4)
        checks.append(CheckResult(
            "fixtures", "printed sin(4t) example is the negation of the formula",
            PRINTED_SIN4 == shipped.negated(),
            "printed -4cos t sin t + 8cos t sin^3 t equals -sin(4t); shipped cos t (4sin t - 8sin^3 t)",
        ))

        if self.golden_dir.is_dir():
            for name, text in golden_texts().items():
                path = self.golden_dir / name
                matches = path.is_file() and path.read_text(encoding="utf-8") == text
                checks.append(CheckResult("fixtures", f"golden {name}", matches,
                                          "" if matches else f"{path} missing or different"))
        return checks

    # --- kernels ---

    def kernels(self) -> List[CheckResult]:
        max_n = self.settings.kernel_max_n
        checks = []
        for kind in KernelKind:
            failures = []
            count = 0
            for n in range(1, max_n + 1):
                for s in range(n + 1):
                    count += 1
                    closed = kernel_closed_form(kind, n, s)
                    brute = kernel_bruteforce(kind, n, s)
                    if closed != brute:
                        failures.append(f"n={n}, s={s}: {closed} != {brute}")
            checks.append(CheckResult("kernels", f"{kind.value} closed form equals brute force",
                                      not failures, _first_failure("(n, s) pairs", failures, count)))

        failures = [f"n={n}, s={s}" for n in range(1, max_n + 1) for s in range(n + 1)
                    if not alpha_recurrence_holds(n, s)]
        checks.append(CheckResult("kernels", "alpha and alpha' Pascal recurrences", not failures,
                                  _first_failure("(n, s) pairs", failures, max_n * (max_n + 3) // 2)))

        failures = [f"n={n}, s={s}" for n in range(1, max_n + 1) for s in range(1, n + 1)
                    if not dprime_recurrence_holds(n, s)]
        checks.append(CheckResult("kernels", "alpha'' Pascal recurrence", not failures,
                                  _first_failure("(n, s) pairs", failures, max_n * (max_n + 1) // 2)))
        return checks

    # --- lemmas ---

    def lemmas(self) -> List[CheckResult]:
        s_box = self.settings
        checks = []

        failures = []
        count = 0
        for k in range(s_box.lemma2_max_k + 1):
            for s in range(k + 1):
                count += 1
                if lemma2_sum(k, s, SummationMode.BRUTE_FORCE) != lemma2_sum(k, s):
                    failures.append(f"k={k}, s={s}")
        checks.append(CheckResult("lemmas", "odd-binomial convolution 2^(2s-1) C(k+s-1, 2s-1)",
                                  not failures, _first_failure("(k, s) pairs", failures, count)))

        failures = []
        count = 0
        for ell in range(s_box.cooc_max + 1):
            if cooc_sum(ell, 0) != 1:
                failures.append(f"ell={ell}, t=0")
            for t in range(1, s_box.cooc_max + 1):
                count += 1
                first, second = cooc_half_sums(ell, t)
                if first + second != 0 or first != binomial(2 * t - 1, t) or second != -binomial(2 * t - 1, t - 1):
                    failures.append(f"ell={ell}, t={t}")
        checks.append(CheckResult("lemmas", "alternating sum vanishes for t >= 1", not failures,
                                  _first_failure("(ell, t) pairs", failures, count)))

        failures = []
        count = 0
        for n in range(s_box.cheie_max + 1):
            for ell in range(s_box.cheie_max + 1):
                count += 1
                if cheie_sum(n, ell, SummationMode.BRUTE_FORCE) != cheie_sum(n, ell):
                    failures.append(f"n={n}, ell={ell}")
        checks.append(CheckResult("lemmas", "ballot convolution equals C(n+2ell, ell)", not failures,
                                  _first_failure("(n, ell) pairs", failures, count)))

        failures = []
        for k in range(s_box.power_max_n // 2 + 1):
            betas = even_power_betas(k)
            poly = power_fourier(Base.COS, 2 * k)
            if betas[0] / 2 != poly.constant or any(betas[ell] != poly.cos_terms.get(2 * ell, 0)
                                                     for ell in range(1, k + 1)):
                failures.append(f"k={k}")
        checks.append(CheckResult("lemmas", "beta coefficients match cos^(2k)", not failures,
                                  _first_failure("values of k", failures, s_box.power_max_n // 2 + 1)))
        return checks

    # --- expansions ---

    def expansions(self) -> List[CheckResult]:
        cheb_n = self.settings.chebyshev_max_n
        power_n = self.settings.power_max_n
        checks = []

        failures = [f"n={n}" for n in range(1, cheb_n + 1) if cos_multiple_angle(n) != chebyshev_oracle(n)]
        checks.append(CheckResult("expansions", "cos(nt) equals Chebyshev recurrence", not failures,
                                  _first_failure("values of n", failures, cheb_n)))

        failures = [f"n={n}" for n in range(1, cheb_n + 1) if cos_multiple_angle(n) != moivre_cos_oracle(n)]
        checks.append(CheckResult("expansions", "cos(nt) equals de Moivre expansion", not failures,
                                  _first_failure("values of n", failures, cheb_n)))

        failures = [f"n={n}" for n in range(1, cheb_n + 1) if sin_multiple_angle(n) != moivre_sin_oracle(n)]
        checks.append(CheckResult("expansions", "sin(nt) equals de Moivre expansion", not failures,
                                  _first_failure("values of n", failures, cheb_n)))

        for base in Base:
            failures = []
            for n in range(power_n + 1):
                poly = power_fourier(base, n)
                if poly != power_product_oracle(base, n) or not has_power_of_two_denominators(poly):
                    failures.append(f"n={n}")
            checks.append(CheckResult("expansions", f"{base.value}^n equals repeated product-to-sum",
                                      not failures, _first_failure("values of n", failures, power_n + 1)))

        for base in Base:
            failures = [f"n={n}" for n in range(1, power_n + 1)
                        if expansion_to_fourier(multiple_angle(base, n)) != single_harmonic(base, n)]
            checks.append(CheckResult("expansions", f"{base.value}(nt) round-trips to a single harmonic",
                                      not failures, _first_failure("values of n", failures, power_n)))

        failures = [f"n={n}" for n in range(power_n + 1) if tp_value_at_zero(power_fourier(Base.COS, n)) != 1]
        checks.append(CheckResult("expansions", "cos^n coefficients sum to 1", not failures,
                                  _first_failure("values of n", failures, power_n + 1)))

        parseval_n = min(power_n // 2, PARSEVAL_MAX_N)
        for base in Base:
            failures = [f"n={n}" for n in range(parseval_n + 1)
                        if power_product_oracle(base, 2 * n).constant != tp_mean_square(power_fourier(base, n))]
            checks.append(CheckResult("expansions", f"mean of {base.value}^(2n) equals mean square of {base.value}^n",
                                      not failures, _first_failure("values of n", failures, parseval_n + 1)))
        return checks

    # --- pointwise ---

    def pointwise(self) -> List[CheckResult]:
        max_n = self.settings.pointwise_max_n
        tol = self.settings.pointwise_tolerance
        t = np.arange(self.settings.pointwise_samples) * (2.0 * np.pi / self.settings.pointwise_samples)
        checks = []
        for base in Base:
            trig = np.cos if base is Base.COS else np.sin
            angle_error = 0.0
            power_error = 0.0
            for n in range(1, max_n + 1):
                angle_error = max(angle_error, float(np.max(np.abs(pe_eval(multiple_angle(base, n), t) - trig(n * t)))))
            for n in range(max_n + 1):
                power_error = max(power_error, float(np.max(np.abs(tp_eval(power_fourier(base, n), t) - trig(t) ** n))))
            checks.append(CheckResult("pointwise", f"{base.value}(nt) expansions at sample points",
                                      angle_error <= tol, f"max error {angle_error:.3e}", angle_error))
            checks.append(CheckResult("pointwise", f"{base.value}^n reductions at sample points",
                                      power_error <= tol, f"max error {power_error:.3e}", power_error))
        return checks

    # --- reciprocal ---

    def _quadrature_check(self, a: float, target: str, harmonics: int) -> CheckResult:
        p = ReciprocalParams(a)
        series = recip_series(p, harmonics, target)
        numeric = numeric_fourier(recip_function(p, target), harmonics, self.settings.samples)
        error = compare(series, numeric, harmonics).max_abs_error
        return CheckResult("reciprocal", f"1/({a:g} - {target} t) matches quadrature",
                           error <= self.settings.tolerance, f"max error {error:.3e}", error)

    def reciprocal(self) -> List[CheckResult]:
        harmonics = self.settings.reciprocal_harmonics
        checks = [self._quadrature_check(a, "cos", harmonics) for a in QUADRATURE_PARAMETERS]
        checks += [self._quadrature_check(a, "sin", harmonics) for a in QUADRATURE_PARAMETERS]

        lemas = max(lemas_residual(ReciprocalParams(a), n)
                    for a in QUADRATURE_PARAMETERS for n in range(1, LEMAS_MAX_N + 1))
        checks.append(CheckResult("reciprocal", "(a_(n-1) - a a_n) a_0 = 2 a_n", lemas <= LEMAS_TOLERANCE,
                                  f"max relative residual {lemas:.3e}", lemas))

        ratio_error = 0.0
        sign_error = 0.0
        for a in QUADRATURE_PARAMETERS:
            p = ReciprocalParams(a)
            mirrored = ReciprocalParams(-a)
            for n in range(LEMAS_MAX_N + 1):
                a_n = recip_cos_coeff(p, n)
                ratio_error = max(ratio_error, abs(recip_cos_coeff(p, n + 1) / a_n - p.ratio) / abs(p.ratio))
                expected = -a_n if n % 2 == 0 else a_n
                sign_error = max(sign_error, abs(recip_cos_coeff(mirrored, n) - expected) / abs(a_n))
        checks.append(CheckResult("reciprocal", "coefficients form a geometric sequence",
                                  ratio_error <= RELATIVE_TOLERANCE, f"max relative error {ratio_error:.3e}",
                                  ratio_error))
        checks.append(CheckResult("reciprocal", "coefficients at -a are (-1)^(n+1) times those at a",
                                  sign_error <= RELATIVE_TOLERANCE, f"max relative error {sign_error:.3e}",
                                  sign_error))

        terms = self.settings.partial_sum_terms
        partial = 0.0
        a0_error = 0.0
        for a in QUADRATURE_PARAMETERS:
            p = ReciprocalParams(a)
            for n in range(harmonics + 1):
                partial = max(partial, abs(recip_partial_sum_oracle(p, n, terms) - recip_cos_coeff(p, n)))
            a0_error = max(a0_error, abs(recip_a0_series(p, terms) - p.scale))
        checks.append(CheckResult("reciprocal", f"central-binomial partial sums at K={terms}",
                                  partial <= PARTIAL_SUM_TOLERANCE, f"max error {partial:.3e}", partial))
        checks.append(CheckResult("reciprocal", f"a_0 central-binomial series at K={terms}",
                                  a0_error <= PARTIAL_SUM_TOLERANCE, f"max error {a0_error:.3e}", a0_error))

        for a in TRUNCATION_PARAMETERS:
            p = ReciprocalParams(a)
            worst = 0.0
            passed = True
            for N in TRUNCATION_HARMONICS:
                series = recip_cos_series(p, N)
                deviation, floor = truncation_deviation(p, series, self.settings.pointwise_samples)
                passed = passed and deviation <= series.tail_bound + floor
                worst = max(worst, deviation)
            checks.append(CheckResult("reciprocal", f"truncation error within tail bound for a={a:g}", passed,
                                      f"max deviation {worst:.3e}", worst))

        coarse = self._quadrature_error(2.0, self.settings.samples)
        fine = self._quadrature_error(2.0, 2 * self.settings.samples)
        checks.append(CheckResult("reciprocal", "doubling quadrature nodes does not worsen agreement",
                                  fine <= coarse + 1e-12, f"M: {coarse:.3e}, 2M: {fine:.3e}", fine))
        return checks

    def _quadrature_error(self, a: float, samples: int) -> float:
        p = ReciprocalParams(a)
        harmonics = self.settings.reciprocal_harmonics
        numeric = numeric_fourier(recip_function(p), harmonics, samples)
        return compare(recip_cos_series(p, harmonics), numeric, harmonics).max_abs_error

    # --- erratum ---

    def erratum(self) -> List[CheckResult]:
        tol = self.settings.tolerance
        p = ReciprocalParams(SQRT3)
        harmonics = min(self.settings.reciprocal_harmonics, 8)
        checks = []

        constant = recip_cos_coeff(p, 0) / 2.0
        a_1 = recip_cos_coeff(p, 1)
        expected_a1 = math.sqrt(2.0) * (SQRT3 - math.sqrt(2.0))
        checks.append(CheckResult("erratum", "a = sqrt(3) constant is 1/sqrt(2)",
                                  abs(constant - 1.0 / math.sqrt(2.0)) <= 1e-12, f"constant {constant!r}"))
        checks.append(CheckResult("erratum", "a = sqrt(3) first coefficient is 2(sqrt 3 - sqrt 2)/sqrt 2",
                                  abs(a_1 - expected_a1) <= 1e-12, f"a_1 {a_1!r}"))

        numeric_cos = numeric_fourier(recip_function(p, "cos"), harmonics, self.settings.samples)
        numeric_sin = numeric_fourier(recip_function(p, "sin"), harmonics, self.settings.samples)
        shipped = compare(recip_cos_series(p, harmonics), numeric_cos, harmonics).max_abs_error
        checks.append(CheckResult("erratum", "closed form for a = sqrt(3) matches quadrature", shipped <= tol,
                                  f"max error {shipped:.3e}", shipped))

        printed_cos = RealTrigSeries(
            constant=printed_sqrt3_coeff(0),
            cos_terms=[printed_sqrt3_coeff(n) for n in range(1, harmonics + 1)],
        )
        printed_sin_pairs = [printed_sqrt3_sin_coeffs(n) for n in range(harmonics + 1)]
        printed_sin = RealTrigSeries(
            constant=printed_sin_pairs[0][0],
            cos_terms=[pair[0] for pair in printed_sin_pairs[1:]],
            sin_terms=[pair[1] for pair in printed_sin_pairs[1:]],
        )
        cos_gap = compare(printed_cos, numeric_cos, harmonics).max_abs_error
        sin_gap = compare(printed_sin, numeric_sin, harmonics).max_abs_error
        checks.append(CheckResult("erratum", "printed sqrt(3) cosine coefficients disagree with quadrature",
                                  cos_gap > tol, f"printed values off by up to {cos_gap:.3e}", cos_gap))
        checks.append(CheckResult("erratum", "printed sqrt(3) sine coefficients disagree with quadrature",
                                  sin_gap > tol, f"printed values off by up to {sin_gap:.3e}", sin_gap))
        return checks


def run_suite(suite: str = "all", settings: Settings = DEFAULT_SETTINGS) -> SuiteReport:
    return VerificationSuite(settings).run(suite)
