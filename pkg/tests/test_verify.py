import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from services.errors import DomainError, EvaluationError
from services.expansions import cos_power_fourier
from services.reciprocal import RealTrigSeries, ReciprocalParams, recip_cos_series, recip_function, recip_sin_series
from services.trigpoly import TrigPolynomial, tp_eval
from services.verify import VerificationReport, compare, numeric_fourier


def test_numeric_fourier_of_cos_t():
    series = numeric_fourier(np.cos, 3, 64)
    assert series.samples == 64
    assert series.tail_bound == 0.0
    assert len(series.cos_terms) == len(series.sin_terms) == 3
    assert series.cos_terms[0] == pytest.approx(1.0, abs=1e-14)
    assert abs(series.constant) <= 1e-14
    assert max(abs(v) for v in series.cos_terms[1:] + series.sin_terms) <= 1e-14


def test_numeric_fourier_accepts_scalar_only_functions():
    series = numeric_fourier(math.sin, 2, 16)
    assert series.sin_terms[0] == pytest.approx(1.0, abs=1e-14)


def test_numeric_fourier_of_constant_function():
    series = numeric_fourier(lambda t: 2.5, 2, 8)
    assert series.constant == pytest.approx(2.5)


def test_numeric_fourier_rejects_aliasing():
    with pytest.raises(DomainError):
        numeric_fourier(np.cos, 5, 10)
    numeric_fourier(np.cos, 5, 11)


def test_numeric_fourier_rejects_non_finite_samples():
    with pytest.raises(EvaluationError):
        numeric_fourier(lambda t: np.where(t > 1.0, np.nan, 0.0), 2, 16)


def test_cos4_quadrature_matches_closed_form():
    numeric = numeric_fourier(lambda t: np.cos(t) ** 4, 6, 64)
    report = compare(cos_power_fourier(4), numeric, 6)
    assert report.max_abs_error <= 1e-13
    assert report.harmonics_checked == 6
    assert report.samples_used == 64


def test_reciprocal_quadrature_matches_closed_form():
    p = ReciprocalParams(2.0)
    numeric = numeric_fourier(recip_function(p), 25, 4096)
    assert compare(recip_cos_series(p, 25), numeric, 25).max_abs_error <= 1e-10
    numeric_sin = numeric_fourier(recip_function(p, "sin"), 25, 4096)
    assert compare(recip_sin_series(p, 25), numeric_sin, 25).max_abs_error <= 1e-9


def test_sqrt3_quadrature_refutes_printed_values():
    p = ReciprocalParams(math.sqrt(3.0))
    numeric = numeric_fourier(recip_function(p), 10, 4096)
    assert compare(recip_cos_series(p, 10), numeric, 10).max_abs_error <= 1e-10
    assert numeric.constant == pytest.approx(1 / math.sqrt(2), abs=1e-12)


def test_doubling_nodes_does_not_worsen():
    p = ReciprocalParams(1.5)
    exact = recip_cos_series(p, 25)
    coarse = compare(exact, numeric_fourier(recip_function(p), 25, 2048), 25).max_abs_error
    fine = compare(exact, numeric_fourier(recip_function(p), 25, 4096), 25).max_abs_error
    assert fine <= coarse + 1e-12


def test_compare_identical_inputs():
    series = RealTrigSeries(constant=0.5, cos_terms=[0.25, 0.125], sin_terms=[0.0, 1.0], samples=8)
    report = compare(series, series, 2)
    assert report.max_abs_error == 0.0
    assert report.passed(0.0)


def test_compare_coverage_rules():
    numeric = RealTrigSeries(constant=0.0, cos_terms=[0.0, 0.0], sin_terms=[0.0, 0.0], samples=8)
    # an empty family on the exact side is identically zero
    assert compare(RealTrigSeries(constant=0.0, cos_terms=[0.0, 0.0]), numeric, 2).max_abs_error == 0.0
    with pytest.raises(DomainError):
        compare(RealTrigSeries(constant=0.0, cos_terms=[0.0]), numeric, 2)
    with pytest.raises(DomainError):
        compare(numeric, numeric, 3)
    with pytest.raises(DomainError):
        compare(TrigPolynomial.cos(3), numeric, 2)


def test_report_max_and_passed():
    report = VerificationReport(errors_constant=1e-12, errors_cos=[3e-10], errors_sin=[2e-11])
    assert report.max_abs_error == 3e-10
    assert report.passed(1e-9)
    assert not report.passed(1e-10)


@given(
    st.dictionaries(st.integers(1, 8), st.fractions(-2, 2, max_denominator=16), max_size=4),
    st.dictionaries(st.integers(1, 8), st.fractions(-2, 2, max_denominator=16), max_size=4),
    st.fractions(-2, 2, max_denominator=16),
)
@settings(max_examples=40)
def test_quadrature_recovers_trig_polynomials(cos_terms, sin_terms, constant):
    p = TrigPolynomial(Fraction(constant), cos_terms, sin_terms)
    H = max(p.degree, 1)
    numeric = numeric_fourier(lambda t: tp_eval(p, t), H, 2 * H + 2)
    assert compare(p, numeric, H).max_abs_error <= 1e-12


def test_compare_closed_form_with_itself():
    p = ReciprocalParams(2.0)
    series = recip_cos_series(p, 5)
    assert series.sin_terms == []
    report = compare(series, series, 5)
    assert report.max_abs_error == 0.0
    assert report.samples_used is None
    sin_series = recip_sin_series(p, 5)
    assert compare(sin_series, sin_series, 5).max_abs_error == 0.0


def test_compare_names_the_short_numeric_family():
    numeric = RealTrigSeries(constant=0.0, cos_terms=[0.0, 0.0, 0.0], sin_terms=[0.0], samples=8)
    with pytest.raises(DomainError, match="numeric sin"):
        compare(RealTrigSeries(constant=0.0), numeric, 3)


def test_scalar_pole_is_an_evaluation_error():
    with pytest.raises(EvaluationError, match="ZeroDivisionError"):
        numeric_fourier(lambda t: 1 / (1 - math.cos(t)), 2, 16)
