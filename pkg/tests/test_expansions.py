from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from services.coefficient_cache import coefficient_cache
from services.errors import DomainError
from services.expansions import (
    Parity,
    ParityKind,
    chebyshev_oracle,
    cos_multiple_angle,
    cos_power_fourier,
    expansion_to_fourier,
    has_power_of_two_denominators,
    moivre_cos_oracle,
    moivre_sin_oracle,
    multiple_angle,
    power_fourier,
    power_product_oracle,
    sin_multiple_angle,
    sin_power_fourier,
    single_harmonic,
    even_power_betas,
)
from services.trigpoly import Base, PowerExpansion, TrigPolynomial, pe_eval, tp_eval, tp_mean_square

F = Fraction


@given(st.integers(0, 10_000))
def test_parity_round_trip(n):
    parity = Parity.of(n)
    assert parity.n == n
    assert parity.kind is (ParityKind.ODD if n % 2 else ParityKind.EVEN)


def test_worked_multiple_angle_examples():
    assert cos_multiple_angle(1) == PowerExpansion(Base.COS, {1: 1})
    assert cos_multiple_angle(2) == PowerExpansion(Base.COS, {0: -1, 2: 2})
    assert cos_multiple_angle(4) == PowerExpansion(Base.COS, {0: 1, 2: -8, 4: 8})
    assert sin_multiple_angle(3) == PowerExpansion(Base.SIN, {1: 3, 3: -4})
    assert sin_multiple_angle(2) == PowerExpansion(Base.SIN, {1: 2}, cos_cofactor=True)


def test_sin_4t_follows_the_formula_not_the_printed_sign():
    shipped = sin_multiple_angle(4)
    assert shipped == PowerExpansion(Base.SIN, {1: 4, 3: -8}, cos_cofactor=True)
    t = np.linspace(0.0, 2.0 * np.pi, 50, endpoint=False)
    assert np.max(np.abs(pe_eval(shipped, t) - np.sin(4 * t))) <= 1e-14


@pytest.mark.parametrize("func", [cos_multiple_angle, sin_multiple_angle])
def test_multiple_angle_rejects_zero(func):
    with pytest.raises(DomainError):
        func(0)


def test_chebyshev_oracle_small_cases():
    assert chebyshev_oracle(0) == PowerExpansion(Base.COS, {0: 1})
    assert chebyshev_oracle(1) == PowerExpansion(Base.COS, {1: 1})
    assert chebyshev_oracle(2) == PowerExpansion(Base.COS, {0: -1, 2: 2})
    assert chebyshev_oracle(4) == cos_multiple_angle(4)
    with pytest.raises(DomainError):
        chebyshev_oracle(-1)


def test_chebyshev_oracle_fills_cache(fresh_cache):
    chebyshev_oracle(10)
    assert fresh_cache.get(("chebyshev", 10)) is not None
    assert fresh_cache.get_entry_count() == 9


def test_cos_multiple_angle_matches_sympy_chebyshev():
    x = sympy.Symbol("x")
    for n in range(1, 30):
        coeffs = sympy.Poly(sympy.chebyshevt(n, x), x).as_dict()
        expected = PowerExpansion(Base.COS, {e[0]: int(v) for e, v in coeffs.items()})
        assert cos_multiple_angle(n) == expected


def test_multiple_angle_matches_oracles_small_box():
    for n in range(1, 61):
        assert cos_multiple_angle(n) == chebyshev_oracle(n)
        assert cos_multiple_angle(n) == moivre_cos_oracle(n)
        assert sin_multiple_angle(n) == moivre_sin_oracle(n)


@pytest.mark.slow
def test_cos_multiple_angle_matches_chebyshev_full_box():
    for n in range(1, 201):
        assert cos_multiple_angle(n) == chebyshev_oracle(n)


def test_power_fourier_examples():
    assert cos_power_fourier(0) == TrigPolynomial(F(1))
    assert cos_power_fourier(3) == TrigPolynomial(F(0), {1: F(3, 4), 3: F(1, 4)})
    assert cos_power_fourier(4) == TrigPolynomial(F(3, 8), {2: F(1, 2), 4: F(1, 8)})
    assert sin_power_fourier(1) == TrigPolynomial.sin(1)
    assert sin_power_fourier(2) == TrigPolynomial(F(1, 2), {2: F(-1, 2)})
    assert sin_power_fourier(3) == TrigPolynomial(F(0), sin_terms={1: F(3, 4), 3: F(-1, 4)})
    with pytest.raises(DomainError):
        power_fourier(Base.SIN, -1)


def test_product_oracle_examples():
    assert power_product_oracle(Base.COS, 0) == TrigPolynomial(F(1))
    assert power_product_oracle(Base.COS, 2) == TrigPolynomial(F(1, 2), {2: F(1, 2)})
    assert power_product_oracle(Base.SIN, 2) == TrigPolynomial(F(1, 2), {2: F(-1, 2)})
    assert power_product_oracle(Base.COS, 6) == cos_power_fourier(6)


@pytest.mark.parametrize("base", list(Base))
def test_power_fourier_matches_product_oracle(base):
    for n in range(0, 33):
        poly = power_fourier(base, n)
        assert poly == power_product_oracle(base, n)
        assert has_power_of_two_denominators(poly)


@pytest.mark.slow
@pytest.mark.parametrize("base", list(Base))
def test_power_fourier_matches_product_oracle_full_box(base):
    for n in range(0, 65):
        assert power_fourier(base, n) == power_product_oracle(base, n)


@pytest.mark.parametrize("base", list(Base))
def test_round_trip_to_single_harmonic(base):
    for n in range(1, 33):
        assert expansion_to_fourier(multiple_angle(base, n)) == single_harmonic(base, n)


def test_even_power_betas():
    assert even_power_betas(0) == [F(2)]
    assert even_power_betas(2) == [F(3, 4), F(1, 2), F(1, 8)]
    for k in range(12):
        betas = even_power_betas(k)
        poly = cos_power_fourier(2 * k)
        assert betas[0] / 2 == poly.constant
        assert all(betas[ell] == poly.cos_terms[2 * ell] for ell in range(1, k + 1))


def test_coefficients_sum_to_one_at_zero():
    for n in range(0, 40):
        poly = cos_power_fourier(n)
        assert poly.constant + sum(poly.cos_terms.values()) == 1


@pytest.mark.parametrize("base", list(Base))
def test_parseval_identity(base):
    for n in range(0, 17):
        assert power_product_oracle(base, 2 * n).constant == tp_mean_square(power_fourier(base, n))


@pytest.mark.parametrize("base", list(Base))
def test_pointwise_against_numpy(base):
    t = np.linspace(0.0, 2.0 * np.pi, 1000, endpoint=False)
    trig = np.cos if base is Base.COS else np.sin
    for n in range(1, 33):
        assert np.max(np.abs(pe_eval(multiple_angle(base, n), t) - trig(n * t))) <= 1e-12
        assert np.max(np.abs(tp_eval(power_fourier(base, n), t) - trig(t) ** n)) <= 1e-12


def test_memoized_product_oracle_is_shared():
    first = power_product_oracle(Base.SIN, 5)
    hits_before = coefficient_cache.get_stats()["hits"]
    second = power_product_oracle(Base.SIN, 5)
    assert first == second
    assert coefficient_cache.get_stats()["hits"] > hits_before
