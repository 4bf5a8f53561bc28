import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from services.errors import DomainError
from services.kernels import (
    KernelKind,
    SummationMode,
    alpha_recurrence_holds,
    binomial,
    cheie_sum,
    cooc_half_sums,
    cooc_sum,
    dprime_recurrence_holds,
    kernel_alpha,
    kernel_alpha_dprime,
    kernel_alpha_prime,
    kernel_bruteforce,
    kernel_closed_form,
    kernel_value,
    lemma2_sum,
    _scale_pow2,
)


def test_binomial_conventions():
    assert binomial(4, 2) == 6
    assert binomial(5, -1) == 0
    assert binomial(7, 7) == 1
    assert binomial(3, 4) == 0


def test_binomial_rejects_negative_upper_index():
    with pytest.raises(DomainError):
        binomial(-1, 0)


def test_alpha_known_values():
    assert kernel_alpha(1, 0) == 1
    assert kernel_alpha(4, 1) == 8
    assert kernel_alpha(4, 3) == 0
    assert [kernel_alpha(n, 0) for n in range(1, 8)] == [2 ** (n - 1) for n in range(1, 8)]


def test_alpha_prime_known_values():
    assert kernel_alpha_prime(1, 1) == 1
    assert kernel_alpha_prime(1, 0) == 1
    assert kernel_alpha_prime(3, 0) == 4
    assert kernel_alpha_prime(3, 1) == 5


def test_alpha_dprime_known_values():
    assert kernel_alpha_dprime(5, 1) == 12
    assert kernel_alpha_dprime(2, 1) == 0
    assert [kernel_alpha_dprime(n, 0) for n in range(1, 8)] == [2 ** (n - 1) for n in range(1, 8)]


def test_bruteforce_known_values():
    assert kernel_bruteforce(KernelKind.ALPHA, 4, 1) == 8
    assert kernel_bruteforce(KernelKind.ALPHA_PRIME, 1, 1) == 1
    assert all(kernel_bruteforce(KernelKind.ALPHA_DOUBLE_PRIME, 0, s) == 0 for s in range(5))


@pytest.mark.parametrize("func", [kernel_alpha, kernel_alpha_prime, kernel_alpha_dprime])
def test_closed_forms_reject_bad_arguments(func):
    with pytest.raises(DomainError):
        func(0, 0)
    with pytest.raises(DomainError):
        func(3, -1)


def test_kernel_value_accepts_string_tags():
    assert kernel_value("alpha", 4, 1) == 8
    assert kernel_value("alpha-dprime", 5, 1, "brute") == 12


@pytest.mark.parametrize("kind", list(KernelKind))
def test_closed_form_matches_bruteforce_small_box(kind):
    for n in range(1, 41):
        for s in range(n + 1):
            assert kernel_closed_form(kind, n, s) == kernel_bruteforce(kind, n, s), (kind, n, s)


@pytest.mark.slow
@pytest.mark.parametrize("kind", list(KernelKind))
def test_closed_form_matches_bruteforce_full_box(kind):
    for n in range(1, 301):
        for s in range(n + 1):
            assert kernel_closed_form(kind, n, s) == kernel_bruteforce(kind, n, s), (kind, n, s)


@given(st.integers(1, 120), st.integers(0, 70))
@settings(max_examples=200)
def test_pascal_recurrences(n, s):
    assert alpha_recurrence_holds(n, s)
    if s >= 1:
        assert dprime_recurrence_holds(n, s)


def test_lemma2_known_values():
    assert lemma2_sum(2, 1, SummationMode.BRUTE_FORCE) == 4
    assert lemma2_sum(3, 2) == 32
    assert lemma2_sum(3, 2, SummationMode.BRUTE_FORCE) == 32
    assert lemma2_sum(5, 0) == 0
    assert lemma2_sum(5, 0, SummationMode.BRUTE_FORCE) == 0


def test_lemma2_rejects_s_above_k():
    with pytest.raises(DomainError):
        lemma2_sum(2, 3)
    with pytest.raises(DomainError):
        lemma2_sum(2, -1)


@given(st.integers(0, 60).flatmap(lambda k: st.tuples(st.just(k), st.integers(0, k))))
@settings(max_examples=150)
def test_lemma2_closed_form_matches_bruteforce(pair):
    k, s = pair
    assert lemma2_sum(k, s) == lemma2_sum(k, s, SummationMode.BRUTE_FORCE)


def test_cooc_known_values():
    assert cooc_sum(0, 1) == 0
    assert cooc_sum(2, 3) == 0
    assert all(cooc_sum(ell, 0) == 1 for ell in range(6))


def test_cooc_rejects_negative_arguments():
    with pytest.raises(DomainError):
        cooc_sum(-1, 2)


@given(st.integers(0, 40), st.integers(1, 40))
@settings(max_examples=150)
def test_cooc_halves(ell, t):
    first, second = cooc_half_sums(ell, t)
    assert first == binomial(2 * t - 1, t)
    assert second == -binomial(2 * t - 1, t - 1)
    assert cooc_sum(ell, t) == 0


def test_cheie_known_values():
    assert cheie_sum(1, 1, SummationMode.BRUTE_FORCE) == 3
    assert cheie_sum(1, 1) == 3
    for ell in range(8):
        assert cheie_sum(0, ell, SummationMode.BRUTE_FORCE) == binomial(2 * ell, ell)
    for n in range(8):
        assert cheie_sum(n, 0, SummationMode.BRUTE_FORCE) == 1


@given(st.integers(0, 50), st.integers(0, 50))
@settings(max_examples=150)
def test_cheie_closed_form_matches_bruteforce(n, ell):
    assert cheie_sum(n, ell, SummationMode.BRUTE_FORCE) == cheie_sum(n, ell)


def test_bruteforce_skips_the_negative_row():
    for n in range(1, 12):
        assert kernel_bruteforce(KernelKind.ALPHA_PRIME, n, 0) == 2 ** (n - 1)
        assert kernel_bruteforce(KernelKind.ALPHA, n, 0) == 2 ** (n - 1)


def test_scale_pow2_rejects_inexact_division():
    assert _scale_pow2(12, -2) == 3
    assert _scale_pow2(3, 4) == 48
    with pytest.raises(ArithmeticError):
        _scale_pow2(6, -2)


def test_require_formats_only_on_failure():
    with pytest.raises(DomainError, match="lemma2_sum: need 0 <= s <= k, got k=2, s=3"):
        lemma2_sum(2, 3)


@pytest.mark.slow
def test_kernel_sweep_with_recurrences_is_fast():
    started = time.perf_counter()
    for kind in KernelKind:
        for n in range(1, 301):
            for s in range(n + 1):
                assert kernel_closed_form(kind, n, s) == kernel_bruteforce(kind, n, s)
    for n in range(1, 301):
        for s in range(n + 1):
            assert alpha_recurrence_holds(n, s)
            if s >= 1:
                assert dprime_recurrence_holds(n, s)
    assert time.perf_counter() - started < 30.0
