import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectral import (
    BoundarySamples,
    TrigSeries,
    analyze,
    conjugate_series,
    hardy_norm,
    integral_mean,
    parseval_mean,
    poisson_extend,
    random_real_series,
    synthesize,
)
from tests.helpers import re_power
from utils.errors import InvalidParameter, NotRealValued


# -- analyze / synthesize -----------------------------------------------------

def test_analyze_constant():
    series = analyze(np.ones(16))
    assert series.coefficient(0) == pytest.approx(1.0, abs=1e-15)
    assert np.allclose(np.delete(series.coeffs, 0), 0.0, atol=1e-15)


def test_analyze_cosine_at_eight_nodes():
    series = TrigSeries.from_function(lambda z: z.real, 8)
    assert series.coefficient(1) == pytest.approx(0.5, abs=1e-15)
    assert series.coefficient(-1) == pytest.approx(0.5, abs=1e-15)
    assert series.degree == 1


def test_analyze_single_mode():
    series = TrigSeries.from_function(lambda z: z ** 3, 16)
    assert series.coefficient(3) == pytest.approx(1.0, abs=1e-14)
    others = [series.coefficient(n) for n in range(-8, 8) if n != 3]
    assert np.allclose(others, 0.0, atol=1e-14)


def test_round_off_coefficients_do_not_count():
    series = TrigSeries.from_function(lambda z: (z ** 3).real - np.cos(3 * np.angle(z)), 64)
    assert series.is_zero()
    assert series.degree == 0
    assert np.allclose(series.evaluate_on_circle(np.linspace(0, 1, 5)), 0.0, atol=1e-13)
    assert TrigSeries.from_function(lambda z: z.real + 1e-9 * (z ** 5).real, 32).degree == 5


@pytest.mark.parametrize("size", [4, 12, 100])
def test_analyze_rejects_bad_sizes(size):
    with pytest.raises(InvalidParameter):
        analyze(np.ones(size))


def test_round_trips(rng):
    values = rng.standard_normal(64) + 1j * rng.standard_normal(64)
    samples = BoundarySamples(values)
    assert np.max(np.abs(synthesize(analyze(samples)).values - values)) < 1e-13
    series = analyze(samples)
    assert np.max(np.abs(analyze(synthesize(series)).coeffs - series.coeffs)) < 1e-13


def test_real_samples_give_symmetric_coefficients(rng):
    series = analyze(rng.standard_normal(32))
    assert series.symmetry_violation() < 1e-13


# -- Poisson extension ----------------------------------------------------------

def test_poisson_extend_examples():
    assert poisson_extend(re_power(1), 0.5, 0.0) == pytest.approx(0.5, abs=1e-15)
    assert poisson_extend(TrigSeries.constant(1.0), 0.3, 1.2) == pytest.approx(1.0, abs=1e-15)
    assert abs(poisson_extend(re_power(2), 0.5, math.pi / 4)) < 1e-15


def test_poisson_extend_mean_value(rng):
    series = random_real_series(rng, 12)
    for theta in (0.0, 1.0, 4.0):
        assert poisson_extend(series, 0.0, theta) == series.coefficient(0)


@pytest.mark.parametrize("r", [1.0, -0.1, 1.5])
def test_poisson_extend_radius_range(r):
    with pytest.raises(InvalidParameter):
        poisson_extend(re_power(1), r, 0.0)


# -- conjugation ----------------------------------------------------------------

def test_conjugate_of_cosine_is_sine():
    v = conjugate_series(re_power(1))
    assert v.coefficient(1) == pytest.approx(-0.5j, abs=1e-15)
    assert v.coefficient(-1) == pytest.approx(0.5j, abs=1e-15)
    assert v.evaluate_on_circle(math.pi / 2)[0] == pytest.approx(1.0, abs=1e-15)


def test_conjugate_of_constant_is_zero():
    assert conjugate_series(TrigSeries.constant(4.0)).is_zero()


def test_conjugate_drops_the_mean():
    v = conjugate_series(re_power(2) + 3)
    expected = TrigSeries.from_modes({2: -0.5j, -2: 0.5j})
    assert np.max(np.abs(v.coeffs - expected.coeffs)) < 1e-15


def test_conjugate_rejects_complex_series():
    with pytest.raises(NotRealValued):
        conjugate_series(TrigSeries.from_modes({1: 1.0}))


def test_conjugation_twice_negates_the_oscillating_part(rng):
    u = random_real_series(rng, 20)
    twice = conjugate_series(conjugate_series(u))
    expected = -(u.shift(-u.coefficient(0)))
    assert np.max(np.abs(twice.coeffs - expected.coeffs)) < 1e-13


# -- integral means and Hardy norms -----------------------------------------------

def test_integral_mean_examples():
    assert integral_mean(re_power(1), 0.8, 2) == pytest.approx(0.8 / math.sqrt(2), abs=1e-14)
    assert integral_mean(TrigSeries.constant(-3.0), 0.4, 3.5) == pytest.approx(3.0, abs=1e-12)
    z_cubed = TrigSeries.from_modes({3: 1.0})
    assert integral_mean(z_cubed, 0.5, 2) == pytest.approx(0.125, abs=1e-15)


@pytest.mark.parametrize("p", [1.0, 0.5, float("inf"), float("nan")])
def test_integral_mean_rejects_exponent(p):
    with pytest.raises(InvalidParameter):
        integral_mean(re_power(1), 0.5, p)


def test_integral_mean_rejects_radius():
    with pytest.raises(InvalidParameter):
        integral_mean(re_power(1), 1.2, 2)


def test_hardy_norm_examples():
    assert hardy_norm(re_power(1), 2) == pytest.approx(1 / math.sqrt(2), abs=1e-15)
    assert hardy_norm(TrigSeries.constant(1.0), 7.3) == pytest.approx(1.0, abs=1e-12)
    one_plus_z = TrigSeries.from_modes({0: 1.0, 1: 1.0})
    assert hardy_norm(one_plus_z, 2) == pytest.approx(math.sqrt(2), abs=1e-14)


def test_non_even_exponent_refines():
    # M_3(cos) = (4 / (3 pi))^(1/3)
    expected = (4 / (3 * math.pi)) ** (1 / 3)
    assert hardy_norm(re_power(1), 3) == pytest.approx(expected, abs=1e-8)


@given(
    seed=st.integers(min_value=0, max_value=2**32 - 1),
    r1=st.floats(min_value=0.01, max_value=0.98),
    gap=st.floats(min_value=0.001, max_value=0.5),
    p=st.sampled_from([2.0, 3.0, 4.0, 6.0]),
)
@settings(max_examples=40, deadline=None)
def test_integral_mean_increases_with_radius(seed, r1, gap, p):
    u = random_real_series(np.random.default_rng(seed), 6, 64)
    r2 = min(r1 + gap, 0.99)
    assert integral_mean(u, r1, p) <= integral_mean(u, r2, p) + 1e-12


@given(seed=st.integers(min_value=0, max_value=2**32 - 1), r=st.floats(min_value=0.0, max_value=1.0))
@settings(max_examples=40, deadline=None)
def test_p2_mean_matches_parseval(seed, r):
    u = random_real_series(np.random.default_rng(seed), 10, 64)
    assert integral_mean(u, r, 2) == pytest.approx(parseval_mean(u, r), abs=1e-12)


@given(seed=st.integers(min_value=0, max_value=2**32 - 1), r=st.floats(min_value=0.0, max_value=1.0))
@settings(max_examples=40, deadline=None)
def test_conjugate_doubles_the_p2_mean(seed, r):
    u = random_real_series(np.random.default_rng(seed), 10, 64)
    f = u + conjugate_series(u) * 1j
    lhs = integral_mean(f, r, 2) ** 2
    rhs = 2 * integral_mean(u, r, 2) ** 2 - u.coefficient(0).real ** 2
    assert lhs == pytest.approx(rhs, abs=1e-10)


# -- series plumbing ----------------------------------------------------------------

def test_random_series_is_real_with_requested_degree(rng):
    u = random_real_series(rng, 32)
    assert u.is_real(1e-15)
    assert u.degree == 32
    assert u.size >= 4 * 33


def test_padding_keeps_values(rng):
    u = analyze(rng.standard_normal(16))
    theta = np.linspace(0, 2 * np.pi, 7)
    assert np.allclose(u.padded(64).evaluate_on_circle(theta), u.evaluate_on_circle(theta), atol=1e-14)


def test_from_modes_rejects_out_of_range_mode():
    with pytest.raises(InvalidParameter):
        TrigSeries.from_modes({8: 1.0}, 16)
