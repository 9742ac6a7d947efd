import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grid import GridDomain, GridField
from majorant import disk_majorant, grid_majorant
from riesz import (
    EXPLORATORY,
    conjecture_sweep,
    conjugate_exponent,
    identity_z,
    proof_chain,
    proof_majorant_check,
    riesz_ratio_disk,
    riesz_ratio_grid,
    sharpness_family,
    verbitsky_constant,
)
from riesz.engine import analytic_series
from conjugate import analytic_field, conjugate_on_grid
from spectral import TrigSeries, random_real_series
from tests.helpers import re_power
from utils.errors import DegenerateZero, DomainMismatch, ExistenceFailure, InvalidParameter

SQRT2 = math.sqrt(2)


# -- constants and the identity -----------------------------------------------------

def test_verbitsky_constant_values():
    assert verbitsky_constant(2) == pytest.approx(1.414213562373095, abs=1e-15)
    assert verbitsky_constant(1.5) == pytest.approx(2.0, abs=1e-15)
    assert verbitsky_constant(3) == pytest.approx(2.0, abs=1e-15)
    assert verbitsky_constant(4) == pytest.approx(1 / math.sin(math.pi / 8), abs=1e-15)


def test_both_branches_agree_at_two():
    assert 1 / math.cos(math.pi / 4) == pytest.approx(SQRT2, abs=1e-15)
    assert 1 / math.sin(math.pi / 4) == pytest.approx(SQRT2, abs=1e-15)
    assert verbitsky_constant(2 - 1e-12) == pytest.approx(verbitsky_constant(2 + 1e-12), abs=1e-11)


@pytest.mark.parametrize("p", [1.1, 1.25, 1.5, 3, 4, 10])
def test_conjugate_exponent_symmetry(p):
    assert verbitsky_constant(p) == pytest.approx(verbitsky_constant(conjugate_exponent(p)), abs=1e-12)


@pytest.mark.parametrize("p", [1.0, 0.3, -2, float("inf")])
def test_verbitsky_constant_rejects(p):
    with pytest.raises(InvalidParameter):
        verbitsky_constant(p)


@pytest.mark.parametrize("z, expected", [(1 + 1j, (2, 2)), (1j, (1, 1)), (3 - 4j, (25, 25))])
def test_identity_examples(z, expected):
    assert tuple(identity_z(z)) == pytest.approx(expected, abs=1e-14)


def test_identity_on_ten_thousand_points(rng):
    radius = 10 * np.sqrt(rng.uniform(size=10_000))
    points = radius * np.exp(2j * np.pi * rng.uniform(size=10_000))
    for z in points:
        lhs, rhs = identity_z(z)
        assert abs(lhs - rhs) <= 1e-12 * (1 + abs(z) ** 2)


# -- proof majorant ----------------------------------------------------------------------

def test_proof_slack_of_zero_function():
    u = TrigSeries.zeros()
    assert proof_majorant_check(u, u, disk_majorant(u, 2)) == 0.0


@pytest.mark.parametrize("n", [1, 2])
def test_proof_slack_closed_forms(n):
    u = re_power(n)
    points = np.array([0.0, 0.5, 0.3j, -0.6 + 0.2j])
    worst = proof_majorant_check(u, analytic_series(u), disk_majorant(u, 2), points)
    # slack is 1 - |z|^(2n), smallest at the outermost point
    assert worst == pytest.approx(1 - abs(-0.6 + 0.2j) ** (2 * n), abs=1e-10)


def test_proof_slack_of_random_polynomials(rng):
    for _ in range(5):
        u = random_real_series(rng, 8)
        assert proof_majorant_check(u, analytic_series(u), disk_majorant(u, 2)) >= -1e-10


def test_proof_slack_needs_p2():
    u = re_power(1)
    with pytest.raises(InvalidParameter):
        proof_majorant_check(u, analytic_series(u), disk_majorant(u, 3))


def test_proof_slack_on_grid(fine_disk):
    u = GridField.from_function(fine_disk, lambda z: z.real)
    f = analytic_field(u, conjugate_on_grid(u, 0.0))
    # slack is 1 - |z|^2, positive at every interior node
    assert proof_majorant_check(u, f, grid_majorant(u, 2)) > 0


def test_proof_slack_rejects_mixed_inputs(coarse_square):
    u = GridField.from_function(coarse_square, lambda z: z.real)
    with pytest.raises(DomainMismatch):
        proof_majorant_check(u, u, disk_majorant(re_power(1), 2))


# -- disk ratios --------------------------------------------------------------------------

def test_ratio_of_re_z_is_sqrt2():
    report = riesz_ratio_disk(re_power(1), 0.0, 2)
    assert report.ratio == pytest.approx(SQRT2, abs=1e-12)
    assert report.bound == pytest.approx(SQRT2, abs=1e-15)
    assert report.within_bound()


def test_ratio_of_constant_is_one():
    report = riesz_ratio_disk(TrigSeries.constant(1.0), 0.0, 2)
    assert report.ratio == pytest.approx(1.0, abs=1e-14)
    assert report.norm_f == pytest.approx(report.norm_u, abs=1e-14)


def test_ratio_of_shifted_re_z():
    report = riesz_ratio_disk(re_power(1) + 1, 0.0, 2)
    assert report.ratio == pytest.approx(math.sqrt(4 / 3), abs=1e-12)


def test_zero_function_is_degenerate():
    with pytest.raises(DegenerateZero):
        riesz_ratio_disk(TrigSeries.zeros(), 0.0, 2)


def test_numerically_zero_function_is_degenerate():
    u = TrigSeries.from_function(lambda z: (z ** 3).real - np.cos(3 * np.angle(z)), 64)
    with pytest.raises(DegenerateZero):
        riesz_ratio_disk(u, 0.0, 2)


def test_ratio_away_from_the_origin(rng):
    zeta0 = 0.3 + 0.2j
    for _ in range(5):
        report = riesz_ratio_disk(random_real_series(rng, 10), zeta0, 2)
        assert report.zeta0 == zeta0
        assert report.margin >= -1e-9


def test_conjugate_is_normalized_at_zeta0(rng):
    u = random_real_series(rng, 6)
    zeta0 = -0.4 + 0.1j
    f = analytic_series(u, zeta0)
    value = f.evaluate_on_circle(np.angle(zeta0), abs(zeta0))[0]
    u_value = u.evaluate_on_circle(np.angle(zeta0), abs(zeta0))[0]
    assert value.imag == pytest.approx(0.0, abs=1e-12)
    assert value.real == pytest.approx(u_value.real, abs=1e-12)


def test_parseval_route(rng):
    for _ in range(5):
        u = random_real_series(rng, 12)
        report = riesz_ratio_disk(u, 0.0, 2)
        c0 = u.coefficient(0).real
        assert report.norm_f ** 2 == pytest.approx(2 * report.norm_u ** 2 - c0 ** 2, abs=1e-10)


def test_proof_chain(rng):
    u = random_real_series(rng, 7)
    h_f, constructive, upper = proof_chain(u, 0.25 - 0.4j)
    assert h_f == pytest.approx(constructive, abs=1e-10)
    assert constructive <= upper + 1e-12


# -- sharpness ------------------------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 9))
def test_sharpness_family(n):
    assert sharpness_family(n).ratio == pytest.approx(SQRT2, abs=1e-12)


def test_shifted_family_is_strictly_below():
    assert sharpness_family(1, shift=1.0).ratio < SQRT2 - 1e-3


@pytest.mark.parametrize("n", [0, -1, 1.5, True])
def test_sharpness_family_rejects(n):
    with pytest.raises(InvalidParameter):
        sharpness_family(n)


# -- sweeps -----------------------------------------------------------------------------------

def test_p2_sweep_stays_below_sqrt2():
    summary = conjecture_sweep(2, 1000, 32, seed=42)
    assert summary.label == EXPLORATORY
    assert summary.theorem_backed
    assert summary.max_ratio <= SQRT2 + 1e-9
    assert len(summary.reports) == 1000 and not summary.errors


def test_p4_sweep_stays_below_classical_constant():
    summary = conjecture_sweep(4, 500, 16, seed=7)
    assert summary.max_ratio <= 1 / math.sin(math.pi / 8) + 1e-6
    assert not summary.theorem_backed


def test_sweep_is_deterministic_across_workers():
    serial = conjecture_sweep(2, 40, 8, seed=3, workers=1)
    parallel = conjecture_sweep(2, 40, 8, seed=3, workers=4)
    assert [r.ratio for r in serial.reports] == [r.ratio for r in parallel.reports]
    assert serial.argmax == parallel.argmax


def test_degree_zero_sweep_has_ratio_one():
    summary = conjecture_sweep(2, 1, 0, seed=11)
    assert summary.max_ratio == pytest.approx(1.0, abs=1e-14)


@given(seed=st.integers(min_value=0, max_value=2**31), p=st.sampled_from([1.5, 2.0, 3.0]))
@settings(max_examples=10, deadline=None)
def test_sweep_respects_the_classical_constant(seed, p):
    summary = conjecture_sweep(p, 5, 6, seed=seed)
    assert summary.max_ratio <= verbitsky_constant(p) + 1e-6


def test_sweep_rejects_bad_parameters():
    with pytest.raises(InvalidParameter):
        conjecture_sweep(2, 0, 4)
    with pytest.raises(InvalidParameter):
        conjecture_sweep(2, 3, -1)
    with pytest.raises(InvalidParameter):
        conjecture_sweep(0.9, 3, 4)


# -- grid ratios ----------------------------------------------------------------------------

def test_grid_ratio_on_the_disk(fine_disk):
    u = GridField.from_function(fine_disk, lambda z: z.real)
    report = riesz_ratio_grid(u, 0.0, 2)
    assert report.ratio == pytest.approx(SQRT2, rel=0.01)
    assert report.setting.startswith("grid:")


def test_grid_ratio_of_constant(coarse_square):
    report = riesz_ratio_grid(GridField.constant(coarse_square, 5.0), 0.3 - 0.2j, 2)
    assert report.ratio == pytest.approx(1.0, abs=1e-10)


def test_grid_ratio_on_the_annulus(fine_annulus):
    conjugable = GridField.from_function(fine_annulus, lambda z: z.real)
    report = riesz_ratio_grid(conjugable, 1.0, 2)
    assert report.ratio <= SQRT2 * 1.02
    with pytest.raises(ExistenceFailure):
        riesz_ratio_grid(GridField.from_function(fine_annulus, lambda z: np.log(np.abs(z))), 1.0, 2)


def test_grid_ratio_of_zero_field():
    domain = GridDomain.square(1.0, 1 / 8)
    with pytest.raises(DegenerateZero):
        riesz_ratio_grid(GridField.constant(domain, 0.0), 0.0, 2)
