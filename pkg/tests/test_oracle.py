"""Unit tests for the brute-force oracles and the entanglement witness."""

import math

import numpy as np
import pytest

from spincorr import qmat
from spincorr.bloch import decompose
from spincorr.errors import NonUnitDirection
from spincorr.measures import concurrence, gmod_exact, min_closed
from spincorr.models import (
    IsoDMParams,
    XXZParams,
    measures_isodm,
    measures_xxz,
    thermal_isodm,
    thermal_xxz,
)
from spincorr.oracle import (
    SphereGrid,
    gmod_oracle,
    min_oracle,
    nested_gmod_spotcheck,
    post_measurement,
    ppt_entangled,
)
from spincorr.rng import Lcg, random_state

from helpers import bell_psi_plus, ground_product_state, x_zeroed_states

MIXED = np.eye(4, dtype=complex) / 4.0
Z_AXIS = np.array([0.0, 0.0, 1.0])


def test_fibonacci_grid_shape_and_norms():
    grid = SphereGrid.fibonacci(2000)
    assert grid.n_points == 2000
    assert grid.directions.shape == (2000, 3)
    norms = np.linalg.norm(grid.directions, axis=1)
    assert np.max(np.abs(norms - 1.0)) <= 1e-12
    assert grid.directions[0, 2] == pytest.approx(1.0 - 1.0 / 2000.0, abs=1e-12)


def test_fibonacci_grid_rejects_bad_parameters():
    with pytest.raises(ValueError):
        SphereGrid.fibonacci(0)
    with pytest.raises(ValueError):
        SphereGrid.fibonacci(100, refinement_iters=-1)


def test_post_measurement_leaves_maximally_mixed_invariant(grid2000):
    for n in grid2000.directions[:5]:
        assert np.max(np.abs(post_measurement(MIXED, n) - MIXED)) <= 1e-15


def test_post_measurement_dephases_bell_state():
    out = post_measurement(bell_psi_plus(), Z_AXIS)
    assert np.allclose(out, np.diag([0.0, 0.5, 0.5, 0.0]), atol=1e-15)


def test_post_measurement_zeroes_coherence_blocks():
    rho = random_state(Lcg(33))
    out = post_measurement(rho, Z_AXIS)
    assert np.max(np.abs(out[0:2, 2:4])) == 0.0
    assert np.max(np.abs(out[2:4, 0:2])) == 0.0
    assert np.max(np.abs(out[0:2, 0:2] - rho[0:2, 0:2])) <= 1e-15
    assert np.max(np.abs(out[2:4, 2:4] - rho[2:4, 2:4])) <= 1e-15


def test_post_measurement_is_idempotent(grid2000):
    rng = Lcg(35)
    for _ in range(20):
        rho = random_state(rng)
        for n in grid2000.directions[:3]:
            once = post_measurement(rho, n)
            twice = post_measurement(once, n)
            assert np.max(np.abs(twice - once)) <= 1e-12


def test_post_measurement_rejects_non_unit_directions():
    unit = np.array([1.0, 1.0, 0.0]) / math.sqrt(2.0)
    with pytest.raises(NonUnitDirection):
        post_measurement(MIXED, np.array([1.0, 1.0, 0.0]))
    with pytest.raises(NonUnitDirection):
        post_measurement(MIXED, unit * (1.0 + 2e-9))
    post_measurement(MIXED, unit * (1.0 + 5e-10))  # inside tolerance


def test_min_oracle_bell_state(grid2000):
    result = min_oracle(bell_psi_plus(), grid2000)
    assert abs(result.value - 0.5) <= 1e-9
    assert abs(np.linalg.norm(result.direction) - 1.0) <= 1e-9
    assert result.evaluations > grid2000.n_points


def test_min_oracle_maximally_mixed(grid2000):
    assert abs(min_oracle(MIXED, grid2000).value) <= 1e-15


def test_min_oracle_thermal_point(grid2000):
    rho = thermal_isodm(IsoDMParams(j=1.0, d=0.0)).matrix
    assert abs(min_oracle(rho, grid2000).value - 0.18909986747759386) <= 1e-6


def test_min_oracle_pinned_axis_single_evaluation(grid2000):
    rng = Lcg(37)
    for _ in range(20):
        rho = random_state(rng)
        form = decompose(rho)
        result = min_oracle(rho, grid2000)
        assert result.evaluations == 1
        assert abs(result.value - min_closed(form)[0]) <= 1e-10
        axis = form.x / np.linalg.norm(form.x)
        assert np.max(np.abs(result.direction - axis)) <= 1e-12


def test_gmod_oracle_reference_states(grid2000):
    assert abs(gmod_oracle(bell_psi_plus(), grid2000).value - 0.5) <= 1e-6
    assert abs(gmod_oracle(ground_product_state(), grid2000).value) <= 1e-9


def test_gmod_oracle_is_twice_the_closed_form(grid2000):
    rng = Lcg(39)
    for _ in range(30):
        rho = random_state(rng)
        oracle_value = gmod_oracle(rho, grid2000).value
        assert abs(oracle_value - 2.0 * gmod_exact(decompose(rho))) <= 1e-4


def test_min_oracle_dominates_gmod_oracle_at_degeneracy(grid2000):
    states = [bell_psi_plus(), thermal_isodm(IsoDMParams(j=1.5, d=0.7)).matrix]
    states.extend(x_zeroed_states(seed=11, want=8))
    for rho in states:
        low = gmod_oracle(rho, grid2000).value
        high = min_oracle(rho, grid2000).value
        assert high >= low - 1e-12


def test_oracle_results_are_reproducible(grid2000):
    rho = random_state(Lcg(41))
    first = gmod_oracle(rho, grid2000)
    second = gmod_oracle(rho, grid2000)
    assert first.value == second.value
    assert np.array_equal(first.direction, second.direction)
    assert first.evaluations == second.evaluations


def test_nested_spotcheck_never_undercuts_dephasing():
    bell = bell_psi_plus()
    dephased = qmat.hs_norm2(bell - post_measurement(bell, Z_AXIS))
    assert nested_gmod_spotcheck(bell, Z_AXIS, k=500) >= dephased - 1e-9

    rng = Lcg(43)
    for _ in range(5):
        rho = random_state(rng)
        dephased = qmat.hs_norm2(rho - post_measurement(rho, Z_AXIS))
        assert nested_gmod_spotcheck(rho, Z_AXIS, k=200) >= dephased - 1e-9


def test_nested_spotcheck_rejects_bad_input():
    with pytest.raises(ValueError):
        nested_gmod_spotcheck(MIXED, Z_AXIS, k=0)
    with pytest.raises(NonUnitDirection):
        nested_gmod_spotcheck(MIXED, np.array([0.0, 0.0, 2.0]), k=1)


def test_ppt_reference_states():
    assert ppt_entangled(bell_psi_plus())
    assert not ppt_entangled(MIXED)
    assert not ppt_entangled(ground_product_state())


def test_ppt_flips_at_the_thermal_threshold():
    j_c = math.log(3.0) / 2.0
    assert not ppt_entangled(thermal_isodm(IsoDMParams(j=j_c, d=0.0)).matrix)
    assert ppt_entangled(thermal_isodm(IsoDMParams(j=j_c + 0.01, d=0.0)).matrix)


def test_ppt_agrees_with_concurrence_on_random_states():
    rng = Lcg(45)
    for _ in range(1000):
        rho = random_state(rng)
        assert ppt_entangled(rho) == (concurrence(rho) > 1e-8)


def test_ppt_agrees_with_concurrence_on_thermal_grids():
    js = np.linspace(-5.0, 5.0, 41)
    for j in js:
        for d in (0.0, 1.0, 2.0):
            rep = measures_isodm(IsoDMParams(j=float(j), d=d))
            state = thermal_isodm(IsoDMParams(j=float(j), d=d)).matrix
            assert ppt_entangled(state) == (rep.c_closed > 1e-8)
        for delta in (-2.0, -1.0, 0.0, 1.0):
            for b in (0.0, 1.0, 2.0):
                rep = measures_xxz(XXZParams(j=float(j), delta=delta, b=b))
                state = thermal_xxz(XXZParams(j=float(j), delta=delta, b=b)).matrix
                assert ppt_entangled(state) == (rep.c_closed > 1e-8)
