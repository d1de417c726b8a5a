import math

import numpy as np
import pytest

from casimirpy.exceptions import DomainError, UsageError
from casimirpy.lifshitz import CavityConfig, QuadratureSpec, stress_integrand
from casimirpy.materials import VACUUM, PERFECT_MIRROR, Plasma, Drude, PlasmaShifted
from casimirpy.optics import SpectralPoint, interface_r, slab_rt
from casimirpy.oracle import GridOracleSpec, brute_force_integral, Layer, StackDescription, transfer_matrix_r, \
    verify_stack_coefficients, verify_quadrature, random_configuration
from casimirpy.scenarios import casimir_ideal_reduced

C = 1.0


def test_single_interface():
    point = SpectralPoint(np.array([0.2, 1.0]), np.array([0.5, 3.0]), "TM")
    np.testing.assert_allclose(transfer_matrix_r(StackDescription(VACUUM, (), Drude(4.0)), point, C),
                               interface_r(VACUUM, Drude(4.0), point, C), rtol=1e-12)


def test_vacuum_gap_before_perfect_mirror():
    stack = StackDescription(VACUUM, (Layer(VACUUM, 0.5),), PERFECT_MIRROR)
    kappa = math.hypot(0.3, 0.4)
    assert transfer_matrix_r(stack, SpectralPoint(0.3, 0.4, "TM"), C) == pytest.approx(math.exp(-kappa))
    assert transfer_matrix_r(stack, SpectralPoint(0.3, 0.4, "TE"), C) == pytest.approx(-math.exp(-kappa))


def test_slab_in_vacuum():
    point = SpectralPoint(0.7, 0.2, "TE")
    stack = StackDescription(VACUUM, (Layer(Plasma(1.0), 0.8),), VACUUM)
    assert transfer_matrix_r(stack, point, C) == pytest.approx(slab_rt(Plasma(1.0), 0.8, point, C)[0], rel=1e-12)


def test_stack_errors():
    with pytest.raises(UsageError):
        Layer(PERFECT_MIRROR, 1.0)
    with pytest.raises(DomainError):
        Layer(VACUUM, -1.0)
    with pytest.raises(UsageError):
        StackDescription(PERFECT_MIRROR, (), VACUUM)


def test_stack_coefficients_match_transfer_matrices():
    deviations = verify_stack_coefficients(points=500, seed=3)
    assert set(deviations) == {"interface_r", "slab_rt", "recurrence_r", "in_slab_r"}
    for name, deviation in deviations.items():
        assert deviation < 1e-10, name


def test_grid_spec():
    with pytest.raises(DomainError):
        GridOracleSpec(nodes_per_axis=50)
    with pytest.raises(DomainError):
        GridOracleSpec(k_scale=0.0)
    quad = QuadratureSpec(xi_scale=2.0, k_scale=3.0)
    assert GridOracleSpec.like(quad, 200) == (200, 2.0, 3.0)


def test_trapezoid_on_separable_exponential():
    value = brute_force_integral(lambda xi, k: np.exp(-xi - k), GridOracleSpec(400), polarizations=None)
    assert value == pytest.approx(1.0, rel=1e-4)


def test_trapezoid_weights_are_exact_for_a_flat_transformed_integrand():
    # f dt/du = 1 on both axes; the nodes at infinity and the corner contribute 0, which costs h
    value = brute_force_integral(lambda xi, k: 1.0 / ((1.0 + xi) ** 2 * (1.0 + k) ** 2), GridOracleSpec(401),
                                 polarizations=None)
    assert value == pytest.approx(1.0 - 1.0 / 400, rel=1e-12)


def test_mixed_configurations_draw_every_model():
    rng = np.random.default_rng(3)
    configs = [random_configuration(rng, symmetric=False, mixed=True) for _ in range(200)]
    assert {type(config.slab) for config in configs} == {Plasma, Drude, PlasmaShifted}
    mirrors = {type(config.mirror1) for config in configs} | {type(config.mirror2) for config in configs}
    assert mirrors == {type(PERFECT_MIRROR), type(VACUUM), Plasma, Drude}
    assert any(type(config.mirror1) is not type(config.mirror2) for config in configs)
    assert all(config.slab.plasma_frequency == 1.0 for config in configs)
    assert all(0.2 <= length <= 2.0 for config in configs for length in (config.d1, config.d_s, config.d2))
    symmetric = random_configuration(rng, symmetric=True)
    assert symmetric.d1 == symmetric.d2 and symmetric.mirror1 == symmetric.mirror2


@pytest.mark.slow
def test_trapezoid_on_ideal_cavity():
    config = CavityConfig(PERFECT_MIRROR, 0.0, VACUUM, 1.0, 0.0, PERFECT_MIRROR)
    value = brute_force_integral(stress_integrand(config), GridOracleSpec(1000))
    assert value == pytest.approx(casimir_ideal_reduced(1.0), rel=1e-4)


@pytest.mark.slow
def test_adaptive_engine_matches_trapezoid():
    deviations = verify_quadrature(configurations=10, seed=7)
    assert deviations["stress"] < 1e-3
    assert deviations["net_force"] < 1e-3
