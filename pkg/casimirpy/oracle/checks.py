"""
Randomised cross-checks of the production code against the oracles.
"""
from logging import getLogger

import numpy as np

from ..config import VERIFY_SPECTRAL_POINTS, VERIFY_QUADRATURE_CONFIGS, ORACLE_NODES_PER_AXIS
from ..lifshitz import CavityConfig, QuadratureSpec, integrate_2d, stress_integrand, net_force_integrand
from ..materials import VACUUM, PERFECT_MIRROR, Constant, Plasma, Drude, PlasmaShifted
from ..optics import POLARIZATIONS, SpectralPoint, kappa, interface_r, mirror_r, slab_rt, recurrence_r, in_slab_r
from ..util import relative_deviation
from .grid import GridOracleSpec, brute_force_integral
from .transfer import Layer, StackDescription, transfer_matrix_r

oracle_logger = getLogger("OracleLogger")

REDUCED_C = 1.0


def random_slab(rng):
    """
    :return: plasma or Drude slab with plasma frequency in [0.5, 20]
    """
    omega = rng.uniform(0.5, 20.0)
    if rng.random() < 0.5:
        return Plasma(omega)
    return Drude(omega, omega * 10 ** rng.uniform(-3, -1))


def random_mirror(rng):
    """
    :return: Drude mirror, perfect mirror or plasma mirror
    """
    choice = rng.integers(3)
    omega = 10 ** rng.uniform(0, 3)
    if choice == 0:
        return PERFECT_MIRROR
    if choice == 1:
        return Plasma(omega)
    return Drude(omega, 1e-3 * omega)


def verify_stack_coefficients(points=VERIFY_SPECTRAL_POINTS, seed=0):
    """
    Compare interface_r, slab_rt, recurrence_r and in_slab_r with the transfer matrix composition at random spectral
    points (reduced units, xi and k log uniform in [1e-2, 10]).
    :param points: number of random spectral points per polarization
    :param seed: seed of the random generator
    :return: dict with the maximal deviation per coefficient (absolute for in_slab_r, relative otherwise)
    """
    rng = np.random.default_rng(seed)
    deviations = {"interface_r": 0.0, "slab_rt": 0.0, "recurrence_r": 0.0, "in_slab_r": 0.0}
    for _ in range(points // 50):
        slab = random_slab(rng)
        mirror = random_mirror(rng)
        d_s = rng.uniform(0.05, 5.0)
        d_gap = rng.uniform(0.0, 5.0)
        xi = 10 ** rng.uniform(-2, 1, 50)
        k = 10 ** rng.uniform(-2, 1, 50)
        for pol in POLARIZATIONS:
            point = SpectralPoint(xi, k, pol)
            kappa_gap = kappa(VACUUM, xi, k, REDUCED_C)
            rho = interface_r(VACUUM, slab, point, REDUCED_C)
            R = mirror_r(mirror, point, REDUCED_C)
            r, t = slab_rt(slab, d_s, point, REDUCED_C)
            checks = (
                ("interface_r", rho, StackDescription(VACUUM, (), slab)),
                ("slab_rt", r, StackDescription(VACUUM, (Layer(slab, d_s),), VACUUM)),
                ("recurrence_r", recurrence_r(r, t, R, kappa_gap, d_gap, point),
                 StackDescription(VACUUM, (Layer(slab, d_s), Layer(VACUUM, d_gap)), mirror)),
                ("in_slab_r", in_slab_r(rho, R, kappa_gap, d_gap, point),
                 StackDescription(slab, (Layer(VACUUM, d_gap),), mirror)),
            )
            for name, value, stack in checks:
                reference = transfer_matrix_r(stack, point, REDUCED_C)
                if name == "in_slab_r":
                    # -rho + R exp(-2 kappa d) passes through zero, compare absolutely
                    deviation = np.abs(value - reference)
                else:
                    deviation = relative_deviation(value, reference)
                deviations[name] = max(deviations[name], float(np.max(deviation)))
    oracle_logger.info("stack coefficients vs transfer matrices: %s", deviations)
    return deviations


def _mixed_slab(rng):
    """
    :return: plasma, Drude or plasma shifted slab with omega_P = 1
    """
    choice = rng.integers(3)
    if choice == 0:
        return Plasma(1.0)
    if choice == 1:
        return Drude(1.0, 10 ** rng.uniform(-3, -1))
    return PlasmaShifted(Constant(rng.uniform(1.0, 5.0)), 1.0)


def _mixed_mirror(rng):
    """
    :return: perfect, Drude, plasma or vacuum half space
    """
    choice = rng.integers(4)
    if choice == 0:
        return PERFECT_MIRROR
    if choice == 3:
        return VACUUM
    omega = rng.uniform(2.0, 20.0)
    if choice == 1:
        return Drude(omega, 1e-3 * omega)
    return Plasma(omega)


def random_configuration(rng, symmetric, mixed=False):
    """
    Slab between two mirrors, reduced thickness and gaps in [0.2, 2].
    :param symmetric: equal gaps on both sides if True
    :param mixed: draw the slab model and each mirror independently instead of a plasma slab between identical
                  Drude mirrors
    :return: CavityConfig
    """
    if mixed:
        slab, mirror1, mirror2 = _mixed_slab(rng), _mixed_mirror(rng), _mixed_mirror(rng)
    else:
        omega = rng.uniform(2.0, 20.0)
        slab = Plasma(1.0)
        mirror1 = mirror2 = Drude(omega, 1e-3 * omega)
    d_s = rng.uniform(0.2, 2.0)
    d1 = rng.uniform(0.2, 2.0)
    d2 = d1 if symmetric else rng.uniform(0.2, 2.0)
    return CavityConfig(mirror1, d1, slab, d_s, d2, mirror2)


def verify_quadrature(configurations=VERIFY_QUADRATURE_CONFIGS, seed=0, nodes_per_axis=ORACLE_NODES_PER_AXIS,
                      quad=None):
    """
    Compare the adaptive engine with the trapezoid oracle for the stress (symmetric cavities) and the net force
    (asymmetric cavities) of random configurations.
    :param configurations: number of random configurations per quantity
    :param seed: seed of the random generator
    :param nodes_per_axis: oracle grid size
    :param quad: QuadratureSpec of the adaptive engine
    :return: dict with the maximal relative deviation per quantity
    """
    rng = np.random.default_rng(seed)
    quad = quad or QuadratureSpec(abs_tol=0.0)
    deviations = {"stress": 0.0, "net_force": 0.0}
    for _ in range(configurations):
        for name, symmetric, factory in (("stress", True, stress_integrand),
                                         ("net_force", False, net_force_integrand)):
            config = random_configuration(rng, symmetric)
            resolved = quad.resolved(config)
            integrand = factory(config)
            adaptive = integrate_2d(integrand, resolved).value
            reference = brute_force_integral(integrand, GridOracleSpec.like(resolved, nodes_per_axis))
            deviation = float(relative_deviation(adaptive, reference))
            oracle_logger.debug("%s of %s: adaptive %.12e oracle %.12e", name, config.describe(), adaptive,
                                reference)
            deviations[name] = max(deviations[name], deviation)
    oracle_logger.info("adaptive quadrature vs trapezoid oracle: %s", deviations)
    return deviations
