"""
Stress inside the slab and forces on it.

All integrands are functions f(xi, k, pol) of the reduced variables xi / omega_P and k / k_P which already contain
the prefactor 1 / (2 pi^2) and the k weight, so that their integral over the quarter plane is the pressure in units
of hbar c k_P^4.
"""
import math
from logging import getLogger

import numpy as np

from ..exceptions import DomainError, NumericalSingularityError
from ..materials import VACUUM
from ..optics import Kappa, SpectralPoint, StackCoefficients, kappa, interface_r, mirror_r, slab_rt, recurrence_r, \
    in_slab_r
from .cavity import QuadratureSpec
from .quadrature import integrate_2d

forces_logger = getLogger("ForcesLogger")

# the reduced engine measures frequencies in omega_P and wavevectors in k_P = omega_P / c
REDUCED_C = 1.0
PREFACTOR = 1.0 / (2.0 * math.pi ** 2)


def layer_force_integrand(r_minus, r_plus, kappa_layer, d_layer, point=None):
    """
    kappa x / (1 - x) with x = r_minus r_plus exp(-2 kappa d), the contribution of one polarization to the force
    on the boundaries of a layer.
    :param r_minus: reflection coefficient towards the left stack
    :param r_plus: reflection coefficient towards the right stack
    :param kappa_layer: Kappa (or its value) inside the layer
    :param d_layer: layer thickness
    :param point: SpectralPoint, only used to report the location of a singularity
    :return: integrand value
    """
    value = kappa_layer.value if isinstance(kappa_layer, Kappa) else kappa_layer
    x = r_minus * r_plus * np.exp(-2.0 * value * d_layer)
    if np.any(x >= 1):
        xi = k = None
        if point is not None:
            xi, k = point.location(np.unravel_index(np.argmax(x >= 1), np.shape(x)) if np.ndim(x) else None)
        raise NumericalSingularityError("round trip factor reached 1", xi=xi, k=k)
    return value * x / (1.0 - x)


def slab_coefficients(config, point):
    """
    Effective reflection coefficients seen from inside the slab towards both mirrors.
    :param config: CavityConfig
    :param point: SpectralPoint in reduced units
    :return: StackCoefficients
    """
    kappa_gap = kappa(VACUUM, point.xi, point.k, REDUCED_C)
    rho = interface_r(VACUUM, config.slab, point, REDUCED_C)
    return StackCoefficients(in_slab_r(rho, mirror_r(config.mirror1, point, REDUCED_C), kappa_gap, config.d1, point),
                             in_slab_r(rho, mirror_r(config.mirror2, point, REDUCED_C), kappa_gap, config.d2, point))


def gap_coefficients(config, which, point):
    """
    Reflection coefficients seen from inside vacuum gap 1 or 2: the bare mirror on one side and the slab followed by
    the other gap and mirror on the other.
    :param config: CavityConfig
    :param which: 1 or 2
    :param point: SpectralPoint in reduced units
    :return: StackCoefficients
    """
    kappa_gap = kappa(VACUUM, point.xi, point.k, REDUCED_C)
    r, t = slab_rt(config.slab, config.d_s, point, REDUCED_C)
    if which == 1:
        return StackCoefficients(mirror_r(config.mirror1, point, REDUCED_C),
                                 recurrence_r(r, t, mirror_r(config.mirror2, point, REDUCED_C), kappa_gap,
                                              config.d2, point))
    return StackCoefficients(recurrence_r(r, t, mirror_r(config.mirror1, point, REDUCED_C), kappa_gap, config.d1,
                                          point),
                             mirror_r(config.mirror2, point, REDUCED_C))


def _check_gap(config, which):
    if which not in (1, 2):
        raise DomainError("gap index must be 1 or 2, got {0!r}".format(which))
    if (config.d1 if which == 1 else config.d2) <= 0:
        raise DomainError("gap {0} has zero width".format(which))


def stress_integrand(config):
    """
    :param config: CavityConfig
    :return: f(xi, k, pol) of the stress in the slab
    """
    def integrand(xi, k, pol):
        point = SpectralPoint(xi, k, pol)
        coefficients = slab_coefficients(config, point)
        kappa_slab = kappa(config.slab, xi, k, REDUCED_C)
        return PREFACTOR * k * layer_force_integrand(coefficients.r_minus, coefficients.r_plus, kappa_slab,
                                                     config.d_s, point)

    return integrand


def gap_integrand(config, which):
    """
    :param config: CavityConfig
    :param which: 1 or 2
    :return: f(xi, k, pol) of the force F_1 or F_2 in the selected vacuum gap
    """
    _check_gap(config, which)
    d_gap = config.d1 if which == 1 else config.d2

    def integrand(xi, k, pol):
        point = SpectralPoint(xi, k, pol)
        coefficients = gap_coefficients(config, which, point)
        kappa_gap = kappa(VACUUM, xi, k, REDUCED_C)
        return PREFACTOR * k * layer_force_integrand(coefficients.r_minus, coefficients.r_plus, kappa_gap, d_gap,
                                                     point)

    return integrand


def net_force_integrand(config):
    """
    Closed form of F_2 - F_1: kappa r (R2 e2 - R1 e1) / N with e_j = exp(-2 kappa d_j) and
    N = 1 - r (R1 e1 + R2 e2) + (r^2 - t^2) R1 R2 e1 e2.
    :param config: CavityConfig with d1, d2 > 0
    :return: f(xi, k, pol)
    """
    _check_gap(config, 1)
    _check_gap(config, 2)

    def integrand(xi, k, pol):
        point = SpectralPoint(xi, k, pol)
        kappa_gap = kappa(VACUUM, xi, k, REDUCED_C).value
        r, t = slab_rt(config.slab, config.d_s, point, REDUCED_C)
        round_trip1 = mirror_r(config.mirror1, point, REDUCED_C) * np.exp(-2.0 * kappa_gap * config.d1)
        round_trip2 = mirror_r(config.mirror2, point, REDUCED_C) * np.exp(-2.0 * kappa_gap * config.d2)
        denominator = 1.0 - r * (round_trip1 + round_trip2) + (r ** 2 - t ** 2) * round_trip1 * round_trip2
        return PREFACTOR * k * kappa_gap * r * (round_trip2 - round_trip1) / denominator

    return integrand


def _integrate(integrand, config, quad, what):
    quad = (quad or QuadratureSpec()).resolved(config)
    result = integrate_2d(integrand, quad)._replace(units=config.units)
    forces_logger.debug("%s of %s: %s", what, config.describe(), result)
    return result


def stress_in_slab(config, quad=None):
    """
    Casimir stress in the slab, positive for two identical perfect mirrors around a vacuum slab.
    :param config: CavityConfig
    :param quad: QuadratureSpec or None for the defaults
    :return: PressureResult
    """
    return _integrate(stress_integrand(config), config, quad, "stress")


def gap_force(config, which, quad=None):
    """
    Force per area F_1 or F_2 from the vacuum gap on the side of mirror 1 or 2.
    :param config: CavityConfig
    :param which: 1 or 2
    :param quad: QuadratureSpec or None for the defaults
    :return: PressureResult
    """
    return _integrate(gap_integrand(config, which), config, quad, "gap {0} force".format(which))


def net_force_on_slab(config, quad=None):
    """
    Net force per area F = F_2 - F_1 on the slab; positive when the term of gap 2 dominates.
    :param config: CavityConfig with d1, d2 > 0
    :param quad: QuadratureSpec or None for the defaults
    :return: PressureResult
    """
    return _integrate(net_force_integrand(config), config, quad, "net force")
