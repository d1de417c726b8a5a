"""
Closed form limits of the stress.

The functions without suffix take lengths in m and k_P in rad/m and return N/m^2. The `_reduced` variants take the
reduced thickness D = k_P d_s and return the value in units of hbar c k_P^4, which is what the integration engine
computes.
"""
import math
from logging import getLogger

import numpy as np
from scipy import special

from ..config import FREESTANDING_NR_COEFFICIENT, NONRETARDED_REGIME_MAX, THICK_SLAB_REGIME_MIN
from ..exceptions import DomainError
from ..units import CONSTANTS

sweep_logger = getLogger("SweepLogger")

# terms of the perfect mirror series are dropped once exp(-2 n D) is this far below the first one
_SERIES_DECAY = 50.0
_COEFFICIENT_TERMS = 20000


def _positive(name, value):
    value = float(value)
    if not value > 0 or not np.isfinite(value):
        raise DomainError("{0} must be positive, got {1!r}".format(name, value))
    return value


def casimir_ideal_reduced(D):
    """
    :param D: k_P d
    :return: pi^2 / (240 D^4)
    """
    D = _positive("D", D)
    return math.pi ** 2 / (240.0 * D ** 4)


def casimir_ideal(d):
    """
    Casimir pressure between two perfect mirrors in vacuum.
    :param d: mirror distance in m
    :return: pi^2 hbar c / (240 d^4) in N/m^2
    """
    d = _positive("d", d)
    return math.pi ** 2 * CONSTANTS.hbar_c / (240.0 * d ** 4)


def nonretarded_coefficient():
    """
    Coefficient of the free-standing nonretarded stress F_s = coefficient * k_P d_s * F_C,
    (30 / pi^4) * int_0^inf Li_3((1 + 2 x^2)^-2) dx, summed term by term.
    :return: 0.1898...
    """
    n = np.arange(1, _COEFFICIENT_TERMS + 1, dtype=float)
    integrals = 0.5 * math.sqrt(math.pi) * np.exp(special.gammaln(2 * n - 0.5) - special.gammaln(2 * n))
    return 30.0 / math.pi ** 4 * np.sum(integrals / n ** 3) / math.sqrt(2.0)


def freestanding_nonretarded_reduced(D):
    """
    :param D: k_P d_s
    :return: 0.19 D pi^2 / (240 D^4)
    """
    D = _positive("k_P d_s", D)
    if D > NONRETARDED_REGIME_MAX:
        sweep_logger.warning("k_P d_s = %g is outside of the nonretarded regime (<= %g)", D, NONRETARDED_REGIME_MAX)
    return FREESTANDING_NR_COEFFICIENT * D * casimir_ideal_reduced(D)


def freestanding_nonretarded(d_s, k_P):
    """
    Nonretarded stress in a free-standing plasma slab, 0.19 k_P d_s F_C(d_s).
    :param d_s: slab thickness in m
    :param k_P: omega_P / c of the slab in rad/m
    :return: N/m^2
    """
    k_P = _positive("k_P", k_P)
    return freestanding_nonretarded_reduced(k_P * _positive("d_s", d_s)) * CONSTANTS.hbar_c * k_P ** 4


def thick_slab_asymptote_reduced(D):
    """
    :param D: k_P d_s
    :return: exp(-2 D) / (4 sqrt((pi D)^3))
    """
    D = _positive("k_P d_s", D)
    if D < THICK_SLAB_REGIME_MIN:
        sweep_logger.warning("k_P d_s = %g is below the thick slab regime (>= %g)", D, THICK_SLAB_REGIME_MIN)
    return math.exp(-2.0 * D) / (4.0 * math.sqrt((math.pi * D) ** 3))


def thick_slab_asymptote(d_s, k_P):
    """
    Leading term of the stress in a thick plasma slab.
    :param d_s: slab thickness in m
    :param k_P: omega_P / c of the slab in rad/m
    :return: hbar c k_P^4 exp(-2 k_P d_s) / (4 sqrt((pi k_P d_s)^3)) in N/m^2
    """
    k_P = _positive("k_P", k_P)
    return thick_slab_asymptote_reduced(k_P * _positive("d_s", d_s)) * CONSTANTS.hbar_c * k_P ** 4


def perfect_mirror_stress_reduced(D):
    """
    Exact stress in a plasma slab between perfect mirrors in contact,
    (1 / pi^2) sum_n [K_3(b) / b - K_2(b) / b^2] with b = 2 n D.
    :param D: k_P d_s
    :return: stress in units of hbar c k_P^4
    """
    D = _positive("k_P d_s", D)
    terms = int(math.ceil(1.0 + _SERIES_DECAY / (2.0 * D)))
    b = 2.0 * D * np.arange(1, terms + 1, dtype=float)
    # kve(v, b) = K_v(b) exp(b)
    decay = np.exp(-b)
    values = (special.kve(3, b) / b - special.kve(2, b) / b ** 2) * decay
    return float(np.sum(values[::-1])) / math.pi ** 2


def perfect_mirror_stress(d_s, k_P):
    """
    Exact stress in a plasma slab between perfect mirrors in contact. Reduces to casimir_ideal(d_s) for thin and
    to thick_slab_asymptote for thick slabs.
    :param d_s: slab thickness in m
    :param k_P: omega_P / c of the slab in rad/m
    :return: N/m^2
    """
    k_P = _positive("k_P", k_P)
    return perfect_mirror_stress_reduced(k_P * _positive("d_s", d_s)) * CONSTANTS.hbar_c * k_P ** 4
