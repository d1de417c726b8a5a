"""
Reflection and transmission coefficients at imaginary frequency.

All functions work on real numbers only and accept scalar or numpy array spectral coordinates. Frequencies and
wavevectors are related by the speed of light c, which defaults to the SI value; the integration engine works in
the natural units of the slab plasma frequency and passes c = 1.
"""
from collections import namedtuple
from enum import Enum
from logging import getLogger

import numpy as np

from .config import DENOMINATOR_GUARD
from .exceptions import DomainError, NumericalSingularityError, UsageError
from .materials import VACUUM, DielectricModel
from .units import SPEED_OF_LIGHT

optics_logger = getLogger("OpticsLogger")


class Polarization(Enum):
    TM = "TM"
    TE = "TE"


POLARIZATIONS = (Polarization.TM, Polarization.TE)


class SpectralPoint(namedtuple("SpectralPoint", ["xi", "k", "pol"])):
    """
    Evaluation coordinate (imaginary frequency xi, transverse wavevector k, polarization). xi and k may be numpy
    arrays of a common broadcast shape.
    """
    __slots__ = ()

    def __new__(cls, xi, k, pol=Polarization.TM):
        if np.any(np.asarray(xi) < 0) or np.any(np.asarray(k) < 0):
            raise DomainError("xi and k must be >= 0")
        return super(SpectralPoint, cls).__new__(cls, xi, k, Polarization(pol))

    @property
    def shape(self):
        return np.broadcast(self.xi, self.k).shape

    def location(self, index=None):
        """
        :param index: index into the broadcast arrays or None for scalar points
        :return: (xi, k) as floats
        """
        if index is None or self.shape == ():
            return float(np.asarray(self.xi).flat[0]), float(np.asarray(self.k).flat[0])
        return (float(np.broadcast_to(self.xi, self.shape)[index]),
                float(np.broadcast_to(self.k, self.shape)[index]))


class Kappa(namedtuple("Kappa", ["value"])):
    """
    Perpendicular wavevector sqrt(eps xi^2 / c^2 + k^2) inside a medium.
    """
    __slots__ = ()

    def __float__(self):
        return float(self.value)


class StackCoefficients(namedtuple("StackCoefficients", ["r_minus", "r_plus"])):
    """
    Reflection coefficients seen from inside a layer towards the stacks on its left (minus) and right (plus).
    """
    __slots__ = ()


def _kappa_value(kappa_gap):
    return kappa_gap.value if isinstance(kappa_gap, Kappa) else kappa_gap


def _constant_like(value, point):
    shape = point.shape
    if shape == ():
        return float(value)
    return np.full(shape, float(value))


def _guarded_ratio(numerator, product, point, what):
    """
    numerator / (1 - product), raising NumericalSingularityError where |1 - product| falls below the guard relative
    to the size of its terms, 1 + |product|.
    """
    denominator = 1.0 - product
    small = np.abs(denominator) < DENOMINATOR_GUARD * (1.0 + np.abs(product))
    if np.any(small):
        xi = k = None
        if point is not None:
            index = np.unravel_index(np.argmax(small), np.shape(small)) if np.ndim(small) else None
            xi, k = point.location(index)
        raise NumericalSingularityError("near singular denominator in {0}".format(what), xi=xi, k=k)
    return numerator / denominator


def kappa(model, xi, k, c=SPEED_OF_LIGHT):
    """
    Perpendicular wavevector of a medium at imaginary frequency.
    :param model: DielectricModel, not a perfect mirror
    :param xi: imaginary frequency >= 0
    :param k: transverse wavevector >= 0
    :param c: speed of light in the units of xi / k
    :return: Kappa
    """
    if not isinstance(model, DielectricModel):
        raise UsageError("expected a DielectricModel, got {0!r}".format(model))
    if model.is_perfect_mirror:
        raise UsageError("a perfect mirror has no perpendicular wavevector")
    k = np.asarray(k, dtype=float)
    if np.any(k < 0):
        raise DomainError("transverse wavevector must be >= 0")
    value = np.sqrt(model.epsilon_xi2(xi) / c ** 2 + k ** 2)
    if np.any(value == 0):
        raise DomainError("xi and k must not both vanish in a medium without a plasma term")
    if np.ndim(value) == 0:
        value = float(value)
    return Kappa(value)


def _admittance(model, point, c):
    value = kappa(model, point.xi, point.k, c).value
    if point.pol is Polarization.TM:
        return value * model.inverse_epsilon(point.xi)
    return value


def interface_r(medium_i, medium_j, point, c=SPEED_OF_LIGHT):
    """
    Fresnel reflection coefficient for a wave in medium i reflected at the interface with medium j.
    TE: (kappa_i - kappa_j) / (kappa_i + kappa_j), TM: (eps_j kappa_i - eps_i kappa_j) / (eps_j kappa_i + eps_i kappa_j).
    The TM form is evaluated with kappa / eps, which is exactly 0 where eps diverges.
    :param medium_i: DielectricModel of the incident medium
    :param medium_j: DielectricModel of the reflecting medium
    :param point: SpectralPoint
    :param c: speed of light
    :return: reflection coefficient in [-1, 1]
    """
    y_i = _admittance(medium_i, point, c)
    y_j = _admittance(medium_j, point, c)
    return (y_i - y_j) / (y_i + y_j)


def mirror_r(mirror, point, c=SPEED_OF_LIGHT):
    """
    Reflection coefficient of a half space mirror seen from vacuum.
    :param mirror: DielectricModel; a perfect mirror reflects with +1 (TM) and -1 (TE)
    :param point: SpectralPoint
    :param c: speed of light
    :return: reflection coefficient
    """
    if mirror.is_perfect_mirror:
        return _constant_like(1.0 if point.pol is Polarization.TM else -1.0, point)
    return interface_r(VACUUM, mirror, point, c)


def slab_rt(slab, d_s, point, c=SPEED_OF_LIGHT):
    """
    Reflection and transmission coefficients of a slab of thickness d_s in vacuum.
    :param slab: DielectricModel of the slab
    :param d_s: slab thickness (> 0)
    :param point: SpectralPoint
    :param c: speed of light
    :return: tuple (r, t)
    """
    if not d_s > 0:
        raise DomainError("slab thickness must be positive, got {0!r}".format(d_s))
    if slab.is_perfect_mirror:
        raise UsageError("the slab cannot be a perfect mirror")
    rho = interface_r(VACUUM, slab, point, c)
    attenuation = np.exp(-kappa(slab, point.xi, point.k, c).value * d_s)
    e = attenuation ** 2
    round_trip = rho ** 2 * e
    r = _guarded_ratio(rho * (1.0 - e), round_trip, point, "slab_rt")
    t = _guarded_ratio((1.0 - rho ** 2) * attenuation, round_trip, point, "slab_rt")
    return r, t


def recurrence_r(r, t, R_far, kappa_gap, d_gap, point=None):
    """
    Reflection coefficient of slab + vacuum gap + mirror: r + t^2 R e^{-2 kappa d} / (1 - r R e^{-2 kappa d}).
    :param r: slab reflection coefficient
    :param t: slab transmission coefficient
    :param R_far: mirror reflection coefficient on the far side of the gap
    :param kappa_gap: Kappa (or its value) of the vacuum gap
    :param d_gap: gap width (>= 0)
    :param point: SpectralPoint, only used to report the location of a singular denominator
    :return: composed reflection coefficient
    """
    if d_gap < 0:
        raise DomainError("gap width must be >= 0, got {0!r}".format(d_gap))
    round_trip = R_far * np.exp(-2.0 * _kappa_value(kappa_gap) * d_gap)
    return r + _guarded_ratio(t ** 2 * round_trip, r * round_trip, point, "recurrence_r")


def in_slab_r(rho, R, kappa_gap, d_gap, point=None):
    """
    Effective reflection coefficient seen from inside the slab towards one mirror:
    (-rho + R e^{-2 kappa d}) / (1 - rho R e^{-2 kappa d}).
    :param rho: vacuum to slab interface coefficient
    :param R: mirror reflection coefficient
    :param kappa_gap: Kappa (or its value) of the vacuum gap
    :param d_gap: gap width (>= 0)
    :param point: SpectralPoint, only used to report the location of a singular denominator
    :return: reflection coefficient
    """
    if d_gap < 0:
        raise DomainError("gap width must be >= 0, got {0!r}".format(d_gap))
    round_trip = R * np.exp(-2.0 * _kappa_value(kappa_gap) * d_gap)
    # a mirror in contact with |R| = 1 reflects with R for every rho, also where rho rounds to R
    contact = np.abs(round_trip) == 1.0
    value = _guarded_ratio(np.where(contact, round_trip, round_trip - rho), np.where(contact, 0.0, rho * round_trip),
                           point, "in_slab_r")
    if np.ndim(value) == 0:
        return float(value)
    return value
