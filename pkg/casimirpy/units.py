"""
Physical constants, unit conversions and the dimensionless scaling scheme.

The engine works in the natural units of the slab plasma frequency: imaginary frequencies are measured in units of
omega_P, wavevectors and inverse lengths in units of k_P = omega_P / c and pressures in units of hbar c k_P^4.
"""
from collections import namedtuple

import numpy as np
from scipy import constants

from .config import GOLD_PLASMA_ENERGY_EV
from .exceptions import DomainError


class PhysicalConstants(namedtuple("PhysicalConstants", ["hbar", "c", "eV_to_angular_frequency"])):
    """
    hbar in J s, c in m/s and the angular frequency (rad/s) which corresponds to a photon energy of 1 eV.
    """
    __slots__ = ()

    @property
    def hbar_c(self):
        return self.hbar * self.c


CONSTANTS = PhysicalConstants(hbar=constants.hbar, c=constants.c,
                              eV_to_angular_frequency=constants.e / constants.hbar)

SPEED_OF_LIGHT = CONSTANTS.c


class ScaledUnits(namedtuple("ScaledUnits", ["k_P"])):
    """
    Reference scale of a calculation. k_P is the inverse length (rad/m) omega_P / c of the slab plasma frequency.
    """
    __slots__ = ()

    def __new__(cls, k_P):
        k_P = float(k_P)
        if not k_P > 0 or not np.isfinite(k_P):
            raise DomainError("k_P must be a positive finite inverse length, got {0!r}".format(k_P))
        return super(ScaledUnits, cls).__new__(cls, k_P)

    @classmethod
    def from_plasma_energy(cls, plasma_energy):
        """
        :param plasma_energy: plasma energy hbar omega_P in eV
        :return: ScaledUnits instance
        """
        return cls(ev_to_kP(plasma_energy))

    @classmethod
    def from_plasma_frequency(cls, omega_P):
        """
        :param omega_P: plasma frequency in rad/s
        :return: ScaledUnits instance
        """
        if not omega_P > 0:
            raise DomainError("plasma frequency must be positive, got {0!r}".format(omega_P))
        return cls(omega_P / CONSTANTS.c)

    @property
    def omega_P(self):
        """
        :return: reference angular frequency in rad/s
        """
        return self.k_P * CONSTANTS.c

    @property
    def pressure_scale(self):
        """
        :return: hbar c k_P^4 in N/m^2
        """
        return CONSTANTS.hbar_c * self.k_P ** 4

    def to_dimensionless_length(self, length):
        """
        :param length: length in m
        :return: k_P * length
        """
        return length * self.k_P

    def to_physical_length(self, dimensionless_length):
        """
        :param dimensionless_length: k_P * length
        :return: length in m
        """
        return dimensionless_length / self.k_P

    def __str__(self):
        return "ScaledUnits<k_P={0:.6e} rad/m>".format(self.k_P)


def ev_to_kP(plasma_energy):
    """
    Convert a plasma energy to the corresponding inverse length k_P = omega_P / c.
    :param plasma_energy: plasma energy in eV
    :return: k_P in rad/m
    """
    plasma_energy = float(plasma_energy)
    if not plasma_energy > 0:
        raise DomainError("plasma energy must be positive, got {0!r} eV".format(plasma_energy))
    return plasma_energy * CONSTANTS.eV_to_angular_frequency / CONSTANTS.c


def to_absolute_pressure(dimensionless_value, scale):
    """
    :param dimensionless_value: pressure in units of hbar c k_P^4 (number or numpy array)
    :param scale: ScaledUnits instance
    :return: pressure in N/m^2
    """
    return dimensionless_value * scale.pressure_scale


# gold slab, hbar omega_P = 9 eV
GOLD = ScaledUnits.from_plasma_energy(GOLD_PLASMA_ENERGY_EV)
