"""
Geometry, quadrature settings and results of a cavity calculation.

A CavityConfig is stored in the reduced units of the engine: lengths are k_P * d and the frequencies of the models
are measured in units of omega_P. `units` keeps the reference scale needed to convert back to SI values.
"""
from collections import namedtuple

import numpy as np

from ..config import DEFAULT_REL_TOL, DEFAULT_ABS_TOL, DEFAULT_MAX_EVALS, MIN_MAX_EVALS, MAX_REL_TOL
from ..exceptions import DomainError, UsageError
from ..materials import DielectricModel
from ..units import GOLD, ScaledUnits, to_absolute_pressure


def _check_length(name, value, allow_zero):
    value = float(value)
    if not np.isfinite(value) or value < 0 or (value == 0 and not allow_zero):
        raise DomainError("{0} must be {1}, got {2!r}".format(name, ">= 0" if allow_zero else "> 0", value))
    return value


class CavityConfig(namedtuple("CavityConfig", ["mirror1", "d1", "slab", "d_s", "d2", "mirror2", "units"])):
    """
    mirror 1 | vacuum gap d1 | slab d_s | vacuum gap d2 | mirror 2
    """
    __slots__ = ()

    def __new__(cls, mirror1, d1, slab, d_s, d2, mirror2, units=None):
        for name, model in (("mirror1", mirror1), ("slab", slab), ("mirror2", mirror2)):
            if not isinstance(model, DielectricModel):
                raise UsageError("{0} must be a DielectricModel, got {1!r}".format(name, model))
        if slab.is_perfect_mirror:
            raise UsageError("the slab cannot be a perfect mirror")
        d1 = _check_length("d1", d1, allow_zero=True)
        d2 = _check_length("d2", d2, allow_zero=True)
        d_s = _check_length("d_s", d_s, allow_zero=False)
        if units is None:
            units = GOLD
        elif not isinstance(units, ScaledUnits):
            raise UsageError("units must be ScaledUnits, got {0!r}".format(units))
        return super(CavityConfig, cls).__new__(cls, mirror1, d1, slab, d_s, d2, mirror2, units)

    @classmethod
    def from_position(cls, L, d_s, z, slab, mirror1, mirror2=None, units=None):
        """
        Place the slab inside a cavity of width L: d1 = (L - d_s)(1 + z)/2 and d2 = (L - d_s)(1 - z)/2.
        :param L: cavity width (reduced units)
        :param d_s: slab thickness (reduced units)
        :param z: position parameter in (-1, 1), z = 0 is the center
        :param slab: DielectricModel of the slab
        :param mirror1: DielectricModel of mirror 1
        :param mirror2: DielectricModel of mirror 2, defaults to mirror1
        :param units: ScaledUnits
        :return: CavityConfig
        """
        z = float(z)
        if not -1 < z < 1:
            raise DomainError("position z must lie in (-1, 1), got {0!r}".format(z))
        d_s = _check_length("d_s", d_s, allow_zero=False)
        if not L >= d_s:
            raise DomainError("cavity width L={0!r} is smaller than the slab thickness d_s={1!r}".format(L, d_s))
        half_gap = (L - d_s) / 2.0
        return cls(mirror1, half_gap * (1.0 + z), slab, d_s, half_gap * (1.0 - z),
                   mirror1 if mirror2 is None else mirror2, units)

    @classmethod
    def from_si(cls, mirror1, d1, slab, d_s, d2, mirror2, units=None):
        """
        Build a configuration from lengths in m and models with frequencies in rad/s.
        :param units: reference scale; defaults to the plasma frequency of the slab
        :return: CavityConfig in reduced units
        """
        if units is None:
            if slab.plasma_frequency is None:
                raise UsageError("the slab has no plasma frequency, the reference scale must be given")
            units = ScaledUnits.from_plasma_frequency(slab.plasma_frequency)
        omega_P = units.omega_P
        return cls(mirror1.scaled(omega_P), units.to_dimensionless_length(d1), slab.scaled(omega_P),
                   units.to_dimensionless_length(d_s), units.to_dimensionless_length(d2), mirror2.scaled(omega_P),
                   units)

    @property
    def cavity_width(self):
        """
        :return: L = d1 + d_s + d2
        """
        return self.d1 + self.d_s + self.d2

    @property
    def is_contact(self):
        """
        :return: True if both mirrors touch the slab
        """
        return self.d1 == 0 and self.d2 == 0

    @property
    def position(self):
        """
        :return: z with d1 = (L - d_s)(1 + z)/2, None in the contact configuration
        """
        if self.is_contact:
            return None
        return (self.d1 - self.d2) / (self.d1 + self.d2)

    @property
    def min_length(self):
        """
        :return: smallest positive length of the configuration
        """
        return min(d for d in (self.d_s, self.d1, self.d2) if d > 0)

    def mirrored(self):
        """
        :return: the configuration seen from the other side
        """
        return self._replace(mirror1=self.mirror2, d1=self.d2, d2=self.d1, mirror2=self.mirror1)

    def scaled_units(self):
        return self.units

    def describe(self):
        return "{0} | {1:.6g} | {2} d_s={3:.6g} | {4:.6g} | {5}".format(
            self.mirror1, self.d1, self.slab, self.d_s, self.d2, self.mirror2)


class QuadratureSpec(namedtuple("QuadratureSpec", ["rel_tol", "abs_tol", "max_evals", "xi_scale", "k_scale"])):
    """
    Tolerances, evaluation budget and transform pivots of one double integral. Pivots left at None are chosen
    from the configuration by `resolved`.
    """
    __slots__ = ()

    def __new__(cls, rel_tol=DEFAULT_REL_TOL, abs_tol=DEFAULT_ABS_TOL, max_evals=DEFAULT_MAX_EVALS, xi_scale=None,
                k_scale=None):
        rel_tol = float(rel_tol)
        abs_tol = float(abs_tol)
        if not 0 < rel_tol <= MAX_REL_TOL:
            raise DomainError("rel_tol must lie in (0, {0}], got {1!r}".format(MAX_REL_TOL, rel_tol))
        if not abs_tol >= 0:
            raise DomainError("abs_tol must be >= 0, got {0!r}".format(abs_tol))
        if int(max_evals) < MIN_MAX_EVALS:
            raise DomainError("max_evals must be >= {0}, got {1!r}".format(MIN_MAX_EVALS, max_evals))
        for name, scale in (("xi_scale", xi_scale), ("k_scale", k_scale)):
            if scale is not None and not scale > 0:
                raise DomainError("{0} must be positive, got {1!r}".format(name, scale))
        return super(QuadratureSpec, cls).__new__(cls, rel_tol, abs_tol, int(max_evals), xi_scale, k_scale)

    def resolved(self, config):
        """
        Fill in the transform pivots: xi_scale = omega_P of the slab and k_scale = max(k_P, 1 / (2 d_min)).
        :param config: CavityConfig
        :return: QuadratureSpec with both pivots set
        """
        xi_scale = 1.0 if self.xi_scale is None else self.xi_scale
        k_scale = max(1.0, 0.5 / config.min_length) if self.k_scale is None else self.k_scale
        return self._replace(xi_scale=xi_scale, k_scale=k_scale)


class PressureResult(namedtuple("PressureResult", ["value", "error_estimate", "evals", "converged", "units"])):
    """
    Stress or force per area in units of hbar c k_P^4 with its error estimate.
    """
    __slots__ = ()

    def __new__(cls, value, error_estimate, evals, converged, units=None):
        return super(PressureResult, cls).__new__(cls, float(value), float(error_estimate), int(evals),
                                                  bool(converged), units)

    @property
    def value_si(self):
        """
        :return: value in N/m^2, None without units
        """
        if self.units is None:
            return None
        return to_absolute_pressure(self.value, self.units)

    @property
    def error_si(self):
        if self.units is None:
            return None
        return to_absolute_pressure(self.error_estimate, self.units)

    def __str__(self):
        return "{0:.10g} +- {1:.3g} ({2} evaluations{3})".format(
            self.value, self.error_estimate, self.evals, "" if self.converged else ", not converged")
