"""
Permittivity models evaluated at imaginary frequency i xi.

Every model is an immutable value (a namedtuple) and can be evaluated at scalar or numpy array frequencies. Besides
epsilon itself the models provide eps * xi^2 and 1 / eps, which stay finite where a plasma-like permittivity
diverges (xi = 0), so that the optics never has to handle an overflowing float.
"""
import math
from collections import namedtuple
from logging import getLogger

import numpy as np

from .config import DEFAULT_DAMPING_RATIO
from .exceptions import DomainError, UsageError

materials_logger = getLogger("MaterialsLogger")

# returned by epsilon() where the permittivity diverges (xi = 0 for plasma-like models)
DIVERGENT = math.inf


def _as_frequency(xi):
    """
    :param xi: imaginary frequency, number or array
    :return: float array
    """
    xi = np.asarray(xi, dtype=float)
    if np.any(xi < 0):
        raise DomainError("imaginary frequency must be >= 0")
    return xi


def _result(value, like):
    """
    Return plain floats for scalar input.
    """
    if np.ndim(like) == 0:
        return float(value)
    return value


class DielectricModel(object):
    """
    Base of all permittivity models. Subclasses are namedtuples and implement _epsilon_xi2 and _inverse_epsilon on
    float arrays.
    """
    __slots__ = ()

    kind = None
    is_perfect_mirror = False

    def epsilon(self, xi):
        """
        :param xi: imaginary frequency in the units of the model frequencies
        :return: eps(i xi), DIVERGENT where the permittivity diverges
        """
        xi = _as_frequency(xi)
        inv = self._inverse_epsilon(xi)
        with np.errstate(divide="ignore"):
            eps = np.where(inv == 0, DIVERGENT, 1.0 / np.where(inv == 0, 1.0, inv))
        return _result(eps, xi)

    def epsilon_xi2(self, xi):
        """
        :param xi: imaginary frequency
        :return: eps(i xi) * xi^2, finite everywhere
        """
        xi = _as_frequency(xi)
        return _result(self._epsilon_xi2(xi), xi)

    def inverse_epsilon(self, xi):
        """
        :param xi: imaginary frequency
        :return: 1 / eps(i xi), exactly 0 where the permittivity diverges
        """
        xi = _as_frequency(xi)
        return _result(self._inverse_epsilon(xi), xi)

    @property
    def plasma_frequency(self):
        """
        :return: plasma frequency of the model or None
        """
        return None

    @property
    def is_regular_at_origin(self):
        return True

    def scaled(self, omega_ref):
        """
        :param omega_ref: reference frequency
        :return: the same model with all frequencies measured in units of omega_ref
        """
        return self

    def to_dict(self):
        """
        :return: dictionary in the format of the run configuration
        """
        return {"model": self.kind}

    def __str__(self):
        return "{0}<{1}>".format(self.__class__.__name__, ", ".join(
            "{0}={1:.6g}".format(k, v) if isinstance(v, float) else "{0}={1}".format(k, v)
            for k, v in zip(self._fields, self)))


class Vacuum(namedtuple("Vacuum", []), DielectricModel):
    __slots__ = ()

    kind = "vacuum"

    def _epsilon_xi2(self, xi):
        return xi ** 2

    def _inverse_epsilon(self, xi):
        return np.ones_like(xi)


class Constant(namedtuple("Constant", ["eps"]), DielectricModel):
    """
    Frequency independent permittivity.
    """
    __slots__ = ()

    kind = "constant"

    def __new__(cls, eps):
        eps = float(eps)
        if not eps > 0 or not np.isfinite(eps):
            raise DomainError("constant permittivity must be positive and finite, got {0!r}".format(eps))
        if eps < 1:
            materials_logger.warning("constant permittivity %g < 1 is not a passive medium at imaginary frequency",
                                     eps)
        return super(Constant, cls).__new__(cls, eps)

    def _epsilon_xi2(self, xi):
        return self.eps * xi ** 2

    def _inverse_epsilon(self, xi):
        return np.full_like(xi, 1.0 / self.eps)

    def to_dict(self):
        return {"model": self.kind, "eps": self.eps}


class Plasma(namedtuple("Plasma", ["omega_P"]), DielectricModel):
    """
    eps(i xi) = 1 + omega_P^2 / xi^2
    """
    __slots__ = ()

    kind = "plasma"

    def __new__(cls, omega_P):
        omega_P = float(omega_P)
        if not omega_P > 0 or not np.isfinite(omega_P):
            raise DomainError("plasma frequency must be positive and finite, got {0!r}".format(omega_P))
        return super(Plasma, cls).__new__(cls, omega_P)

    def _epsilon_xi2(self, xi):
        return xi ** 2 + self.omega_P ** 2

    def _inverse_epsilon(self, xi):
        xi2 = xi ** 2
        return xi2 / (xi2 + self.omega_P ** 2)

    @property
    def plasma_frequency(self):
        return self.omega_P

    @property
    def is_regular_at_origin(self):
        return False

    def scaled(self, omega_ref):
        return Plasma(self.omega_P / omega_ref)

    def to_dict(self):
        return {"model": self.kind, "omega_P": self.omega_P}


class Drude(namedtuple("Drude", ["Omega_P", "Gamma"]), DielectricModel):
    """
    eps(i xi) = 1 + Omega_P^2 / (xi^2 + Gamma^2), Gamma defaults to 1e-3 Omega_P.
    """
    __slots__ = ()

    kind = "drude"

    def __new__(cls, Omega_P, Gamma=None):
        Omega_P = float(Omega_P)
        if not Omega_P > 0 or not np.isfinite(Omega_P):
            raise DomainError("plasma frequency must be positive and finite, got {0!r}".format(Omega_P))
        Gamma = DEFAULT_DAMPING_RATIO * Omega_P if Gamma is None else float(Gamma)
        if not Gamma >= 0 or not np.isfinite(Gamma):
            raise DomainError("damping must be >= 0, got {0!r}".format(Gamma))
        return super(Drude, cls).__new__(cls, Omega_P, Gamma)

    def _epsilon_xi2(self, xi):
        xi2 = xi ** 2
        with np.errstate(invalid="ignore", divide="ignore"):
            ratio = np.where(xi2 + self.Gamma ** 2 > 0, xi2 / (xi2 + self.Gamma ** 2), 1.0)
        return xi2 + self.Omega_P ** 2 * ratio

    def _inverse_epsilon(self, xi):
        damped = xi ** 2 + self.Gamma ** 2
        return damped / (damped + self.Omega_P ** 2)

    @property
    def plasma_frequency(self):
        return self.Omega_P

    @property
    def is_regular_at_origin(self):
        return self.Gamma > 0

    def scaled(self, omega_ref):
        return Drude(self.Omega_P / omega_ref, self.Gamma / omega_ref)

    def to_dict(self):
        return {"model": self.kind, "Omega_P": self.Omega_P, "Gamma": self.Gamma}


class PlasmaShifted(namedtuple("PlasmaShifted", ["base", "omega_P"]), DielectricModel):
    """
    eps(i xi) = base(i xi) + omega_P^2 / xi^2 for a base permittivity which is regular at the origin, e.g. a
    solvent with a plasma-like ionic contribution.
    """
    __slots__ = ()

    kind = "plasma_shifted"

    def __new__(cls, base, omega_P):
        if not isinstance(base, (Vacuum, Constant, Drude)) or not base.is_regular_at_origin:
            raise UsageError("the regular part of a plasma shifted model must be vacuum, constant or a damped "
                             "drude model, got {0}".format(base))
        omega_P = float(omega_P)
        if not omega_P > 0 or not np.isfinite(omega_P):
            raise DomainError("plasma frequency must be positive and finite, got {0!r}".format(omega_P))
        return super(PlasmaShifted, cls).__new__(cls, base, omega_P)

    def _epsilon_xi2(self, xi):
        return self.base._epsilon_xi2(xi) + self.omega_P ** 2

    def _inverse_epsilon(self, xi):
        return xi ** 2 / self._epsilon_xi2(xi)

    @property
    def plasma_frequency(self):
        return self.omega_P

    @property
    def is_regular_at_origin(self):
        return False

    def scaled(self, omega_ref):
        return PlasmaShifted(self.base.scaled(omega_ref), self.omega_P / omega_ref)

    def to_dict(self):
        return {"model": self.kind, "omega_P": self.omega_P, "base": self.base.to_dict()}


class PerfectMirror(namedtuple("PerfectMirror", []), DielectricModel):
    """
    Ideal conductor (Omega_P = infinity). Only legal as a mirror, the reflection coefficients are fixed in the
    optics module.
    """
    __slots__ = ()

    kind = "perfect_mirror"
    is_perfect_mirror = True

    def _fail(self, *args):
        raise UsageError("a perfect mirror has no finite permittivity, use optics.mirror_r")

    _epsilon_xi2 = _fail
    _inverse_epsilon = _fail


VACUUM = Vacuum()
PERFECT_MIRROR = PerfectMirror()

MODEL_KINDS = {cls.kind: cls for cls in (Vacuum, Constant, Plasma, Drude, PlasmaShifted, PerfectMirror)}


def epsilon(model, xi):
    """
    Permittivity at imaginary frequency.
    :param model: DielectricModel
    :param xi: imaginary frequency (>= 0) in the units of the model frequencies
    :return: eps(i xi); DIVERGENT at xi = 0 for plasma-like models
    """
    if not isinstance(model, DielectricModel):
        raise UsageError("expected a DielectricModel, got {0!r}".format(model))
    if model.is_perfect_mirror:
        raise UsageError("a perfect mirror has no finite permittivity, use optics.mirror_r")
    return model.epsilon(xi)


def model_from_dict(description):
    """
    Build a model from its dictionary form (the inverse of DielectricModel.to_dict).
    :param description: dict with a "model" key naming one of MODEL_KINDS and the model parameters
    :return: DielectricModel
    """
    description = dict(description)
    kind = description.pop("model", None)
    if kind not in MODEL_KINDS:
        raise UsageError("unknown dielectric model {0!r}, expected one of {1}".format(kind, sorted(MODEL_KINDS)))
    if "base" in description:
        description["base"] = model_from_dict(description["base"])
    try:
        return MODEL_KINDS[kind](**description)
    except TypeError as e:
        raise UsageError("invalid parameters for {0} model: {1}".format(kind, e))
