"""
Reflection coefficients of layered stacks from 2x2 transfer matrices at imaginary frequency.

In every medium the tangential field is written as A exp(-kappa z) + B exp(kappa z); the reflection coefficient of a
stack is B / A in the incident medium when the substrate only carries the decaying wave. The admittances are built
here from the permittivity models directly, independently of the optics module.
"""
from collections import namedtuple

import numpy as np

from ..exceptions import DomainError, UsageError
from ..units import SPEED_OF_LIGHT


class Layer(namedtuple("Layer", ["model", "thickness"])):
    __slots__ = ()

    def __new__(cls, model, thickness):
        if not thickness >= 0:
            raise DomainError("layer thickness must be >= 0, got {0!r}".format(thickness))
        if model.is_perfect_mirror:
            raise UsageError("a perfect mirror can only be the substrate of a stack")
        return super(Layer, cls).__new__(cls, model, float(thickness))


class StackDescription(namedtuple("StackDescription", ["incident", "layers", "substrate"])):
    """
    incident half space | layers ... | substrate half space. The substrate may be a perfect mirror.
    """
    __slots__ = ()

    def __new__(cls, incident, layers, substrate):
        if incident.is_perfect_mirror:
            raise UsageError("the incident medium cannot be a perfect mirror")
        return super(StackDescription, cls).__new__(cls, incident, tuple(layers), substrate)


def _decay_and_admittance(model, point, c):
    xi = np.asarray(point.xi, dtype=float)
    k = np.asarray(point.k, dtype=float)
    decay = np.sqrt(model.epsilon_xi2(xi) / c ** 2 + k * k)
    if point.pol.value == "TM":
        return decay, decay * model.inverse_epsilon(xi)
    return decay, decay


def _interface(y_left, y_right):
    """
    Matrix mapping the amplitudes (A, B) on the right side of an interface to the left side.
    """
    ratio = y_right / y_left
    plus = 0.5 * (1.0 + ratio)
    minus = 0.5 * (1.0 - ratio)
    return np.stack((np.stack((plus, minus), axis=-1), np.stack((minus, plus), axis=-1)), axis=-2)


def _propagation(decay, thickness):
    """
    Propagation through a layer, scaled by exp(-kappa d) so that no entry grows.
    """
    shrink = np.exp(-2.0 * decay * thickness)
    one = np.ones_like(shrink)
    zero = np.zeros_like(shrink)
    return np.stack((np.stack((one, zero), axis=-1), np.stack((zero, shrink), axis=-1)), axis=-2)


def transfer_matrix_r(stack, point, c=SPEED_OF_LIGHT):
    """
    :param stack: StackDescription
    :param point: SpectralPoint (scalar or array coordinates)
    :param c: speed of light in the units of the point
    :return: reflection coefficient of the stack seen from the incident medium
    """
    media = [stack.incident] + [layer.model for layer in stack.layers]
    optical = [_decay_and_admittance(model, point, c) for model in media]
    shape = np.broadcast(np.asarray(point.xi), np.asarray(point.k)).shape

    if stack.substrate.is_perfect_mirror:
        # the mirror reflects with +1 (TM) or -1 (TE) on its surface
        sign = 1.0 if point.pol.value == "TM" else -1.0
        vector = np.stack((np.ones(shape), np.full(shape, sign)), axis=-1)
    else:
        y_substrate = _decay_and_admittance(stack.substrate, point, c)[1]
        start = np.stack((np.ones(shape), np.zeros(shape)), axis=-1)
        vector = np.matmul(_interface(np.broadcast_to(optical[-1][1], shape), np.broadcast_to(y_substrate, shape)),
                           start[..., None])[..., 0]

    for index in range(len(stack.layers), 0, -1):
        decay, admittance = optical[index]
        vector = np.matmul(_propagation(np.broadcast_to(decay, shape), stack.layers[index - 1].thickness),
                           vector[..., None])[..., 0]
        matrix = _interface(np.broadcast_to(optical[index - 1][1], shape), np.broadcast_to(admittance, shape))
        vector = np.matmul(matrix, vector[..., None])[..., 0]

    r = vector[..., 1] / vector[..., 0]
    if r.ndim == 0:
        return float(r)
    return r
