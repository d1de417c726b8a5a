"""
Brute force reference integral: composite trapezoid rule on a dense grid of the transformed unit square.
Slow on purpose, it shares nothing with the adaptive engine but the integrand.
"""
from collections import namedtuple
from logging import getLogger

import numpy as np
from scipy import integrate

from ..config import ORACLE_NODES_PER_AXIS, ORACLE_MIN_NODES, ORACLE_ROW_CHUNK
from ..exceptions import DomainError
from ..optics import POLARIZATIONS

oracle_logger = getLogger("OracleLogger")


class GridOracleSpec(namedtuple("GridOracleSpec", ["nodes_per_axis", "xi_scale", "k_scale"])):
    __slots__ = ()

    def __new__(cls, nodes_per_axis=ORACLE_NODES_PER_AXIS, xi_scale=1.0, k_scale=1.0):
        if int(nodes_per_axis) < ORACLE_MIN_NODES:
            raise DomainError("the oracle needs at least {0} nodes per axis".format(ORACLE_MIN_NODES))
        if not xi_scale > 0 or not k_scale > 0:
            raise DomainError("transform pivots must be positive")
        return super(GridOracleSpec, cls).__new__(cls, int(nodes_per_axis), float(xi_scale), float(k_scale))

    @classmethod
    def like(cls, quad, nodes_per_axis=ORACLE_NODES_PER_AXIS):
        """
        :param quad: resolved QuadratureSpec whose pivots are reused
        :return: GridOracleSpec
        """
        return cls(nodes_per_axis, quad.xi_scale, quad.k_scale)


def _axis(nodes, scale):
    """
    :return: node spacing in u, coordinates t of the nodes below u = 1 and dt/du at them
    """
    u = np.linspace(0.0, 1.0, nodes)
    inner = u[:-1]
    return u[1] - u[0], scale * inner / (1.0 - inner), scale / (1.0 - inner) ** 2


def _closed(values):
    """
    Append the node at u = 1 (t = inf), where every integrand of the quarter plane vanishes.
    """
    shape = values.shape[:-1] + (1,)
    return np.concatenate((values, np.zeros(shape)), axis=-1)


def brute_force_integral(integrand, spec, polarizations=POLARIZATIONS):
    """
    Integrate f over the quarter plane xi, k >= 0. Nodes at infinity and the corner xi = k = 0 contribute 0; the
    edge xi = 0 is evaluated directly, so the integrand must handle its exact limit there.
    :param integrand: vectorised f(xi, k, pol), or f(xi, k) if polarizations is None
    :param spec: GridOracleSpec
    :param polarizations: polarizations summed at every node
    :return: float
    """
    h_xi, xi, j_xi = _axis(spec.nodes_per_axis, spec.xi_scale)
    h_k, k, j_k = _axis(spec.nodes_per_axis, spec.k_scale)

    def evaluate(x, y):
        if polarizations is None:
            return integrand(x, y)
        return sum(integrand(x, y, pol) for pol in polarizations)

    # integral over k for every xi row
    rows_integral = np.empty(len(xi))
    for start in range(0, len(xi), ORACLE_ROW_CHUNK):
        rows = slice(start, start + ORACLE_ROW_CHUNK)
        x = xi[rows, None]
        y = np.broadcast_to(k[None, :], (len(x), len(k)))
        if start == 0:
            # the corner is excluded: first row without k = 0
            values = np.zeros((len(x), len(k)))
            values[0, 1:] = evaluate(x[:1], y[:1, 1:])
            values[1:] = evaluate(x[1:], y[1:])
        else:
            values = evaluate(x, y)
        rows_integral[rows] = integrate.trapezoid(_closed(values * j_k[None, :]), dx=h_k, axis=1)
    total = float(integrate.trapezoid(_closed(rows_integral * j_xi), dx=h_xi))
    oracle_logger.debug("trapezoid integral on %d^2 nodes: %.12e", spec.nodes_per_axis, total)
    return total
