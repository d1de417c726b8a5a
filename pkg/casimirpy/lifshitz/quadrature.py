"""
Adaptive cubature over the quarter plane xi >= 0, k >= 0.

Both axes are mapped onto (0, 1) with t = scale * u / (1 - u). The unit square is covered by rectangles which are
integrated with the tensor product of the 15 point Gauss-Kronrod rule (an open rule, neither u = 0 nor u = 1 is ever
evaluated). The difference to the embedded 7 point Gauss rule along each axis gives a directional error estimate and
every rectangle whose error exceeds its share of the tolerance is halved along its worse axis. Refinement is
sequential and deterministic: identical inputs give bit identical results.
"""
from logging import getLogger

import numpy as np

from ..config import INITIAL_PARTITION, MIN_RECTANGLE_WIDTH, RECTANGLE_BATCH
from ..exceptions import NumericalSingularityError
from ..optics import POLARIZATIONS
from ..util import first_nonfinite
from .cavity import PressureResult

quadrature_logger = getLogger("QuadratureLogger")

# 15 point Kronrod nodes (positive half, descending) with the weights of the Kronrod and the embedded Gauss rule
_XGK = np.array([0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                 0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                 0.207784955007898467600689403773245, 0.000000000000000000000000000000000])
_WGK = np.array([0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                 0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                 0.204432940075298892414161999234649, 0.209482141084727828012999174891714])
_WG = np.array([0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                0.381830050505118944950369775488975, 0.417959183673469387755102040816327])


def _mirror(half):
    return np.concatenate((half[:-1], half[-1:], half[-2::-1]))


NODES = np.concatenate((-_XGK[:-1], _XGK[::-1]))
KRONROD_WEIGHTS = _mirror(_WGK)
_gauss_half = np.zeros(8)
_gauss_half[1::2] = _WG
GAUSS_WEIGHTS = _mirror(_gauss_half)
POINTS_PER_RECTANGLE = len(NODES) ** 2


def to_unit_interval(t, scale):
    """
    :param t: coordinate in [0, inf)
    :param scale: transform pivot, t = scale is mapped to u = 1/2
    :return: u in [0, 1)
    """
    return t / (t + scale)


def from_unit_interval(u, scale):
    """
    :param u: coordinate in [0, 1)
    :param scale: transform pivot
    :return: tuple (t, dt/du)
    """
    one_minus = 1.0 - u
    return scale * u / one_minus, scale / one_minus ** 2


def polarization_sum(integrand, polarizations=POLARIZATIONS):
    """
    :param integrand: f(xi, k, pol)
    :param polarizations: polarizations to sum over, None if the integrand takes (xi, k) only
    :return: g(xi, k) returning the sum over the polarizations
    """
    if polarizations is None:
        return integrand

    def summed(xi, k):
        total = 0.0
        for pol in polarizations:
            total = total + integrand(xi, k, pol)
        return total

    return summed


class _Rectangles(object):
    """
    Set of rectangles [u0, u1] x [v0, v1] with their Kronrod values and directional error estimates.
    """
    __slots__ = ("u0", "u1", "v0", "v1", "value", "err_u", "err_v")

    def __init__(self, u0, u1, v0, v1, value, err_u, err_v):
        self.u0, self.u1, self.v0, self.v1 = u0, u1, v0, v1
        self.value, self.err_u, self.err_v = value, err_u, err_v

    def __len__(self):
        return len(self.u0)

    @property
    def error(self):
        return self.err_u + self.err_v

    def take(self, mask):
        return _Rectangles(*(getattr(self, name)[mask] for name in self.__slots__))

    @classmethod
    def concatenate(cls, first, second):
        return cls(*(np.concatenate((getattr(first, name), getattr(second, name))) for name in cls.__slots__))


class _Cubature(object):
    """
    Evaluates the Gauss-Kronrod tensor rule on batches of rectangles.
    """

    def __init__(self, integrand, xi_scale, k_scale):
        self.integrand = integrand
        self.xi_scale = xi_scale
        self.k_scale = k_scale
        self.evals = 0

    def _evaluate_batch(self, u0, u1, v0, v1):
        half_u = 0.5 * (u1 - u0)
        half_v = 0.5 * (v1 - v0)
        u = (0.5 * (u0 + u1))[:, None] + half_u[:, None] * NODES
        v = (0.5 * (v0 + v1))[:, None] + half_v[:, None] * NODES
        xi, dxi = from_unit_interval(u, self.xi_scale)
        k, dk = from_unit_interval(v, self.k_scale)
        xi = xi[:, :, None]
        k = k[:, None, :]
        values = np.asarray(self.integrand(xi, k), dtype=float)
        values = np.broadcast_to(values, np.broadcast(xi, k).shape)
        location = first_nonfinite(values, xi, k)
        if location is not None:
            raise NumericalSingularityError("non finite integrand value", xi=location[0], k=location[1])
        self.evals += values.size
        weighted = values * dxi[:, :, None] * dk[:, None, :]
        area = half_u * half_v
        kk = np.einsum("i,j,bij->b", KRONROD_WEIGHTS, KRONROD_WEIGHTS, weighted) * area
        gk = np.einsum("i,j,bij->b", GAUSS_WEIGHTS, KRONROD_WEIGHTS, weighted) * area
        kg = np.einsum("i,j,bij->b", KRONROD_WEIGHTS, GAUSS_WEIGHTS, weighted) * area
        return kk, np.abs(kk - gk), np.abs(kk - kg)

    def evaluate(self, u0, u1, v0, v1):
        """
        :return: _Rectangles with values and errors of the given rectangles
        """
        parts = [self._evaluate_batch(u0[i:i + RECTANGLE_BATCH], u1[i:i + RECTANGLE_BATCH],
                                      v0[i:i + RECTANGLE_BATCH], v1[i:i + RECTANGLE_BATCH])
                 for i in range(0, len(u0), RECTANGLE_BATCH)]
        value, err_u, err_v = (np.concatenate(p) for p in zip(*parts))
        return _Rectangles(u0, u1, v0, v1, value, err_u, err_v)


def _split(rects):
    """
    Halve every rectangle along the axis with the larger error estimate.
    :return: tuple (u0, u1, v0, v1) of the children
    """
    along_u = rects.err_u >= rects.err_v
    mid_u = np.where(along_u, 0.5 * (rects.u0 + rects.u1), rects.u1)
    mid_v = np.where(along_u, rects.v1, 0.5 * (rects.v0 + rects.v1))
    # first child keeps the lower corner, second child the upper one
    u0 = np.concatenate((rects.u0, np.where(along_u, mid_u, rects.u0)))
    u1 = np.concatenate((mid_u, rects.u1))
    v0 = np.concatenate((rects.v0, np.where(along_u, rects.v0, mid_v)))
    v1 = np.concatenate((mid_v, rects.v1))
    return u0, u1, v0, v1


def _splittable(rects):
    width = np.where(rects.err_u >= rects.err_v, rects.u1 - rects.u0, rects.v1 - rects.v0)
    return width > MIN_RECTANGLE_WIDTH


def initial_partition(max_evals):
    """
    :param max_evals: evaluation budget of one integral
    :return: number of rectangles per axis of the first pass, INITIAL_PARTITION or less when the budget would not
             cover INITIAL_PARTITION^2 rectangles
    """
    n = INITIAL_PARTITION
    while n > 1 and n * n * POINTS_PER_RECTANGLE > max_evals:
        n -= 1
    return n


def integrate_2d(integrand, quad, polarizations=POLARIZATIONS):
    """
    Integrate f over xi in [0, inf) and k in [0, inf).
    :param integrand: vectorised callable f(xi, k, pol), or f(xi, k) if polarizations is None
    :param quad: QuadratureSpec; missing pivots default to 1
    :param polarizations: polarizations summed before any error estimate
    :return: PressureResult without units
    """
    xi_scale = 1.0 if quad.xi_scale is None else quad.xi_scale
    k_scale = 1.0 if quad.k_scale is None else quad.k_scale
    cubature = _Cubature(polarization_sum(integrand, polarizations), xi_scale, k_scale)

    edges = np.linspace(0.0, 1.0, initial_partition(quad.max_evals) + 1)
    u0, v0 = (a.ravel() for a in np.meshgrid(edges[:-1], edges[:-1], indexing="ij"))
    u1, v1 = (a.ravel() for a in np.meshgrid(edges[1:], edges[1:], indexing="ij"))
    rects = cubature.evaluate(u0, u1, v0, v1)

    converged = False
    passes = 0
    while True:
        total = np.sum(rects.value)
        error = np.sum(rects.error)
        tolerance = max(quad.rel_tol * abs(total), quad.abs_tol)
        if error <= tolerance:
            converged = True
            break

        selected = (rects.error > tolerance / len(rects)) & _splittable(rects)
        if not selected.any():
            quadrature_logger.warning("rectangles reached the minimal width, error %.3e > tolerance %.3e",
                                      error, tolerance)
            break

        budget = (quad.max_evals - cubature.evals) // (2 * POINTS_PER_RECTANGLE)
        if budget <= 0:
            break
        if selected.sum() > budget:
            # keep the worst rectangles, ties resolved by position
            candidates = np.flatnonzero(selected)
            order = np.argsort(-rects.error[candidates], kind="stable")[:budget]
            selected = np.zeros(len(rects), dtype=bool)
            selected[candidates[order]] = True

        children = cubature.evaluate(*_split(rects.take(selected)))
        rects = _Rectangles.concatenate(rects.take(~selected), children)
        passes += 1

    if converged:
        quadrature_logger.debug("integral %.12e +- %.3e after %d passes and %d evaluations", total, error, passes,
                                cubature.evals)
    else:
        quadrature_logger.warning("integral %.12e not converged: error %.3e > tolerance %.3e after %d evaluations",
                                  total, error, tolerance, cubature.evals)
    return PressureResult(total, error, cubature.evals, converged)
