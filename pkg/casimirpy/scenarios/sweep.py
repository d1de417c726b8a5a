"""
Parameter sweeps over slab thickness, slab position and mirror contrast.
"""
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from logging import getLogger

import numpy as np

from ..config import DEFAULT_DAMPING_RATIO
from ..exceptions import DomainError, UsageError
from ..lifshitz import CavityConfig, QuadratureSpec, stress_in_slab, net_force_on_slab
from ..materials import VACUUM, Drude
from ..util import EventHook, is_strictly_increasing
from .asymptotics import casimir_ideal_reduced, perfect_mirror_stress_reduced

sweep_logger = getLogger("SweepLogger")


class SweepKind(Enum):
    THICKNESS = "thickness"  # abscissa k_P d_s, mirrors in contact
    POSITION = "position"  # abscissa z at fixed L and d_s
    CONTRAST = "contrast"  # abscissa Omega_P / omega_P of both mirrors

    @property
    def abscissa_name(self):
        """
        :return: column name of the abscissa
        """
        if self == SweepKind.THICKNESS:
            return "k_P_d_s"
        if self == SweepKind.POSITION:
            return "z"
        return "Omega_P_over_omega_P"


class SweepSpec(namedtuple("SweepSpec", ["kind", "grid", "template", "quad", "label"])):
    """
    A sweep of one abscissa over a template configuration. For position sweeps the template fixes L and d_s, for
    contrast sweeps the damping ratio Gamma / Omega_P of its mirrors is kept.
    """
    __slots__ = ()

    def __new__(cls, kind, grid, template, quad=None, label=None):
        kind = SweepKind(kind)
        grid = tuple(float(v) for v in grid)
        if not grid:
            raise DomainError("the sweep grid is empty")
        if not is_strictly_increasing(grid):
            raise DomainError("the sweep grid must be strictly increasing")
        if kind == SweepKind.THICKNESS and grid[0] <= 0:
            raise DomainError("slab thicknesses must be positive")
        if kind == SweepKind.POSITION and not (-1 < grid[0] and grid[-1] < 1):
            raise DomainError("positions z must lie in (-1, 1)")
        if kind == SweepKind.CONTRAST and grid[0] < 0:
            raise DomainError("contrast ratios must be >= 0")
        if not isinstance(template, CavityConfig):
            raise UsageError("the sweep template must be a CavityConfig")
        return super(SweepSpec, cls).__new__(cls, kind, grid, template, quad or QuadratureSpec(),
                                             label or kind.value)

    def config_at(self, abscissa):
        """
        :param abscissa: grid value
        :return: the concrete CavityConfig of one grid point
        """
        template = self.template
        if self.kind == SweepKind.THICKNESS:
            return template._replace(d1=0.0, d_s=abscissa, d2=0.0)
        if self.kind == SweepKind.POSITION:
            return CavityConfig.from_position(template.cavity_width, template.d_s, abscissa, template.slab,
                                              template.mirror1, template.mirror2, template.units)
        return template._replace(mirror1=_contrast_mirror(template.mirror1, abscissa),
                                 mirror2=_contrast_mirror(template.mirror2, abscissa))


def _contrast_mirror(mirror, contrast):
    if contrast == 0:
        return VACUUM
    if isinstance(mirror, Drude):
        return Drude(contrast, contrast * mirror.Gamma / mirror.Omega_P)
    return Drude(contrast, DEFAULT_DAMPING_RATIO * contrast)


class SweepRow(namedtuple("SweepRow", ["abscissa", "config", "stress", "force", "error"])):
    """
    Result of one grid point. `force` is None in the contact configuration, `error` holds the message of a failed
    point.
    """
    __slots__ = ()

    @property
    def casimir_reference(self):
        """
        :return: F_C of the current slab thickness in units of hbar c k_P^4
        """
        return casimir_ideal_reduced(self.config.d_s)

    @property
    def stress_over_fc(self):
        if self.stress is None:
            return None
        return self.stress.value / self.casimir_reference

    @property
    def converged(self):
        if self.error is not None:
            return False
        return all(result.converged for result in (self.stress, self.force) if result is not None)


def evaluate_point(config, quad):
    """
    Stress and, when the slab does not touch a mirror, net force of one configuration. The absolute tolerance of
    quad is taken relative to the stress of the same slab between perfect mirrors in contact, which follows F_C for
    thin and decays like exp(-2 k_P d_s) for thick slabs.
    :return: tuple (stress, force or None)
    """
    quad = quad._replace(abs_tol=quad.abs_tol * perfect_mirror_stress_reduced(config.d_s))
    stress = stress_in_slab(config, quad)
    force = None
    if config.d1 > 0 and config.d2 > 0:
        force = net_force_on_slab(config, quad)
    return stress, force


class SweepRunner(object):
    """
    Evaluates the rows of sweeps, optionally on a thread pool. Rows are reported in grid order through the
    on_row_completed and on_row_failed hooks.
    """

    def __init__(self, threads=1):
        """
        :param threads: number of worker threads
        """
        super(SweepRunner, self).__init__()
        if int(threads) < 1:
            raise DomainError("the number of threads must be >= 1, got {0!r}".format(threads))
        self.threads = int(threads)
        # events
        self.on_row_completed = EventHook("row completed")
        self.on_row_failed = EventHook("row failed")

    def _row(self, spec, abscissa):
        try:
            config = spec.config_at(abscissa)
            stress, force = evaluate_point(config, spec.quad)
            return SweepRow(abscissa, config, stress, force, None)
        except Exception as e:
            sweep_logger.error("%s: point %s=%g failed: %s", spec.label, spec.kind.abscissa_name, abscissa, e)
            return SweepRow(abscissa, None, None, None, str(e) or e.__class__.__name__)

    def run(self, spec):
        """
        :param spec: SweepSpec
        :return: list of SweepRow ordered like the grid
        """
        sweep_logger.info("%s: %d points", spec.label, len(spec.grid))
        if self.threads == 1:
            return self._collect(spec, (self._row(spec, abscissa) for abscissa in spec.grid))
        with ThreadPoolExecutor(max_workers=self.threads) as executor:
            return self._collect(spec, executor.map(lambda abscissa: self._row(spec, abscissa), spec.grid))

    def _collect(self, spec, results):
        rows = []
        for row in results:
            rows.append(row)
            if row.error is None:
                sweep_logger.info("%s: %s=%g F_s/F_C=%.6e", spec.label, spec.kind.abscissa_name, row.abscissa,
                                  row.stress_over_fc)
                self.on_row_completed.fire(spec, row)
            else:
                self.on_row_failed.fire(spec, row)
        return rows


def run_sweep(spec, threads=1, on_row_completed=None, on_row_failed=None):
    """
    :param spec: SweepSpec
    :param threads: number of worker threads
    :param on_row_completed: optional handler(spec, row)
    :param on_row_failed: optional handler(spec, row)
    :return: list of SweepRow ordered by abscissa
    """
    runner = SweepRunner(threads)
    if on_row_completed is not None:
        runner.on_row_completed += on_row_completed
    if on_row_failed is not None:
        runner.on_row_failed += on_row_failed
    return runner.run(spec)


def row_columns(row):
    """
    :param row: SweepRow
    :return: (F_s, F_s/F_C, F, F_s SI, F SI, err F_s, err F, evals) with None for missing values
    """
    stress, force = row.stress, row.force
    evals = sum(result.evals for result in (stress, force) if result is not None)
    return (None if stress is None else stress.value,
            row.stress_over_fc,
            None if force is None else force.value,
            None if stress is None else stress.value_si,
            None if force is None else force.value_si,
            None if stress is None else stress.error_estimate,
            None if force is None else force.error_estimate,
            evals)


def grid_values(rows, column):
    """
    :param rows: list of SweepRow
    :param column: "stress" or "force"
    :return: numpy array of the values, NaN where missing
    """
    return np.array([np.nan if getattr(row, column) is None else getattr(row, column).value for row in rows])
