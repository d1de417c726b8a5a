"""
Parsing and validation of the JSON run configuration.

Lengths are given either reduced (keys with a k_P_ prefix, e.g. "k_P_ds") or in m ("d_s"). Plasma frequencies of the
materials are given as an energy ("plasma_energy_eV"), an angular frequency in rad/s ("omega_P") or relative to the
reference plasma frequency ("contrast"). Everything is converted to the reduced units of the engine here.
"""
import json
import numbers
from collections import namedtuple
from logging import getLogger

import numpy as np

from ..config import CONFIG_SCHEMA_VERSION, DEFAULT_DAMPING_RATIO, GOLD_PLASMA_ENERGY_EV, THICKNESS_GRID, \
    POSITION_GRID, CONTRAST_GRID
from ..exceptions import ConfigValidationError, UnknownConfigKeysError, UnsupportedSchemaError, \
    UnknownMaterialError, DomainError, UsageError
from ..lifshitz import CavityConfig, QuadratureSpec
from ..materials import VACUUM, PERFECT_MIRROR, Constant, Plasma, Drude, PlasmaShifted
from ..scenarios import SweepKind, SweepSpec, PRESETS, PRESET_KINDS
from ..units import GOLD, ScaledUnits, ev_to_kP
from ..util import geometric_grid, linear_grid

cli_logger = getLogger("CommandLineLogger")

SCENARIOS = ("stress", "force", "sweep", "asymptote", "verify")

GEOMETRY_KEYS = {"k_P_ds", "d_s", "k_P_L", "L", "z", "k_P_d1", "k_P_d2", "d1", "d2", "contact"}
MATERIAL_KEYS = {"slab", "mirrors", "mirror1", "mirror2"}
TOP_LEVEL_KEYS = {"schema", "scenario", "description", "reference", "sweep", "quadrature", "output",
                  "threads"} | GEOMETRY_KEYS | MATERIAL_KEYS
SERIES_KEYS = {"label"} | GEOMETRY_KEYS | MATERIAL_KEYS
SWEEP_KEYS = {"kind", "grid", "series", "preset"}
GRID_KEYS = {"start", "stop", "num", "spacing"}
QUADRATURE_KEYS = {"rel_tol", "abs_tol", "max_evals"}
MATERIAL_NODE_KEYS = {"model", "eps", "plasma_energy_eV", "omega_P", "contrast", "damping_ratio", "Gamma", "base"}
FREQUENCY_KEYS = ("plasma_energy_eV", "omega_P", "contrast")

DEFAULT_GRIDS = {
    SweepKind.THICKNESS: tuple(THICKNESS_GRID),
    SweepKind.POSITION: tuple(POSITION_GRID),
    SweepKind.CONTRAST: tuple(CONTRAST_GRID),
}


class RunConfig(namedtuple("RunConfig", ["scenario", "cases", "sweep_kind", "grid", "preset", "quad", "units",
                                         "output", "threads"])):
    """
    Validated run. `cases` is a tuple of (label, CavityConfig); for sweeps the configurations are templates.
    """
    __slots__ = ()

    def sweep_specs(self):
        """
        :return: list of (label, SweepSpec) of a sweep run
        """
        if self.preset is not None:
            if self.grid is None:
                return PRESETS[self.preset](self.quad, units=self.units)
            return PRESETS[self.preset](self.quad, self.grid, units=self.units)
        return [(label, SweepSpec(self.sweep_kind, self.grid, template, self.quad, label))
                for label, template in self.cases]

    def with_overrides(self, output=None, threads=None):
        """
        :return: RunConfig with the output path and thread count given on the command line
        """
        changes = {}
        if output is not None:
            changes["output"] = output
        if threads is not None:
            changes["threads"] = threads
        return self._replace(**changes)


def _check_keys(document, allowed, where):
    if not isinstance(document, dict):
        raise ConfigValidationError("{0} must be an object".format(where))
    unknown = set(document) - allowed
    if unknown:
        raise UnknownConfigKeysError(unknown, where)


def _number(document, key, where):
    value = document[key]
    if isinstance(value, bool) or not isinstance(value, numbers.Real) or not np.isfinite(value):
        raise ConfigValidationError("{0}.{1} must be a finite number, got {2!r}".format(where, key, value))
    return float(value)


def _reference_units(document):
    """
    The reference plasma frequency: explicit "reference", else the slab plasma frequency, else gold.
    """
    reference = document.get("reference")
    if reference is not None:
        _check_keys(reference, {"plasma_energy_eV", "omega_P"}, "reference")
        if len(reference) != 1:
            raise ConfigValidationError("reference needs exactly one of plasma_energy_eV or omega_P")
        if "plasma_energy_eV" in reference:
            return ScaledUnits.from_plasma_energy(_number(reference, "plasma_energy_eV", "reference"))
        return ScaledUnits.from_plasma_frequency(_number(reference, "omega_P", "reference"))
    slab = document.get("slab")
    if isinstance(slab, dict):
        if "plasma_energy_eV" in slab:
            return ScaledUnits.from_plasma_energy(_number(slab, "plasma_energy_eV", "slab"))
        if "omega_P" in slab:
            return ScaledUnits.from_plasma_frequency(_number(slab, "omega_P", "slab"))
    return GOLD


def _reduced_frequency(node, where, units):
    given = [key for key in FREQUENCY_KEYS if key in node]
    if len(given) != 1:
        raise ConfigValidationError("{0} needs exactly one of {1}".format(where, ", ".join(FREQUENCY_KEYS)))
    key = given[0]
    value = _number(node, key, where)
    if key == "plasma_energy_eV":
        return ev_to_kP(value) / units.k_P
    if key == "omega_P":
        return value / units.omega_P
    return value


def parse_material(node, where, units):
    """
    :param node: "perfect", "vacuum", "gold" or an object with a "model" key
    :param where: name of the node used in error messages
    :param units: reference ScaledUnits
    :return: DielectricModel in reduced units
    """
    if isinstance(node, str):
        if node in ("perfect", "perfect_mirror"):
            return PERFECT_MIRROR
        if node == "vacuum":
            return VACUUM
        if node == "gold":
            return Plasma(ev_to_kP(GOLD_PLASMA_ENERGY_EV) / units.k_P)
        raise UnknownMaterialError("unknown material {0!r} in {1}".format(node, where))
    _check_keys(node, MATERIAL_NODE_KEYS, where)
    model = node.get("model")
    if model in ("vacuum", "perfect_mirror"):
        if len(node) > 1:
            raise UnknownConfigKeysError(set(node) - {"model"}, where)
        return VACUUM if model == "vacuum" else PERFECT_MIRROR
    if model == "constant":
        if "eps" not in node:
            _missing(where, "eps")
        return Constant(_number(node, "eps", where))
    if model == "plasma":
        return Plasma(_reduced_frequency(node, where, units))
    if model == "drude":
        omega = _reduced_frequency(node, where, units)
        if "damping_ratio" in node and "Gamma" in node:
            raise ConfigValidationError("{0}: give either damping_ratio or Gamma".format(where))
        if "Gamma" in node:
            return Drude(omega, _number(node, "Gamma", where) / units.omega_P)
        ratio = _number(node, "damping_ratio", where) if "damping_ratio" in node else DEFAULT_DAMPING_RATIO
        return Drude(omega, ratio * omega)
    if model == "plasma_shifted":
        if "base" not in node:
            _missing(where, "base")
        return PlasmaShifted(parse_material(node["base"], where + ".base", units),
                             _reduced_frequency(node, where, units))
    raise UnknownMaterialError("unknown dielectric model {0!r} in {1}".format(model, where))


def _missing(where, key):
    raise ConfigValidationError("{0} requires {1!r}".format(where, key))


def _length(document, reduced_key, si_key, units):
    if reduced_key in document and si_key in document:
        raise ConfigValidationError("give either {0} or {1}, not both".format(reduced_key, si_key))
    if reduced_key in document:
        return _number(document, reduced_key, "configuration")
    if si_key in document:
        return units.to_dimensionless_length(_number(document, si_key, "configuration"))
    return None


def _materials(document, units):
    slab = parse_material(document.get("slab", "gold"), "slab", units)
    if slab.is_perfect_mirror:
        raise ConfigValidationError("the slab cannot be a perfect mirror")
    if "mirrors" in document and ("mirror1" in document or "mirror2" in document):
        raise ConfigValidationError("give either mirrors or mirror1/mirror2")
    if "mirrors" in document:
        mirror1 = mirror2 = parse_material(document["mirrors"], "mirrors", units)
    else:
        mirror1 = parse_material(document.get("mirror1", "perfect"), "mirror1", units)
        mirror2 = parse_material(document.get("mirror2", "perfect"), "mirror2", units)
    return slab, mirror1, mirror2


def _cavity(document, units, kind, grid, scenario):
    """
    Build the cavity configuration (or sweep template) of one case.
    """
    slab, mirror1, mirror2 = _materials(document, units)
    d_s = _length(document, "k_P_ds", "d_s", units)
    L = _length(document, "k_P_L", "L", units)
    d1 = _length(document, "k_P_d1", "d1", units)
    d2 = _length(document, "k_P_d2", "d2", units)
    z = _number(document, "z", "configuration") if "z" in document else None
    contact = document.get("contact", False)
    if not isinstance(contact, bool):
        raise ConfigValidationError("contact must be true or false")

    if kind == SweepKind.THICKNESS:
        if any(v is not None for v in (L, d1, d2, z)):
            raise ConfigValidationError("thickness sweeps use the contact configuration, remove L, z and d1/d2")
        return CavityConfig(mirror1, 0.0, slab, grid[0] if d_s is None else d_s, 0.0, mirror2, units)

    if d_s is None:
        raise ConfigValidationError("the slab thickness (k_P_ds or d_s) is required")

    if kind == SweepKind.POSITION:
        if L is None or any(v is not None for v in (d1, d2, z)) or contact:
            raise ConfigValidationError("position sweeps require L and d_s and take z from the grid")
        if not L > d_s:
            raise ConfigValidationError("the cavity width L must exceed the slab thickness d_s")
        return CavityConfig.from_position(L, d_s, 0.0, slab, mirror1, mirror2, units)

    placements = sum((contact, z is not None, d1 is not None or d2 is not None))
    if placements != 1:
        raise ConfigValidationError("exactly one of contact, z or (d1, d2) must be given")
    if contact:
        if L is not None and L != d_s:
            raise ConfigValidationError("in contact the cavity width L must equal d_s")
        config = CavityConfig(mirror1, 0.0, slab, d_s, 0.0, mirror2, units)
    elif z is not None:
        if not -1 < z < 1:
            raise ConfigValidationError("z must lie in (-1, 1), got {0!r}".format(z))
        if L is None:
            raise ConfigValidationError("z requires the cavity width L")
        if L < d_s:
            raise ConfigValidationError("the cavity width L must not be smaller than the slab thickness d_s")
        config = CavityConfig.from_position(L, d_s, z, slab, mirror1, mirror2, units)
    else:
        if d1 is None or d2 is None:
            raise ConfigValidationError("both d1 and d2 are required")
        if L is not None and not np.isclose(L, d1 + d_s + d2, rtol=1e-9, atol=0.0):
            raise ConfigValidationError("L must equal d1 + d_s + d2")
        config = CavityConfig(mirror1, d1, slab, d_s, d2, mirror2, units)

    if scenario == "force" and not (config.d1 > 0 and config.d2 > 0):
        raise ConfigValidationError("the net force requires d1 > 0 and d2 > 0")
    return config


def _grid(node, kind):
    if node is None:
        return DEFAULT_GRIDS[kind]
    if isinstance(node, list):
        if not node:
            raise ConfigValidationError("sweep.grid is empty")
        return tuple(_number({"grid": value}, "grid", "sweep") for value in node)
    _check_keys(node, GRID_KEYS, "sweep.grid")
    for key in ("start", "stop", "num"):
        if key not in node:
            _missing("sweep.grid", key)
    spacing = node.get("spacing", "log" if kind == SweepKind.THICKNESS else "linear")
    if spacing not in ("log", "linear"):
        raise ConfigValidationError("sweep.grid.spacing must be log or linear")
    start, stop = _number(node, "start", "sweep.grid"), _number(node, "stop", "sweep.grid")
    num = int(_number(node, "num", "sweep.grid"))
    if num < 1:
        raise ConfigValidationError("sweep.grid.num must be >= 1")
    if spacing == "log":
        if start <= 0:
            raise ConfigValidationError("a log spaced grid must start above 0")
        return geometric_grid(start, stop, num)
    return linear_grid(start, stop, num)


def _quadrature(node):
    if node is None:
        return QuadratureSpec()
    _check_keys(node, QUADRATURE_KEYS, "quadrature")
    arguments = {key: _number(node, key, "quadrature") for key in node}
    if "max_evals" in arguments:
        arguments["max_evals"] = int(arguments["max_evals"])
    return QuadratureSpec(**arguments)


def _threads(document):
    if "threads" not in document:
        return None
    threads = document["threads"]
    if isinstance(threads, bool) or not isinstance(threads, int) or threads < 1:
        raise ConfigValidationError("threads must be a positive integer")
    return threads


def parse_config(content):
    """
    :param content: JSON text or an already decoded dictionary
    :return: validated RunConfig
    """
    if isinstance(content, (str, bytes)):
        try:
            document = json.loads(content)
        except ValueError as e:
            raise ConfigValidationError("invalid JSON: {0}".format(e))
    else:
        document = content
    _check_keys(document, TOP_LEVEL_KEYS, "configuration")
    if document.get("schema") != CONFIG_SCHEMA_VERSION:
        raise UnsupportedSchemaError("unsupported schema {0!r}, expected {1}".format(document.get("schema"),
                                                                                  CONFIG_SCHEMA_VERSION))
    scenario = document.get("scenario", "stress")
    if scenario not in SCENARIOS:
        raise ConfigValidationError("unknown scenario {0!r}, expected one of {1}".format(scenario,
                                                                                        ", ".join(SCENARIOS)))
    output = document.get("output")
    if output is not None and not isinstance(output, str):
        raise ConfigValidationError("output must be a path")

    try:
        units = _reference_units(document)
        quad = _quadrature(document.get("quadrature"))
        threads = _threads(document)
        sweep = document.get("sweep", {})
        _check_keys(sweep, SWEEP_KEYS, "sweep")

        if scenario == "verify":
            return RunConfig(scenario, (), None, None, None, quad, units, output, threads)

        if scenario == "asymptote":
            grid = _grid(sweep.get("grid"), SweepKind.THICKNESS)
            return RunConfig(scenario, (), SweepKind.THICKNESS, grid, None, quad, units, output, threads)

        if scenario == "sweep":
            return _sweep_config(document, sweep, quad, units, output, threads)

        config = _cavity(document, units, None, None, scenario)
        return RunConfig(scenario, (("", config),), None, None, None, quad, units, output, threads)
    except (DomainError, UsageError) as e:
        raise ConfigValidationError(str(e))


def _sweep_config(document, sweep, quad, units, output, threads):
    preset = sweep.get("preset")
    if preset is not None:
        if preset not in PRESETS:
            raise ConfigValidationError("unknown preset {0!r}, expected one of {1}".format(
                preset, ", ".join(sorted(PRESETS))))
        if set(sweep) - {"preset", "grid"} or (set(document) & (GEOMETRY_KEYS | MATERIAL_KEYS)):
            raise ConfigValidationError("a preset sweep only accepts a grid override")
        grid = None
        if "grid" in sweep:
            grid = _grid(sweep["grid"], PRESET_KINDS[preset])
        return RunConfig("sweep", (), PRESET_KINDS[preset], grid, preset, quad, units, output, threads)

    if "kind" not in sweep:
        raise ConfigValidationError("sweep requires a kind or a preset")
    try:
        kind = SweepKind(sweep["kind"])
    except ValueError:
        raise ConfigValidationError("unknown sweep kind {0!r}".format(sweep["kind"]))
    grid = _grid(sweep.get("grid"), kind)

    series = sweep.get("series", [{"label": kind.value}])
    if not isinstance(series, list) or not series:
        raise ConfigValidationError("sweep.series must be a non empty list")
    cases = []
    base = {key: value for key, value in document.items() if key in GEOMETRY_KEYS | MATERIAL_KEYS}
    for index, item in enumerate(series):
        where = "sweep.series[{0}]".format(index)
        _check_keys(item, SERIES_KEYS, where)
        label = item.get("label", "series{0}".format(index))
        if not isinstance(label, str) or not label:
            raise ConfigValidationError("{0}.label must be a non empty string".format(where))
        merged = dict(base)
        if set(item) & {"mirror1", "mirror2"}:
            merged.pop("mirrors", None)
        if "mirrors" in item:
            merged.pop("mirror1", None)
            merged.pop("mirror2", None)
        merged.update((key, value) for key, value in item.items() if key != "label")
        cases.append((label, _cavity(merged, units, kind, grid, "sweep")))
    labels = [label for label, _ in cases]
    if len(set(labels)) != len(labels):
        raise ConfigValidationError("sweep series labels must be unique")
    # validate the grid against the kind before any integral runs
    for label, template in cases:
        SweepSpec(kind, grid, template, quad, label)
    return RunConfig("sweep", tuple(cases), kind, grid, None, quad, units, output, threads)


def load_document(path):
    """
    :param path: path of a JSON run configuration
    :return: decoded document
    """
    try:
        with open(path, "r") as f:
            content = f.read()
    except (IOError, OSError) as e:
        raise ConfigValidationError("can not read {0}: {1}".format(path, e))
    cli_logger.debug("read configuration %s", path)
    try:
        return json.loads(content)
    except ValueError as e:
        raise ConfigValidationError("invalid JSON in {0}: {1}".format(path, e))
