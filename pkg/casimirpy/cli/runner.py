"""
Command line front end: `casimir [stress|force|sweep|asymptote|verify] --config run.json --out result.csv`.
"""
import argparse
import csv
import logging
import os
import sys
from logging import getLogger

from .. import __version__
from ..config import EXIT_SUCCESS, EXIT_VALIDATION_ERROR, EXIT_UNCONVERGED, THREADS_ENV_VAR, CONFIG_SCHEMA_VERSION, \
    VERIFY_SPECTRAL_POINTS, VERIFY_QUADRATURE_CONFIGS, VERIFY_COEFFICIENT_TOLERANCE, VERIFY_QUADRATURE_TOLERANCE
from ..exceptions import ConfigValidationError, DomainError, UsageError
from ..oracle import verify_stack_coefficients, verify_quadrature
from ..scenarios import SweepRow, SweepRunner, evaluate_point, row_columns, casimir_ideal, \
    freestanding_nonretarded, thick_slab_asymptote, perfect_mirror_stress
from ..util import LOG, set_logs_enabled, set_loglevel, format_float
from .runconfig import SCENARIOS, parse_config, load_document

cli_logger = getLogger("CommandLineLogger")

COLUMNS = ("F_s_dimensionless", "F_s_over_FC", "F_dimensionless", "F_s_SI", "F_SI", "err_Fs", "err_F", "evals",
           "converged")
ASYMPTOTE_COLUMNS = ("k_P_d_s", "F_C_SI", "F_s_nr_SI", "F_s_thick_SI", "F_s_perfect_SI")


def _output_path(config, label=None):
    path = config.output or "{0}.csv".format(config.scenario)
    if label is None:
        return path
    stem, extension = os.path.splitext(path)
    return "{0}_{1}{2}".format(stem, label, extension or ".csv")


def write_rows(path, abscissa_name, rows):
    """
    Write sweep rows as CSV. Failed rows keep their abscissa, empty values and converged = false.
    :param path: output file
    :param abscissa_name: name of the first column
    :param rows: list of SweepRow
    """
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow((abscissa_name,) + COLUMNS)
        for row in rows:
            if row.error is not None:
                writer.writerow([format_float(row.abscissa)] + [""] * (len(COLUMNS) - 2) + ["0", "false"])
                continue
            values = row_columns(row)
            writer.writerow([format_float(row.abscissa)] + [format_float(v) for v in values[:-1]] +
                            [str(values[-1]), "true" if row.converged else "false"])
    cli_logger.info("wrote %d rows to %s", len(rows), path)


def _run_single(config):
    cavity = config.cases[0][1]
    if cavity.position is not None:
        abscissa_name, abscissa = "z", cavity.position
    else:
        abscissa_name, abscissa = "k_P_d_s", cavity.d_s
    try:
        stress, force = evaluate_point(cavity, config.quad)
    except Exception as e:
        cli_logger.error("evaluation of %s failed: %s", cavity.describe(), e)
        row = SweepRow(abscissa, cavity, None, None, str(e) or e.__class__.__name__)
    else:
        if force is not None:
            cli_logger.info("net force F = %s", force)
        cli_logger.info("stress F_s = %s", stress)
        row = SweepRow(abscissa, cavity, stress, force, None)
    write_rows(_output_path(config), abscissa_name, [row])
    return [row]


def _run_sweep(config):
    runner = SweepRunner(config.threads or 1)
    runner.on_row_failed += lambda spec, row: cli_logger.error("%s: row %g failed: %s", spec.label, row.abscissa,
                                                               row.error)
    rows = []
    for label, spec in config.sweep_specs():
        series = runner.run(spec)
        write_rows(_output_path(config, label), spec.kind.abscissa_name, series)
        rows.extend(series)
    return rows


def _run_asymptote(config):
    k_P = config.units.k_P
    path = _output_path(config)
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(ASYMPTOTE_COLUMNS)
        for D in config.grid:
            d_s = config.units.to_physical_length(D)
            writer.writerow([format_float(v) for v in (D, casimir_ideal(d_s), freestanding_nonretarded(d_s, k_P),
                                                      thick_slab_asymptote(d_s, k_P),
                                                      perfect_mirror_stress(d_s, k_P))])
    cli_logger.info("wrote %d closed form rows to %s", len(config.grid), path)
    return EXIT_SUCCESS


def _run_verify(config):
    coefficients = verify_stack_coefficients(VERIFY_SPECTRAL_POINTS)
    quadrature = verify_quadrature(VERIFY_QUADRATURE_CONFIGS, quad=config.quad._replace(abs_tol=0.0))
    passed = True
    for deviations, tolerance in ((coefficients, VERIFY_COEFFICIENT_TOLERANCE),
                                  (quadrature, VERIFY_QUADRATURE_TOLERANCE)):
        for name, deviation in sorted(deviations.items()):
            ok = deviation <= tolerance
            passed = passed and ok
            print("{0:<14} max deviation {1:.3e} (tolerance {2:.0e}) {3}".format(name, deviation, tolerance,
                                                                                "ok" if ok else "FAILED"))
    return EXIT_SUCCESS if passed else EXIT_UNCONVERGED


def run(config):
    """
    Execute a validated run and write its CSV files.
    :param config: RunConfig
    :return: exit status, EXIT_UNCONVERGED if any row failed or did not converge
    """
    if config.scenario == "asymptote":
        return _run_asymptote(config)
    if config.scenario == "verify":
        return _run_verify(config)
    rows = _run_sweep(config) if config.scenario == "sweep" else _run_single(config)
    unconverged = [row for row in rows if not row.converged]
    if unconverged:
        cli_logger.warning("%d of %d rows failed or did not converge", len(unconverged), len(rows))
        return EXIT_UNCONVERGED
    return EXIT_SUCCESS


def _threads_from_environment():
    value = os.environ.get(THREADS_ENV_VAR)
    if value is None:
        return None
    try:
        threads = int(value)
    except ValueError:
        raise ConfigValidationError("{0} must be a positive integer, got {1!r}".format(THREADS_ENV_VAR, value))
    if threads < 1:
        raise ConfigValidationError("{0} must be a positive integer, got {1!r}".format(THREADS_ENV_VAR, value))
    return threads


def build_parser():
    parser = argparse.ArgumentParser(prog="casimir", description="Casimir stress in and force on a metal slab in a "
                                                                 "planar cavity.")
    parser.add_argument("scenario", nargs="?", choices=SCENARIOS, help="override the scenario of the configuration")
    parser.add_argument("--config", help="JSON run configuration")
    parser.add_argument("--out", help="CSV output path (sweeps append the series label)")
    parser.add_argument("--rel-tol", type=float, help="relative tolerance of every double integral")
    parser.add_argument("--threads", type=int, help="worker threads of a sweep (default ${0})".format(THREADS_ENV_VAR))
    parser.add_argument("--verify", action="store_true", help="run the oracle cross-checks")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug output")
    parser.add_argument("--version", action="version", version="%(prog)s {0}".format(__version__))
    return parser


def main(argv=None):
    """
    :param argv: command line arguments without the program name
    :return: exit status
    """
    args = build_parser().parse_args(argv)

    set_logs_enabled(LOG.ALL)
    set_loglevel(LOG.ALL, logging.DEBUG if args.verbose else logging.INFO)

    try:
        document = load_document(args.config) if args.config else {"schema": CONFIG_SCHEMA_VERSION}
        if not isinstance(document, dict):
            raise ConfigValidationError("the configuration must be a JSON object")
        if args.verify:
            document["scenario"] = "verify"
        elif args.scenario:
            document["scenario"] = args.scenario
        if args.rel_tol is not None:
            quadrature = document.get("quadrature")
            document["quadrature"] = dict(quadrature if isinstance(quadrature, dict) else {}, rel_tol=args.rel_tol)
        if args.threads is not None and args.threads < 1:
            raise ConfigValidationError("--threads must be a positive integer")
        config = parse_config(document)
        threads = args.threads or _threads_from_environment()
        config = config.with_overrides(output=args.out, threads=threads)
    except (ConfigValidationError, DomainError, UsageError) as e:
        cli_logger.error("invalid configuration: %s", e)
        return EXIT_VALIDATION_ERROR

    return run(config)


if __name__ == "__main__":
    sys.exit(main())
