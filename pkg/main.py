import logging

from casimirpy import QuadratureSpec, run_sweep
from casimirpy.scenarios import contrast_curves, perfect_mirror_stress_reduced, casimir_ideal_reduced, \
    nonretarded_coefficient
from casimirpy.util import set_logs_enabled, set_loglevel, LOG

#set_logs_enabled(LOG.ALL)
set_logs_enabled(LOG.SWEEP | LOG.QUADRATURE)
set_loglevel(LOG.ALL, logging.WARNING)
set_loglevel(LOG.SWEEP, logging.INFO)

GRID = (0.01, 0.1, 1.0, 10.0)
quad = QuadratureSpec(rel_tol=1e-5)

print("free-standing nonretarded coefficient: {0:.6f}".format(nonretarded_coefficient()))

for label, spec in contrast_curves(quad, GRID):
    rows = run_sweep(spec, threads=2)
    print(label)
    for row in rows:
        print("  k_P d_s = {0:<6g} F_s/F_C = {1:.6e}".format(row.abscissa, row.stress_over_fc))

# perfect mirrors can be summed exactly
for D in GRID:
    print("perfect mirrors k_P d_s = {0:<6g} F_s/F_C = {1:.6e}".format(
        D, perfect_mirror_stress_reduced(D) / casimir_ideal_reduced(D)))
