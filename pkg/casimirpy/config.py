import numpy as np

# Quadrature defaults for one double integral (dimensionless pressure units, see units.ScaledUnits)
DEFAULT_REL_TOL = 1e-6
DEFAULT_ABS_TOL = 1e-12
DEFAULT_MAX_EVALS = 2000000
MIN_MAX_EVALS = 1000
MAX_REL_TOL = 1e-2

# The transformed unit square is cut into INITIAL_PARTITION x INITIAL_PARTITION rectangles before refining, into
# fewer when max_evals does not cover them
INITIAL_PARTITION = 8
# rectangles narrower than this (in transformed coordinates) are not split any further
MIN_RECTANGLE_WIDTH = 1e-13
# number of rectangles evaluated per numpy batch, bounds the memory of one refinement pass
RECTANGLE_BATCH = 2048

# |1 - r R exp(-2 kappa d)| below this value means a broken configuration, not physics
DENOMINATOR_GUARD = 1e-14

# Default material parameters: gold slab and Drude mirrors with Gamma = 1e-3 Omega_P
GOLD_PLASMA_ENERGY_EV = 9.0
DEFAULT_DAMPING_RATIO = 1e-3

# k_P d_s regimes outside of which the asymptotic closed forms only log a warning
NONRETARDED_REGIME_MAX = 0.2
THICK_SLAB_REGIME_MIN = 5.0

# Printed nonretarded coefficient of the free-standing slab stress
FREESTANDING_NR_COEFFICIENT = 0.19

# Default sweep grids
THICKNESS_GRID = np.geomspace(1e-2, 20.0, 40)
CONTRAST_GRID = (1.0, 10.0, 1e3, 1e5)
POSITION_GRID = np.round(np.linspace(-0.95, 0.95, 39), 10)
POSITION_CAVITY_WIDTHS = (2.0, 3.0, 10.0)  # in units of d_s
POSITION_SLAB_THICKNESS = 0.1  # k_P d_s
POSITION_CONTRAST = 1e3

# Brute force oracle
ORACLE_NODES_PER_AXIS = 2000
ORACLE_MIN_NODES = 100
ORACLE_ROW_CHUNK = 64

# Command line interface
CONFIG_SCHEMA_VERSION = 1
THREADS_ENV_VAR = "CASIMIR_THREADS"
EXIT_SUCCESS = 0
EXIT_VALIDATION_ERROR = 2
EXIT_UNCONVERGED = 3

# Cross-checks of the verify mode
VERIFY_SPECTRAL_POINTS = 1000
VERIFY_QUADRATURE_CONFIGS = 4
VERIFY_COEFFICIENT_TOLERANCE = 1e-10
VERIFY_QUADRATURE_TOLERANCE = 1e-3
