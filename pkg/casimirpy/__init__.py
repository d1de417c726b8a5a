"""
Casimir stress in and net force on a metal slab in a planar cavity, evaluated with the Lifshitz theory at imaginary
frequency:

    mirror 1 | vacuum gap d1 | slab d_s | vacuum gap d2 | mirror 2
"""

__version__ = "0.1.0"

from .units import GOLD, ScaledUnits, ev_to_kP, to_absolute_pressure
from .materials import Vacuum, Constant, Plasma, Drude, PlasmaShifted, PerfectMirror, VACUUM, PERFECT_MIRROR, \
    epsilon
from .lifshitz import CavityConfig, QuadratureSpec, PressureResult, stress_in_slab, gap_force, net_force_on_slab
from .scenarios import SweepKind, SweepSpec, run_sweep, casimir_ideal, freestanding_nonretarded, \
    thick_slab_asymptote, perfect_mirror_stress

__all__ = ["__version__", "GOLD", "ScaledUnits", "ev_to_kP", "to_absolute_pressure", "Vacuum", "Constant", "Plasma",
           "Drude", "PlasmaShifted", "PerfectMirror", "VACUUM", "PERFECT_MIRROR", "epsilon",
           "CavityConfig", "QuadratureSpec", "PressureResult", "stress_in_slab", "gap_force", "net_force_on_slab",
           "SweepKind", "SweepSpec", "run_sweep", "casimir_ideal", "freestanding_nonretarded", "thick_slab_asymptote",
           "perfect_mirror_stress"]
