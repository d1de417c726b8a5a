from .asymptotics import casimir_ideal, casimir_ideal_reduced, freestanding_nonretarded, \
    freestanding_nonretarded_reduced, thick_slab_asymptote, thick_slab_asymptote_reduced, perfect_mirror_stress, \
    perfect_mirror_stress_reduced, nonretarded_coefficient
from .sweep import SweepKind, SweepSpec, SweepRow, SweepRunner, run_sweep, evaluate_point, row_columns, grid_values
from .presets import PRESETS, PRESET_KINDS, contrast_curves, mirror_limits, position_curves, force_and_stress

__all__ = ["casimir_ideal", "casimir_ideal_reduced", "freestanding_nonretarded", "freestanding_nonretarded_reduced",
           "thick_slab_asymptote", "thick_slab_asymptote_reduced", "perfect_mirror_stress",
           "perfect_mirror_stress_reduced", "nonretarded_coefficient", "SweepKind", "SweepSpec", "SweepRow",
           "SweepRunner", "run_sweep", "evaluate_point", "row_columns", "grid_values", "PRESETS", "PRESET_KINDS",
           "contrast_curves", "mirror_limits", "position_curves", "force_and_stress"]
