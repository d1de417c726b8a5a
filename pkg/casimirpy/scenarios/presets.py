"""
Sweeps which regenerate the thickness, contrast and position curves of a plasma slab in a cavity.
Every preset returns a list of (label, SweepSpec) tuples, one per curve.
"""
from ..config import THICKNESS_GRID, CONTRAST_GRID, POSITION_GRID, POSITION_CAVITY_WIDTHS, POSITION_SLAB_THICKNESS, \
    POSITION_CONTRAST, DEFAULT_DAMPING_RATIO
from ..lifshitz import CavityConfig
from ..materials import VACUUM, PERFECT_MIRROR, Plasma, Drude
from ..units import GOLD
from .sweep import SweepKind, SweepSpec

SLAB = Plasma(1.0)


def _drude_mirror(contrast):
    return Drude(contrast, DEFAULT_DAMPING_RATIO * contrast)


def contrast_curves(quad=None, grid=THICKNESS_GRID, contrasts=CONTRAST_GRID, units=GOLD):
    """
    Thickness dependence of the stress between Drude mirrors in contact, one curve per contrast Omega_P / omega_P.
    """
    series = []
    for contrast in sorted(contrasts, reverse=True):
        label = "Omega_P_{0:g}".format(contrast)
        template = CavityConfig(_drude_mirror(contrast), 0.0, SLAB, grid[0], 0.0, _drude_mirror(contrast), units)
        series.append((label, SweepSpec(SweepKind.THICKNESS, grid, template, quad, label)))
    return series


def mirror_limits(quad=None, grid=THICKNESS_GRID, units=GOLD):
    """
    Thickness dependence of the stress in a gold slab between perfect mirrors and in a free-standing gold slab.
    """
    series = []
    for label, mirror in (("perfect", PERFECT_MIRROR), ("freestanding", VACUUM)):
        template = CavityConfig(mirror, 0.0, SLAB, grid[0], 0.0, mirror, units)
        series.append((label, SweepSpec(SweepKind.THICKNESS, grid, template, quad, label)))
    return series


def position_curves(quad=None, grid=POSITION_GRID, widths=POSITION_CAVITY_WIDTHS, d_s=POSITION_SLAB_THICKNESS,
              contrast=POSITION_CONTRAST, units=GOLD):
    """
    Position dependence of the stress in a thin slab for several cavity widths L (in units of d_s).
    """
    series = []
    for width in widths:
        label = "L_{0:g}d_s".format(width)
        template = CavityConfig.from_position(width * d_s, d_s, 0.0, SLAB, _drude_mirror(contrast), units=units)
        series.append((label, SweepSpec(SweepKind.POSITION, grid, template, quad, label)))
    return series


def force_and_stress(quad=None, grid=POSITION_GRID, width=3.0, d_s=POSITION_SLAB_THICKNESS, contrast=POSITION_CONTRAST,
               units=GOLD):
    """
    Stress in and net force on the slab in an L = 3 d_s cavity.
    """
    return position_curves(quad, grid, (width,), d_s, contrast, units)


PRESETS = {
    "contrast_curves": contrast_curves,
    "mirror_limits": mirror_limits,
    "position_curves": position_curves,
    "force_and_stress": force_and_stress,
}

# abscissa of each preset, a grid override is read in this kind
PRESET_KINDS = {
    "contrast_curves": SweepKind.THICKNESS,
    "mirror_limits": SweepKind.THICKNESS,
    "position_curves": SweepKind.POSITION,
    "force_and_stress": SweepKind.POSITION,
}
