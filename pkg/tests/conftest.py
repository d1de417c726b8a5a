import pytest

from casimirpy.lifshitz import CavityConfig, QuadratureSpec
from casimirpy.materials import VACUUM, PERFECT_MIRROR, Plasma, Drude


@pytest.fixture
def plasma_slab():
    """
    Slab with the reference plasma frequency, omega_P = 1 in reduced units.
    """
    return Plasma(1.0)


@pytest.fixture
def drude_mirror():
    """
    :return: factory of Drude mirrors with Gamma = 1e-3 Omega_P
    """
    def make(contrast):
        return Drude(contrast, 1e-3 * contrast)
    return make


@pytest.fixture
def tight_quad():
    return QuadratureSpec(rel_tol=1e-8, abs_tol=0.0)


@pytest.fixture
def vacuum_cavity():
    """
    :return: factory of vacuum slabs between perfect mirrors, the ideal Casimir cavity of width d1 + d_s + d2
    """
    def make(d1, d_s, d2):
        return CavityConfig(PERFECT_MIRROR, d1, VACUUM, d_s, d2, PERFECT_MIRROR)
    return make


@pytest.fixture
def contact_cavity(plasma_slab):
    """
    :return: factory of plasma slabs touching both mirrors
    """
    def make(D, mirror=PERFECT_MIRROR):
        return CavityConfig(mirror, 0.0, plasma_slab, D, 0.0, mirror)
    return make
