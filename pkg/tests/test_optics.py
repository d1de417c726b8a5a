import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from casimirpy.exceptions import DomainError, NumericalSingularityError, UsageError
from casimirpy.materials import VACUUM, PERFECT_MIRROR, Constant, Plasma, Drude
from casimirpy.optics import Polarization, POLARIZATIONS, SpectralPoint, kappa, interface_r, mirror_r, slab_rt, \
    recurrence_r, in_slab_r

C = 1.0
coordinates = st.floats(min_value=1e-3, max_value=1e3)
polarizations = st.sampled_from(POLARIZATIONS)
metals = st.builds(Drude, st.floats(min_value=1e-2, max_value=1e5), st.floats(min_value=0.0, max_value=10.0)) | \
    st.builds(Plasma, st.floats(min_value=1e-2, max_value=1e5))


def test_spectral_point():
    point = SpectralPoint(np.array([[1.0], [2.0]]), np.array([0.5, 1.5, 2.5]), "TE")
    assert point.pol is Polarization.TE
    assert point.shape == (2, 3)
    assert point.location((1, 2)) == (2.0, 2.5)
    assert SpectralPoint(1.0, 2.0).location() == (1.0, 2.0)
    with pytest.raises(DomainError):
        SpectralPoint(-1.0, 1.0)


def test_kappa():
    assert kappa(VACUUM, 3.0, 4.0, C).value == pytest.approx(5.0)
    assert kappa(Plasma(1.0), 0.0, 0.0, C).value == pytest.approx(1.0)
    assert float(kappa(Constant(4.0), 1.0, 0.0, C)) == pytest.approx(2.0)
    # SI units: xi = c k gives sqrt(2) k in vacuum
    assert kappa(VACUUM, 299792458.0, 1.0).value == pytest.approx(math.sqrt(2.0), rel=1e-12)


def test_kappa_errors():
    with pytest.raises(UsageError):
        kappa(PERFECT_MIRROR, 1.0, 1.0, C)
    with pytest.raises(DomainError):
        kappa(VACUUM, 1.0, -1.0, C)
    with pytest.raises(DomainError):
        kappa(VACUUM, 0.0, 0.0, C)


@pytest.mark.parametrize("pol", POLARIZATIONS)
def test_interface_between_equal_media(pol):
    assert interface_r(VACUUM, VACUUM, SpectralPoint(0.7, 1.3, pol), C) == 0.0
    model = Drude(3.0, 0.1)
    assert interface_r(model, model, SpectralPoint(0.7, 1.3, pol), C) == 0.0


def test_interface_vacuum_plasma():
    point = SpectralPoint(1.0, 1.0, Polarization.TE)
    kappa_v, kappa_p = math.sqrt(2.0), math.sqrt(3.0)
    assert interface_r(VACUUM, Plasma(1.0), point, C) == pytest.approx((kappa_v - kappa_p) / (kappa_v + kappa_p))
    tm = point._replace(pol=Polarization.TM)
    # eps = 2 at xi = 1
    expected = (2.0 * kappa_v - kappa_p) / (2.0 * kappa_v + kappa_p)
    assert interface_r(VACUUM, Plasma(1.0), tm, C) == pytest.approx(expected)


def test_interface_antisymmetric():
    point = SpectralPoint(0.3, 2.0, Polarization.TM)
    assert interface_r(Plasma(1.0), VACUUM, point, C) == pytest.approx(-interface_r(VACUUM, Plasma(1.0), point, C))


def test_plasma_tm_reflects_perfectly_at_zero_frequency():
    k = np.array([1e-3, 1.0, 1e3])
    r = interface_r(VACUUM, Plasma(1.0), SpectralPoint(0.0, k, Polarization.TM), C)
    np.testing.assert_array_equal(r, 1.0)


def test_mirror_r():
    assert mirror_r(PERFECT_MIRROR, SpectralPoint(1.0, 1.0, "TM")) == 1.0
    assert mirror_r(PERFECT_MIRROR, SpectralPoint(1.0, 1.0, "TE")) == -1.0
    values = mirror_r(PERFECT_MIRROR, SpectralPoint(np.ones(4), np.ones(4), "TE"))
    np.testing.assert_array_equal(values, -np.ones(4))
    point = SpectralPoint(0.5, 0.5, "TM")
    assert mirror_r(Plasma(2.0), point, C) == interface_r(VACUUM, Plasma(2.0), point, C)


def test_mirror_contrast_approaches_perfect_mirror():
    point = SpectralPoint(1.0, 1.0, "TE")
    assert mirror_r(Drude(1e5, 0.0), point, C) == pytest.approx(-1.0, abs=1e-4)


def test_transparent_slab():
    point = SpectralPoint(0.4, 0.3, "TM")
    r, t = slab_rt(VACUUM, 2.0, point, C)
    assert r == 0.0
    assert t == pytest.approx(math.exp(-0.5 * 2.0))


def test_thick_slab_reflects_like_half_space():
    point = SpectralPoint(0.5, 0.5, "TE")
    r, t = slab_rt(Plasma(1.0), 100.0, point, C)
    assert r == pytest.approx(interface_r(VACUUM, Plasma(1.0), point, C), rel=1e-12)
    assert t == pytest.approx(0.0, abs=1e-40)


def test_slab_errors():
    point = SpectralPoint(1.0, 1.0)
    with pytest.raises(DomainError):
        slab_rt(Plasma(1.0), 0.0, point, C)
    with pytest.raises(UsageError):
        slab_rt(PERFECT_MIRROR, 1.0, point, C)


def test_recurrence_without_far_mirror():
    assert recurrence_r(0.3, 0.6, 0.0, 1.0, 0.5) == 0.3


def test_recurrence_with_transparent_slab():
    # r = 0, t = exp(-kappa d_s): the mirror is seen through the whole distance
    value = recurrence_r(0.0, math.exp(-0.5), -1.0, 1.0, 0.25)
    assert value == pytest.approx(-math.exp(-1.0 - 0.5))


def test_recurrence_guard():
    with pytest.raises(NumericalSingularityError) as info:
        recurrence_r(1.0, 0.0, 1.0, 0.0, 0.0, SpectralPoint(0.0, 0.0))
    assert info.value.xi == 0.0 and info.value.k == 0.0
    with pytest.raises(DomainError):
        recurrence_r(0.1, 0.1, 1.0, 1.0, -1.0)


def test_guard_is_relative_to_the_denominator_terms():
    # |1 - r R| = 1.5e-14 is below 1e-14 (1 + |r R|)
    with pytest.raises(NumericalSingularityError):
        recurrence_r(1.0, 0.1, 1.0 - 1.5e-14, 1.0, 0.0)
    value = recurrence_r(1.0, 0.1, 1.0 - 1e-12, 1.0, 0.0)
    assert value == pytest.approx(1.0 + 0.01 / 1e-12, rel=1e-3)
    with pytest.raises(NumericalSingularityError):
        in_slab_r(1.0 - 1e-15, 1.0 - 1e-15, 1.0, 1e-300)


def test_in_slab_r_values():
    assert in_slab_r(0.4, 0.0, 1.0, 1.0) == pytest.approx(-0.4)
    assert in_slab_r(0.0, 0.8, 2.0, 0.5) == pytest.approx(0.8 * math.exp(-2.0))
    expected = (0.5 * math.exp(-1.0) - 0.2) / (1.0 - 0.2 * 0.5 * math.exp(-1.0))
    assert in_slab_r(0.2, 0.5, 1.0, 0.5) == pytest.approx(expected)


@pytest.mark.parametrize("R", [1.0, -1.0])
def test_in_slab_r_perfect_mirror_in_contact(R):
    rho = np.array([0.0, 0.5, 1.0, -1.0])
    np.testing.assert_array_equal(in_slab_r(rho, R, 1.0, 0.0), R)


def test_errors_report_location():
    point = SpectralPoint(np.array([0.5, 2.0]), np.array([1.0, 3.0]))
    with pytest.raises(NumericalSingularityError) as info:
        recurrence_r(np.array([0.1, 1.0]), 0.0, 1.0, 0.0, 0.0, point)
    assert (info.value.xi, info.value.k) == (2.0, 3.0)
    assert "xi=2.0" in str(info.value)


@given(metals, metals, coordinates, coordinates, polarizations)
@settings(max_examples=300)
def test_reflection_is_bounded(m1, m2, xi, k, pol):
    point = SpectralPoint(xi, k, pol)
    assert abs(interface_r(m1, m2, point, C)) <= 1.0
    assert abs(mirror_r(m1, point, C)) <= 1.0


@given(metals, st.floats(min_value=1e-2, max_value=10.0), coordinates, coordinates, polarizations)
@settings(max_examples=300)
def test_slab_coefficients_are_bounded(slab, d_s, xi, k, pol):
    r, t = slab_rt(slab, d_s, SpectralPoint(xi, k, pol), C)
    assert abs(r) <= 1.0
    assert 0.0 <= t <= 1.0 + 1e-12
    assert r * r + t * t <= 1.0 + 1e-12


@given(metals, metals, st.floats(min_value=0.0, max_value=10.0), coordinates, coordinates, polarizations)
@settings(max_examples=300)
def test_in_slab_coefficient_is_bounded(slab, mirror, d_gap, xi, k, pol):
    point = SpectralPoint(xi, k, pol)
    rho = interface_r(VACUUM, slab, point, C)
    value = in_slab_r(rho, mirror_r(mirror, point, C), kappa(VACUUM, xi, k, C), d_gap, point)
    assert abs(value) <= 1.0 + 1e-12


@given(st.floats(min_value=1.0, max_value=100.0), st.floats(min_value=1.0, max_value=100.0), coordinates)
def test_polarizations_coincide_at_large_k_only_for_equal_media(eps_i, eps_j, xi):
    k = 1e9
    tm = interface_r(Constant(eps_i), Constant(eps_j), SpectralPoint(xi, k, Polarization.TM), C)
    te = interface_r(Constant(eps_i), Constant(eps_j), SpectralPoint(xi, k, Polarization.TE), C)
    assert te == pytest.approx(0.0, abs=1e-9)
    assert tm == pytest.approx((eps_j - eps_i) / (eps_j + eps_i), abs=1e-9)
    if eps_i == eps_j:
        assert tm == te == 0.0
    else:
        assert abs(tm - te) > 1e-9 or abs(eps_i - eps_j) < 1e-6


def test_vectorised_matches_scalar():
    xi = np.array([0.1, 1.0, 5.0])
    k = np.array([2.0, 0.3, 1.0])
    slab = Drude(2.0, 0.01)
    for pol in POLARIZATIONS:
        r, t = slab_rt(slab, 0.7, SpectralPoint(xi, k, pol), C)
        for i in range(3):
            r_i, t_i = slab_rt(slab, 0.7, SpectralPoint(xi[i], k[i], pol), C)
            assert r[i] == pytest.approx(r_i, rel=1e-14)
            assert t[i] == pytest.approx(t_i, rel=1e-14)
