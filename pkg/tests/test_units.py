import math

import pytest
from hypothesis import given, strategies as st

from casimirpy.exceptions import DomainError
from casimirpy.scenarios import casimir_ideal, casimir_ideal_reduced
from casimirpy.units import CONSTANTS, GOLD, ScaledUnits, ev_to_kP, to_absolute_pressure

magnitudes = st.floats(min_value=-30.0, max_value=30.0).map(lambda exponent: 10.0 ** exponent)
scales = st.floats(min_value=1e5, max_value=1e9).map(ScaledUnits)


def test_gold_scale():
    # hbar omega_P = 9 eV gives a plasma wavelength 2 pi / k_P of about 138 nm
    assert GOLD.k_P == pytest.approx(4.5609e7, rel=1e-4)
    assert GOLD.to_physical_length(1.0) == pytest.approx(21.925e-9, rel=1e-4)
    assert GOLD.omega_P == pytest.approx(1.36734e16, rel=1e-4)
    assert GOLD.pressure_scale == pytest.approx(1.3681e5, rel=1e-3)


def test_ev_to_kP_is_linear():
    assert ev_to_kP(18.0) == pytest.approx(2 * ev_to_kP(9.0), rel=1e-15)
    assert ScaledUnits.from_plasma_energy(9.0) == GOLD


def test_from_plasma_frequency():
    units = ScaledUnits.from_plasma_frequency(GOLD.omega_P)
    assert units.k_P == pytest.approx(GOLD.k_P, rel=1e-14)


def test_length_conversion_is_inverse():
    length = 37e-9
    assert GOLD.to_physical_length(GOLD.to_dimensionless_length(length)) == pytest.approx(length, rel=1e-15)


@given(magnitudes, st.sampled_from([1.0, -1.0]), scales)
def test_pressure_round_trip(magnitude, sign, units):
    value = sign * magnitude
    assert to_absolute_pressure(value, units) / units.pressure_scale == pytest.approx(value, rel=1e-15)


@given(magnitudes, scales)
def test_length_round_trip(magnitude, units):
    assert units.to_dimensionless_length(units.to_physical_length(magnitude)) == pytest.approx(magnitude, rel=1e-15)
    assert units.to_physical_length(units.to_dimensionless_length(magnitude)) == pytest.approx(magnitude, rel=1e-15)


def test_absolute_pressure_matches_si_casimir():
    d = 100e-9
    D = GOLD.to_dimensionless_length(d)
    assert to_absolute_pressure(casimir_ideal_reduced(D), GOLD) == pytest.approx(casimir_ideal(d), rel=1e-12)


def test_casimir_ideal_at_one_micron():
    assert casimir_ideal(1e-6) == pytest.approx(1.30e-3, rel=1e-2)
    assert casimir_ideal(1e-6) == pytest.approx(math.pi ** 2 * CONSTANTS.hbar_c / 240e-24, rel=1e-14)


@pytest.mark.parametrize("value", [0.0, -1.0, float("nan"), float("inf")])
def test_invalid_scales(value):
    with pytest.raises(DomainError):
        ScaledUnits(value)


@pytest.mark.parametrize("energy", [0.0, -9.0])
def test_invalid_plasma_energy(energy):
    with pytest.raises(DomainError):
        ev_to_kP(energy)
