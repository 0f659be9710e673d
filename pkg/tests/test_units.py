import math

import pytest
from hypothesis import given, strategies as st

from rindler_atom.units import (DEFAULT_CONTEXT as CTX, AccelerationParam, energy_convert,
                                eps_from_si, si_from_eps)


def test_constant_invariants():
    assert CTX.hartree_eV == pytest.approx(CTX.alpha**2 * CTX.mc2_eV, rel=1e-6)
    assert CTX.a0_m * (CTX.mc2_eV / CTX.hbar_eVs / CTX.c_si) * CTX.alpha == pytest.approx(1.0, rel=1e-6)
    assert CTX.a0_m == 5.2917721067e-11


@pytest.mark.parametrize("a_si, eps", [
    (0.0, 0.0),
    (3.0e22, 3e22 * 5.2917721067e-11 / 299792458.0**2),
    (3.397e27, 2.0),
])
def test_eps_from_si(a_si, eps):
    assert eps_from_si(a_si).epsilon == pytest.approx(eps, rel=1e-3, abs=0)


def test_eps_from_si_worked_value():
    assert eps_from_si(3.0e22).epsilon == pytest.approx(1.766e-5, rel=1e-3)


def test_si_from_eps_examples():
    assert si_from_eps(0.0) == 0.0
    assert si_from_eps(1.766e-5) == pytest.approx(3.0e22, rel=1e-3)
    assert si_from_eps(AccelerationParam(2.0)) == pytest.approx(3.397e27, rel=1e-3)


def test_negative_acceleration_rejected():
    with pytest.raises(ValueError):
        eps_from_si(-1.0)
    with pytest.raises(ValueError):
        AccelerationParam(-1e-3)


# products with a0 / c^2 leave the normal double range below ~1e-280
@given(st.one_of(st.just(0.0), st.floats(min_value=1e-250, max_value=1e40)))
def test_si_round_trip(x):
    assert si_from_eps(eps_from_si(x)) == pytest.approx(x, rel=1e-14, abs=0)


@given(st.floats(min_value=0, max_value=1e6, allow_nan=False))
def test_eps_round_trip(e):
    assert eps_from_si(si_from_eps(e)).epsilon == pytest.approx(e, rel=1e-14, abs=0)


def test_energy_convert():
    assert energy_convert(0.0, "hartree", "eV") == 0.0
    assert energy_convert(0.5, "hartree", "eV") == pytest.approx(13.6057, rel=1e-5)
    assert energy_convert(1.0, "rest-mass-units", "eV") == pytest.approx(510998.95, rel=1e-12)
    assert energy_convert(1.0, "rest-mass-units", "hartree") == pytest.approx(1 / CTX.alpha**2, rel=1e-6)
    with pytest.raises(ValueError):
        energy_convert(1.0, "joule", "eV")


@given(st.floats(min_value=-1e8, max_value=1e8, allow_nan=False),
       st.sampled_from(["hartree", "eV", "rest-mass-units"]),
       st.sampled_from(["hartree", "eV", "rest-mass-units"]))
def test_energy_round_trip(v, a, b):
    assert energy_convert(energy_convert(v, a, b), b, a) == pytest.approx(v, rel=1e-14, abs=1e-300)
