import math
from itertools import product

import numpy as np
import pytest

import oracle
from rindler_atom import basis
from rindler_atom.basis import states_up_to
from rindler_atom.perturbation import (DegenerateStateError, HamiltonianSpec,
                                       NonPerturbativeError, degenerate_block, diagonalize_block,
                                       expansion_coefficients, first_order_energy_shift,
                                       matrix_element, mixed_state_amplitude,
                                       perturbed_amplitude, preferred_state)
from rindler_atom.units import DEFAULT_CONTEXT as CTX

GRAV = HamiltonianSpec("gravity", "effective")
COMO = HamiltonianSpec("comoving", "effective")
TABLE_I = [-3.73e4, -1.26e4, -7.04e3, -4.71e3, -3.46e3]
TABLE_II = [9.93e-1, 3.35e-1, 1.87e-1, 1.25e-1, 9.21e-2]
ALL_SPECS = [HamiltonianSpec(v, m, d) for v in ("gravity", "comoving")
             for m in ("effective", "full") for d in ("printed", "cancelling")]


def test_spec_validation():
    with pytest.raises(ValueError):
        HamiltonianSpec("sideways")
    with pytest.raises(ValueError):
        HamiltonianSpec("gravity", "exact")
    with pytest.raises(TypeError):
        matrix_element("gravity", (2, 0, 0), (2, 1, 0))


def test_printed_block_entries():
    assert matrix_element(GRAV, (2, 0, 0), (2, 1, 0)) == pytest.approx(-1.53e6, rel=1e-2)
    assert matrix_element(COMO, (2, 0, 0), (2, 1, 0)) == pytest.approx(10.2, rel=1e-2)
    assert matrix_element(GRAV, (2, 1, 1), (2, 0, 0)) == 0.0


def test_full_mode_regression_against_oracle():
    # frozen from tests/oracle.py: E_h * (E_1 <z> + <z/r>/2 - <d_z>/2), 3D brute force
    frozen = -2.533841085106101
    spec = HamiltonianSpec("comoving", "full", "printed")
    assert matrix_element(spec, (2, 1, 0), (1, 0, 0)) == pytest.approx(frozen, rel=1e-10)
    z = oracle.braket("210", "100", "z").real
    zr = oracle.braket("210", "100", "z/r").real
    dz = oracle.braket("210", "100", "dz").real
    assert frozen == pytest.approx(CTX.hartree_eV * (-0.5 * z + 0.5 * zr - 0.5 * dz), rel=1e-12)


@pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: "-".join(s.as_dict().values()))
def test_ground_shift_zero(spec):
    assert first_order_energy_shift((1, 0, 0), spec) == 0.0


def test_degenerate_target_rejected():
    with pytest.raises(DegenerateStateError, match="degenerate_block"):
        first_order_energy_shift((2, 1, 0), GRAV)


def test_diagonal_parity():
    for s in states_up_to(4):
        for spec in ALL_SPECS:
            assert matrix_element(spec, s, s) == 0.0


@pytest.mark.parametrize("spec, table", [(GRAV, TABLE_I), (COMO, TABLE_II)])
def test_tables(spec, table):
    exp = expansion_coefficients(spec, 6)
    got = [exp.coefficients[n] for n in range(2, 7)]
    np.testing.assert_allclose(got, table, rtol=1e-2)


def test_ratio_law():
    b = expansion_coefficients(GRAV, 30).coefficients
    c = expansion_coefficients(COMO, 30).coefficients
    ratio = -CTX.hartree_eV / 2 / CTX.mc2_eV
    assert ratio == pytest.approx(-2.6625e-5, rel=1e-4)
    for n in b:
        assert c[n] / b[n] == pytest.approx(ratio, rel=1e-6)


def test_expansion_selection_rules_and_limits():
    exp = expansion_coefficients(GRAV, 12)
    assert sorted(exp.coefficients) == list(range(2, 13))
    with pytest.raises(ValueError):
        expansion_coefficients(GRAV, 65)
    with pytest.raises(DegenerateStateError):
        expansion_coefficients(GRAV, 10, target=(2, 0, 0))


@pytest.mark.parametrize("spec", [GRAV, COMO], ids=["gravity", "comoving"])
def test_coefficients_decrease(spec):
    c = expansion_coefficients(spec, 20).coefficients
    mags = [abs(c[n]) for n in range(2, 21)]
    assert all(a > b for a, b in zip(mags, mags[1:]))


def test_convergence_report():
    conv = expansion_coefficients(GRAV, 30).convergence()
    # the bound-state tail decays like n^-3/2, so 1e-3 is not reached by n = 64
    assert 0 < conv["tail_to_leading"] < 1e-2
    assert conv["converged"] is False


def test_hermitian_full_printed():
    states = states_up_to(4)
    for variant in ("gravity", "comoving"):
        spec = HamiltonianSpec(variant, "full", "printed")
        for a, b in product(states, repeat=2):
            ab = matrix_element(spec, a, b)
            ba = matrix_element(spec, b, a)
            assert ab == pytest.approx(ba, rel=1e-10, abs=1e-9)


def test_cancelling_not_hermitian():
    spec = HamiltonianSpec("comoving", "full", "cancelling")
    assert matrix_element(spec, (2, 1, 0), (1, 0, 0)) != pytest.approx(
        matrix_element(spec, (1, 0, 0), (2, 1, 0)), rel=1e-3)


def test_ground_closure_identity():
    # (H1^p - E_1 z) phi_100 has no component along any n10 when d_z is flipped
    spec = HamiltonianSpec("comoving", "full", "cancelling")
    for n in range(2, 11):
        resid = matrix_element(spec, (n, 1, 0), (1, 0, 0)) \
            - CTX.hartree_eV * -0.5 * basis.z_matrix_element((n, 1, 0), (1, 0, 0))
        assert abs(resid) <= 1e-8


def test_cancelling_matches_table_ii():
    full = expansion_coefficients(HamiltonianSpec("comoving", "full", "cancelling"), 30).coefficients
    eff = expansion_coefficients(COMO, 30).coefficients
    for n in full:
        assert full[n] == pytest.approx(eff[n], rel=1e-9)


@pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: "-".join(s.as_dict().values()))
def test_block_structure(spec):
    block = degenerate_block(spec)
    m = block.matrix
    np.testing.assert_allclose(m, m.T, rtol=1e-10, atol=1e-10 * np.abs(m).max())
    assert np.all(m[2:, :] == 0) and np.all(m[:, 2:] == 0)
    shifts = sorted(p.shift for p in block.eigenpairs)
    h = abs(m[0, 1])
    assert shifts == pytest.approx([-h, 0, 0, h], rel=1e-12)
    assert sum(shifts) == pytest.approx(np.trace(m), abs=1e-9 * h)
    V = np.array([p.vector for p in block.eigenpairs]).T
    np.testing.assert_allclose(V.T @ V, np.eye(4), atol=1e-12)


def test_gravity_splitting():
    block = degenerate_block(GRAV)
    by = {p.label: p for p in block.eigenpairs}
    assert by["plus"].shift == pytest.approx(-1.53e6, rel=1e-2)
    assert by["minus"].shift == pytest.approx(1.53e6, rel=1e-2)
    np.testing.assert_allclose(by["plus"].vector, [2**-0.5, 2**-0.5, 0, 0], atol=1e-12)
    assert block.lower.label == "plus"
    e = block.energies(1e-9)
    assert e["plus"] == pytest.approx(basis.eigen_energy(2) - 1.533e-3, rel=1e-12)


def test_comoving_splitting():
    block = degenerate_block(COMO)
    by = {p.label: p for p in block.eigenpairs}
    assert by["minus"].shift == pytest.approx(-10.2, rel=1e-2)
    np.testing.assert_allclose(by["minus"].vector, [2**-0.5, -2**-0.5, 0, 0], atol=1e-12)
    assert block.lower.label == "minus"
    assert preferred_state("comoving") == "minus" and preferred_state("gravity") == "plus"


def test_block_n_guard():
    with pytest.raises(ValueError):
        degenerate_block(GRAV, n=3)


def test_diagonalize_is_deterministic():
    block = degenerate_block(GRAV)
    again = diagonalize_block(block)
    for a, b in zip(block.eigenpairs, again):
        assert a.label == b.label and np.array_equal(a.vector, b.vector)


def test_perturbed_amplitude_zero_eps():
    exp = expansion_coefficients(GRAV, 10)
    pts = np.random.default_rng(0).normal(size=(3, 10))
    np.testing.assert_allclose(perturbed_amplitude(exp, *pts),
                               basis.evaluate_basis_state((1, 0, 0), *pts), rtol=1e-14)


def test_perturbed_amplitude_norm():
    # oracle radial rule stops at 100 a0, too short for n > 6
    exp = expansion_coefficients(GRAV, 6).with_epsilon(3e-7)
    x, y, z, w = oracle.rule()
    psi = perturbed_amplitude(exp, x, y, z)
    assert np.sum(w * np.abs(psi) ** 2) == pytest.approx(1.0, abs=1e-9)


def test_centroid_signs():
    down = expansion_coefficients(GRAV, 30).with_epsilon(3e-7)
    up = expansion_coefficients(COMO, 30).with_epsilon(1e-2)
    assert down.expectation_z() < 0
    assert up.expectation_z() > 0
    x, y, z, w = oracle.rule()
    for exp in (down, up):
        rho = np.abs(perturbed_amplitude(exp, x, y, z)) ** 2
        assert np.sum(w * z * rho) == pytest.approx(exp.expectation_z(), rel=1e-6)


def test_guard():
    exp = expansion_coefficients(COMO, 30)
    with pytest.raises(NonPerturbativeError, match="epsilon=2.0"):
        exp.with_epsilon(2.0)
    forced = exp.with_epsilon(2.0, allow_nonperturbative=True)
    assert not forced.perturbative
    assert expansion_coefficients(GRAV, 30).with_epsilon(3e-7).admixture < 0.01


def test_mixed_states_mirror():
    rng = np.random.default_rng(1)
    x, y, z = rng.normal(size=(3, 50)) * 3
    plus = np.abs(mixed_state_amplitude("plus", x, y, z)) ** 2
    minus = np.abs(mixed_state_amplitude("minus", x, y, -z)) ** 2
    np.testing.assert_allclose(plus, minus, rtol=1e-12, atol=1e-300)


def test_expansion_json():
    d = expansion_coefficients(COMO, 6).with_epsilon(0.01).to_json_dict()
    assert d["variant"] == "comoving" and d["mode"] == "effective" and d["dz_sign"] == "printed"
    assert d["n_max"] == 6 and d["epsilon"] == 0.01
    assert [n for n, _ in d["coefficients"]] == [2, 3, 4, 5, 6]
    assert d["energy_shifts_eV_per_eps"] == {"100": 0.0}
