import math

import numpy as np
import pytest

from neutrino_sta.algebra.multivector import (
    G0, Multivector, contract_left, exp_bivector, exp_g5, gp, grade, norm, reverse,
)
from neutrino_sta.algebra.spacetime import SpacetimePoint
from neutrino_sta.calculus.residuals import EquationId
from neutrino_sta.exceptions import (
    DegenerateInputError, GradeError, InvalidPlaneError, OffShellError, SingularSpinorError,
)
from neutrino_sta.fields.hertz import Branch
from neutrino_sta.spinor.dirac_hestenes import (
    G21, AnsatzParams, SpinorField, ansatz_couplings, auto_force, current_ansatz, dh_residual,
    field_from_spinor, kinematic_invariants, m1_m2, plane_wave_spinor,
)
from neutrino_sta.spinor.polar import density_and_angle, polar_decompose

POINTS = SpacetimePoint(t=np.array([0.0, 0.7]), x=np.array([0.3, -1.0]), y=0.2, z=np.array([1.5, 0.4]))


@pytest.fixture
def bradyonic():
    return plane_wave_spinor(math.sqrt(2.0), 1.0, 1.0, Branch.BRADYONIC)


@pytest.fixture
def tachyonic():
    return plane_wave_spinor(1.0, math.sqrt(2.0), 1.0, 'tachyonic')


def test_bradyonic_plane_wave_solves_its_equations(bradyonic, fine_grid):
    assert dh_residual(bradyonic, EquationId.EQ_SUPD, fine_grid, richardson=True).max_abs < 1e-8
    assert dh_residual(bradyonic, EquationId.EQ37, fine_grid, richardson=True).max_abs < 1e-6
    report = dh_residual(bradyonic, EquationId.EQ35, fine_grid, {'m1': 0.0, 'm2': 1.0}, richardson=True)
    assert report.max_abs < 1e-8


def test_tachyonic_plane_wave_solves_its_equations(tachyonic, fine_grid):
    assert dh_residual(tachyonic, EquationId.EQ39, fine_grid, richardson=True).max_abs < 1e-8
    assert dh_residual(tachyonic, EquationId.EQ38, fine_grid, richardson=True).max_abs < 1e-6


def test_off_shell_plane_wave_rejected():
    with pytest.raises(OffShellError):
        plane_wave_spinor(1.0, 1.0, 1.0, Branch.BRADYONIC)
    with pytest.raises(OffShellError):
        plane_wave_spinor(math.sqrt(2.0), 1.0, 1.0, Branch.TACHYONIC)


def test_rest_frame_amplitude_has_quarter_turn_angle():
    psi = plane_wave_spinor(1.0, 0.0, 1.0)
    _, beta = density_and_angle(psi(SpacetimePoint()))
    assert float(beta) == pytest.approx(math.pi / 2.0)


def test_dirac_hestenes_equation_with_current_ansatz(fine_grid):
    psi = plane_wave_spinor(1.0, 0.0, 1.0)
    _, beta = density_and_angle(psi(SpacetimePoint()))
    beta = float(beta)
    K, mg_e = ansatz_couplings(psi.m_nu, beta)
    extras = {
        'current': current_ansatz(psi, AnsatzParams(lam=beta)),
        'Lambda': 0.0, 'K': K, 'm_param': mg_e, 'e_charge': 1.0,
    }
    assert dh_residual(psi, EquationId.EQ31, fine_grid, extras, richardson=True).max_abs < 1e-8


def test_ansatz_couplings_null_first_mass():
    K, mg_e = ansatz_couplings(0.05, 0.3)
    first, second = m1_m2(K, mg_e, 0.3)
    assert first == pytest.approx(0.0, abs=1e-15)
    assert second == pytest.approx(0.05)


def test_ansatz_couplings_degenerate_angle():
    with pytest.raises(DegenerateInputError):
        ansatz_couplings(1.0, math.pi / 4.0)


def test_auto_force_vanishes_at_spinor_angle(random_even):
    rho, beta = density_and_angle(random_even)
    psi, beta = random_even[rho > 1e-3], beta[rho > 1e-3]
    scale = norm(psi) ** 4
    for offset in (0.0, math.pi):
        assert np.all(norm(auto_force(psi, beta + offset)) <= 1e-10 * scale)


def test_auto_force_nonzero_off_angle():
    psi = exp_bivector(Multivector.from_blade('g1g3', 0.3))
    _, beta = density_and_angle(psi)
    assert float(norm(auto_force(psi, float(beta) + math.pi / 2.0))) > 1e-3


def test_field_from_spinor_is_a_bivector(bradyonic):
    F = field_from_spinor(bradyonic, 'g2g1')(POINTS)
    assert np.max(norm(F - gp(gp(bradyonic(POINTS), G21), reverse(bradyonic(POINTS))))) < 1e-12
    assert field_from_spinor(bradyonic, G21).grades == frozenset({2})


def test_field_plane_must_be_known(bradyonic):
    with pytest.raises(InvalidPlaneError):
        field_from_spinor(bradyonic, 'g1g2')
    with pytest.raises(InvalidPlaneError):
        current_ansatz(bradyonic, AnsatzParams(), direction='g1')


def test_spinor_field_rejects_odd_values():
    with pytest.raises(GradeError):
        SpinorField(lambda p: G0 + Multivector.zeros(p.shape))(POINTS)


def test_dh_residual_only_for_spinor_equations(bradyonic, fine_grid):
    with pytest.raises(ValueError):
        dh_residual(bradyonic, EquationId.EQ10, fine_grid)


def test_plane_wave_kinematic_invariants(bradyonic):
    invariants = kinematic_invariants(bradyonic, POINTS, 1e-3, richardson=True)
    kappa = math.sqrt(2.0) * G0 - 1.0 * Multivector.from_blade('g3')
    np.testing.assert_allclose(invariants.Lambda, -gp(invariants.v, kappa).scalar, atol=1e-7)
    np.testing.assert_allclose(invariants.K, 0.0, atol=1e-7)


def test_current_ansatz_is_odd(bradyonic):
    J = current_ansatz(bradyonic, AnsatzParams(lam=0.4, g=2.0))(POINTS)
    assert np.max(np.abs(J.coeffs[..., [0, 5, 6, 7, 8, 9, 10, 15]])) < 1e-12


def test_massless_plane_wave_is_a_null_spinor(fine_grid):
    psi = plane_wave_spinor(1.0, 1.0, 0.0)
    assert psi.m_nu == 0.0
    assert dh_residual(psi, EquationId.EQ_SUPD, fine_grid, richardson=True).max_abs < 1e-8
    value = psi(POINTS)
    rho, _ = density_and_angle(value)
    assert np.all(rho < 1e-12 * np.max(norm(value)) ** 2)
    with pytest.raises(SingularSpinorError):
        polar_decompose(value)


@pytest.mark.parametrize('beta0', [0.5, math.pi, -math.pi + 0.01])
def test_kinematic_invariants_continuous_across_angle_cut(beta0):
    psi = SpinorField(lambda p: gp(exp_g5((beta0 + 0.1 * p.t) / 2.0), exp_bivector(G21 * (-0.5 * p.t))))
    invariants = kinematic_invariants(psi, POINTS, 1e-3, richardson=True)
    np.testing.assert_allclose(invariants.Lambda, 0.5, atol=1e-8)
    np.testing.assert_allclose(invariants.K, 0.0, atol=1e-8)
    np.testing.assert_allclose(invariants.Omega.scalar, 0.0, atol=1e-8)
    assert invariants.Omega.isclose(-G21 + Multivector.zeros(POINTS.shape), atol=1e-8)


def test_auto_force_is_vector_part_of_the_full_product(random_even):
    rho, _ = density_and_angle(random_even)
    psi = random_even[rho > 1e-3]
    lam = 0.3
    current = gp(exp_g5(lam), gp(gp(psi, G0), reverse(psi)))
    field = gp(gp(psi, G21), reverse(psi))
    force = auto_force(psi, lam)
    scale = float(np.max(norm(psi))) ** 4
    assert force.isclose(grade(gp(current, field), 1), atol=1e-10 * scale)
    # the left contraction drops the trivector part of the current
    assert not force.isclose(contract_left(current, field), atol=1e-6 * scale)
