import math

import numpy as np
import pytest

from neutrino_sta.algebra.multivector import G0, G5, ONE, Multivector, exp_bivector, gp, norm
from neutrino_sta.exceptions import GradeError, SingularSpinorError
from neutrino_sta.spinor.polar import PolarParts, density_and_angle, is_rotor, polar_decompose, recompose


def test_round_trip(random_even):
    rho, _ = density_and_angle(random_even)
    psi = random_even[rho > 1e-3]
    parts = polar_decompose(psi)
    assert recompose(parts).isclose(psi, atol=1e-10)
    assert np.all(parts.rho > 0.0)
    assert np.all((parts.beta > -math.pi) & (parts.beta <= math.pi))


def test_rotor_of_pure_rotor_is_itself():
    R = exp_bivector(Multivector.from_blade('g1g3', 0.3) + Multivector.from_blade('g0g2', 0.2))
    parts = polar_decompose(2.0 * R)
    assert float(parts.rho) == pytest.approx(4.0)
    assert float(parts.beta) == pytest.approx(0.0, abs=1e-12)
    assert parts.R.isclose(R)
    assert is_rotor(parts.R)


def test_pseudoscalar_angle():
    parts = polar_decompose(gp(exp_bivector(Multivector.from_blade('g1g2', 0.4)), ONE + G5))
    assert float(parts.beta) == pytest.approx(math.pi / 2.0)


def test_null_spinor_is_singular():
    with pytest.raises(SingularSpinorError):
        polar_decompose(ONE + Multivector.from_blade('g0g1'))


def test_odd_input_rejected():
    with pytest.raises(GradeError):
        polar_decompose(G0)


def test_recompose_from_parts():
    parts = PolarParts(rho=np.array(9.0), beta=np.array(math.pi), R=ONE)
    assert recompose(parts).isclose(3.0 * G5)
    assert not is_rotor(2.0 * ONE)
    assert float(norm(recompose(parts))) == pytest.approx(3.0)
