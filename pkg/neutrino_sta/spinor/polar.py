"""Polar decomposition psi = sqrt(rho) exp(beta gamma5 / 2) R of even multivectors"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from neutrino_sta.algebra.multivector import ONE, Multivector, exp_g5, gp, odd, reverse
from neutrino_sta.config.settings import Settings
from neutrino_sta.exceptions import GradeError, SingularSpinorError


@dataclass(frozen=True)
class PolarParts:
    """rho >= 0, beta in (-pi, pi] and a rotor R with R reverse(R) = 1"""

    rho: np.ndarray
    beta: np.ndarray
    R: Multivector


def density_and_angle(psi: Multivector) -> Tuple[np.ndarray, np.ndarray]:
    """rho = |psi reverse(psi)| and beta = atan2(pseudoscalar, scalar) of psi reverse(psi)"""
    bilinear = gp(psi, reverse(psi))
    s, p = bilinear.scalar, bilinear.pseudoscalar
    return np.hypot(s, p), np.arctan2(p, s)


def polar_decompose(psi: Multivector, tol: float = Settings.TOLERANCE_ABS) -> PolarParts:
    """Decompose an even multivector; raises SingularSpinorError where psi reverse(psi) ~ 0"""
    if np.any(np.abs(odd(psi).coeffs) > tol * (1.0 + np.abs(psi.coeffs).max(initial=0.0))):
        raise GradeError("Polar decomposition requires an even multivector")
    rho, beta = density_and_angle(psi)
    if np.any(rho <= tol):
        raise SingularSpinorError("psi * reverse(psi) vanishes; the polar form does not exist")
    # atan2 returns -pi for (-0.0, negative); keep the principal value in (-pi, pi]
    beta = np.where(beta <= -np.pi, np.pi, beta)
    rotor = gp(psi, exp_g5(-beta / 2.0)) / np.sqrt(rho)
    return PolarParts(rho=rho, beta=beta, R=rotor)


def recompose(parts: PolarParts) -> Multivector:
    """sqrt(rho) exp(beta gamma5 / 2) R"""
    return gp(exp_g5(parts.beta / 2.0), parts.R) * np.sqrt(parts.rho)


def is_rotor(R: Multivector, tol: float = Settings.TOLERANCE_ABS) -> bool:
    unit = gp(R, reverse(R)).isclose(ONE + Multivector.zeros(R.shape), atol=tol, rtol=0.0)
    return unit and not np.any(np.abs(odd(R).coeffs) > tol)
