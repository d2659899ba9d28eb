"""Hertz-potential solutions on the bradyonic and tachyonic branches.

The potential Pi = Phi(x, y) exp(gamma5 (omega t - k z)) B is a bivector; the
vector potential A = -delta(Pi) and the field F = dA follow by nested finite
differences. When box(Pi) = 0 the field is free, and F exp(+gamma5 chi) is
static: the derotated field F0 obeys a massive equation.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np
from scipy.special import j0

from neutrino_sta.algebra.multivector import G0, G3, Multivector, is_pure_grade, norm
from neutrino_sta.algebra.spacetime import SpacetimePoint
from neutrino_sta.calculus.diffops import codiff_field, d_field, negated
from neutrino_sta.calculus.fieldmap import FieldMap
from neutrino_sta.config.settings import Settings
from neutrino_sta.exceptions import DegenerateInputError, GradeError, OffShellError, ProfileMismatchError
from neutrino_sta.fields.duality import phase_rotate
from neutrino_sta.utils.logging_config import get_logger

logger = get_logger(__name__)


class Branch(str, Enum):
    BRADYONIC = 'bradyonic'
    TACHYONIC = 'tachyonic'


class ProfileKind(str, Enum):
    EXPONENTIAL = 'exponential'
    PLANE = 'plane'
    BESSEL = 'bessel'


# Sign s of the profile equation lap2 Phi = s m^2 Phi, per kind
_PROFILE_SIGN = {
    ProfileKind.EXPONENTIAL: 1.0,
    ProfileKind.PLANE: -1.0,
    ProfileKind.BESSEL: -1.0,
}
# Sign of m^2 in omega^2 - k^2 = sign * m^2, per branch
_DISPERSION_SIGN = {Branch.BRADYONIC: -1.0, Branch.TACHYONIC: 1.0}


@dataclass(frozen=True)
class HertzParams:
    branch: Branch
    m: float
    omega: float
    k: float
    profile_kind: Optional[ProfileKind] = None
    B2: Multivector = field(default_factory=lambda: Multivector.from_blade('g1g2'))
    theta: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, 'branch', Branch(self.branch))
        kind = self.profile_kind
        if kind is None:
            kind = ProfileKind.EXPONENTIAL if self.branch is Branch.BRADYONIC else ProfileKind.PLANE
        object.__setattr__(self, 'profile_kind', ProfileKind(kind))

        if not self.m > 0:
            raise ValueError(f"Hertz mass parameter must be positive, got {self.m}")
        if _PROFILE_SIGN[self.profile_kind] != -_DISPERSION_SIGN[self.branch]:
            raise ProfileMismatchError(f"Profile '{self.profile_kind.value}' does not solve the {self.branch.value} profile equation")
        if not is_pure_grade(self.B2, 2) or self.B2.shape != ():
            raise GradeError("The constant 2-form of a Hertz potential must be a single bivector")
        if float(norm(self.B2)) == 0.0:
            raise DegenerateInputError("The constant 2-form of a Hertz potential must be nonzero")

        mismatch = self.omega ** 2 - self.k ** 2 - _DISPERSION_SIGN[self.branch] * self.m ** 2
        if abs(mismatch) > Settings.TOLERANCE_ABS * max(1.0, self.m ** 2):
            raise OffShellError(f"{self.branch.value} dispersion violated by {mismatch:.3e}")

    @property
    def kappa(self) -> Multivector:
        """Wave vector omega gamma^0 - k gamma^3 of the phase"""
        return self.omega * G0 - self.k * G3


def hertz_profile(hp: HertzParams) -> FieldMap:
    """Scalar Phi(x, y) with Phi(0, 0) = 1"""
    m, c, s = hp.m, np.cos(hp.theta), np.sin(hp.theta)

    def evaluate(p: SpacetimePoint) -> Multivector:
        if hp.profile_kind is ProfileKind.EXPONENTIAL:
            value = np.exp(m * (p.x * c + p.y * s))
        elif hp.profile_kind is ProfileKind.PLANE:
            value = np.cos(m * (p.x * c + p.y * s))
        else:
            value = j0(m * np.hypot(p.x, p.y))
        return Multivector.from_scalar(np.broadcast_to(value, p.shape))

    return FieldMap(evaluate, f"Phi[{hp.profile_kind.value}]", frozenset({0}), static=True)


@dataclass(frozen=True)
class HertzChain:
    """Potential, vector potential, field and derotated field of one HertzParams"""

    Pi: FieldMap
    A: FieldMap
    F: FieldMap
    F0: FieldMap
    kappa: Multivector


def hertz_potential(hp: HertzParams) -> FieldMap:
    phi = hertz_profile(hp)
    static = FieldMap(lambda p: phi(p) * hp.B2, 'Phi*B', frozenset({2}), static=True)
    return phase_rotate(static, hp.omega, hp.k, 1.0, f"Pi[{hp.branch.value}]")


def hertz_chain(hp: HertzParams, h: float, richardson: bool = False) -> HertzChain:
    """Pi, A = -delta(Pi), F = dA and F0 = F exp(+gamma5 chi) at step h"""
    Pi = hertz_potential(hp)
    A = negated(codiff_field(Pi, h, richardson)).renamed(f"A[{hp.branch.value}]")
    F = d_field(A, h, richardson).renamed(f"F[{hp.branch.value}]")
    F0 = phase_rotate(F, hp.omega, hp.k, 1.0, f"F0[{hp.branch.value}]")
    logger.debug(f"Built {hp.branch.value} Hertz chain, m={hp.m} omega={hp.omega} k={hp.k} h={h}")
    return HertzChain(Pi=Pi, A=A, F=F, F0=F0, kappa=hp.kappa)
