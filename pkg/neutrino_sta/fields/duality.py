"""Duality rotation of static fields into subluminal free waves, and boosts"""

import math
from dataclasses import dataclass

import numpy as np

from neutrino_sta.algebra.multivector import Multivector, exp_bivector, exp_g5, gp, reverse
from neutrino_sta.algebra.spacetime import SpacetimePoint, point_from_vector, position_vector
from neutrino_sta.calculus.diffops import assert_static
from neutrino_sta.calculus.fieldmap import FieldMap
from neutrino_sta.config.settings import Settings
from neutrino_sta.exceptions import OffShellError
from neutrino_sta.utils.logging_config import get_logger

logger = get_logger(__name__)

# Points where a field not flagged static is sampled for time dependence
_PROBE = SpacetimePoint(
    t=np.array([0.0, 0.3, 1.1]),
    x=np.array([0.0, 0.7, -0.4]),
    y=np.array([0.0, -1.3, 0.9]),
    z=np.array([0.0, 0.2, 2.1]),
)


@dataclass(frozen=True)
class DualityWave:
    """Phase chi = omega t - k z of a field moving at speed V along z.

    omega and k are derived from m and V; use ``from_velocity``.
    """

    m: float
    V: float
    omega: float
    k: float

    def __post_init__(self):
        if not -1.0 < self.V < 1.0:
            raise ValueError(f"Boost speed must lie in (-1, 1), got {self.V}")
        mismatch = self.omega ** 2 - self.k ** 2 - self.m ** 2
        if abs(mismatch) > Settings.TOLERANCE_ABS * max(1.0, self.m ** 2):
            raise OffShellError(f"omega^2 - k^2 - m^2 = {mismatch:.3e} for a duality wave")

    @classmethod
    def from_velocity(cls, m: float, V: float = 0.0) -> 'DualityWave':
        if not -1.0 < V < 1.0:
            raise ValueError(f"Boost speed must lie in (-1, 1), got {V}")
        gamma = 1.0 / math.sqrt(1.0 - V * V)
        return cls(m=m, V=V, omega=m * gamma, k=m * V * gamma)

    @classmethod
    def from_coupling(cls, g: float, V: float = 0.0, mass_factor: float = Settings.CURL_FACTOR) -> 'DualityWave':
        """Wave with m = mass_factor * g"""
        return cls.from_velocity(mass_factor * g, V)

    def phase(self, p: SpacetimePoint):
        return self.omega * p.t - self.k * p.z


def phase_rotate(F: FieldMap, omega: float, k: float, sign: float = 1.0, name: str = None) -> FieldMap:
    """F(p) exp(sign * gamma5 (omega t - k z))"""
    return FieldMap(
        lambda p: gp(F(p), exp_g5(sign * (omega * p.t - k * p.z))),
        name or f"{F.name}*exp_g5({sign:+g}chi)",
        F.grades,
        F.static and omega == 0.0,
    )


def duality_rotate(F_inf: FieldMap, wave: DualityWave) -> FieldMap:
    """F = F_inf exp(gamma5 (omega t - k z)) for a static F_inf"""
    if not F_inf.static:
        assert_static(F_inf, _PROBE)
    return phase_rotate(F_inf, wave.omega, wave.k, 1.0, f"rotate({F_inf.name}, m={wave.m:g}, V={wave.V:g})")


def derotate(F: FieldMap, wave: DualityWave) -> FieldMap:
    """Undo duality_rotate"""
    return phase_rotate(F, wave.omega, wave.k, -1.0, f"derotate({F.name})")


def boost_rotor(V: float) -> Multivector:
    """Rotor of the active boost with speed V along gamma^3"""
    if not -1.0 < V < 1.0:
        raise ValueError(f"Boost speed must lie in (-1, 1), got {V}")
    eta = math.atanh(V)
    return exp_bivector(Multivector.from_blade('g0g3', eta / 2.0))


def boost_field(F: FieldMap, V: float) -> FieldMap:
    """Actively boosted field G(x) = R F(R~ x R) R~.

    Boosting a free solution of the rest frame gives a free solution moving
    with speed V, its time dependence entering through t' = gamma (t - V z).
    """
    R = boost_rotor(V)
    R_rev = reverse(R)

    def evaluate(p: SpacetimePoint) -> Multivector:
        source = point_from_vector(gp(gp(R_rev, position_vector(p)), R))
        return gp(gp(R, F(source)), R_rev)

    logger.debug(f"Boosting {F.name} with V={V}")
    return FieldMap(evaluate, f"boost({F.name}, V={V:g})", F.grades, F.static and V == 0.0)
