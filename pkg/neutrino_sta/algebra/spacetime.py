"""Spacetime points and the relative (Pauli) split of bivectors"""

from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from neutrino_sta.algebra.multivector import G0, G5, GAMMA, SIGMA, Multivector, gp, is_pure_grade
from neutrino_sta.exceptions import GradeError

Coordinate = Union[float, np.ndarray]


@dataclass(frozen=True)
class SpacetimePoint:
    """Coordinates (t, x, y, z) with c = 1; components may be arrays of samples"""

    t: Coordinate = 0.0
    x: Coordinate = 0.0
    y: Coordinate = 0.0
    z: Coordinate = 0.0

    def __post_init__(self):
        for name in ('t', 'x', 'y', 'z'):
            if not np.all(np.isfinite(getattr(self, name))):
                raise ValueError(f"Coordinate {name} is not finite")

    def coordinate(self, mu: int) -> Coordinate:
        return self.as_tuple()[mu]

    def as_tuple(self) -> Tuple[Coordinate, Coordinate, Coordinate, Coordinate]:
        return self.t, self.x, self.y, self.z

    def shifted(self, mu: int, delta: float) -> 'SpacetimePoint':
        """Point displaced by delta along coordinate axis mu"""
        coords = list(self.as_tuple())
        coords[mu] = coords[mu] + delta
        return SpacetimePoint(*coords)

    @property
    def shape(self) -> Tuple[int, ...]:
        return np.broadcast(*[np.asarray(c) for c in self.as_tuple()]).shape


@dataclass(frozen=True)
class RelativeSplit:
    """Relative electric and magnetic vectors with respect to gamma^0.

    Convention: F = E - gamma5 B with E = sum E_i sigma_i, sigma_i = gamma^0 gamma^i,
    so that -gamma5 plays the role of the Pauli pseudoscalar i.
    """

    E: np.ndarray
    B: np.ndarray


def pauli_split(F: Multivector, frame: Multivector = G0) -> RelativeSplit:
    """Split a bivector into relative electric and magnetic components"""
    if not frame.isclose(G0):
        raise ValueError("Only the rest frame gamma^0 is supported for the relative split")
    if not is_pure_grade(F, 2):
        raise GradeError("pauli_split requires a pure bivector")
    electric = np.stack([F.coeffs @ s.coeffs for s in SIGMA], axis=-1)
    magnetic = np.stack([-(F.coeffs @ gp(G5, s).coeffs) for s in SIGMA], axis=-1)
    return RelativeSplit(E=electric, B=magnetic)


def pauli_join(split: RelativeSplit) -> Multivector:
    """Inverse of pauli_split"""
    E = np.asarray(split.E, dtype=float)
    B = np.asarray(split.B, dtype=float)
    electric = sum(s * E[..., i] for i, s in enumerate(SIGMA))
    magnetic = sum(gp(G5, s) * B[..., i] for i, s in enumerate(SIGMA))
    return electric - magnetic


def relative_vector(v: Multivector) -> np.ndarray:
    """Components of a relative vector stored as sum v_i sigma_i"""
    return np.stack([v.coeffs @ s.coeffs for s in SIGMA], axis=-1)


def from_relative_vector(components: np.ndarray) -> Multivector:
    components = np.asarray(components, dtype=float)
    return sum(s * components[..., i] for i, s in enumerate(SIGMA))


def position_vector(p: SpacetimePoint) -> Multivector:
    """x = x^mu gamma_mu, the event p as a vector"""
    return G0 * p.t - GAMMA[1] * p.x - GAMMA[2] * p.y - GAMMA[3] * p.z


def point_from_vector(x: Multivector) -> SpacetimePoint:
    """Inverse of position_vector: x^mu = x . gamma^mu"""
    c = x.coeffs
    return SpacetimePoint(c[..., 1], -c[..., 2], -c[..., 3], -c[..., 4])
