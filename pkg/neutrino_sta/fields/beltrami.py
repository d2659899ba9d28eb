"""Force-free (Beltrami) electric fields and their transcendent current"""

from dataclasses import dataclass

import numpy as np

from neutrino_sta.algebra.multivector import G0, gp
from neutrino_sta.algebra.spacetime import SpacetimePoint, from_relative_vector, pauli_split, relative_vector
from neutrino_sta.calculus.fieldmap import FieldMap
from neutrino_sta.config.settings import Settings
from neutrino_sta.exceptions import GradeError


@dataclass(frozen=True)
class BeltramiParams:
    """ABC flow with curl eigenvalue ``lambda_eig`` and amplitudes A, B, C"""

    lambda_eig: float = 1.0
    A: float = Settings.DEFAULT_BELTRAMI_AMPLITUDES[0]
    B: float = Settings.DEFAULT_BELTRAMI_AMPLITUDES[1]
    C: float = Settings.DEFAULT_BELTRAMI_AMPLITUDES[2]

    def __post_init__(self):
        if not np.all(np.isfinite([self.lambda_eig, self.A, self.B, self.C])):
            raise ValueError("Beltrami parameters must be finite")

    @classmethod
    def from_coupling(cls, g: float, curl_factor: float = Settings.CURL_FACTOR,
                      amplitudes=Settings.DEFAULT_BELTRAMI_AMPLITUDES) -> 'BeltramiParams':
        """Field whose curl eigenvalue is curl_factor * g"""
        return cls(curl_factor * g, *amplitudes)

    def coupling(self, curl_factor: float = Settings.CURL_FACTOR) -> float:
        return self.lambda_eig / curl_factor


def abc_components(params: BeltramiParams, p: SpacetimePoint) -> np.ndarray:
    lam = params.lambda_eig
    ex = params.A * np.sin(lam * p.z) + params.C * np.cos(lam * p.y)
    ey = params.B * np.sin(lam * p.x) + params.A * np.cos(lam * p.z)
    ez = params.C * np.sin(lam * p.y) + params.B * np.cos(lam * p.x)
    shape = p.shape
    return np.stack([np.broadcast_to(c, shape) for c in (ex, ey, ez)], axis=-1)


def beltrami_field(params: BeltramiParams) -> FieldMap:
    """Relative vector field E_inf = sum E_i sigma_i of the ABC flow"""
    return FieldMap(
        lambda p: from_relative_vector(abc_components(params, p)),
        f"E_inf(lambda={params.lambda_eig:g})",
        frozenset({2}),
        static=True,
    )


def embed_electric(E: FieldMap) -> FieldMap:
    """Bivector F_inf = sum E_i gamma^0 gamma^i carrying no magnetic part"""
    return FieldMap(
        lambda p: from_relative_vector(relative_vector(E(p))),
        f"F_inf[{E.name}]",
        frozenset({2}),
        E.static,
    )


def transcendent_current(F_inf: FieldMap, tol: float = Settings.TOLERANCE_ABS) -> FieldMap:
    """Magnetic current J_m = F_inf gamma^0; spacelike, with no density"""

    def evaluate(p: SpacetimePoint):
        field = F_inf(p)
        magnetic = pauli_split(field).B
        if np.any(np.abs(magnetic) > tol * (1.0 + np.max(np.abs(field.coeffs), initial=0.0))):
            raise GradeError(f"Field '{F_inf.name}' has a magnetic part; the transcendent current needs a pure electric field")
        return gp(field, G0)

    return FieldMap(evaluate, f"J_m[{F_inf.name}]", frozenset({1}), F_inf.static)
