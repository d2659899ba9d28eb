"""Mass spectrum from the Dirac quantization of the monopole charge.

Natural Gaussian units: hbar = c = 1 and e = sqrt(alpha). The coupling
ratio m g / e uses the full electronic charge, which is the reading the
closed-form spectrum requires.
"""

import math
from itertools import combinations
from typing import List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from neutrino_sta.config.settings import Settings
from neutrino_sta.exceptions import DegenerateInputError, NegativeMassError
from neutrino_sta.utils.logging_config import get_logger

logger = get_logger(__name__)


class SpectrumParams(BaseModel):
    m_param: float = Field(ge=0.0, description="Mass scale in eV")
    N: float = Field(default=Settings.DEFAULT_N, ge=0.0)
    alpha: float = Field(default=Settings.FINE_STRUCTURE, gt=0.0)
    n_set: List[int] = Field(default_factory=lambda: list(Settings.DEFAULT_N_SET), min_length=1)

    @field_validator('n_set')
    @classmethod
    def _non_negative(cls, value: List[int]) -> List[int]:
        if any(n < 0 for n in value):
            raise ValueError("flavor indices must be non-negative")
        return value

    @model_validator(mode='after')
    def _masses_non_negative(self) -> 'SpectrumParams':
        if max(self.n_set) > self.N:
            raise ValueError(f"N={self.N} is below the largest flavor index {max(self.n_set)}")
        return self

    @property
    def K(self) -> float:
        """K = 3 m N / 2 alpha"""
        return 3.0 * self.m_param * self.N / (2.0 * self.alpha)


class MassEntry(BaseModel):
    n: int
    mass_eV: float


class SquaredDifference(BaseModel):
    i: int
    j: int
    value_eV2: float
    # value printed alongside the published mass table, when there is one
    reported_eV2: Optional[float] = None


class MassSpectrum(BaseModel):
    params: SpectrumParams
    masses: List[MassEntry]
    sum: float
    sq_diffs: List[SquaredDifference]


def elementary_charge(alpha: float = Settings.FINE_STRUCTURE) -> float:
    return math.sqrt(alpha)


def dirac_g(n: int, e_charge: float) -> float:
    """Magnetic charge with g (e/3) = n/2"""
    return 1.5 * n / e_charge


def mg_over_e(n: int, m_param: float, alpha: float = Settings.FINE_STRUCTURE) -> float:
    """m g / e = 3 m n / 2 alpha"""
    e = elementary_charge(alpha)
    return m_param * dirac_g(n, e) / e


def m1(K, mg_e, beta):
    """K sin(beta) + (m g / e) cos(beta)"""
    return K * np.sin(beta) + mg_e * np.cos(beta)


def m2_at(K, mg_e, beta):
    return K * np.cos(beta) + mg_e * np.sin(beta)


def beta_for_null_m1(K: float, mg_e: float) -> float:
    """Angle with m1 = 0"""
    if K == 0.0:
        if mg_e == 0.0:
            raise DegenerateInputError("K and m g / e both vanish; beta is undetermined")
        return -math.copysign(math.pi / 2.0, mg_e)
    return math.atan(-mg_e / K)


def m2(K: float, mg_e: float) -> float:
    """m2 after eliminating beta; assumes K > 0"""
    if K == 0.0 and mg_e == 0.0:
        raise DegenerateInputError("K and m g / e both vanish")
    return (K * K - mg_e * mg_e) / math.sqrt(K * K + mg_e * mg_e)


def mass_n(n: int, params: SpectrumParams) -> float:
    """(3m / 2 alpha) (N^2 - n^2) / sqrt(N^2 + n^2) in eV"""
    N = params.N
    if n > N:
        raise NegativeMassError(f"n={n} exceeds N={N}; the mass would be negative")
    if N == 0.0:
        return 0.0
    return 1.5 * params.m_param / params.alpha * (N * N - n * n) / math.sqrt(N * N + n * n)


def _shape_sum(N: float, n_set: Sequence[int]) -> float:
    return sum((N * N - n * n) / math.sqrt(N * N + n * n) for n in n_set if N * N + n * n > 0)


def fit_m(N: float, n_set: Sequence[int], sum_target: float, alpha: float = Settings.FINE_STRUCTURE) -> float:
    """Mass scale making the spectrum sum to sum_target; linear, so closed form"""
    if not n_set:
        raise DegenerateInputError("fit_m needs at least one flavor index")
    if sum_target < 0:
        raise ValueError(f"Sum bound must be non-negative, got {sum_target}")
    shape = _shape_sum(N, n_set)
    if shape <= 0:
        raise DegenerateInputError(f"Spectrum shape sum vanishes for N={N}, n_set={list(n_set)}")
    return sum_target * (2.0 * alpha / 3.0) / shape


def mass_squared_diffs(masses: Sequence[MassEntry]) -> List[SquaredDifference]:
    """m_i^2 - m_j^2 for every pair i < j"""
    ordered = sorted(masses, key=lambda entry: entry.n)
    return [
        SquaredDifference(
            i=a.n, j=b.n,
            value_eV2=a.mass_eV ** 2 - b.mass_eV ** 2,
            reported_eV2=Settings.PUBLISHED_SQUARED_DIFFERENCES_EV2.get((a.n, b.n)),
        )
        for a, b in combinations(ordered, 2)
    ]


def compute_spectrum(params: SpectrumParams) -> MassSpectrum:
    masses = [MassEntry(n=n, mass_eV=mass_n(n, params)) for n in sorted(params.n_set)]
    spectrum = MassSpectrum(
        params=params,
        masses=masses,
        sum=sum(entry.mass_eV for entry in masses),
        sq_diffs=mass_squared_diffs(masses) if len(masses) > 1 else [],
    )
    logger.info(f"Spectrum for m={params.m_param:.4e} eV, N={params.N}: sum={spectrum.sum:.4f} eV")
    return spectrum


def fitted_spectrum(N: float = Settings.DEFAULT_N, n_set: Optional[Sequence[int]] = None,
                    sum_target: float = Settings.DEFAULT_SUM_BOUND_EV,
                    alpha: float = Settings.FINE_STRUCTURE) -> MassSpectrum:
    n_set = list(Settings.DEFAULT_N_SET if n_set is None else n_set)
    m_param = fit_m(N, n_set, sum_target, alpha)
    return compute_spectrum(SpectrumParams(m_param=m_param, N=N, alpha=alpha, n_set=n_set))


def mass_to_inverse_length(mass_eV: float) -> float:
    """m c / hbar in 1/m"""
    return mass_eV / Settings.HBAR_C_EV_M
