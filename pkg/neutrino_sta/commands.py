"""Command implementations shared by the CLI and the MCP server"""

from pathlib import Path
from typing import Dict, List, Literal, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from neutrino_sta.algebra.spacetime import SpacetimePoint
from neutrino_sta.calculus.fieldmap import FieldMap, GridSpec
from neutrino_sta.calculus.residuals import EquationId, ResidualReport
from neutrino_sta.config.settings import Settings
from neutrino_sta.exceptions import ConfigError
from neutrino_sta.fields.beltrami import BeltramiParams, beltrami_field, embed_electric
from neutrino_sta.fields.duality import DualityWave, boost_field, duality_rotate
from neutrino_sta.fields.hertz import Branch, HertzParams, ProfileKind, hertz_chain
from neutrino_sta.reports.writer import ReportWriter
from neutrino_sta.spectrum.masses import MassSpectrum, SpectrumParams, compute_spectrum, fitted_spectrum
from neutrino_sta.spinor.dirac_hestenes import dh_residual, kinematic_invariants, plane_wave_spinor
from neutrino_sta.utils.logging_config import get_logger

logger = get_logger(__name__)


def _load_model(model, path: str):
    try:
        return model.model_validate_json(Path(path).read_text(encoding='utf-8'))
    except OSError as e:
        raise ConfigError(f"Cannot read config file {path}: {e}") from e
    except ValidationError as e:
        raise ConfigError(f"Invalid config file {path}: {e}") from e


def cmd_spectrum(N: float = Settings.DEFAULT_N, sum_bound: Optional[float] = None,
                 m_param: Optional[float] = None, n_set: Optional[Sequence[int]] = None,
                 alpha: float = Settings.FINE_STRUCTURE) -> MassSpectrum:
    """Spectrum from an explicit m, or with m fitted to a sum bound (the default)"""
    if sum_bound is not None and m_param is not None:
        raise ConfigError("--sum-bound and --m-param are mutually exclusive")
    n_set = list(Settings.DEFAULT_N_SET if n_set is None else n_set)
    try:
        if m_param is not None:
            return compute_spectrum(SpectrumParams(m_param=m_param, N=N, alpha=alpha, n_set=n_set))
        return fitted_spectrum(N, n_set, Settings.DEFAULT_SUM_BOUND_EV if sum_bound is None else sum_bound, alpha)
    except ValidationError as e:
        raise ConfigError(f"Invalid spectrum parameters: {e}") from e


class SampleGrid(BaseModel):
    model_config = ConfigDict(extra='forbid')

    origin: Tuple[float, float, float, float] = (0.0, 0.0, 0.0, 0.0)
    extents: Tuple[float, float, float, float] = (Settings.DEFAULT_WAVELENGTH,) * 4
    counts: Tuple[int, int, int, int] = (1, 8, 8, 8)

    def grid_spec(self) -> GridSpec:
        return GridSpec(origin=SpacetimePoint(*self.origin), extents=self.extents, counts=self.counts)


class FieldSampleConfig(BaseModel):
    """Which field to sample and where.

    beltrami samples F_inf, duality the rotated wave, boosted the wave boosted
    to ``boost_speed`` and hertz the field of a Hertz potential.
    """

    model_config = ConfigDict(extra='forbid')

    kind: Literal['beltrami', 'duality', 'boosted', 'hertz'] = 'beltrami'
    coupling: float = Field(default=Settings.DEFAULT_COUPLING, gt=0.0)
    amplitudes: Tuple[float, float, float] = Settings.DEFAULT_BELTRAMI_AMPLITUDES
    boost_speed: float = Field(default=Settings.DEFAULT_BOOST_SPEED, gt=-1.0, lt=1.0)
    branch: Branch = Branch.BRADYONIC
    m: float = Field(default=1.0, gt=0.0)
    omega: float = 0.75
    k: float = 1.25
    profile_kind: Optional[ProfileKind] = None
    h: float = Field(default=Settings.PRECISION_STEP, gt=0.0)
    grid: SampleGrid = Field(default_factory=SampleGrid)

    @classmethod
    def load(cls, path: str) -> 'FieldSampleConfig':
        return _load_model(cls, path)


def build_sample_field(config: FieldSampleConfig) -> FieldMap:
    if config.kind == 'hertz':
        hp = HertzParams(branch=config.branch, m=config.m, omega=config.omega, k=config.k,
                         profile_kind=config.profile_kind)
        return hertz_chain(hp, config.h, richardson=True).F

    F_inf = embed_electric(beltrami_field(BeltramiParams.from_coupling(config.coupling, amplitudes=config.amplitudes)))
    if config.kind == 'beltrami':
        return F_inf
    if config.kind == 'duality':
        return duality_rotate(F_inf, DualityWave.from_coupling(config.coupling))
    return boost_field(duality_rotate(F_inf, DualityWave.from_coupling(config.coupling)), config.boost_speed)


class FieldSampleResult(BaseModel):
    schema_version: int = Settings.SCHEMA_VERSION
    field_name: str
    samples: int
    csv_path: str
    parameters: FieldSampleConfig


def cmd_field_sample(config: FieldSampleConfig, writer: ReportWriter, name: str = 'field') -> FieldSampleResult:
    """Sample a field on a grid; writes <name>.csv and the <name>.json sidecar"""
    field = build_sample_field(config)
    points = config.grid.grid_spec().points()
    values = field(points)
    csv_path = writer.write_field_csv(f"{name}.csv", points, values)
    result = FieldSampleResult(
        field_name=field.name,
        samples=int(np.prod(points.shape)),
        csv_path=str(csv_path),
        parameters=config,
    )
    writer.write_json(f"{name}.json", result)
    return result


class SpinorCheckConfig(BaseModel):
    model_config = ConfigDict(extra='forbid')

    branch: Branch = Branch.BRADYONIC
    omega: float = 2.0 ** 0.5
    k: float = 1.0
    m: float = Field(default=1.0, gt=0.0)
    wavelength: float = Field(default=Settings.DEFAULT_WAVELENGTH, gt=0.0)
    grid_count: int = Field(default=3, ge=1)
    h: float = Field(default=Settings.PRECISION_STEP, gt=0.0)
    richardson: bool = True
    invariant_samples: int = Field(default=4, ge=1)

    @classmethod
    def load(cls, path: str) -> 'SpinorCheckConfig':
        return _load_model(cls, path)

    @field_validator('omega', 'k')
    @classmethod
    def _finite(cls, value: float) -> float:
        if not np.isfinite(value):
            raise ValueError('wave parameters must be finite')
        return value


class InvariantSample(BaseModel):
    t: float
    x: float
    y: float
    z: float
    Lambda: float
    K: float


class SpinorCheckResult(BaseModel):
    schema_version: int = Settings.SCHEMA_VERSION
    parameters: SpinorCheckConfig
    reports: List[ResidualReport]
    invariants: List[InvariantSample]


# Dirac and Klein-Gordon equations satisfied by each plane-wave branch
_BRANCH_EQUATIONS: Dict[Branch, Tuple[EquationId, ...]] = {
    Branch.BRADYONIC: (EquationId.EQ_SUPD, EquationId.EQ37),
    Branch.TACHYONIC: (EquationId.EQ39, EquationId.EQ38),
}


def cmd_spinor_check(config: SpinorCheckConfig) -> SpinorCheckResult:
    """Residuals of a plane-wave spinor in its branch's equations, plus (Lambda, K) samples"""
    psi = plane_wave_spinor(config.omega, config.k, config.m, config.branch)
    grid = GridSpec.default(config.wavelength, config.grid_count).with_step(config.h)
    reports = [dh_residual(psi, eq, grid, richardson=config.richardson) for eq in _BRANCH_EQUATIONS[config.branch]]

    n = config.invariant_samples
    spread = np.linspace(0.0, config.wavelength, n, endpoint=False)
    points = SpacetimePoint(t=spread, x=0.5 * spread, y=-0.25 * spread, z=spread[::-1].copy())
    invariants = kinematic_invariants(psi, points, Settings.PRECISION_STEP, richardson=True)
    samples = [
        InvariantSample(t=float(points.t[i]), x=float(points.x[i]), y=float(points.y[i]), z=float(points.z[i]),
                        Lambda=float(invariants.Lambda[i]), K=float(invariants.K[i]))
        for i in range(n)
    ]
    logger.info(f"Spinor check for {config.branch.value} wave: worst residual "
                f"{max(report.max_abs for report in reports):.3e}")
    return SpinorCheckResult(parameters=config, reports=reports, invariants=samples)
