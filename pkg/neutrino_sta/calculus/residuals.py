"""Per-equation residual evaluation over sampling grids.

Each equation is registered with the inputs it needs and a builder returning
``p -> (lhs, rhs)``. Residuals are sampled on analytic closures at the grid's
step h and again at h/2; the ratio gives an observed order of convergence so
discretisation error can be told apart from a failing identity.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from neutrino_sta.algebra.multivector import G0, G1, G2, G5, SIGMA, Multivector, exp_g5, gp, grade, norm
from neutrino_sta.algebra.spacetime import SpacetimePoint, relative_vector
from neutrino_sta.calculus import diffops
from neutrino_sta.calculus.fieldmap import FieldMap, GridSpec
from neutrino_sta.config.settings import Settings
from neutrino_sta.exceptions import MissingInputError
from neutrino_sta.spinor.polar import density_and_angle
from neutrino_sta.utils.logging_config import get_logger

logger = get_logger(__name__)

# gamma^2 gamma^1, the spin plane of the Dirac-Hestenes equations
G21 = gp(G2, G1)


class EquationId(str, Enum):
    EQ1 = 'EQ1'
    EQ10 = 'EQ10'
    EQ12 = 'EQ12'
    EQ13 = 'EQ13'
    EQ14 = 'EQ14'
    EQ15 = 'EQ15'
    EQ_FREE = 'EQ_FREE'
    EQ_A = 'EQ_A'
    EQ_B = 'EQ_B'
    EQ_F11 = 'EQ_F11'
    EQ_F3 = 'EQ_F3'
    EQ_F4 = 'EQ_F4'
    EQ_F5 = 'EQ_F5'
    EQ31 = 'EQ31'
    EQ35 = 'EQ35'
    EQ_SUPD = 'EQ_SUPD'
    EQ37 = 'EQ37'
    EQ38 = 'EQ38'
    EQ39 = 'EQ39'
    BOX_PI = 'BOX_PI'
    CODIFF_A = 'CODIFF_A'


class ResidualReport(BaseModel):
    """Residual statistics of one equation on one grid"""

    model_config = ConfigDict(populate_by_name=True)

    equation_id: str
    max_abs: float = Field(ge=0.0)
    rms: float = Field(ge=0.0)
    sample_count: int = Field(alias='samples', ge=1)
    h_used: float = Field(alias='h', gt=0.0)
    richardson_order_estimate: Optional[float] = Field(default=None, alias='order_estimate')
    scale: float = Field(default=0.0, ge=0.0)

    @model_validator(mode='after')
    def _rms_bounded(self) -> 'ResidualReport':
        if self.rms > self.max_abs * (1.0 + 1e-12) + 1e-300:
            raise ValueError("rms cannot exceed max_abs")
        return self

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True)


class ConvergenceStudy(BaseModel):
    """max_abs residuals at successively halved steps and the observed orders"""

    equation_id: str
    steps: List[float]
    max_abs: List[float]
    orders: List[Optional[float]]

    @property
    def exact(self) -> bool:
        """Residual at float noise on every level; there is no error to measure an order of"""
        return all(value <= Settings.RESIDUAL_FLOOR for value in self.max_abs)


Builder = Callable[[Dict[str, Any], float, bool], Callable[[SpacetimePoint], Tuple[Any, Any]]]


@dataclass(frozen=True)
class _Equation:
    required: Tuple[str, ...]
    build: Builder
    static_fields: Tuple[str, ...] = ()


_EQUATIONS: Dict[EquationId, _Equation] = {}


def _equation(eq_id: EquationId, required: Tuple[str, ...], static: Tuple[str, ...] = ()):
    def register(build: Builder) -> Builder:
        _EQUATIONS[eq_id] = _Equation(required, build, static)
        return build
    return register


def _field(inputs: Dict[str, Any], key: str, h: float) -> FieldMap:
    """Resolve a field input: a FieldMap, an object with as_field_map(), or a factory of h"""
    value = inputs[key]
    if isinstance(value, FieldMap):
        return value
    if hasattr(value, 'as_field_map'):
        return value.as_field_map()
    if callable(value):
        return value(h)
    raise MissingInputError(f"Input '{key}' is not a field")


@_equation(EquationId.EQ1, ('field', 'current', 'g'), static=('field',))
def _monopole(inputs, h, richardson):
    F, J, g = _field(inputs, 'field', h), _field(inputs, 'current', h), inputs['g']
    return lambda p: (diffops.dirac(F, p, h, richardson), -g * gp(G5, J(p)))


def _spacelike_source(key: str):
    def build(inputs, h, richardson):
        F, g = _field(inputs, 'field', h), inputs[key]
        return lambda p: (diffops.dirac(F, p, h, richardson), -g * gp(gp(G5, F(p)), G0))
    return build


_equation(EquationId.EQ10, ('field', 'g'), static=('field',))(_spacelike_source('g'))
_equation(EquationId.EQ_A, ('field', 'm'), static=('field',))(_spacelike_source('m'))


def _pauli_gradient(E: FieldMap, p: SpacetimePoint, h: float, richardson: bool) -> Multivector:
    """nabla E = sum_i sigma_i d_i E in the Pauli algebra of gamma^0"""
    return sum(gp(SIGMA[i], diffops.partial_mu(E, i + 1, p, h, richardson)) for i in range(3))


@_equation(EquationId.EQ12, ('field', 'g'), static=('field',))
def _pauli_monopole(inputs, h, richardson):
    E, g = _field(inputs, 'field', h), inputs['g']
    # i = -gamma5 is the Pauli pseudoscalar
    return lambda p: (_pauli_gradient(E, p, h, richardson), -g * gp(G5, E(p)))


@_equation(EquationId.EQ13, ('field', 'g'), static=('field',))
def _dual_wedge(inputs, h, richardson):
    E, g = _field(inputs, 'field', h), inputs['g']
    factor = inputs.get('factor', 2.0)
    # -i (nabla ^ E) = gamma5 <nabla E>_2
    return lambda p: (gp(G5, grade(_pauli_gradient(E, p, h, richardson), 2)), factor * g * E(p))


@_equation(EquationId.EQ14, ('field', 'g'), static=('field',))
def _force_free(inputs, h, richardson):
    E, g = _field(inputs, 'field', h), inputs['g']
    factor = inputs.get('factor', 2.0)
    return lambda p: (diffops.curl3(E, p, h, richardson), factor * g * relative_vector(E(p)))


@_equation(EquationId.EQ15, ('field', 'coefficient'), static=('field',))
def _helmholtz(inputs, h, richardson):
    E, coefficient = _field(inputs, 'field', h), inputs['coefficient']
    return lambda p: (diffops.lap3(E, p, h, richardson), -coefficient * relative_vector(E(p)))


def _homogeneous(operator):
    def build(inputs, h, richardson):
        F = _field(inputs, 'field', h)

        def sample(p):
            lhs = operator(F, p, h, richardson)
            return lhs, Multivector.zeros(lhs.shape)
        return sample
    return build


_equation(EquationId.EQ_FREE, ('field',))(_homogeneous(diffops.dirac))
_equation(EquationId.BOX_PI, ('field',))(_homogeneous(diffops.box))
_equation(EquationId.CODIFF_A, ('field',))(_homogeneous(diffops.codiff))


def _klein_gordon(sign: float, key: str = 'field'):
    """box F = sign * m^2 F"""
    def build(inputs, h, richardson):
        F, m = _field(inputs, key, h), inputs['m']
        return lambda p: (diffops.box(F, p, h, richardson), sign * m ** 2 * F(p))
    return build


_equation(EquationId.EQ_B, ('field', 'm'), static=('field',))(_klein_gordon(1.0))
_equation(EquationId.EQ_F3, ('field', 'm'))(_klein_gordon(1.0))
_equation(EquationId.EQ_F5, ('field', 'm'))(_klein_gordon(-1.0))
_equation(EquationId.EQ37, ('psi', 'm'))(_klein_gordon(-1.0, 'psi'))
_equation(EquationId.EQ38, ('psi', 'm'))(_klein_gordon(1.0, 'psi'))


# Both branches derotate to dirac F0 = -gamma5 kappa F0; kappa carries the branch
def _derotated(inputs, h, richardson):
    F, kappa = _field(inputs, 'field', h), inputs['kappa']
    return lambda p: (diffops.dirac(F, p, h, richardson), -gp(G5, gp(kappa, F(p))))


_equation(EquationId.EQ_F11, ('field', 'kappa'))(_derotated)
_equation(EquationId.EQ_F4, ('field', 'kappa'))(_derotated)


@_equation(EquationId.EQ_SUPD, ('psi', 'm'))
def _bradyonic_dirac(inputs, h, richardson):
    psi, m = _field(inputs, 'psi', h), inputs['m']
    return lambda p: (gp(diffops.dirac(psi, p, h, richardson), G21), m * gp(G5, gp(psi(p), G0)))


@_equation(EquationId.EQ35, ('psi', 'm1', 'm2'))
def _two_mass_dirac(inputs, h, richardson):
    psi, m1, m2 = _field(inputs, 'psi', h), inputs['m1'], inputs['m2']

    def sample(p):
        psi_g0 = gp(psi(p), G0)
        return gp(diffops.dirac(psi, p, h, richardson), G21), m1 * psi_g0 + m2 * gp(G5, psi_g0)
    return sample


@_equation(EquationId.EQ39, ('psi', 'm'))
def _tachyonic_dirac(inputs, h, richardson):
    psi, m = _field(inputs, 'psi', h), inputs['m']
    return lambda p: (diffops.dirac(psi, p, h, richardson), m * gp(G5, gp(psi(p), G0)))


@_equation(EquationId.EQ31, ('psi', 'current', 'Lambda', 'K', 'm_param', 'e_charge'))
def _dirac_like(inputs, h, richardson):
    psi, current = _field(inputs, 'psi', h), _field(inputs, 'current', h)
    lam, K = inputs['Lambda'], inputs['K']
    ratio = inputs['m_param'] / inputs['e_charge']

    def sample(p):
        value = psi(p)
        rho, beta = density_and_angle(value)
        phase = exp_g5(beta)
        psi_g0_phase = gp(gp(value, G0), phase)
        # current acts on psi from the left
        source = gp(phase, gp(current(p), value)) * (ratio / rho)
        rhs = lam * psi_g0_phase + K * gp(G5, psi_g0_phase) + source
        return gp(diffops.dirac(psi, p, h, richardson), G21), rhs
    return sample


def _magnitude(value) -> np.ndarray:
    if isinstance(value, Multivector):
        return norm(value)
    return np.linalg.norm(np.asarray(value, dtype=float), axis=-1)


def _lookup(eq_id, inputs: Dict[str, Any]) -> _Equation:
    equation = _EQUATIONS[EquationId(eq_id)]
    missing = [key for key in equation.required if key not in inputs]
    if missing:
        raise MissingInputError(f"{EquationId(eq_id).value} needs inputs {missing}")
    return equation


def _sweep(equation: _Equation, inputs: Dict[str, Any], grid: GridSpec, h: float,
           richardson: bool, workers: int) -> Tuple[np.ndarray, float]:
    sample = equation.build(inputs, h, richardson)

    def run(chunk: SpacetimePoint) -> Tuple[np.ndarray, float]:
        lhs, rhs = sample(chunk)
        scale = max(float(np.max(_magnitude(lhs))), float(np.max(_magnitude(rhs))))
        return np.broadcast_to(_magnitude(lhs - rhs), chunk.shape), scale

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        results = list(pool.map(run, grid.chunks()))
    return np.concatenate([r[0] for r in results]), max(r[1] for r in results)


def _order(coarse: float, fine: float) -> Optional[float]:
    if coarse <= Settings.RESIDUAL_FLOOR or fine <= Settings.RESIDUAL_FLOOR:
        return None
    return math.log2(coarse / fine)


def _check_static(equation: _Equation, inputs: Dict[str, Any], grid: GridSpec) -> None:
    points = grid.points()
    for key in equation.static_fields:
        diffops.assert_static(_field(inputs, key, grid.h), points)


def pointwise_residual(eq_id, inputs: Dict[str, Any], grid: GridSpec, h: Optional[float] = None,
                       richardson: bool = False, workers: int = Settings.SWEEP_WORKERS) -> np.ndarray:
    """Residual norm at every grid point, in lattice order"""
    equation = _lookup(eq_id, inputs)
    return _sweep(equation, inputs, grid, h or grid.h, richardson, workers)[0]


def equation_residual(eq_id, inputs: Dict[str, Any], grid: GridSpec, richardson: bool = False,
                      workers: int = Settings.SWEEP_WORKERS) -> ResidualReport:
    """Sample lhs - rhs of one equation over the grid"""
    eq_id = EquationId(eq_id)
    equation = _lookup(eq_id, inputs)
    _check_static(equation, inputs, grid)

    coarse, scale = _sweep(equation, inputs, grid, grid.h, richardson, workers)
    fine, _ = _sweep(equation, inputs, grid, grid.h / 2.0, richardson, workers)
    report = ResidualReport(
        equation_id=eq_id.value,
        max_abs=float(coarse.max()),
        rms=float(np.sqrt(np.mean(coarse ** 2))),
        sample_count=coarse.size,
        h_used=grid.h,
        richardson_order_estimate=_order(float(coarse.max()), float(fine.max())),
        scale=scale,
    )
    logger.debug(f"{eq_id.value}: max_abs={report.max_abs:.3e} order={report.richardson_order_estimate}")
    return report


def convergence_study(eq_id, inputs: Dict[str, Any], grid: GridSpec, levels: int = 3,
                      richardson: bool = False, workers: int = Settings.SWEEP_WORKERS) -> ConvergenceStudy:
    """max_abs at h, h/2, h/4, ... and the observed order between successive levels"""
    eq_id = EquationId(eq_id)
    equation = _lookup(eq_id, inputs)
    steps = [grid.h / 2.0 ** level for level in range(levels)]
    maxima = [float(_sweep(equation, inputs, grid, h, richardson, workers)[0].max()) for h in steps]
    orders = [_order(a, b) for a, b in zip(maxima, maxima[1:])]
    return ConvergenceStudy(equation_id=eq_id.value, steps=steps, max_abs=maxima, orders=orders)


def fit_coupling(field: FieldMap, grid: GridSpec, richardson: bool = True) -> float:
    """Least-squares g for which dirac(F) = -g gamma5 F gamma^0 on the grid"""
    points = grid.points()
    lhs = diffops.dirac(field, points, grid.h, richardson).coeffs
    source = gp(gp(G5, field(points)), G0).coeffs
    return float(-np.sum(lhs * source) / np.sum(source * source))
