"""Dirac-Hestenes spinor fields, the magnetic-current ansatz and Dirac-like equations"""

from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple, Union

import numpy as np
from scipy.linalg import null_space

from neutrino_sta.algebra import blades
from neutrino_sta.algebra.multivector import (
    G0, G1, G2, G3, G5, GAMMA, Multivector, exp_bivector, exp_g5, gp, inner, odd, reverse,
)
from neutrino_sta.algebra.spacetime import SpacetimePoint
from neutrino_sta.calculus.diffops import partial_mu
from neutrino_sta.calculus.fieldmap import GridSpec, FieldMap
from neutrino_sta.calculus.residuals import EquationId, ResidualReport, equation_residual
from neutrino_sta.config.settings import Settings
from neutrino_sta.exceptions import (
    DegenerateInputError, GradeError, InvalidPlaneError, OffShellError, SingularSpinorError,
)
from neutrino_sta.fields.hertz import Branch
from neutrino_sta.spectrum.masses import m1, m2_at
from neutrino_sta.spinor.polar import density_and_angle, polar_decompose
from neutrino_sta.utils.logging_config import get_logger

logger = get_logger(__name__)

# gamma^2 gamma^1: spin plane of the field map and phase plane of plane waves
G21 = gp(G2, G1)
G03 = gp(G0, G3)

PLANES = {'g2g1': G21, 'g0g3': G03}
DIRECTIONS = {'g0': G0, 'g3': G3}

SPINOR_EQUATIONS = (
    EquationId.EQ31, EquationId.EQ35, EquationId.EQ_SUPD, EquationId.EQ39,
    EquationId.EQ37, EquationId.EQ38,
)


@dataclass(frozen=True)
class SpinorField:
    """Even-multivector field psi with its mass parameter and dispersion branch"""

    evaluator: Callable[[SpacetimePoint], Multivector]
    m_nu: float = 0.0
    branch: Branch = Branch.BRADYONIC
    name: str = 'psi'

    def __call__(self, p: SpacetimePoint) -> Multivector:
        value = self.evaluator(p)
        if np.any(np.abs(odd(value).coeffs) > Settings.TOLERANCE_ABS * (1.0 + np.abs(value.coeffs).max(initial=0.0))):
            raise GradeError(f"Spinor field '{self.name}' produced odd-grade components")
        return value

    def as_field_map(self) -> FieldMap:
        return FieldMap(self, self.name, frozenset({0, 2, 4}))


@dataclass(frozen=True)
class AnsatzParams:
    lam: float = 0.0
    g: float = 1.0
    c_const: float = 1.0


@dataclass(frozen=True)
class KinematicInvariants:
    Lambda: np.ndarray
    K: np.ndarray
    Omega: Multivector
    S: Multivector
    v: Multivector


def _select(selector: Union[str, Multivector], table: Dict[str, Multivector], what: str) -> Multivector:
    if isinstance(selector, Multivector):
        for value in table.values():
            if selector.isclose(value):
                return value
    elif selector in table:
        return table[selector]
    raise InvalidPlaneError(f"{what} must be one of {sorted(table)}")


def _sandwich(psi: Multivector, middle: Multivector) -> Multivector:
    return gp(gp(psi, middle), reverse(psi))


def field_from_spinor(psi: SpinorField, plane: Union[str, Multivector] = 'g2g1',
                      prefactor: float = 1.0) -> FieldMap:
    """F0 = prefactor * psi plane reverse(psi)"""
    blade = _select(plane, PLANES, 'Field plane')
    return FieldMap(lambda p: prefactor * _sandwich(psi(p), blade), f"F0[{psi.name}]", frozenset({2}))


def current_ansatz(psi: SpinorField, params: AnsatzParams, direction: Union[str, Multivector] = 'g0') -> FieldMap:
    """J = exp(lambda gamma5) c g psi d reverse(psi)"""
    d = _select(direction, DIRECTIONS, 'Current direction')
    scale = params.c_const * params.g
    phase = exp_g5(params.lam)
    return FieldMap(
        lambda p: scale * gp(phase, _sandwich(psi(p), d)),
        f"J[{psi.name}, lambda={params.lam:g}]",
        frozenset({1, 3}),
    )


def auto_force(psi: Multivector, lam: float, tol: float = Settings.TOLERANCE_ABS) -> Multivector:
    """Force of the ansatz current on the field of the same spinor, <J F0>_1.

    Uses the grade-wise inner product rather than the left contraction: the
    trivector part of exp(lam gamma5) J also meets the bivector F0 in a vector.
    Vanishes exactly when lam = beta mod pi.
    """
    rho, _ = density_and_angle(psi)
    if np.any(rho <= tol):
        raise SingularSpinorError("Auto-force needs psi * reverse(psi) != 0")
    current = gp(exp_g5(lam), _sandwich(psi, G0))
    return inner(current, _sandwich(psi, G21))


def _rotor_field(psi: SpinorField, reference: Multivector) -> FieldMap:
    """R of the polar form, sign-matched to reference.

    beta wraps at +-pi and R changes sign with it; stencil samples taken
    across the cut are flipped back so differences see a continuous rotor.
    """
    def evaluate(p: SpacetimePoint) -> Multivector:
        R = polar_decompose(psi(p)).R
        overlap = gp(R, reverse(reference)).scalar
        return R * np.where(overlap < 0.0, -1.0, 1.0)

    return FieldMap(evaluate, f"R[{psi.name}]", frozenset({0, 2, 4}))


def kinematic_invariants(psi: SpinorField, p: SpacetimePoint, h: float,
                         richardson: bool = False) -> KinematicInvariants:
    """Lambda = <Omega S>_0 and K = <Omega gamma5 S>_0 with Omega = v^mu 2 (d_mu R) reverse(R)"""
    R = polar_decompose(psi(p)).R
    R_field = _rotor_field(psi, R)
    R_rev = reverse(R)
    S = 0.5 * gp(gp(R, G21), R_rev)
    v = gp(gp(R, G0), R_rev)
    omega = Multivector.zeros(R.shape)
    for mu in range(4):
        omega_mu = 2.0 * gp(partial_mu(R_field, mu, p, h, richardson), R_rev)
        v_mu = gp(v, GAMMA[mu]).scalar
        omega = omega + omega_mu * v_mu
    return KinematicInvariants(
        Lambda=gp(omega, S).scalar,
        K=gp(omega, gp(G5, S)).scalar,
        Omega=omega,
        S=S,
        v=v,
    )


def ansatz_couplings(m_nu: float, beta: float) -> Tuple[float, float]:
    """(K, mg/e) making m1 = 0 and m2 = m_nu at angle beta"""
    c2 = np.cos(2.0 * beta)
    if abs(c2) < 1e-12:
        raise DegenerateInputError("cos(2 beta) vanishes; m2 is zero for every coupling")
    return m_nu * np.cos(beta) / c2, -m_nu * np.sin(beta) / c2


def m1_m2(K: float, mg_over_e: float, beta: float) -> Tuple[float, float]:
    """Masses of the reduced equation for lambda = beta"""
    return m1(K, mg_over_e, beta), m2_at(K, mg_over_e, beta)


def dh_residual(psi: SpinorField, eq: EquationId, grid: GridSpec, extras: Optional[Dict] = None,
                richardson: bool = False) -> ResidualReport:
    """Residual of a Dirac-like equation for psi; m defaults to psi.m_nu"""
    eq = EquationId(eq)
    if eq not in SPINOR_EQUATIONS:
        raise ValueError(f"{eq.value} is not a spinor equation")
    inputs = {'psi': psi, 'm': psi.m_nu}
    inputs.update(extras or {})
    return equation_residual(eq, inputs, grid, richardson=richardson)


def _dirac_map(omega: float, k: float, m: float, branch: Branch):
    """Linear map psi0 -> residual of the plane-wave equation, even -> odd"""
    kappa = omega * G0 - k * G3
    if branch is Branch.BRADYONIC:
        return lambda X: -gp(kappa, X) - m * gp(gp(G5, X), G0)
    return lambda X: gp(gp(kappa, X), G21) - m * gp(gp(G5, X), G0)


def plane_wave_spinor(omega: float, k: float, m: float, branch: Union[Branch, str] = Branch.BRADYONIC) -> SpinorField:
    """psi = psi0 exp(gamma^2 gamma^1 (omega t - k z)) solving the branch's Dirac equation.

    psi0 spans the nullspace of the 8x8 map the equation induces on constant
    even multivectors; the projection of 1 onto it is used when nonzero.
    """
    branch = Branch(branch)
    sign = 1.0 if branch is Branch.BRADYONIC else -1.0
    mismatch = omega ** 2 - k ** 2 - sign * m ** 2
    if abs(mismatch) > 1e-9 * max(1.0, m ** 2):
        raise OffShellError(f"{branch.value} plane wave is off shell: omega^2 - k^2 - ({sign:+g}) m^2 = {mismatch:.3e}")

    apply = _dirac_map(omega, k, m, branch)
    columns = []
    for index in blades.EVEN_INDICES:
        basis = np.zeros(blades.DIMENSION)
        basis[index] = 1.0
        columns.append(apply(Multivector(basis)).coeffs[blades.ODD_INDICES])
    kernel = null_space(np.stack(columns, axis=1))
    if kernel.shape[1] == 0:
        raise OffShellError(f"{branch.value} plane-wave map has full rank 8")

    target = np.zeros(len(blades.EVEN_INDICES))
    target[0] = 1.0
    even_part = kernel @ (kernel.T @ target)
    if np.linalg.norm(even_part) < 1e-8:
        even_part = kernel[:, 0]
    coeffs = np.zeros(blades.DIMENSION)
    coeffs[blades.EVEN_INDICES] = even_part
    psi0 = Multivector(coeffs)

    rho, beta = density_and_angle(psi0)
    if rho <= Settings.TOLERANCE_ABS:
        logger.warning(f"Plane-wave amplitude is singular (rho={float(rho):.2e}); polar form unavailable")
    logger.debug(f"{branch.value} plane wave: nullspace dimension {kernel.shape[1]}, beta={float(beta):.6f}")

    def evaluate(p: SpacetimePoint) -> Multivector:
        phase = np.broadcast_to(omega * p.t - k * p.z, p.shape)
        return gp(psi0, exp_bivector(G21 * phase))

    return SpinorField(evaluate, m_nu=m, branch=branch, name=f"psi[{branch.value}]")
