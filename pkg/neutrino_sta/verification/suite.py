"""Identity suite: every equation and property group checked against tolerances.

Residual checks pass when max_abs <= tolerance_abs + tolerance_rel * scale, or
when the residual is finite-difference error, i.e. it shrinks at an observed
order of at least Settings.MIN_CONVERGENCE_ORDER when h is halved. Checks of
exact algebra compare against tolerance_abs alone.
"""

import math
import platform
from typing import Callable, Dict, List, Literal, Optional

import numpy as np
import scipy
from pydantic import BaseModel

from neutrino_sta.algebra import blades
from neutrino_sta.algebra.multivector import (
    G0, GAMMA, ONE, Multivector, exp_bivector, gp, grade, norm, reverse,
)
from neutrino_sta.algebra.spacetime import SpacetimePoint, pauli_split, relative_vector
from neutrino_sta.calculus.diffops import curl3, div3
from neutrino_sta.calculus.fieldmap import GridSpec
from neutrino_sta.calculus.force import lorentz_force, relative_current, relative_force
from neutrino_sta.calculus.residuals import (
    EquationId, ResidualReport, convergence_study, equation_residual, fit_coupling, pointwise_residual,
)
from neutrino_sta.config.run_config import RunConfig
from neutrino_sta.config.settings import Settings
from neutrino_sta.exceptions import NeutrinoStaError, OffShellError
from neutrino_sta.fields.beltrami import BeltramiParams, beltrami_field, embed_electric, transcendent_current
from neutrino_sta.fields.duality import DualityWave, boost_field, duality_rotate
from neutrino_sta.fields.hertz import Branch, HertzParams, hertz_chain, hertz_potential
from neutrino_sta.spectrum import masses
from neutrino_sta.spinor.dirac_hestenes import (
    AnsatzParams, SpinorField, ansatz_couplings, auto_force, current_ansatz, field_from_spinor,
    kinematic_invariants, m1_m2, plane_wave_spinor,
)
from neutrino_sta.spinor.polar import density_and_angle, polar_decompose, recompose
from neutrino_sta.utils.logging_config import get_logger

logger = get_logger(__name__)

Status = Literal['pass', 'fail', 'inconsistent']

# Parameters of the constructed Hertz and plane-wave solutions
BRADYONIC_HERTZ = dict(branch=Branch.BRADYONIC, m=1.0, omega=0.75, k=1.25)
TACHYONIC_HERTZ = dict(branch=Branch.TACHYONIC, m=1.0, omega=1.25, k=0.75)
BRADYONIC_WAVE = (math.sqrt(2.0), 1.0, 1.0)
TACHYONIC_WAVE = (1.0, math.sqrt(2.0), 1.0)


class CheckResult(BaseModel):
    name: str
    group: str
    status: Status
    expected_status: Status = 'pass'
    passed: bool
    max_abs: Optional[float]
    tolerance: float
    scale: float = 0.0
    order_estimate: Optional[float] = None
    report: Optional[ResidualReport] = None
    detail: Optional[str] = None


class SuiteReport(BaseModel):
    schema_version: int = Settings.SCHEMA_VERSION
    config: RunConfig
    environment: Dict[str, str]
    seed: int
    checks: List[CheckResult]
    all_passed: bool

    @property
    def exit_code(self) -> int:
        return 0 if self.all_passed else 1

    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]


def environment_metadata() -> Dict[str, str]:
    return {
        'python': platform.python_version(),
        'numpy': np.__version__,
        'scipy': scipy.__version__,
        'platform': platform.system(),
    }


class IdentitySuite:
    """Runs the identity checks of one RunConfig"""

    def __init__(self, config: RunConfig):
        self.config = config
        self.grid = config.grid()
        self.rng = np.random.default_rng(config.seed)
        self.checks: List[CheckResult] = []

    def run(self) -> SuiteReport:
        groups: Dict[str, Callable[[], None]] = {
            'monopole': self._monopole_checks,
            'duality': self._duality_checks,
            'hertz': self._hertz_checks,
            'spinor': self._spinor_checks,
            'spectrum': self._spectrum_checks,
        }
        for group, run_group in groups.items():
            logger.info(f"Running {group} checks")
            try:
                run_group()
            except NeutrinoStaError as e:
                logger.error(f"{group} checks aborted: {e}")
                self.checks.append(CheckResult(
                    name=f"{group} construction", group=group, status='fail', passed=False,
                    max_abs=None, tolerance=0.0, detail=str(e),
                ))

        report = SuiteReport(
            config=self.config,
            environment=environment_metadata(),
            seed=self.config.seed,
            checks=self.checks,
            all_passed=all(check.passed for check in self.checks),
        )
        failed = len(report.failures())
        logger.info(f"Suite finished: {len(self.checks) - failed} of {len(self.checks)} checks as expected")
        return report

    # recording

    def _tolerance(self, scale: float) -> float:
        return self.config.tolerance_abs + self.config.tolerance_rel * scale

    def _record(self, group: str, name: str, ok: bool, max_abs: float, tolerance: float,
                expected: Status = 'pass', **extra) -> None:
        if ok:
            status = 'pass'
        else:
            status = 'inconsistent' if expected == 'inconsistent' else 'fail'
        result = CheckResult(
            name=name, group=group, status=status, expected_status=expected,
            passed=status == expected, max_abs=max_abs, tolerance=tolerance, **extra,
        )
        if result.passed:
            logger.debug(f"[{group}] {name}: {status} (max_abs={max_abs:.3e})")
        else:
            logger.warning(f"[{group}] {name}: {status}, expected {expected} (max_abs={max_abs:.3e})")
        self.checks.append(result)

    def _residual(self, group: str, name: str, eq_id: EquationId, inputs: Dict,
                  grid=None, expected: Status = 'pass', detail: Optional[str] = None) -> ResidualReport:
        report = equation_residual(eq_id, inputs, grid or self.grid, workers=self.config.workers)
        tolerance = self._tolerance(report.scale)
        order = report.richardson_order_estimate
        ok = report.max_abs <= tolerance or (order is not None and order >= Settings.MIN_CONVERGENCE_ORDER)
        self._record(group, name, ok, report.max_abs, tolerance, expected,
                     scale=report.scale, order_estimate=order, report=report, detail=detail)
        return report

    def _field_residual(self, group: str, name: str, eq_id: EquationId, inputs: Dict, grid: GridSpec,
                        field_scale: float, relative: float) -> ResidualReport:
        """Residual against relative * the largest sample of the differentiated field; no order escape"""
        report = equation_residual(eq_id, inputs, grid, richardson=True, workers=self.config.workers)
        tolerance = self.config.tolerance_abs + relative * field_scale
        self._record(group, name, report.max_abs <= tolerance, report.max_abs, tolerance,
                     scale=field_scale, order_estimate=report.richardson_order_estimate, report=report,
                     detail=f"relative to max |field| = {field_scale:.6g}")
        return report

    def _bound(self, group: str, name: str, value: float, bound: float, detail: Optional[str] = None) -> None:
        self._record(group, name, bool(value <= bound), float(value), float(bound), detail=detail)

    def _hertz_grid(self) -> GridSpec:
        n, extent = self.config.hertz_grid_count, Settings.HERTZ_EXTENT
        corner = -0.5 * extent
        return GridSpec(origin=SpacetimePoint(corner, corner, corner, corner), extents=(extent,) * 4,
                        counts=(n,) * 4, h=Settings.HERTZ_STEP)

    def _random_points(self, count: int, extent: Optional[float] = None) -> SpacetimePoint:
        extent = extent or self.config.wavelength
        t, x, y, z = self.rng.uniform(0.0, extent, size=(4, count))
        return SpacetimePoint(t, x, y, z)

    def _random_even(self, count: int) -> Multivector:
        coeffs = np.zeros((count, blades.DIMENSION))
        coeffs[:, blades.EVEN_INDICES] = self.rng.standard_normal((count, len(blades.EVEN_INDICES)))
        return Multivector(coeffs)

    # groups

    def _monopole_checks(self) -> None:
        group, g = 'monopole', self.config.coupling
        E = beltrami_field(BeltramiParams.from_coupling(g))
        F_inf = embed_electric(E)
        m = Settings.CURL_FACTOR * g

        self._residual(group, 'static monopole equation', EquationId.EQ10, {'field': F_inf, 'g': g})
        self._residual(group, 'monopole equation with the transcendent current', EquationId.EQ1,
                       {'field': F_inf, 'current': transcendent_current(F_inf), 'g': g})
        self._residual(group, 'Pauli-algebra monopole equation', EquationId.EQ12, {'field': E, 'g': g})
        self._residual(group, 'dual wedge with curl factor 1', EquationId.EQ13,
                       {'field': E, 'g': g, 'factor': Settings.CURL_FACTOR})
        self._residual(group, 'massive first-order form', EquationId.EQ_A, {'field': F_inf, 'm': m})
        self._residual(group, 'massive second-order form', EquationId.EQ_B, {'field': F_inf, 'm': m})

        stated = BeltramiParams.from_coupling(g, Settings.STATED_CURL_FACTOR)
        E_stated = beltrami_field(stated)
        self._residual(group, 'force-free equation with factor 2', EquationId.EQ14,
                       {'field': E_stated, 'g': g, 'factor': Settings.STATED_CURL_FACTOR})
        self._residual(group, 'Helmholtz equation with coefficient (2g)^2', EquationId.EQ15,
                       {'field': E_stated, 'coefficient': stated.lambda_eig ** 2})
        self._residual(group, 'Helmholtz equation with coefficient g^2', EquationId.EQ15,
                       {'field': E_stated, 'coefficient': g ** 2}, expected='inconsistent',
                       detail='curl E = 2gE implies lap E = -4g^2 E; the g^2 coefficient leaves 3g^2 E')

        fitted = fit_coupling(embed_electric(E_stated), self.grid.with_step(Settings.PRECISION_STEP))
        factor = stated.lambda_eig / fitted
        self._bound(group, 'curl factor implied by the monopole equation', abs(factor - Settings.CURL_FACTOR),
                    self._tolerance(Settings.CURL_FACTOR),
                    detail=f"curl eigenvalue {stated.lambda_eig:g} fits g={fitted:.12g}: curl E = {factor:.12g} g E")

        points = self._random_points(self.config.property_samples)
        h = Settings.PRECISION_STEP
        e_values = relative_vector(E_stated(points))
        curl = curl3(E_stated, points, h, richardson=True, static=True)
        scale = float(np.max(np.linalg.norm(e_values, axis=-1)))
        self._bound(group, 'force-free curl eigenvalue (Richardson)',
                    float(np.max(np.linalg.norm(curl - stated.lambda_eig * e_values, axis=-1))) / scale,
                    Settings.FORCE_FREE_TOLERANCE)
        self._bound(group, 'force-free divergence (Richardson)',
                    float(np.max(np.abs(div3(E_stated, points, h, richardson=True)))), Settings.DIVERGENCE_TOLERANCE)

        F_stated = embed_electric(E_stated)
        current = transcendent_current(F_stated)(points)
        force = lorentz_force(current, F_stated(points))
        self._bound(group, 'Lorentz force on the transcendent current', float(np.max(norm(force))),
                    self.config.tolerance_abs * scale ** 2)
        square = gp(current, current).scalar
        self._bound(group, 'transcendent current is spacelike with J^2 = -|E|^2',
                    float(np.max(np.abs(square + np.sum(e_values ** 2, axis=-1)))),
                    self.config.tolerance_abs * scale ** 2)

        J = sum(GAMMA[mu] * self.rng.standard_normal(64) for mu in range(4))
        bivector_coeffs = np.zeros((64, blades.DIMENSION))
        bivector_coeffs[:, blades.GRADES == 2] = self.rng.standard_normal((64, 6))
        F = Multivector(bivector_coeffs)
        power, relative = relative_force(J, F)
        rho, j = relative_current(J)
        split = pauli_split(F)
        expected_power = np.sum(j * split.B, axis=-1)
        expected_force = rho[..., None] * split.B - np.cross(j, split.E)
        self._bound(group, 'relative force decomposition',
                    float(max(np.max(np.abs(power - expected_power)), np.max(np.abs(relative - expected_force)))),
                    self.config.tolerance_abs * float(np.max(norm(J) * norm(F))))

    def _duality_checks(self) -> None:
        group, g = 'duality', self.config.coupling
        F_inf = embed_electric(beltrami_field(BeltramiParams.from_coupling(g)))
        wave = DualityWave.from_coupling(g)
        rotated = duality_rotate(F_inf, wave)

        self._residual(group, 'free Maxwell equation on the duality-rotated field', EquationId.EQ_FREE, {'field': rotated})

        free_inputs = {'field': rotated}
        monopole_inputs = {'field': F_inf, 'g': wave.m}
        fine = self.grid.with_step(Settings.PRECISION_STEP)
        free = pointwise_residual(EquationId.EQ_FREE, free_inputs, fine, richardson=True, workers=self.config.workers)
        monopole = pointwise_residual(EquationId.EQ10, monopole_inputs, fine, richardson=True,
                                      workers=self.config.workers)
        self._bound(group, 'free and monopole residuals agree pointwise', float(np.max(np.abs(free - monopole))),
                    Settings.EQUIVALENCE_TOLERANCE)
        orders, exact = [], []
        for eq_id, inputs in ((EquationId.EQ_FREE, free_inputs), (EquationId.EQ10, monopole_inputs)):
            study = convergence_study(eq_id, inputs, self.grid, levels=3, workers=self.config.workers)
            if study.exact:
                exact.append(study.equation_id)
                continue
            orders.extend(order if order is not None else 0.0 for order in study.orders)
        worst = min(orders, default=None)
        converged = worst is None or worst >= Settings.MIN_CONVERGENCE_ORDER
        self._record(group, 'free and monopole residuals converge at second order', converged,
                     0.0 if worst is None else max(0.0, Settings.MIN_CONVERGENCE_ORDER - worst), 0.0,
                     order_estimate=worst,
                     detail=f"observed orders {[round(o, 3) for o in orders]}, exact on every step: {exact}")

        points = self._random_points(self.config.property_samples)
        split = pauli_split(rotated(points))
        e_inf = pauli_split(F_inf(points)).E
        phase = (wave.m * points.t)[..., None]
        deviation = max(np.max(np.abs(split.E - e_inf * np.cos(phase))),
                        np.max(np.abs(split.B + e_inf * np.sin(phase))))
        self._bound(group, 'rotated field splits into E cos mt and -E sin mt', float(deviation),
                    self._tolerance(float(np.max(np.abs(e_inf)))))

        boosted = boost_field(rotated, self.config.boost_speed)
        self._residual(group, 'free Maxwell equation on the boosted field', EquationId.EQ_FREE, {'field': boosted},
                       detail=f"V={self.config.boost_speed}")

    def _hertz_checks(self) -> None:
        group = 'hertz'
        grid = self._hertz_grid()
        points = grid.points()
        cases = (
            (HertzParams(**BRADYONIC_HERTZ), (EquationId.EQ_F4, EquationId.EQ_F5)),
            (HertzParams(**TACHYONIC_HERTZ), (EquationId.EQ_F11, EquationId.EQ_F3)),
        )
        for hp, (first_order, second_order) in cases:
            label = hp.branch.value
            chain = hertz_chain(hp, grid.h, richardson=True)
            scale = {name: float(np.max(norm(getattr(chain, name)(points)))) for name in ('Pi', 'A', 'F', 'F0')}

            def stage(name, hp=hp):
                return lambda h: getattr(hertz_chain(hp, h, richardson=True), name)

            rel = Settings.HERTZ_TOLERANCE_REL
            self._field_residual(group, f'{label}: box Pi = 0', EquationId.BOX_PI,
                                 {'field': hertz_potential(hp)}, grid, scale['Pi'], rel)
            self._field_residual(group, f'{label}: delta A = 0', EquationId.CODIFF_A,
                                 {'field': stage('A')}, grid, scale['A'], rel)
            self._field_residual(group, f'{label}: dirac F = 0', EquationId.EQ_FREE,
                                 {'field': stage('F')}, grid, scale['F'], rel)
            self._field_residual(group, f'{label}: derotated first-order equation', first_order,
                                 {'field': stage('F0'), 'kappa': hp.kappa}, grid, scale['F0'], rel)
            self._field_residual(group, f'{label}: derotated Klein-Gordon equation', second_order,
                                 {'field': stage('F0'), 'm': hp.m}, grid, scale['F0'], rel)

            try:
                HertzParams(branch=hp.branch, m=hp.m, omega=hp.omega, k=hp.omega)
                rejected = False
            except OffShellError:
                rejected = True
            self._record(group, f'{label}: off-dispersion parameters rejected', rejected, 0.0 if rejected else 1.0, 0.0)

    def _spinor_checks(self) -> None:
        group, tol = 'spinor', self.config.tolerance_abs
        # ten round trips per property sample: 10^4 at the default sample count
        psi = self._random_even(10 * self.config.property_samples)
        rho, _ = density_and_angle(psi)
        psi = psi[rho > 1e-6]
        size = norm(psi)
        parts = polar_decompose(psi)
        self._bound(group, 'polar round trip', float(np.max(norm(recompose(parts) - psi) / size)), tol,
                    detail=f"{size.size} samples")

        conditioned = parts.rho > Settings.WELL_CONDITIONED_RATIO * size ** 2
        rotor = parts.R[conditioned]
        self._bound(group, 'rotor normalisation', float(np.max(norm(gp(rotor, reverse(rotor)) - ONE))), tol)

        current = gp(gp(psi, G0), reverse(psi))
        covariance = current - gp(gp(parts.R, G0), reverse(parts.R)) * parts.rho
        self._bound(group, 'psi gamma0 reverse(psi) = rho R gamma0 reverse(R)',
                    float(np.max(norm(covariance) / size ** 2)), tol)
        self._record(group, 'Dirac current is a timelike vector',
                     bool(np.all(gp(current, current).scalar > 0.0)),
                     float(np.max(norm(current - grade(current, 1)) / size ** 2)), tol)

        field = field_from_spinor(SpinorField(lambda p: psi), 'g2g1', self.config.unit_prefactor)(SpacetimePoint())
        self._bound(group, 'spinor field map is a bivector',
                    float(np.max(norm(field - grade(field, 2)) / size ** 2)), tol)

        sample = psi[:100]
        _, sample_beta = density_and_angle(sample)
        force_scale = float(np.max(norm(sample) ** 4))
        worst = max(float(np.max(norm(auto_force(sample, sample_beta + offset))))
                    for offset in (0.0, math.pi, -math.pi))
        self._bound(group, 'auto-force vanishes at lambda = beta mod pi', worst, tol * force_scale)

        witness = exp_bivector(Multivector.from_blade('g1g3', 0.3))
        _, witness_beta = density_and_angle(witness)
        witness_force = float(norm(auto_force(witness, float(witness_beta) + math.pi / 2.0)))
        self._record(group, 'auto-force is nonzero at lambda = beta + pi/2',
                     witness_force >= Settings.AUTO_FORCE_WITNESS_BOUND, witness_force,
                     Settings.AUTO_FORCE_WITNESS_BOUND, detail='witness exp(0.3 gamma1 gamma3); value is a lower bound')

        bradyonic = plane_wave_spinor(*BRADYONIC_WAVE, branch=Branch.BRADYONIC)
        tachyonic = plane_wave_spinor(*TACHYONIC_WAVE, branch=Branch.TACHYONIC)
        m = bradyonic.m_nu
        self._residual(group, 'bradyonic plane wave: Dirac equation', EquationId.EQ_SUPD, {'psi': bradyonic, 'm': m})
        self._residual(group, 'bradyonic plane wave: Klein-Gordon', EquationId.EQ37, {'psi': bradyonic, 'm': m})
        self._residual(group, 'bradyonic plane wave: two-mass form with m1 = 0', EquationId.EQ35,
                       {'psi': bradyonic, 'm1': 0.0, 'm2': m})
        self._residual(group, 'tachyonic plane wave: Dirac equation', EquationId.EQ39,
                       {'psi': tachyonic, 'm': tachyonic.m_nu})
        self._residual(group, 'tachyonic plane wave: Klein-Gordon', EquationId.EQ38,
                       {'psi': tachyonic, 'm': tachyonic.m_nu})
        try:
            plane_wave_spinor(1.0, 1.0, 1.0, Branch.BRADYONIC)
            rejected = False
        except OffShellError:
            rejected = True
        self._record(group, 'off-shell plane wave rejected', rejected, 0.0 if rejected else 1.0, 0.0)

        rest = plane_wave_spinor(1.0, 0.0, 1.0, Branch.BRADYONIC)
        _, rest_beta = density_and_angle(rest(SpacetimePoint()))
        rest_beta = float(rest_beta)
        K, mg_e = ansatz_couplings(rest.m_nu, rest_beta)
        self._residual(group, 'Dirac-like equation with the current ansatz', EquationId.EQ31, {
            'psi': rest,
            'current': current_ansatz(rest, AnsatzParams(lam=rest_beta)),
            'Lambda': 0.0, 'K': K, 'm_param': mg_e, 'e_charge': 1.0,
        }, detail=f"beta={rest_beta:.12g}, K={K:.12g}, mg/e={mg_e:.12g}")
        reduced = m1_m2(K, mg_e, rest_beta)
        self._bound(group, 'ansatz couplings give m1 = 0 and m2 = m',
                    float(max(abs(reduced[0]), abs(reduced[1] - rest.m_nu))), self._tolerance(rest.m_nu))

        kappa = BRADYONIC_WAVE[0] * G0 - BRADYONIC_WAVE[1] * GAMMA[3]
        points = self._random_points(16)
        invariants = kinematic_invariants(bradyonic, points, Settings.PRECISION_STEP, richardson=True)
        expected_lambda = -gp(invariants.v, kappa).scalar
        self._bound(group, 'plane-wave invariants Lambda = -v.kappa and K = 0',
                    float(max(np.max(np.abs(invariants.Lambda - expected_lambda)), np.max(np.abs(invariants.K)))),
                    self._tolerance(float(np.max(np.abs(expected_lambda)))),
                    detail=f"Lambda={float(np.mean(invariants.Lambda)):.12g}, K={float(np.mean(invariants.K)):.3e}")

    def _spectrum_checks(self) -> None:
        group = 'spectrum'
        spectrum = masses.fitted_spectrum()
        m_param = spectrum.params.m_param
        self._bound(group, 'fitted mass scale', abs(m_param - Settings.FITTED_MASS_SCALE_EV),
                    Settings.FITTED_MASS_SCALE_TOLERANCE_EV, detail=f"m = {m_param:.6e} eV")
        published = Settings.PUBLISHED_MASSES_EV
        self._bound(group, 'masses reproduce the published table',
                    max(abs(entry.mass_eV - published[entry.n]) for entry in spectrum.masses),
                    Settings.MASS_TOLERANCE_EV,
                    detail=', '.join(f"m{entry.n}={entry.mass_eV:.4f} eV" for entry in spectrum.masses))
        self._bound(group, 'fitted masses saturate the sum bound',
                    abs(spectrum.sum - Settings.DEFAULT_SUM_BOUND_EV) / Settings.DEFAULT_SUM_BOUND_EV,
                    Settings.ALGEBRA_REL_TOLERANCE)
        values = [entry.mass_eV for entry in spectrum.masses]
        self._bound(group, 'masses are nearly degenerate', max(values) / min(values), Settings.DEGENERACY_RATIO)
        self._bound(group, 'lightest mass bound', min(values), Settings.LIGHTEST_MASS_BOUND_EV)

        worst = 0.0
        for _ in range(10 * self.config.property_samples):
            N = float(self.rng.uniform(1.0, 10.0))
            n = int(self.rng.integers(0, int(N) + 1))
            m_scale = float(self.rng.uniform(1e-5, 1e-2))
            params = masses.SpectrumParams(m_param=m_scale, N=N, n_set=[n])
            closed = masses.m2(params.K, masses.mg_over_e(n, m_scale))
            direct = masses.mass_n(n, params)
            worst = max(worst, abs(direct - closed) / max(abs(direct), params.K))
        self._bound(group, 'spectrum formula equals the eliminated m2', worst, Settings.ALGEBRA_REL_TOLERANCE)

        worst = 0.0
        for _ in range(self.config.property_samples):
            K = float(self.rng.uniform(0.1, 10.0))
            mg_e = float(self.rng.uniform(-10.0, 10.0))
            beta = masses.beta_for_null_m1(K, mg_e)
            scale = math.hypot(K, mg_e)
            worst = max(worst, abs(masses.m1(K, mg_e, beta)) / scale,
                        abs(masses.m2_at(K, mg_e, beta) - masses.m2(K, mg_e)) / scale)
        self._bound(group, 'beta with m1 = 0 gives the closed-form m2', worst, Settings.ALGEBRA_REL_TOLERANCE)

        printed = [masses.MassEntry(n=n, mass_eV=value) for n, value in published.items()]
        diffs = masses.mass_squared_diffs(printed)
        anchor = next(d for d in diffs if (d.i, d.j) == (1, 2))
        self._bound(group, 'm1^2 - m2^2 from the published masses', abs(anchor.value_eV2 - anchor.reported_eV2),
                    Settings.MASS_TOLERANCE_EV ** 2,
                    detail='; '.join(f"m{d.i}^2-m{d.j}^2 computed {d.value_eV2:.4e}, printed {d.reported_eV2:.4e}"
                                     for d in diffs))


def cmd_verify(config: RunConfig) -> SuiteReport:
    """Run the full identity suite"""
    return IdentitySuite(config).run()
