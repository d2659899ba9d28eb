import json

import numpy as np
import pytest
from pydantic import ValidationError

from neutrino_sta.calculus.fieldmap import GridSpec
from neutrino_sta.calculus.residuals import (
    EquationId, ResidualReport, convergence_study, equation_residual, fit_coupling, pointwise_residual,
)
from neutrino_sta.exceptions import MissingInputError, TimeDependentFieldError
from neutrino_sta.fields.beltrami import BeltramiParams, beltrami_field, embed_electric, transcendent_current
from neutrino_sta.fields.duality import DualityWave, duality_rotate


@pytest.fixture
def static_field():
    return embed_electric(beltrami_field(BeltramiParams.from_coupling(1.0)))


def test_static_monopole_equation_holds(static_field, fine_grid):
    report = equation_residual(EquationId.EQ10, {'field': static_field, 'g': 1.0}, fine_grid, richardson=True)
    assert report.max_abs < 1e-8
    assert report.sample_count == fine_grid.size
    assert report.equation_id == 'EQ10'


def test_wrong_coupling_leaves_residual(static_field, fine_grid):
    report = equation_residual(EquationId.EQ10, {'field': static_field, 'g': 2.0}, fine_grid, richardson=True)
    assert report.max_abs > 0.1


def test_monopole_equation_with_transcendent_current(static_field, fine_grid):
    inputs = {'field': static_field, 'current': transcendent_current(static_field), 'g': 1.0}
    assert equation_residual(EquationId.EQ1, inputs, fine_grid, richardson=True).max_abs < 1e-8


def test_pauli_forms(fine_grid):
    E = beltrami_field(BeltramiParams.from_coupling(1.0))
    assert equation_residual(EquationId.EQ12, {'field': E, 'g': 1.0}, fine_grid, richardson=True).max_abs < 1e-8
    report = equation_residual(EquationId.EQ13, {'field': E, 'g': 1.0, 'factor': 1.0}, fine_grid, richardson=True)
    assert report.max_abs < 1e-8


def test_helmholtz_coefficient(fine_grid):
    E = beltrami_field(BeltramiParams.from_coupling(1.0, curl_factor=2.0))
    good = equation_residual(EquationId.EQ15, {'field': E, 'coefficient': 4.0}, fine_grid, richardson=True)
    bad = equation_residual(EquationId.EQ15, {'field': E, 'coefficient': 1.0}, fine_grid, richardson=True)
    assert good.max_abs < 1e-5
    assert bad.max_abs > 1.0


def test_missing_input(static_field, fine_grid):
    with pytest.raises(MissingInputError):
        equation_residual(EquationId.EQ10, {'field': static_field}, fine_grid)


def test_static_equation_rejects_time_dependent_field(static_field, fine_grid):
    rotated = duality_rotate(static_field, DualityWave.from_coupling(1.0))
    with pytest.raises(TimeDependentFieldError):
        equation_residual(EquationId.EQ10, {'field': rotated, 'g': 1.0}, fine_grid)


def test_pointwise_residual_shape(static_field, fine_grid):
    values = pointwise_residual(EquationId.EQ10, {'field': static_field, 'g': 1.0}, fine_grid, richardson=True)
    assert values.shape == (fine_grid.size,)


def test_helmholtz_residual_converges_at_second_order(static_field):
    study = convergence_study(
        EquationId.EQ10, {'field': static_field, 'g': 1.0}, GridSpec.default(count=2), levels=3, workers=1,
    )
    assert len(study.steps) == 3
    assert not study.exact
    assert all(order is not None and order > 1.8 for order in study.orders)


def test_rotated_free_residual_is_exact_at_unit_coupling(static_field):
    # time and space stencil errors cancel for m = 1: every level sits at float noise
    rotated = duality_rotate(static_field, DualityWave.from_coupling(1.0))
    study = convergence_study(EquationId.EQ_FREE, {'field': rotated}, GridSpec.default(count=2), levels=3, workers=1)
    assert study.exact
    assert all(order is None for order in study.orders)


def test_fit_coupling_recovers_curl_eigenvalue(fine_grid):
    field = embed_electric(beltrami_field(BeltramiParams(lambda_eig=2.0)))
    assert fit_coupling(field, fine_grid) == pytest.approx(2.0, rel=1e-8)


def test_report_serialises_with_short_names():
    report = ResidualReport(equation_id='EQ10', max_abs=1e-3, rms=5e-4, samples=16, h=0.1, order_estimate=2.0)
    data = json.loads(report.to_json())
    assert set(data) >= {'equation_id', 'max_abs', 'rms', 'samples', 'h', 'order_estimate'}
    assert ResidualReport.model_validate(data) == report


def test_report_rejects_rms_above_max():
    with pytest.raises(ValidationError):
        ResidualReport(equation_id='EQ10', max_abs=1e-3, rms=1e-2, samples=1, h=0.1)
