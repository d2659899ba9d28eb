import csv
import json

import pytest

from neutrino_sta.commands import (
    FieldSampleConfig, SampleGrid, SpinorCheckConfig, cmd_field_sample, cmd_spectrum, cmd_spinor_check,
)
from neutrino_sta.exceptions import ConfigError, OffShellError
from neutrino_sta.fields.hertz import Branch
from neutrino_sta.reports.writer import ReportWriter


def test_spectrum_defaults_to_fit():
    spectrum = cmd_spectrum()
    assert spectrum.params.m_param == pytest.approx(1.97e-4, abs=2e-6)


def test_spectrum_with_explicit_mass_scale():
    spectrum = cmd_spectrum(N=3.0, m_param=2e-4, n_set=[0])
    assert spectrum.masses[0].mass_eV == pytest.approx(3.0 * 1.5 * 2e-4 / spectrum.params.alpha)


def test_spectrum_flags_are_exclusive():
    with pytest.raises(ConfigError):
        cmd_spectrum(sum_bound=0.28, m_param=1e-4)


def test_spectrum_invalid_parameters():
    with pytest.raises(ConfigError):
        cmd_spectrum(N=1.0, m_param=1e-4, n_set=[0, 2])


@pytest.mark.parametrize('kind', ['beltrami', 'duality', 'boosted'])
def test_field_sample_writes_one_row_per_point(kind, output_dir):
    config = FieldSampleConfig(kind=kind, grid=SampleGrid(counts=(2, 2, 1, 3)))
    result = cmd_field_sample(config, ReportWriter(str(output_dir)), 'sample')
    with open(result.csv_path) as handle:
        rows = list(csv.reader(handle))
    assert len(rows) == 1 + 12
    assert result.samples == 12
    sidecar = json.loads((output_dir / 'sample.json').read_text())
    assert sidecar['parameters']['kind'] == kind


def test_hertz_field_sample(output_dir):
    config = FieldSampleConfig(kind='hertz', branch=Branch.TACHYONIC, omega=1.25, k=0.75, h=1e-2,
                               grid=SampleGrid(counts=(1, 2, 2, 1)))
    result = cmd_field_sample(config, ReportWriter(str(output_dir)))
    assert result.samples == 4
    assert 'tachyonic' in result.field_name


def test_field_sample_config_from_file(tmp_path):
    path = tmp_path / 'f.json'
    path.write_text(json.dumps({'kind': 'boosted', 'boost_speed': 0.3}))
    assert FieldSampleConfig.load(str(path)).boost_speed == 0.3
    path.write_text(json.dumps({'kind': 'plasma'}))
    with pytest.raises(ConfigError):
        FieldSampleConfig.load(str(path))


def test_spinor_check_bradyonic():
    result = cmd_spinor_check(SpinorCheckConfig(grid_count=2))
    assert [r.equation_id for r in result.reports] == ['EQ_SUPD', 'EQ37']
    assert all(r.max_abs < 1e-6 for r in result.reports)
    assert len(result.invariants) == 4
    assert all(abs(sample.K) < 1e-6 for sample in result.invariants)


def test_spinor_check_tachyonic():
    config = SpinorCheckConfig(branch='tachyonic', omega=1.0, k=2.0 ** 0.5, grid_count=2)
    result = cmd_spinor_check(config)
    assert [r.equation_id for r in result.reports] == ['EQ39', 'EQ38']


def test_spinor_check_off_shell():
    with pytest.raises(OffShellError):
        cmd_spinor_check(SpinorCheckConfig(omega=1.0, k=1.0))
