import csv
import json

import pytest
from click.testing import CliRunner

from neutrino_sta.cli import cli


@pytest.fixture
def runner():
    return CliRunner()


def test_spectrum_prints_json(runner):
    result = runner.invoke(cli, ['spectrum'])
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert [entry['n'] for entry in data['masses']] == [0, 1, 2]
    assert data['sum'] == pytest.approx(0.28)


def test_spectrum_with_mass_scale(runner):
    result = runner.invoke(cli, ['spectrum', '--m-param', '1.97e-4', '--n-set', '0,1'])
    assert result.exit_code == 0, result.output
    assert len(json.loads(result.output)['masses']) == 2


def test_spectrum_exclusive_flags(runner):
    result = runner.invoke(cli, ['spectrum', '--sum-bound', '0.3', '--m-param', '1e-4'])
    assert result.exit_code == 2
    assert 'mutually exclusive' in result.output


def test_spectrum_bad_n_set(runner):
    result = runner.invoke(cli, ['spectrum', '--n-set', 'a,b'])
    assert result.exit_code == 2


def test_spectrum_csv(runner, output_dir):
    result = runner.invoke(cli, ['spectrum', '--csv', '--output-dir', str(output_dir)])
    assert result.exit_code == 0, result.output
    assert (output_dir / 'spectrum.csv').exists()
    assert (output_dir / 'spectrum.json').exists()


def test_field_sample(runner, tmp_path, output_dir):
    config = tmp_path / 'beltrami.json'
    config.write_text(json.dumps({'kind': 'beltrami', 'grid': {'counts': [1, 2, 2, 2]}}))
    result = runner.invoke(cli, ['field', 'sample', '--config', str(config), '--name', 'b',
                                 '--output-dir', str(output_dir)])
    assert result.exit_code == 0, result.output
    with (output_dir / 'b.csv').open() as handle:
        assert len(list(csv.reader(handle))) == 1 + 8


def test_field_sample_invalid_config(runner, tmp_path):
    config = tmp_path / 'bad.json'
    config.write_text(json.dumps({'kind': 'beltrami', 'colour': 'red'}))
    result = runner.invoke(cli, ['field', 'sample', '--config', str(config)])
    assert result.exit_code == 2


def test_spinor_check(runner):
    result = runner.invoke(cli, ['spinor', 'check', '--branch', 'tachyonic', '--omega', '1',
                                 '--k', '1.4142135623730951'])
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert {report['equation_id'] for report in data['reports']} == {'EQ39', 'EQ38'}
    assert 'samples' in data['reports'][0]
    assert len(data['invariants']) == 4


def test_spinor_check_off_shell(runner):
    result = runner.invoke(cli, ['spinor', 'check', '--omega', '1', '--k', '1'])
    assert result.exit_code == 1


def test_verify_invalid_config(runner, tmp_path):
    config = tmp_path / 'run.json'
    config.write_text(json.dumps({'tolerance_abs': -1}))
    result = runner.invoke(cli, ['verify', '--config', str(config)])
    assert result.exit_code == 2


def test_version(runner):
    result = runner.invoke(cli, ['--version'])
    assert result.exit_code == 0
    assert 'neutrino-sta' in result.output
