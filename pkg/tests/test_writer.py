import csv
import json

import numpy as np

from neutrino_sta.algebra.multivector import G0, Multivector
from neutrino_sta.algebra.spacetime import SpacetimePoint
from neutrino_sta.config.run_config import RunConfig
from neutrino_sta.config.settings import Settings
from neutrino_sta.reports.writer import ReportWriter, resolve_output_dir
from neutrino_sta.spectrum.masses import fitted_spectrum
from neutrino_sta.verification.suite import CheckResult, SuiteReport


def make_suite_report():
    checks = [
        CheckResult(name='a', group='monopole', status='pass', passed=True, max_abs=1e-12, tolerance=1e-10),
        CheckResult(name='b', group='monopole', status='inconsistent', expected_status='inconsistent',
                    passed=True, max_abs=3.0, tolerance=1e-10),
        CheckResult(name='c', group='spinor', status='fail', passed=False, max_abs=None, tolerance=0.0),
    ]
    return SuiteReport(config=RunConfig(), environment={'python': '3'}, seed=1, checks=checks, all_passed=False)


def test_resolve_output_dir(monkeypatch, tmp_path):
    monkeypatch.delenv(Settings.OUTPUT_DIR_ENV, raising=False)
    assert resolve_output_dir(str(tmp_path)) == tmp_path
    monkeypatch.setenv(Settings.OUTPUT_DIR_ENV, str(tmp_path / "env"))
    assert resolve_output_dir(str(tmp_path)) == tmp_path / "env"


def test_field_csv_rows(output_dir):
    points = SpacetimePoint(t=0.0, x=np.arange(3.0), y=np.zeros(3), z=np.ones(3))
    values = G0 * np.arange(3.0) + Multivector.zeros((3,))
    path = ReportWriter(str(output_dir)).write_field_csv('f.csv', points, values)
    with path.open() as handle:
        rows = list(csv.reader(handle))
    assert rows[0] == Settings.FIELD_CSV_HEADERS
    assert len(rows) == 4
    assert float(rows[3][1]) == 2.0
    assert float(rows[3][4 + 1]) == 2.0


def test_suite_report_json_round_trip(output_dir):
    report = make_suite_report()
    path = ReportWriter(str(output_dir)).write_json('suite.json', report)
    data = json.loads(path.read_text())
    assert data['schema_version'] == Settings.SCHEMA_VERSION
    assert SuiteReport.model_validate(data) == report
    assert report.exit_code == 1
    assert [check.name for check in report.failures()] == ['c']


def test_workbook_summary(output_dir):
    writer = ReportWriter(str(output_dir))
    writer.write_workbook('suite.xlsx', suite=make_suite_report(), spectrum=fitted_spectrum())
    summary = writer.workbook_summary('suite.xlsx')
    assert summary['total_checks'] == 3
    assert summary['status_counts'] == {'pass': 1, 'inconsistent': 1, 'fail': 1}


def test_workbook_summary_errors(output_dir):
    writer = ReportWriter(str(output_dir))
    assert 'error' in writer.workbook_summary('missing.xlsx')
    writer.write_workbook('spectrum.xlsx', spectrum=fitted_spectrum())
    assert 'error' in writer.workbook_summary('spectrum.xlsx')


def test_spectrum_csv(output_dir):
    path = ReportWriter(str(output_dir)).write_spectrum_csv('s.csv', fitted_spectrum())
    with path.open() as handle:
        rows = list(csv.reader(handle))
    assert rows[0] == Settings.SPECTRUM_CSV_HEADERS
    assert [row[0] for row in rows[1:]] == ['0', '1', '2']
