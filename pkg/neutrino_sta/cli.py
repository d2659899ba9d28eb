"""
Command-line interface for neutrino-sta.

Usage:
    neutrino-sta verify                       # Run the identity suite
    neutrino-sta verify --tolerance-abs 1e-30 # Same, with an unreachable tolerance
    neutrino-sta spectrum --csv               # Masses with m fitted to the sum bound
    neutrino-sta field sample --config f.json # Sample a field on a grid
    neutrino-sta spinor check --branch tachyonic --omega 1 --k 1.4142135623730951
    neutrino-sta serve                        # Start the MCP server on stdio
"""

import asyncio
import json
import sys
from typing import Optional, Tuple

import click

from neutrino_sta import __version__
from neutrino_sta.commands import (
    FieldSampleConfig, SpinorCheckConfig, cmd_field_sample, cmd_spectrum, cmd_spinor_check,
)
from neutrino_sta.config.run_config import RunConfig
from neutrino_sta.config.settings import Settings
from neutrino_sta.exceptions import ConfigError, NeutrinoStaError
from neutrino_sta.reports.writer import ReportWriter
from neutrino_sta.utils.logging_config import setup_logging
from neutrino_sta.verification.suite import cmd_verify

__all__ = [
    "cli",
]

USAGE_ERROR = 2


def _fail(message: str, code: int) -> None:
    click.echo(f"Error: {message}", err=True)
    sys.exit(code)


@click.group()
@click.version_option(version=__version__, prog_name="neutrino-sta")
@click.option('--log-level', default='WARNING', show_default=True,
              type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR'], case_sensitive=False))
def cli(log_level: str):
    """
    Spacetime-algebra identity checks and the quantized neutrino spectrum.

    Examples:

        neutrino-sta verify --xlsx

        neutrino-sta spectrum --N 3 --sum-bound 0.28

        neutrino-sta field sample --config beltrami.json
    """
    setup_logging(log_level)


@cli.command()
@click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False), default=None,
              help='RunConfig JSON file')
@click.option('--tolerance-abs', type=float, default=None, help='Absolute tolerance override')
@click.option('--seed', type=int, default=None, help='Seed for the randomized property checks')
@click.option('--output-dir', type=click.Path(file_okay=False), default=None, help='Report directory')
@click.option('--xlsx', is_flag=True, help='Also write an Excel workbook of the checks')
def verify(config_path: Optional[str], tolerance_abs: Optional[float], seed: Optional[int],
           output_dir: Optional[str], xlsx: bool):
    """
    Run every identity check and write a JSON report.

    Exit code is 0 when every check has its expected status, 1 otherwise
    and 2 for configuration errors.
    """
    try:
        config = RunConfig.load(config_path, tolerance_abs=tolerance_abs, seed=seed, output_dir=output_dir)
    except ConfigError as e:
        _fail(str(e), USAGE_ERROR)

    report = cmd_verify(config)
    writer = ReportWriter(config.output_dir)
    try:
        path = writer.write_json(Settings.SUITE_REPORT_NAME, report)
        if xlsx:
            writer.write_workbook(Settings.SUITE_WORKBOOK_NAME, suite=report)
    except OSError as e:
        _fail(f"Cannot write report: {e}", 1)

    failures = report.failures()
    click.echo(f"{len(report.checks) - len(failures)}/{len(report.checks)} checks as expected")
    for check in failures:
        click.echo(f"  {check.group}/{check.name}: {check.status} (expected {check.expected_status})")
    click.echo(f"Report: {path}")
    sys.exit(report.exit_code)


def _parse_n_set(value: Optional[str]) -> Optional[Tuple[int, ...]]:
    if value is None:
        return None
    try:
        return tuple(int(item) for item in value.split(',') if item.strip())
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got '{value}'")


@cli.command()
@click.option('--N', 'N', type=float, default=Settings.DEFAULT_N, show_default=True, help='Upper quantum number N')
@click.option('--sum-bound', type=float, default=None, help='Fit m so the masses sum to this value (eV)')
@click.option('--m-param', type=float, default=None, help='Mass parameter m in eV')
@click.option('--n-set', default=None, help='Comma-separated quantum numbers, e.g. 0,1,2')
@click.option('--output-dir', type=click.Path(file_okay=False), default=None, help='Report directory')
@click.option('--csv', 'write_csv', is_flag=True, help='Also write a CSV mass table')
@click.option('--xlsx', is_flag=True, help='Also write an Excel workbook')
def spectrum(N: float, sum_bound: Optional[float], m_param: Optional[float], n_set: Optional[str],
             output_dir: Optional[str], write_csv: bool, xlsx: bool):
    """
    Compute the neutrino mass spectrum.

    Without --m-param, m is fitted so the masses sum to --sum-bound
    (default 0.28 eV).
    """
    try:
        result = cmd_spectrum(N=N, sum_bound=sum_bound, m_param=m_param, n_set=_parse_n_set(n_set))
    except (ConfigError, click.BadParameter) as e:
        _fail(str(e), USAGE_ERROR)
    except NeutrinoStaError as e:
        _fail(str(e), 1)

    click.echo(result.model_dump_json(indent=2))
    if write_csv or xlsx:
        writer = ReportWriter(output_dir)
        writer.write_json(Settings.SPECTRUM_REPORT_NAME, result)
        if write_csv:
            click.echo(f"CSV: {writer.write_spectrum_csv('spectrum.csv', result)}", err=True)
        if xlsx:
            click.echo(f"Workbook: {writer.write_workbook('spectrum.xlsx', spectrum=result)}", err=True)


@cli.group()
def field():
    """Construct and sample electromagnetic fields."""


@field.command('sample')
@click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False), required=True,
              help='Field sample JSON file')
@click.option('--name', default='field', show_default=True, help='Base name of the CSV and JSON outputs')
@click.option('--output-dir', type=click.Path(file_okay=False), default=None, help='Output directory')
def field_sample(config_path: str, name: str, output_dir: Optional[str]):
    """
    Sample a field on a grid: one CSV row per point plus a JSON sidecar.
    """
    try:
        config = FieldSampleConfig.load(config_path)
    except ConfigError as e:
        _fail(str(e), USAGE_ERROR)

    try:
        result = cmd_field_sample(config, ReportWriter(output_dir), name)
    except (NeutrinoStaError, ValueError) as e:
        _fail(str(e), 1)
    click.echo(f"Sampled {result.field_name} at {result.samples} points: {result.csv_path}")


@cli.group()
def spinor():
    """Dirac-Hestenes spinor checks."""


@spinor.command('check')
@click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False), default=None,
              help='Spinor check JSON file')
@click.option('--branch', type=click.Choice(['bradyonic', 'tachyonic']), default=None)
@click.option('--omega', type=float, default=None)
@click.option('--k', type=float, default=None)
@click.option('--m', type=float, default=None)
def spinor_check(config_path: Optional[str], branch: Optional[str], omega: Optional[float],
                 k: Optional[float], m: Optional[float]):
    """
    Residuals of a plane-wave spinor and its (Lambda, K) samples, as JSON.
    """
    overrides = {key: value for key, value in
                 dict(branch=branch, omega=omega, k=k, m=m).items() if value is not None}
    try:
        base = SpinorCheckConfig.load(config_path).model_dump() if config_path else {}
        config = SpinorCheckConfig(**{**base, **overrides})
    except ConfigError as e:
        _fail(str(e), USAGE_ERROR)
    except ValueError as e:
        _fail(f"Invalid spinor check parameters: {e}", USAGE_ERROR)

    try:
        result = cmd_spinor_check(config)
    except NeutrinoStaError as e:
        _fail(str(e), 1)
    click.echo(json.dumps(json.loads(result.model_dump_json(by_alias=True)), indent=2))


@cli.command()
@click.option('--output-dir', type=click.Path(file_okay=False), default=None, help='Report directory')
def serve(output_dir: Optional[str]):
    """Start the MCP tool server on stdio."""
    from neutrino_sta.main import serve as serve_mcp

    asyncio.run(serve_mcp(output_dir))


def main():
    cli()


if __name__ == '__main__':
    main()
