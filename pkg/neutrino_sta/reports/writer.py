"""JSON, CSV and Excel output for verification and spectrum results"""

import csv
import os
from pathlib import Path
from typing import Any, Dict, Optional

import numpy as np
from openpyxl import Workbook, load_workbook
from openpyxl.worksheet.worksheet import Worksheet
from pydantic import BaseModel

from neutrino_sta.algebra.multivector import Multivector
from neutrino_sta.algebra.spacetime import SpacetimePoint
from neutrino_sta.config.settings import Settings
from neutrino_sta.utils.logging_config import get_logger

logger = get_logger(__name__)


def resolve_output_dir(output_dir: Optional[str] = None) -> Path:
    """Environment override first, then the given directory, then the default"""
    return Path(os.environ.get(Settings.OUTPUT_DIR_ENV) or output_dir or Settings.DEFAULT_OUTPUT_DIR)


class ReportWriter:
    """Writes reports below one output directory"""

    def __init__(self, output_dir: Optional[str] = None):
        self.output_dir = resolve_output_dir(output_dir)

    def _path(self, name: str) -> Path:
        self.output_dir.mkdir(parents=True, exist_ok=True)
        return self.output_dir / name

    def write_json(self, name: str, model: BaseModel) -> Path:
        path = self._path(name)
        path.write_text(model.model_dump_json(indent=2, by_alias=True), encoding='utf-8')
        logger.info(f"Wrote {path}")
        return path

    def write_field_csv(self, name: str, points: SpacetimePoint, values: Multivector) -> Path:
        """One row per sample: coordinates then the 16 blade coefficients"""
        path = self._path(name)
        coords = [np.broadcast_to(np.asarray(points.coordinate(mu), dtype=float), points.shape).ravel() for mu in range(4)]
        coeffs = values.coeffs.reshape(-1, 16)
        with path.open('w', newline='', encoding='utf-8') as handle:
            writer = csv.writer(handle)
            writer.writerow(Settings.FIELD_CSV_HEADERS)
            for row, blade_values in enumerate(coeffs):
                writer.writerow([repr(float(c[row])) for c in coords] + [repr(float(v)) for v in blade_values])
        logger.info(f"Wrote {len(coeffs)} field samples to {path}")
        return path

    def write_spectrum_csv(self, name: str, spectrum) -> Path:
        path = self._path(name)
        with path.open('w', newline='', encoding='utf-8') as handle:
            writer = csv.writer(handle)
            writer.writerow(Settings.SPECTRUM_CSV_HEADERS)
            for entry in spectrum.masses:
                writer.writerow([entry.n, repr(entry.mass_eV)])
        logger.info(f"Wrote spectrum table to {path}")
        return path

    def write_workbook(self, name: str, suite=None, spectrum=None) -> Path:
        """Excel export: a sheet of checks and/or a sheet of masses"""
        path = self._path(name)
        wb = Workbook()
        wb.remove(wb.active)
        if suite is not None:
            ws = wb.create_sheet(Settings.SUITE_SHEET_NAME)
            self._ensure_headers(ws, Settings.SUITE_HEADERS)
            for check in suite.checks:
                self._write_check_row(ws, ws.max_row + 1, check)
        if spectrum is not None:
            ws = wb.create_sheet(Settings.SPECTRUM_SHEET_NAME)
            self._ensure_headers(ws, ['n', 'mass_eV', 'm_i^2 - m_j^2', 'value_eV2', 'reported_eV2'])
            for row, entry in enumerate(spectrum.masses, 2):
                ws.cell(row=row, column=1, value=entry.n)
                ws.cell(row=row, column=2, value=entry.mass_eV)
            for row, diff in enumerate(spectrum.sq_diffs, 2):
                ws.cell(row=row, column=3, value=f"m{diff.i}^2 - m{diff.j}^2")
                ws.cell(row=row, column=4, value=diff.value_eV2)
                ws.cell(row=row, column=5, value=diff.reported_eV2)
        if not wb.sheetnames:
            raise ValueError("Nothing to export: pass a suite report or a spectrum")
        wb.save(path)
        logger.info(f"Workbook saved to {path}")
        return path

    def workbook_summary(self, name: str) -> Dict[str, Any]:
        """Count checks by status in a saved workbook"""
        path = self.output_dir / name
        try:
            if not path.exists():
                return {"error": f"Workbook not found: {path}"}

            wb = load_workbook(path)
            if Settings.SUITE_SHEET_NAME not in wb.sheetnames:
                return {"error": f"No {Settings.SUITE_SHEET_NAME} sheet found in workbook"}

            ws = wb[Settings.SUITE_SHEET_NAME]
            status_col = Settings.SUITE_HEADERS.index('Status') + 1
            status_counts: Dict[str, int] = {}
            for row in range(2, ws.max_row + 1):
                status = ws.cell(row=row, column=status_col).value
                if status:
                    status_counts[status] = status_counts.get(status, 0) + 1

            return {
                "total_checks": sum(status_counts.values()),
                "status_counts": status_counts,
                "file_path": str(path),
            }

        except Exception as e:
            logger.error(f"Error reading workbook summary: {e}")
            return {"error": f"Error reading workbook: {str(e)}"}

    @staticmethod
    def _ensure_headers(ws: Worksheet, headers) -> None:
        if ws.max_row == 1 and ws['A1'].value is None:
            for col, header in enumerate(headers, 1):
                ws.cell(row=1, column=col, value=header)

    @staticmethod
    def _write_check_row(ws: Worksheet, row: int, check) -> None:
        ws.cell(row=row, column=1, value=check.name)
        ws.cell(row=row, column=2, value=check.group)
        ws.cell(row=row, column=3, value=check.status)
        ws.cell(row=row, column=4, value=check.expected_status)
        ws.cell(row=row, column=5, value=check.max_abs)
        ws.cell(row=row, column=6, value=check.tolerance)
        ws.cell(row=row, column=7, value=check.order_estimate)
        ws.cell(row=row, column=8, value=check.detail)
