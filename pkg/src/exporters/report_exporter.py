"""Write reports to JSON files and Hilbert series to CSV tables"""
import csv
import logging
from pathlib import Path
from typing import List, Optional

from config import OUTPUT_DIR
from src.cli.report import Report


logger = logging.getLogger(__name__)


class ReportExporter:
    """Export command reports"""

    def __init__(self, output_dir: Optional[Path] = None):
        self.output_dir = output_dir or OUTPUT_DIR

    def _resolve(self, path: Optional[Path], default_name: str) -> Path:
        target = Path(path) if path else self.output_dir / default_name
        target.parent.mkdir(parents=True, exist_ok=True)
        return target

    def export_json(self, report: Report, path: Optional[Path] = None) -> Path:
        """Write the report exactly as --json prints it"""
        filepath = self._resolve(path, f"{report.command}.json")
        filepath.write_text(report.to_json())
        logger.info(f"Exported {report.command} report to {filepath}")
        return filepath

    def export_series_csv(self, report: Report, path: Optional[Path] = None) -> Path:
        """One row per exponent; the presentation series is added when present"""
        if "coefficients" not in report.results:
            raise ValueError(f"{report.command} report has no series to export")

        filepath = self._resolve(path, f"{report.command}_series.csv")
        presentation = {
            exponent: coeff
            for exponent, coeff in report.results.get("presentation", {}).get("series", [])
        }

        fieldnames = ["Exponent", "Monopole"]
        if presentation:
            fieldnames.append("Presentation")

        rows: List[dict] = []
        for exponent, coeff in report.results["coefficients"]:
            row = {"Exponent": exponent, "Monopole": coeff}
            if presentation:
                row["Presentation"] = presentation.get(exponent, "0")
            rows.append(row)

        with open(filepath, "w", newline="") as csvfile:
            writer = csv.DictWriter(csvfile, fieldnames=fieldnames)
            writer.writeheader()
            writer.writerows(rows)

        logger.info(f"Exported {len(rows)} coefficients to {filepath}")
        return filepath
