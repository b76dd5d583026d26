"""Tests for command reports and the report exporter"""
import csv
import json
from fractions import Fraction

import pytest
from sympy import Rational

from config import EXIT_FAIL, EXIT_NOT_GOOD, EXIT_OK
from src.cli.report import Report, error_report, jsonable
from src.cli.spec_parser import SpecParseError
from src.core.linalg import rat_matrix
from src.core.monopole import NotGoodError
from src.exporters import ReportExporter


class TestReport:
    """Test report normalization and JSON output"""

    def test_jsonable(self):
        """Test conversion of rationals, matrices and tuples"""
        assert jsonable(Fraction(3, 2)) == "3/2"
        assert jsonable(Fraction(4, 2)) == "2"
        assert jsonable(Rational(-1, 3)) == "-1/3"
        assert jsonable(rat_matrix([[1, "1/2"]])) == [["1", "1/2"]]
        assert jsonable({1: (2, 3)}) == {"1": [2, 3]}
        assert jsonable(True) is True

    def test_jsonable_rejects_objects(self):
        """Test an unsupported value"""
        with pytest.raises(TypeError):
            jsonable(object())

    def test_deterministic_json(self):
        """Test sorted keys and a trailing newline"""
        report = Report("anomaly", inputs={"b": 1, "a": 2}, results={"pass": True})
        text = report.to_json()
        assert text.endswith("}\n")
        assert text.index('"a"') < text.index('"b"')
        assert text == Report("anomaly", inputs={"a": 2, "b": 1}, results={"pass": True}).to_json()

    def test_round_trip(self):
        """Test from_json(to_json())"""
        report = Report("hilbert", inputs={"order": 4}, results={"coefficients": [["0", "1"]]},
                        warnings=["careful"], exit_status=EXIT_FAIL)
        assert Report.from_json(report.to_json()) == report

    def test_status_label(self):
        """Test human-readable exit statuses"""
        assert Report("anomaly").status_label == "ok"
        assert Report("anomaly", exit_status=EXIT_NOT_GOOD).status_label == "not good"

    def test_error_report_location(self):
        """Test that parse locations are carried over"""
        report = error_report("rep-info", {}, SpecParseError("group.factors[0]", "bad"), 2)
        assert report.results["location"] == "group.factors[0]"
        assert report.results["error_type"] == "SpecParseError"

    def test_error_report_direction_and_warnings(self):
        """Test non-convergence details"""
        error = NotGoodError("diverges", (1, 0), warnings=["anomalous"])
        report = error_report("hilbert", {"order": 3}, error, EXIT_NOT_GOOD)
        assert report.results["direction"] == [1, 0]
        assert report.warnings == ["anomalous"]
        assert report.exit_status == EXIT_NOT_GOOD


class TestReportExporter:
    """Test writing reports to disk"""

    @pytest.fixture
    def exporter(self, tmp_path):
        """Create an exporter writing to a temporary directory"""
        return ReportExporter(tmp_path)

    @pytest.fixture
    def hilbert_report(self):
        """A hilbert report with a presentation series"""
        return Report("hilbert", results={
            "coefficients": [["0", "1"], ["1", "1"], ["2", "3"]],
            "presentation": {"series": [["0", "1"], ["2", "3"]]},
        }, exit_status=EXIT_OK)

    def test_export_json(self, exporter, hilbert_report, tmp_path):
        """Test the default file name and content"""
        path = exporter.export_json(hilbert_report)
        assert path == tmp_path / "hilbert.json"
        assert json.loads(path.read_text())["command"] == "hilbert"
        assert path.read_text() == hilbert_report.to_json()

    def test_export_series_csv(self, exporter, hilbert_report, tmp_path):
        """Test one row per exponent with the presentation column"""
        path = exporter.export_series_csv(hilbert_report, tmp_path / "nested" / "series.csv")
        with open(path) as f:
            rows = list(csv.DictReader(f))
        assert [row["Exponent"] for row in rows] == ["0", "1", "2"]
        assert [row["Presentation"] for row in rows] == ["1", "0", "3"]

    def test_export_series_csv_without_series(self, exporter):
        """Test a report with no coefficients"""
        with pytest.raises(ValueError):
            exporter.export_series_csv(Report("anomaly", results={"pass": True}))
