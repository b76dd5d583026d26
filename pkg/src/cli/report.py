"""Command reports and their JSON form"""
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Dict, List

import sympy

from config import EXIT_FAIL, EXIT_INVALID, EXIT_NOT_GOOD, EXIT_OK
from src.core.series import format_rational


STATUS_LABELS = {
    EXIT_OK: "ok",
    EXIT_FAIL: "fail",
    EXIT_INVALID: "invalid input",
    EXIT_NOT_GOOD: "not good",
}


def jsonable(value: Any) -> Any:
    """Normalize to JSON-native values; rationals become 'p/q' strings"""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, sympy.Rational):
        return format_rational(Fraction(int(value.p), int(value.q)))
    if isinstance(value, sympy.MatrixBase):
        return [[jsonable(value[i, j]) for j in range(value.cols)] for i in range(value.rows)]
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    raise TypeError(f"Cannot put {type(value).__name__} into a report")


@dataclass
class Report:
    """Result of one command; the JSON form is a deterministic function of the inputs"""
    command: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    results: Dict[str, Any] = field(default_factory=dict)
    warnings: List[str] = field(default_factory=list)
    exit_status: int = EXIT_OK

    def __post_init__(self):
        self.inputs = jsonable(self.inputs)
        self.results = jsonable(self.results)
        self.warnings = [str(w) for w in self.warnings]

    @property
    def status_label(self) -> str:
        return STATUS_LABELS.get(self.exit_status, str(self.exit_status))

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Report":
        return cls(
            command=data["command"],
            inputs=data.get("inputs", {}),
            results=data.get("results", {}),
            warnings=data.get("warnings", []),
            exit_status=data.get("exit_status", EXIT_OK),
        )

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))


def error_report(command: str, inputs: Dict[str, Any], error: Exception, exit_status: int) -> Report:
    results: Dict[str, Any] = {"error": str(error), "error_type": type(error).__name__}
    location = getattr(error, "location", None)
    if location:
        results["location"] = location
    direction = getattr(error, "direction", None)
    if direction is not None:
        results["direction"] = list(direction)
    return Report(command=command, inputs=inputs, results=results,
                  warnings=list(getattr(error, "warnings", [])), exit_status=exit_status)
