"""
Input validation for Coulomb Kit
"""
from typing import Any, Dict, Union
from pathlib import Path

from config import PRESET_GROUPS, SPEC_SCHEMA_VERSION


class ValidationError(Exception):
    """Custom exception for validation errors"""
    pass


class InputValidator:
    """Validates user inputs and configuration"""

    # Truncation order constraints
    MIN_ORDER = 0
    MAX_ORDER = 400

    # Property-suite sample constraints
    MIN_SAMPLES = 1
    MAX_SAMPLES = 10000

    MAX_WORKERS = 64

    # Coweight shells examined by the monopole sum
    MIN_SHELL_CAP = 1

    @staticmethod
    def validate_order(order: int) -> int:
        """Validate a truncation order for Hilbert series"""
        if not isinstance(order, int) or isinstance(order, bool):
            raise ValidationError("Order must be an integer")

        if order < InputValidator.MIN_ORDER:
            raise ValidationError(f"Order must be at least {InputValidator.MIN_ORDER}")

        if order > InputValidator.MAX_ORDER:
            raise ValidationError(f"Order cannot exceed {InputValidator.MAX_ORDER}")

        return order

    @staticmethod
    def validate_samples(samples: int) -> int:
        """Validate the number of random samples for a property suite"""
        if not isinstance(samples, int) or isinstance(samples, bool):
            raise ValidationError("Number of samples must be an integer")

        if samples < InputValidator.MIN_SAMPLES:
            raise ValidationError(f"Number of samples must be at least {InputValidator.MIN_SAMPLES}")

        if samples > InputValidator.MAX_SAMPLES:
            raise ValidationError(f"Number of samples cannot exceed {InputValidator.MAX_SAMPLES}")

        return samples

    @staticmethod
    def validate_workers(workers: int) -> int:
        """Validate a worker-thread count"""
        if not isinstance(workers, int) or workers < 1:
            raise ValidationError("Worker count must be a positive integer")

        if workers > InputValidator.MAX_WORKERS:
            raise ValidationError(f"Worker count cannot exceed {InputValidator.MAX_WORKERS}")

        return workers

    @staticmethod
    def validate_shell_cap(cap: int) -> int:
        """Validate the number of coweight shells before a sum is declared not good"""
        if not isinstance(cap, int) or isinstance(cap, bool):
            raise ValidationError("Shell cap must be an integer")

        if cap < InputValidator.MIN_SHELL_CAP:
            raise ValidationError(f"Shell cap must be at least {InputValidator.MIN_SHELL_CAP}")

        return cap

    @staticmethod
    def validate_kostant_n(n: int, max_n: int) -> int:
        """Validate half the dimension of the symplectic space"""
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValidationError("n must be an integer")

        if n < 1:
            raise ValidationError("n must be at least 1")

        if n > max_n:
            raise ValidationError(
                f"n = {n} exceeds the supported bound {max_n}; raise "
                f"COULOMB_KIT_KOSTANT_MAX_N or supply a seed point explicitly"
            )

        return n

    @staticmethod
    def validate_preset(preset: str, size: int) -> str:
        """Validate a preset group name and its size"""
        if preset not in PRESET_GROUPS:
            raise ValidationError(f"Invalid preset: {preset}. Valid presets: {', '.join(PRESET_GROUPS)}")

        if not isinstance(size, int) or isinstance(size, bool):
            raise ValidationError(f"Size of {preset} must be an integer")

        if size < 0:
            raise ValidationError(f"Size of {preset} cannot be negative")

        if preset in ("SL", "PGL", "GL") and size < 1:
            raise ValidationError(f"{preset}(n) needs n >= 1")

        if preset == "Sp" and (size < 2 or size % 2):
            raise ValidationError(f"Sp(n) needs an even n >= 2, got {size}")

        if preset == "SO" and size < 2:
            raise ValidationError(f"SO(n) needs n >= 2, got {size}")

        return preset

    @staticmethod
    def validate_schema(document: Dict[str, Any]) -> Dict[str, Any]:
        """Validate the top level of a spec document"""
        if not isinstance(document, dict):
            raise ValidationError("Spec document must be a JSON object")

        schema = document.get("schema")
        if schema is None:
            raise ValidationError("Spec document is missing the 'schema' field")

        if schema != SPEC_SCHEMA_VERSION:
            raise ValidationError(f"Unsupported schema version: {schema} (expected {SPEC_SCHEMA_VERSION})")

        for field in ("group", "representation"):
            if field not in document:
                raise ValidationError(f"Spec document missing required field: {field}")

        return document

    @staticmethod
    def validate_file_path(path: Union[str, Path], must_exist: bool = False) -> Path:
        """Validate file path"""
        try:
            path_obj = Path(path)
        except Exception as e:
            raise ValidationError(f"Invalid file path: {e}")

        if must_exist and not path_obj.exists():
            raise ValidationError(f"Path does not exist: {path}")

        return path_obj
