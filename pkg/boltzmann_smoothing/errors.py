"""
Exception hierarchy and CLI exit codes.
"""

from __future__ import annotations

from typing import Any


class SmoothingError(Exception):
    """Base class for failures reported by the CLI with a structured error JSON."""

    exit_code = 1
    kind = "error"

    def to_dict(self) -> dict[str, Any]:
        return {"error": self.kind, "message": str(self), "exit_code": self.exit_code}


class ConfigError(SmoothingError, ValueError):
    """Schema or constraint violation in a run config."""

    exit_code = 2
    kind = "config_error"

    def __init__(self, message: str, field_path: str = "") -> None:
        self.field_path = field_path
        prefixed = field_path and not message.startswith(field_path)
        super().__init__(f"{field_path}: {message}" if prefixed else message)

    def to_dict(self) -> dict[str, Any]:
        payload = super().to_dict()
        payload["field"] = self.field_path
        return payload


class NumericalError(SmoothingError, RuntimeError):
    """Non-finite values, blow-up, or an inconsistent time range."""

    exit_code = 3
    kind = "numerical_error"


class BudgetExceededError(NumericalError):
    """A sum would exceed the configured operation budget."""

    kind = "budget_exceeded"

    def __init__(self, operation: str, cost: int, budget: int) -> None:
        self.operation = operation
        self.cost = cost
        self.budget = budget
        super().__init__(
            f"{operation} needs {cost:,} pair-sigma operations, above the budget of {budget:,}; "
            "restrict the retained frequency ball or raise BOLTZMANN_SMOOTHING_BUDGET"
        )


class VerificationFailure(SmoothingError):
    """An inequality check or smoothing experiment returned a fail verdict."""

    exit_code = 4
    kind = "verification_failure"


EXIT_OK = 0
EXIT_CONFIG = ConfigError.exit_code
EXIT_NUMERICAL = NumericalError.exit_code
EXIT_VERIFICATION = VerificationFailure.exit_code
