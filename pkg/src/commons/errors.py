"""Error and warning types shared by the lab. Each error carries the CLI exit code it maps to."""

from typing import Any, Dict


class TriadLabError(Exception):
    """Base error. `code` is the machine-readable tag written to stderr by the CLI."""

    exit_code = 1
    code = "error"

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.details = details

    def to_dict(self) -> Dict[str, Any]:
        return {"error": self.code, "message": str(self), "details": self.details}


class UsageError(TriadLabError):
    exit_code = 2
    code = "usage_error"


class ConfigError(UsageError):
    code = "config_error"


class MissingColumnsError(UsageError):
    code = "missing_columns"


class DomainError(TriadLabError, ValueError):
    """Arguments outside the domain of a pure operation."""

    exit_code = 3
    code = "domain_error"


class PreconditionError(DomainError):
    code = "precondition_failed"


class CatalyticTriadError(DomainError):
    code = "catalytic_triad"


class ReducibleTriadError(DomainError):
    code = "reducible_triad"


class DegeneracyError(DomainError):
    code = "degeneracy_violated"


class PrimitiveConsistencyError(DomainError):
    code = "primitive_inconsistent"


class IntegrationFailure(TriadLabError):
    """Adaptive integration gave up. `trajectory` holds the accepted steps so far."""

    exit_code = 4
    code = "integration_failure"

    def __init__(self, message: str, trajectory=None, **details: Any):
        super().__init__(message, **details)
        self.trajectory = trajectory


class SlowPassageWarning(RuntimeWarning):
    """The state lingered near a hyperbolic saddle for a large share of steps."""


class BranchAmbiguityWarning(UserWarning):
    """Two verified roots were equally close to the tracked branch."""


class TEndCappedWarning(UserWarning):
    """Requested integration horizon exceeded the configured cap."""
