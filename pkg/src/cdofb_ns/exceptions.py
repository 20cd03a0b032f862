# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides CDO-Fb Exception Classes
=================================

Every error raised on purpose by the library derives from `CdofbError`, so
callers (and the command-line interface) can separate modelling failures
from programming errors with a single `except` clause.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
from typing import Any, Mapping, Optional


# =============================================================================
# Classes
# =============================================================================

class CdofbError(Exception):
    """
    Base class of all library errors.
    """


class ValidationError(CdofbError, ValueError):
    """
    Validation Error Class
    ======================

    Raised when an input or a configuration value is rejected.

    The message may contain ``%(name)s`` placeholders filled from `params`,
    and `code` gives a short machine-readable reason.

    Attributes:
        message (str): Message template.
        params (Mapping[str, Any]): Values substituted into the template.
        code (str): Machine-readable error code.

    """

    def __init__(
        self,
        message: str,
        params: Optional[Mapping[str, Any]] = None,
        code: str = "invalid",
    ) -> None:
        self.message = message
        self.params = dict(params or {})
        self.code = code
        super().__init__(message % self.params if self.params else message)


class MeshError(CdofbError):
    """
    Raised when a mesh violates a topological or geometric invariant.
    """


class MeshParseError(MeshError):
    """
    Raised when a mesh file cannot be parsed.

    Attributes:
        location (str): Where in the file the problem was found.
    """

    def __init__(self, message: str, location: str = "") -> None:
        self.location = location
        text = f"{location}: {message}" if location else message
        super().__init__(text)


class LinearSolverError(CdofbError):
    """
    Raised on solver breakdown (zero pivot, NaN, exhausted inner solve).

    Attributes:
        iteration (int): Iteration at which the breakdown was detected.
    """

    def __init__(self, message: str, iteration: int = 0) -> None:
        self.iteration = iteration
        super().__init__(f"{message} (iteration {iteration})")


class SingularMatrixError(LinearSolverError):
    """
    Raised when a direct factorization meets a (numerically) zero pivot.
    """


class StepError(CdofbError):
    """
    Raised when a time step cannot be completed.

    Attributes:
        step (int): Time-step index n.
        report (Any): The failing solver report, if any.
    """

    def __init__(self, message: str, step: int, report: Any = None) -> None:
        self.step = step
        self.report = report
        super().__init__(f"step {step}: {message}")


class BracketError(CdofbError):
    """
    Raised when a critical time-step bracket does not straddle the
    stability transition.
    """


class ConfigError(CdofbError):
    """
    Raised when a run configuration file is missing or malformed.
    """


# =============================================================================
# Module Variables
# =============================================================================

__all__ = [
    "BracketError",
    "CdofbError",
    "ConfigError",
    "LinearSolverError",
    "MeshError",
    "MeshParseError",
    "SingularMatrixError",
    "StepError",
    "ValidationError",
]
