# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Linear Solver Configuration and Report Classes
=======================================================

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
from dataclasses import asdict, dataclass, field, replace
from typing import Optional

# Import | Local Modules
from ..utils import validate_in_range, validate_positive_int


# =============================================================================
# Classes
# =============================================================================

@dataclass(frozen=True)
class SolverConfig:
    """
    Solver Configuration Class
    ==========================

    Attributes:
        tolerance (float): Relative residual (CG, GMRES) or relative
            energy-norm (GKB) stopping tolerance, in ``(0, 1)``.
        max_iterations (int): Iteration cap.
        restart (int): GMRES restart length.
        inner_tolerance (float, optional): Tolerance of the inner velocity
            solves of GKB; defaults to one decade below `tolerance`.
        gkb_delay (int): Number of recent GKB steps entering the
            energy-norm error estimate.
    """

    tolerance: float = 1e-4
    max_iterations: int = 10000
    restart: int = 50
    inner_tolerance: Optional[float] = None
    gkb_delay: int = 5

    def __post_init__(self) -> None:
        validate_in_range(self.tolerance, 0.0, 1.0, name="tolerance")
        validate_positive_int(self.max_iterations, name="max_iterations")
        validate_positive_int(self.restart, name="restart")
        validate_positive_int(self.gkb_delay, name="gkb_delay")
        if self.inner_tolerance is not None:
            validate_in_range(
                self.inner_tolerance, 0.0, 1.0, name="inner_tolerance"
            )

    @property
    def effective_inner_tolerance(self) -> float:
        if self.inner_tolerance is None:
            return self.tolerance / 10.0
        return self.inner_tolerance

    def inner(self) -> "SolverConfig":
        """
        Returns the configuration of GKB inner solves.
        """
        return replace(
            self,
            tolerance=self.effective_inner_tolerance,
            inner_tolerance=None,
        )

    @classmethod
    def for_order(cls, order: int, **overrides) -> "SolverConfig":
        """
        Default tolerances of a scheme of the given time order: 1e-4 for
        first order, 1e-5 for second order.
        """
        tolerance = 1e-4 if order == 1 else 1e-5
        return cls(**{"tolerance": tolerance, **overrides})


@dataclass(frozen=True)
class SolverReport:
    """
    Solver Report Class
    ===================

    Attributes:
        method (str): Solver name.
        iterations (int): Iterations used.
        residual (float): Final value of the stopping quantity.
        converged (bool): Whether ``residual <= tolerance``.
        wall_time (float): Seconds spent.
        criterion (str): What `residual` measures.
        inner_iterations (int): Iterations of inner solves (GKB).
        residual_history (tuple): Stopping quantity per iteration.
        energy_history (tuple): CG energy functional
            ``1/2 x^T A x - b^T x`` per iteration.
    """

    method: str
    iterations: int
    residual: float
    converged: bool
    wall_time: float
    criterion: str = "relative_residual"
    inner_iterations: int = 0
    residual_history: tuple = field(default=(), repr=False)
    energy_history: tuple = field(default=(), repr=False)

    def to_dict(self) -> dict:
        """
        Returns the telemetry appended to run records (histories dropped).
        """
        data = asdict(self)
        data.pop("residual_history")
        data.pop("energy_history")
        return data


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "SolverConfig",
    "SolverReport",
]
