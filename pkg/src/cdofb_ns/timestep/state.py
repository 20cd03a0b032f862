# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Time-Stepping State and Diagnostics
============================================

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
from dataclasses import dataclass, field
from typing import Optional

# Import | Local Modules
from ..linalg import SolverReport
from ..spaces import HybridVelocity, PressureField


# =============================================================================
# Variables
# =============================================================================

DIAGNOSTICS_COLUMNS = [
    "n",
    "t",
    "kinetic_energy",
    "divergence_norm",
    "energy_residual",
    "picard_iterations",
    "picard_converged",
    "solver_iterations",
    "solver_residual",
    "diverged",
]


# =============================================================================
# Classes
# =============================================================================

@dataclass(frozen=True, eq=False)
class BootstrapTrack:
    """
    Bootstrap Track Class
    =====================

    The first-order track of the bootstrap scheme.

    Attributes:
        velocity (HybridVelocity): ``u_1^n``.
        pressure (PressureField): ``p_1^n``.
        pressure_increment (PressureField): ``p_1^n - p_1^{n-1}``.
    """

    velocity: HybridVelocity
    pressure: PressureField
    pressure_increment: PressureField


@dataclass(frozen=True, eq=False)
class StepState:
    """
    Step State Class
    ================

    Attributes:
        step (int): Index n of the last completed step.
        time (float): ``t^n = n dt``.
        velocity (HybridVelocity): ``u^n`` (track 2 of the bootstrap
            scheme).
        pressure (PressureField): ``p^n``, zero-mean.
        history (tuple[HybridVelocity, ...]): Earlier velocities, most
            recent first; ``history[0]`` is ``u^{n-1}`` when kept.
        first_order (BootstrapTrack, optional): Track 1 of the bootstrap
            scheme.
    """

    step: int
    time: float
    velocity: HybridVelocity
    pressure: PressureField
    history: tuple[HybridVelocity, ...] = ()
    first_order: Optional[BootstrapTrack] = None

    def advance(
        self,
        dt: float,
        velocity: HybridVelocity,
        pressure: PressureField,
        keep: int,
        first_order: Optional[BootstrapTrack] = None,
    ) -> "StepState":
        """
        Returns the state of step ``n + 1`` keeping `keep` earlier levels.
        """
        history = ((self.velocity,) + self.history)[:keep]
        return StepState(
            step=self.step + 1,
            time=(self.step + 1) * dt,
            velocity=velocity,
            pressure=pressure,
            history=history,
            first_order=first_order,
        )


@dataclass(frozen=True)
class StepDiagnostics:
    """
    Step Diagnostics Class
    ======================

    Attributes:
        step (int): Index n.
        time (float): ``t^n``.
        kinetic_energy (float): ``E_K(u^n)``.
        divergence_norm (float): ``sqrt(sum_c |c| D_c(u^n)^2)``.
        energy_residual (float, optional): Kinetic energy balance residual,
            first-order monolithic schemes with implicit or no convection.
        picard_iterations (int): Picard iterations (1 without Picard).
        picard_converged (bool): False when ``picard_max`` was reached.
        reports (tuple[SolverReport, ...]): One report per linear solve.
        diverged (bool): ``E_K(u^n) > 1.1 E_K(u^0)``; set by the driver.
    """

    step: int
    time: float
    kinetic_energy: float
    divergence_norm: float
    energy_residual: Optional[float] = None
    picard_iterations: int = 1
    picard_converged: bool = True
    reports: tuple[SolverReport, ...] = field(default=(), repr=False)
    diverged: bool = False

    @property
    def solver_iterations(self) -> int:
        return sum(
            report.iterations + report.inner_iterations
            for report in self.reports
        )

    @property
    def solver_residual(self) -> float:
        return max((report.residual for report in self.reports), default=0.0)

    def to_row(self) -> dict:
        """
        Returns the CSV row, keyed by `DIAGNOSTICS_COLUMNS`.
        """
        return {
            "n": self.step,
            "t": self.time,
            "kinetic_energy": self.kinetic_energy,
            "divergence_norm": self.divergence_norm,
            "energy_residual": self.energy_residual,
            "picard_iterations": self.picard_iterations,
            "picard_converged": self.picard_converged,
            "solver_iterations": self.solver_iterations,
            "solver_residual": self.solver_residual,
            "diverged": self.diverged,
        }


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "BootstrapTrack",
    "DIAGNOSTICS_COLUMNS",
    "StepDiagnostics",
    "StepState",
]
