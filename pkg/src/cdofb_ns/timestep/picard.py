# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides the Picard Iteration
=============================

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
import logging
from dataclasses import dataclass
from typing import Callable

# Import | Local Modules
from ..linalg import SolverReport
from ..mesh import PolytopalMesh
from ..spaces import HybridVelocity, PressureField, cell_velocity_norm


# =============================================================================
# Variables
# =============================================================================

logger = logging.getLogger(__name__)

PicardSolve = Callable[
    [HybridVelocity], tuple[HybridVelocity, PressureField, SolverReport]
]


# =============================================================================
# Classes
# =============================================================================

@dataclass(frozen=True, eq=False)
class PicardResult:
    """
    Picard Result Class
    ===================

    Attributes:
        velocity (HybridVelocity): Last iterate ``u^{n,k}``.
        pressure (PressureField): Pressure of the last solve.
        transport (HybridVelocity): Transport field of the last solve,
            ``u^{n,k-1}``.
        iterations (int): k.
        converged (bool): Whether the increment test passed.
        reports (tuple[SolverReport, ...]): One report per iterate.
    """

    velocity: HybridVelocity
    pressure: PressureField
    transport: HybridVelocity
    iterations: int
    converged: bool
    reports: tuple[SolverReport, ...]


# =============================================================================
# Functions
# =============================================================================

def picard_iterate(
    solve: PicardSolve,
    initial: HybridVelocity,
    mesh: PolytopalMesh,
    tolerance: float,
    max_iterations: int,
    step: int = 0,
) -> PicardResult:
    """
    Picard Iteration Function
    =========================

    Calls ``solve(w)`` with the transport field frozen at the previous
    iterate, starting from `initial`, until
    ``||u^k - u^{k-1}||_C <= tolerance ||u^k||_C``.

    Parameters:
        solve (PicardSolve): Linearized solve for a transport field.
        initial (HybridVelocity): ``u^{n,0}``.
        mesh (PolytopalMesh): The mesh.
        tolerance (float): Relative increment tolerance.
        max_iterations (int): Iteration cap; reaching it logs a warning
            and returns the last iterate.
        step (int): Time-step index, for logging.

    Returns:
        PicardResult: The last iterate and its bookkeeping.
    """

    transport = initial
    reports = []
    for iteration in range(1, max_iterations + 1):
        velocity, pressure, report = solve(transport)
        reports.append(report)
        increment = cell_velocity_norm(velocity - transport, mesh)
        scale = cell_velocity_norm(velocity, mesh)
        if increment <= tolerance * scale:
            return PicardResult(
                velocity, pressure, transport, iteration, True, tuple(reports)
            )
        previous, transport = transport, velocity
    logger.warning(
        "step %d: Picard iteration stopped at picard_max=%d "
        "(increment %.3e)",
        step, max_iterations, increment / scale if scale else increment,
    )
    return PicardResult(
        velocity, pressure, previous, max_iterations, False, tuple(reports)
    )


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "PicardResult",
    "picard_iterate",
]
