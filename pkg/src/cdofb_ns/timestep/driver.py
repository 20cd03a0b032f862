# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides the Simulation Driver
==============================

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
import logging
import time
from dataclasses import dataclass, field, replace
from typing import Callable, Optional

# Import | Libraries
import pandas as pd

# Import | Local Modules
from ..enums import CouplingEnum
from ..exceptions import LinearSolverError, StepError, ValidationError
from ..mesh import PolytopalMesh
from ..spaces import (
    HybridVelocity,
    PressureField,
    kinetic_energy,
    project_pressure,
    project_velocity,
    zero_mean_adjust,
)
from .artificial_compressibility import step_ac_o1
from .bootstrap import step_ac_o2_bootstrap
from .config_scheme import SchemeConfig
from .context import StepContext
from .diagnostics import is_diverged
from .errors import ErrorAccumulator, ErrorTerms
from .monolithic import step_monolithic_o1, step_monolithic_o2
from .problem import FlowProblem
from .state import (
    DIAGNOSTICS_COLUMNS,
    BootstrapTrack,
    StepDiagnostics,
    StepState,
)


# =============================================================================
# Variables
# =============================================================================

logger = logging.getLogger(__name__)

Stepper = Callable[
    [StepState, StepContext], tuple[StepState, StepDiagnostics]
]


# =============================================================================
# Classes
# =============================================================================

@dataclass(frozen=True, eq=False)
class RunResult:
    """
    Run Result Class
    ================

    Attributes:
        config (SchemeConfig): The scheme.
        diagnostics (tuple[StepDiagnostics, ...]): One entry per completed
            step.
        final_state (StepState): State at the last completed step.
        initial_energy (float): ``E_K(u^0)``.
        diverged (bool): Whether the divergence flag tripped.
        t_div (float, optional): Time of the first diverged step.
        wall_time (float): Seconds spent in the time loop.
        errors (ErrorTerms, optional): Accumulated error terms when an
            exact solution was supplied.
        mesh_summary (dict): Counts and sizes of the mesh.
    """

    config: SchemeConfig
    diagnostics: tuple[StepDiagnostics, ...]
    final_state: StepState
    initial_energy: float
    diverged: bool
    t_div: Optional[float]
    wall_time: float
    errors: Optional[ErrorTerms] = None
    mesh_summary: dict = field(default_factory=dict)

    @property
    def solver_iterations(self) -> int:
        return sum(item.solver_iterations for item in self.diagnostics)

    @property
    def picard_iterations(self) -> int:
        return sum(item.picard_iterations for item in self.diagnostics)

    def diagnostics_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [item.to_row() for item in self.diagnostics],
            columns=DIAGNOSTICS_COLUMNS,
        )

    def to_dict(self) -> dict:
        return {
            "scheme": self.config.to_dict(),
            "mesh": self.mesh_summary,
            "steps": len(self.diagnostics),
            "initial_energy": self.initial_energy,
            "final_energy": (
                self.diagnostics[-1].kinetic_energy
                if self.diagnostics
                else self.initial_energy
            ),
            "diverged": self.diverged,
            "t_div": self.t_div,
            "wall_time": self.wall_time,
            "solver_iterations": self.solver_iterations,
            "picard_iterations": self.picard_iterations,
            "error_terms": None if self.errors is None else (
                self.errors.to_dict()
            ),
        }


# =============================================================================
# Functions
# =============================================================================

def initialize(
    mesh: PolytopalMesh,
    problem: FlowProblem,
    config: SchemeConfig,
) -> StepState:
    """
    Initialization Function
    =======================

    Returns the state of step 0: the hybrid projection of the initial
    velocity and the zero-mean cell projection of the initial pressure.
    The bootstrap scheme also seeds its first-order track with them.

    Parameters:
        mesh (PolytopalMesh): The mesh.
        problem (FlowProblem): Data handles; missing initial data is zero.
        config (SchemeConfig): The scheme.

    Returns:
        StepState: The initial state.

    Raises:
        ValidationError: When the initial velocity does not have one
            component per mesh dimension.
    """

    degree = config.operators.quadrature_degree
    velocity = HybridVelocity.zeros(mesh)
    if problem.initial_velocity is not None:
        velocity = project_velocity(
            mesh, problem.initial_velocity, 0.0, degree
        )
        if velocity.dim != mesh.dim:
            raise ValidationError(
                message="initial velocity has %(got)d components on a "
                "%(dim)dD mesh.",
                params={"got": velocity.dim, "dim": mesh.dim},
                code="dimension_mismatch",
            )
    pressure = PressureField.zeros(mesh)
    if problem.initial_pressure is not None:
        pressure = zero_mean_adjust(
            project_pressure(mesh, problem.initial_pressure, 0.0, degree),
            mesh,
        )
    first_order = None
    if config.is_artificial_compressibility and config.order == 2:
        first_order = BootstrapTrack(
            velocity, pressure, PressureField.zeros(mesh)
        )
    return StepState(
        step=0,
        time=0.0,
        velocity=velocity,
        pressure=pressure,
        first_order=first_order,
    )


def select_stepper(config: SchemeConfig) -> Stepper:
    """
    Returns the step function of the configured scheme.
    """
    if config.coupling is CouplingEnum.MONOLITHIC:
        return step_monolithic_o1 if config.order == 1 else (
            step_monolithic_o2
        )
    return step_ac_o1 if config.order == 1 else step_ac_o2_bootstrap


def run_simulation(
    mesh: PolytopalMesh,
    config: SchemeConfig,
    problem: FlowProblem,
    on_step: Optional[Callable[[StepState, StepDiagnostics], None]] = None,
) -> RunResult:
    """
    Simulation Function
    ===================

    Runs ``N = round(T / dt)`` steps of the configured scheme. The run
    halts at the first step whose kinetic energy exceeds 1.1 times the
    initial one and records that time as the divergence time. When the
    problem carries an exact solution, error terms are accumulated at
    every time node.

    Parameters:
        mesh (PolytopalMesh): The mesh.
        config (SchemeConfig): The scheme.
        problem (FlowProblem): Data handles.
        on_step (Callable, optional): Called after every step with the new
            state and its diagnostics.

    Returns:
        RunResult: Diagnostics, final state and bookkeeping.

    Raises:
        ValidationError: When the initial velocity does not match the
            mesh dimension.
        StepError: When a linear solve breaks down; carries the step.
    """

    start = time.perf_counter()
    context = StepContext(mesh, config, problem)
    state = initialize(mesh, problem, config)
    initial_energy = kinetic_energy(state.velocity, mesh)
    stepper = select_stepper(config)
    accumulator = None
    if problem.has_exact_solution:
        accumulator = ErrorAccumulator(
            mesh,
            problem.exact_velocity,
            problem.exact_pressure,
            config.dt,
            config.operators,
        )
    logger.info(
        "run %s: %d cells, h=%.4g, N=%d, dt=%.4g",
        config.name, mesh.n_cells, mesh.h, config.n_steps, config.dt,
    )

    diagnostics: list[StepDiagnostics] = []
    diverged, t_div = False, None
    for n in range(1, config.n_steps + 1):
        try:
            state, step_diagnostics = stepper(state, context)
        except LinearSolverError as error:
            raise StepError(str(error), step=n) from error
        except ValidationError as error:
            if error.code != "not_finite":
                raise
            logger.warning("step %d: non-finite solution, run diverged", n)
            diverged, t_div = True, n * config.dt
            break
        flag = is_diverged(step_diagnostics.kinetic_energy, initial_energy)
        step_diagnostics = replace(step_diagnostics, diverged=flag)
        diagnostics.append(step_diagnostics)
        logger.debug(
            "step %d: E_K=%.6e, |D u|=%.3e, picard=%d, solver=%d",
            n,
            step_diagnostics.kinetic_energy,
            step_diagnostics.divergence_norm,
            step_diagnostics.picard_iterations,
            step_diagnostics.solver_iterations,
        )
        if accumulator is not None:
            accumulator.add(n, state.time, state.velocity, state.pressure)
        if on_step is not None:
            on_step(state, step_diagnostics)
        if flag:
            diverged, t_div = True, state.time
            logger.warning(
                "run %s diverged at t=%.4g (step %d)", config.name, t_div, n
            )
            break

    wall_time = time.perf_counter() - start
    logger.info(
        "run %s finished: %d steps in %.2fs", config.name,
        len(diagnostics), wall_time,
    )
    return RunResult(
        config=config,
        diagnostics=tuple(diagnostics),
        final_state=state,
        initial_energy=initial_energy,
        diverged=diverged,
        t_div=t_div,
        wall_time=wall_time,
        errors=None if accumulator is None else accumulator.terms,
        mesh_summary=mesh.summary(),
    )


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "RunResult",
    "initialize",
    "run_simulation",
    "select_stepper",
]
