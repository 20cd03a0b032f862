# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides First-Order Artificial Compressibility Steps
=====================================================

A velocity solve with the grad-div term ``nu eta d_h`` and the previous
pressure on the right-hand side is followed by the explicit pressure
update ``p := p - nu eta D_h(u)``.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Local Modules
from ..enums import ConvectionEnum
from ..spaces import HybridVelocity, kinetic_energy
from .context import StepContext
from .picard import picard_iterate
from .state import StepDiagnostics, StepState


# =============================================================================
# Functions
# =============================================================================

def step_ac_o1(
    state: StepState, context: StepContext
) -> tuple[StepState, StepDiagnostics]:
    """
    First-Order AC Step Function
    ============================

    With implicit convection the pressure is updated after every Picard
    iterate, starting from ``p^{n-1}``, so that at Picard convergence the
    step coincides with the monolithic one. With explicit convection a
    single velocity solve is followed by a single pressure update.

    Parameters:
        state (StepState): State of step n-1.
        context (StepContext): Assembled blocks and solver routing.

    Returns:
        tuple[StepState, StepDiagnostics]: State of step n and its
            diagnostics.
    """

    config = context.config
    dt = config.dt
    t = (state.step + 1) * dt
    boundary = context.boundary_values(t)
    base = context.source(t) + context.mass_apply(state.velocity) / dt

    if config.convection is ConvectionEnum.IMPLICIT:
        pressure = state.pressure

        def solve(transport: HybridVelocity):
            nonlocal pressure
            velocity, report = context.solve_momentum(
                1.0 / dt,
                transport,
                base - context.pressure_load(pressure),
                boundary,
            )
            pressure = pressure + context.pressure_update(velocity)
            return velocity, pressure, report

        result = picard_iterate(
            solve,
            state.velocity,
            context.mesh,
            config.picard_tol,
            config.picard_max,
            step=state.step + 1,
        )
        velocity, pressure = result.velocity, result.pressure
        iterations, converged = result.iterations, result.converged
        reports = result.reports
    else:
        rhs = base - context.pressure_load(state.pressure)
        if config.convection is ConvectionEnum.EXPLICIT:
            rhs = rhs - context.convection_load(state.velocity)
        velocity, report = context.solve_momentum(
            1.0 / dt, None, rhs, boundary
        )
        pressure = state.pressure + context.pressure_update(velocity)
        iterations, converged, reports = 1, True, (report,)

    diagnostics = StepDiagnostics(
        step=state.step + 1,
        time=t,
        kinetic_energy=kinetic_energy(velocity, context.mesh),
        divergence_norm=context.divergence_norm(velocity),
        picard_iterations=iterations,
        picard_converged=converged,
        reports=reports,
    )
    return state.advance(dt, velocity, pressure, 0), diagnostics


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "step_ac_o1",
]
