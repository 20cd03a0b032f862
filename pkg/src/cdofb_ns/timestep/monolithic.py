# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Monolithic Time Steps
==============================

Velocity and pressure are solved together at every step:

- First order: implicit Euler.
- Second order: BDF2 from the second step on, implicit Euler first.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Local Modules
from ..enums import ConvectionEnum
from ..spaces import kinetic_energy
from .context import StepContext
from .diagnostics import energy_balance_residual
from .picard import picard_iterate
from .state import StepDiagnostics, StepState


# =============================================================================
# Functions
# =============================================================================

def _saddle_step(context, state, mass_coefficient, rhs, boundary, start):
    """
    Runs the Picard loop in implicit mode and a single saddle solve
    otherwise; returns ``(u, p, transport, iterations, converged,
    reports)``.
    """
    config = context.config
    if config.convection is ConvectionEnum.IMPLICIT:
        result = picard_iterate(
            lambda transport: context.solve_saddle(
                mass_coefficient, transport, rhs, boundary
            ),
            start,
            context.mesh,
            config.picard_tol,
            config.picard_max,
            step=state.step + 1,
        )
        return (
            result.velocity,
            result.pressure,
            result.transport,
            result.iterations,
            result.converged,
            result.reports,
        )
    velocity, pressure, report = context.solve_saddle(
        mass_coefficient, None, rhs, boundary
    )
    return velocity, pressure, None, 1, True, (report,)


def step_monolithic_o1(
    state: StepState, context: StepContext
) -> tuple[StepState, StepDiagnostics]:
    """
    First-Order Monolithic Step Function
    ====================================

    Advances ``(u^{n-1}, p^{n-1})`` by one implicit Euler step. With
    implicit convection, every Picard iterate solves the saddle system with
    the transport field frozen at the previous iterate, starting from
    ``u^{n-1}``; with explicit convection, ``t_h(u^{n-1}; u^{n-1}, .)``
    moves to the right-hand side.

    Parameters:
        state (StepState): State of step n-1.
        context (StepContext): Assembled blocks and solver routing.

    Returns:
        tuple[StepState, StepDiagnostics]: State of step n and its
            diagnostics, including the energy balance residual unless
            convection is explicit.

    Raises:
        LinearSolverError: On solver breakdown.
    """

    config = context.config
    dt = config.dt
    t = (state.step + 1) * dt
    boundary = context.boundary_values(t)
    source = context.source(t)
    rhs = source + context.mass_apply(state.velocity) / dt
    if config.convection is ConvectionEnum.EXPLICIT:
        rhs = rhs - context.convection_load(state.velocity)

    velocity, pressure, transport, iterations, converged, reports = (
        _saddle_step(context, state, 1.0 / dt, rhs, boundary, state.velocity)
    )

    energy_residual = None
    if config.convection is not ConvectionEnum.EXPLICIT:
        energy_residual = energy_balance_residual(
            context, velocity, pressure, state.velocity, transport, source
        )
    diagnostics = StepDiagnostics(
        step=state.step + 1,
        time=t,
        kinetic_energy=kinetic_energy(velocity, context.mesh),
        divergence_norm=context.divergence_norm(velocity),
        energy_residual=energy_residual,
        picard_iterations=iterations,
        picard_converged=converged,
        reports=reports,
    )
    return state.advance(dt, velocity, pressure, config.order - 1), diagnostics


def step_monolithic_o2(
    state: StepState, context: StepContext
) -> tuple[StepState, StepDiagnostics]:
    """
    Second-Order Monolithic Step Function
    =====================================

    BDF2 step with mass term ``(3u^n - 4u^{n-1} + u^{n-2}) / (2 dt)``; the
    first step is delegated to `step_monolithic_o1`. Implicit convection
    starts the Picard loop from ``2u^{n-1} - u^{n-2}``; explicit convection
    extrapolates the operator,
    ``2 t_h(u^{n-1}; u^{n-1}, .) - t_h(u^{n-2}; u^{n-2}, .)``.
    """

    if state.step == 0:
        return step_monolithic_o1(state, context)

    config = context.config
    dt = config.dt
    t = (state.step + 1) * dt
    last, before = state.velocity, state.history[0]
    boundary = context.boundary_values(t)
    rhs = (
        context.source(t)
        + 2.0 * context.mass_apply(last) / dt
        - 0.5 * context.mass_apply(before) / dt
    )
    if config.convection is ConvectionEnum.EXPLICIT:
        rhs = rhs - (
            2.0 * context.convection_load(last)
            - context.convection_load(before)
        )

    velocity, pressure, _, iterations, converged, reports = _saddle_step(
        context, state, 1.5 / dt, rhs, boundary, 2.0 * last - before
    )
    diagnostics = StepDiagnostics(
        step=state.step + 1,
        time=t,
        kinetic_energy=kinetic_energy(velocity, context.mesh),
        divergence_norm=context.divergence_norm(velocity),
        picard_iterations=iterations,
        picard_converged=converged,
        reports=reports,
    )
    return state.advance(dt, velocity, pressure, 1), diagnostics


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "step_monolithic_o1",
    "step_monolithic_o2",
]
