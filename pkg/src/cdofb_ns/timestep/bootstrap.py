# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Second-Order Bootstrap Artificial Compressibility Steps
================================================================

Two cascaded AC solves per step with explicit convection. Track 1 runs the
first-order scheme and hands its pressure increment to track 2, a BDF2 AC
step whose pressure guess is ``p_2^{n-1} + (p_1^n - p_1^{n-1})``.

At the first step only track 1 runs and track 2 is seeded with its result.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Local Modules
from ..enums import ConvectionEnum
from ..spaces import PressureField, kinetic_energy
from .context import StepContext
from .state import BootstrapTrack, StepDiagnostics, StepState


# =============================================================================
# Functions
# =============================================================================

def step_ac_o2_bootstrap(
    state: StepState, context: StepContext
) -> tuple[StepState, StepDiagnostics]:
    """
    Bootstrap AC Step Function
    ==========================

    Parameters:
        state (StepState): State of step n-1; `first_order` holds track 1
            (seeded with the initial condition when missing).
        context (StepContext): Assembled blocks and solver routing.

    Returns:
        tuple[StepState, StepDiagnostics]: State of step n, whose velocity
            and pressure are those of track 2, and its diagnostics.
    """

    config = context.config
    dt = config.dt
    t = (state.step + 1) * dt
    explicit = config.convection is ConvectionEnum.EXPLICIT
    boundary = context.boundary_values(t)
    source = context.source(t)

    track = state.first_order or BootstrapTrack(
        state.velocity, state.pressure, PressureField.zeros(context.mesh)
    )
    rhs = (
        source
        + context.mass_apply(track.velocity) / dt
        - context.pressure_load(track.pressure)
    )
    if explicit:
        rhs = rhs - context.convection_load(track.velocity)
    velocity_1, report_1 = context.solve_momentum(
        1.0 / dt, None, rhs, boundary
    )
    increment = context.pressure_update(velocity_1)
    track = BootstrapTrack(velocity_1, track.pressure + increment, increment)
    reports = (report_1,)

    if state.step == 0:
        velocity, pressure = track.velocity, track.pressure
    else:
        last, before = state.velocity, state.history[0]
        guess = state.pressure + track.pressure_increment
        rhs = (
            source
            + 2.0 * context.mass_apply(last) / dt
            - 0.5 * context.mass_apply(before) / dt
            - context.pressure_load(guess)
        )
        if explicit:
            rhs = rhs - (
                2.0 * context.convection_load(last)
                - context.convection_load(before)
            )
        velocity, report_2 = context.solve_momentum(
            1.5 / dt, None, rhs, boundary
        )
        pressure = guess + context.pressure_update(velocity)
        reports += (report_2,)

    diagnostics = StepDiagnostics(
        step=state.step + 1,
        time=t,
        kinetic_energy=kinetic_energy(velocity, context.mesh),
        divergence_norm=context.divergence_norm(velocity),
        reports=reports,
    )
    return (
        state.advance(dt, velocity, pressure, 1, first_order=track),
        diagnostics,
    )


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "step_ac_o2_bootstrap",
]
