# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Step Diagnostics Helpers
=================================

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
from typing import Optional

# Import | Libraries
import numpy as np

# Import | Local Modules
from ..spaces import HybridVelocity, PressureField, kinetic_energy
from .context import StepContext


# =============================================================================
# Variables
# =============================================================================

DIVERGENCE_FACTOR = 1.1


# =============================================================================
# Functions
# =============================================================================

def energy_balance_residual(
    context: StepContext,
    velocity: HybridVelocity,
    pressure: PressureField,
    previous: HybridVelocity,
    transport: Optional[HybridVelocity],
    source: np.ndarray,
) -> float:
    """
    Energy Balance Function
    =======================

    Residual of the discrete kinetic energy balance of a first-order
    monolithic step,

        E(u) - E(u_prev) + E(u - u_prev) + dt nu a_h(u, u) - dt l(u_C)
        - dt W_b,

    where ``W_b`` is the work of the full momentum residual on the boundary
    DoFs and vanishes for homogeneous boundary data. Up to the linear solver
    tolerance the residual equals ``-dt (t_h(w; u, u) + b_h(u, p))``, so it
    only vanishes when the convection form is skew-symmetric on the
    transport field and the velocity is discretely divergence-free.

    Parameters:
        context (StepContext): The run context.
        velocity (HybridVelocity): ``u^{n,k}``.
        pressure (PressureField): ``p^{n,k}``.
        previous (HybridVelocity): ``u^{n-1}``.
        transport (HybridVelocity, optional): ``u^{n,k-1}``, None without
            convection.
        source (np.ndarray): ``l^n`` in flat layout.

    Returns:
        float: The residual, in energy units.
    """

    dt = context.config.dt
    u = velocity.to_vector()
    operator = context.operator(1.0 / dt, transport)
    momentum = (
        operator @ u
        + context.pressure_load(pressure)
        - source
        - context.mass_apply(previous) / dt
    )
    fixed = context.dofs.fixed
    boundary_work = float(momentum[fixed] @ u[fixed])

    return (
        kinetic_energy(velocity, context.mesh)
        - kinetic_energy(previous, context.mesh)
        + kinetic_energy(velocity - previous, context.mesh)
        + dt * float(u @ (context.system.A_visc @ u))
        - dt * float(source @ u)
        - dt * boundary_work
    )


def is_diverged(energy: float, initial_energy: float) -> bool:
    """
    Whether ``E_K(u^n) > 1.1 E_K(u^0)``; never for a fluid initially at
    rest. Non-finite energies count as diverged.
    """
    if not np.isfinite(energy):
        return True
    return initial_energy > 0.0 and energy > DIVERGENCE_FACTOR * initial_energy


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "DIVERGENCE_FACTOR",
    "energy_balance_residual",
    "is_diverged",
]
