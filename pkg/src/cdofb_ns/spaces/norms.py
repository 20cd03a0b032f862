# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Discrete Norm Functions
================================

"""


# =============================================================================
# Import
# =============================================================================

# Import | Libraries
import numpy as np

# Import | Local Modules
from ..mesh import PolytopalMesh
from .field_hybrid_velocity import HybridVelocity
from .field_pressure import PressureField


# =============================================================================
# Functions
# =============================================================================

def kinetic_energy(velocity: HybridVelocity, mesh: PolytopalMesh) -> float:
    """
    Kinetic Energy Function
    =======================

    Discrete kinetic energy ``1/2 sum_c |c| |v_c|^2``; face values do not
    contribute.

    Returns:
        float: The energy, nonnegative.
    """

    squares = np.einsum("ij,ij->i", velocity.cell_values, velocity.cell_values)
    return 0.5 * float(mesh.cell_measures @ squares)


def cell_velocity_norm(
    velocity: HybridVelocity, mesh: PolytopalMesh
) -> float:
    """
    Returns ``sqrt(sum_c |c| |v_c|^2)``.
    """
    return float(np.sqrt(2.0 * kinetic_energy(velocity, mesh)))


def pressure_norm(pressure: PressureField, mesh: PolytopalMesh) -> float:
    """
    Returns ``sqrt(sum_c |c| q_c^2)``.
    """
    values = pressure.cell_values
    return float(np.sqrt(mesh.cell_measures @ (values * values)))


def h1_seminorm(velocity: HybridVelocity, mesh: PolytopalMesh) -> float:
    """
    H1 Seminorm Function
    ====================

    Discrete H1-like seminorm
    ``sqrt(sum_c sum_{f in F_c} |f| / h_c |v_f - v_c|^2)``. It vanishes on
    constant hybrid fields and is a norm on fields with zero boundary face
    values.
    """

    cells = mesh.incidence_cells
    faces = mesh.incidence_faces
    jumps = velocity.face_values[faces] - velocity.cell_values[cells]
    weights = mesh.face_measures[faces] / mesh.cell_diameters[cells]
    return float(np.sqrt(weights @ np.einsum("ij,ij->i", jumps, jumps)))


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "cell_velocity_norm",
    "h1_seminorm",
    "kinetic_energy",
    "pressure_norm",
]
