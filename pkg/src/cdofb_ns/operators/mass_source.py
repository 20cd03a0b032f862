# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Mass and Source Functions
==================================

The mass form ``m(u, v) = sum_c |c| u_c . v_c`` acts on cell DoFs only;
the source ``l(v) = sum_c int_c f . v_c`` integrates the forcing at the
current time by sub-simplex quadrature.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
from typing import Optional

# Import | Libraries
import numpy as np
import scipy.sparse as sp

# Import | Local Modules
from ..mesh import PolytopalMesh
from ..spaces import DEFAULT_DEGREE, VectorField, cell_quadrature


# =============================================================================
# Functions
# =============================================================================

def mass_diagonal(mesh: PolytopalMesh) -> np.ndarray:
    """
    Returns the diagonal of the mass matrix in flat layout (zero on face
    DoFs, ``|c|`` on every component of cell c).
    """
    d = mesh.dim
    return np.concatenate(
        (np.zeros(mesh.n_faces * d), np.repeat(mesh.cell_measures, d))
    )


def assemble_mass(mesh: PolytopalMesh) -> sp.csr_matrix:
    return sp.diags(mass_diagonal(mesh), format="csr")


def assemble_source(
    mesh: PolytopalMesh,
    forcing: Optional[VectorField],
    t: float,
    degree: int = DEFAULT_DEGREE,
) -> np.ndarray:
    """
    Returns the source vector ``l(.)`` in flat layout; zero when `forcing`
    is None.
    """
    d = mesh.dim
    rhs = np.zeros((mesh.n_faces + mesh.n_cells) * d)
    if forcing is None:
        return rhs
    quadrature = cell_quadrature(mesh, degree)
    values = np.asarray(forcing(t, quadrature.points), dtype=float)
    rhs[mesh.n_faces * d:] = quadrature.integrate(values).ravel()
    return rhs


def assemble_mass_and_source(
    mesh: PolytopalMesh,
    forcing: Optional[VectorField],
    t: float,
    degree: int = DEFAULT_DEGREE,
) -> tuple[np.ndarray, np.ndarray]:
    """
    Mass and Source Function
    ========================

    Parameters:
        mesh (PolytopalMesh): The mesh.
        forcing (VectorField, optional): Vectorized ``f(t, x)``.
        t (float): Time at which the forcing is evaluated.
        degree (int): Quadrature degree.

    Returns:
        tuple: The mass diagonal and the source vector, both in flat
            layout.
    """

    return mass_diagonal(mesh), assemble_source(mesh, forcing, t, degree)


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "assemble_mass",
    "assemble_mass_and_source",
    "assemble_source",
    "mass_diagonal",
]
