# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Velocity-Pressure Coupling Functions
=============================================

The discrete divergence ``D_c(v) = 1/|c| sum_f |f| (v_f - v_c) . n_fc``,
the coupling form ``b_h(v, q) = -sum_c |c| D_c(v) q_c`` and the div-div
form ``d_h(u, v) = sum_c |c| D_c(u) D_c(v)``.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
from functools import lru_cache

# Import | Libraries
import numpy as np
import scipy.sparse as sp

# Import | Local Modules
from ..mesh import PolytopalMesh
from .local_cell import local_cell_operators


# =============================================================================
# Functions
# =============================================================================

@lru_cache(maxsize=16)
def assemble_divergence(mesh: PolytopalMesh) -> sp.csr_matrix:
    """
    Returns the matrix D, shape ``(nc, n_velocity)``, with
    ``(D v)_c = D_c(v)``. Cached per mesh; treat as read-only.
    """
    d = mesh.dim
    n_velocity = (mesh.n_faces + mesh.n_cells) * d
    rows, cols, vals = [], [], []
    # The divergence does not depend on the stabilization parameter.
    for batch in local_cell_operators(mesh):
        dofs = batch.scalar_dofs(mesh.n_faces)
        components = dofs[:, :, None] * d + np.arange(d)[None, None, :]
        rows.append(
            np.broadcast_to(batch.cells[:, None, None], components.shape)
            .ravel()
        )
        cols.append(components.ravel())
        vals.append(batch.consistent.ravel())
    return sp.csr_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(mesh.n_cells, n_velocity),
    )


def assemble_coupling(mesh: PolytopalMesh) -> sp.csr_matrix:
    """
    Coupling Assembly Function
    ==========================

    Assembles B with ``b_h(v, q) = q^T B v``.

    Returns:
        scipy.sparse.csr_matrix: Shape ``(nc, n_velocity)``.
    """

    return sp.csr_matrix(
        -sp.diags(mesh.cell_measures) @ assemble_divergence(mesh)
    )


def assemble_divdiv(mesh: PolytopalMesh) -> sp.csr_matrix:
    """
    Div-Div Assembly Function
    =========================

    Assembles ``d_h = D^T diag(|c|) D``, symmetric positive semidefinite
    with rank at most the number of cells.
    """

    divergence = assemble_divergence(mesh)
    matrix = sp.csr_matrix(
        divergence.T @ sp.diags(mesh.cell_measures) @ divergence
    )
    return sp.csr_matrix(0.5 * (matrix + matrix.T))


def divergence_values(mesh: PolytopalMesh, vector: np.ndarray) -> np.ndarray:
    """
    Returns ``D_c(v)`` of every cell for a velocity in flat layout.
    """
    return assemble_divergence(mesh) @ vector


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "assemble_coupling",
    "assemble_divdiv",
    "assemble_divergence",
    "divergence_values",
]
