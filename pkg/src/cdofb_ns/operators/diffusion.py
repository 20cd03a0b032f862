# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Diffusion Operator Functions
=====================================

The diffusion-like bilinear form
``a_h(u, v) = sum_c sum_f |p_fc| G_c(u)|p_fc : G_c(v)|p_fc`` and a
measured stability constant comparing it with the discrete H1 seminorm.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
import logging

# Import | Libraries
import numpy as np
import scipy.sparse as sp
from scipy.linalg import null_space

# Import | Local Modules
from ..mesh import PolytopalMesh
from .config_operator import OperatorConfig
from .dof_map import expand_components
from .local_cell import local_cell_operators


# =============================================================================
# Variables
# =============================================================================

logger = logging.getLogger(__name__)


# =============================================================================
# Functions
# =============================================================================

def assemble_scalar_diffusion(
    mesh: PolytopalMesh, config: OperatorConfig = OperatorConfig()
) -> sp.csr_matrix:
    """
    Returns the scalar stiffness on hybrid DoFs (faces, then cells), of
    size ``nf + nc``.
    """
    n = mesh.n_faces + mesh.n_cells
    rows, cols, vals = [], [], []
    for batch in local_cell_operators(mesh, config):
        dofs = batch.scalar_dofs(mesh.n_faces)
        size = dofs.shape[1]
        rows.append(np.repeat(dofs, size, axis=1).ravel())
        cols.append(np.tile(dofs, (1, size)).ravel())
        vals.append(batch.stiffness.ravel())
    return sp.csr_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(n, n),
    )


def assemble_diffusion(
    mesh: PolytopalMesh, config: OperatorConfig = OperatorConfig()
) -> sp.csr_matrix:
    """
    Diffusion Assembly Function
    ===========================

    Assembles a_h on the full velocity vector.

    Parameters:
        mesh (PolytopalMesh): The mesh.
        config (OperatorConfig): Stabilization parameter.

    Returns:
        scipy.sparse.csr_matrix: Symmetric positive semidefinite matrix
            whose kernel is the constant hybrid fields.
    """

    return expand_components(assemble_scalar_diffusion(mesh, config),
                             mesh.dim)


def _seminorm_gram(mesh: PolytopalMesh, batch) -> np.ndarray:
    """
    Local Gram matrices of ``sum_f |f| / h_c |v_f - v_c|^2``.
    """
    m = batch.n_local_faces
    weights = (
        mesh.face_measures[batch.faces]
        / mesh.cell_diameters[batch.cells][:, None]
    )
    gram = np.zeros((batch.cells.size, m + 1, m + 1))
    idx = np.arange(m)
    gram[:, idx, idx] = weights
    gram[:, idx, m] = -weights
    gram[:, m, idx] = -weights
    gram[:, m, m] = weights.sum(axis=1)
    return gram


def measure_stability_constant(
    mesh: PolytopalMesh, config: OperatorConfig = OperatorConfig()
) -> float:
    """
    Stability Constant Function
    ===========================

    Measures the largest delta such that, cell by cell,
    ``delta |v|_{1,c}^2 <= a_c(v, v) <= |v|_{1,c}^2 / delta``.

    Both forms vanish exactly on constants, so the generalized eigenvalues
    are computed on the complement of constants.

    Returns:
        float: delta, the minimum over cells of ``min(lambda_min,
            1 / lambda_max)``.
    """

    delta = np.inf
    for batch in local_cell_operators(mesh, config):
        m = batch.n_local_faces
        basis = null_space(np.ones((1, m + 1)))
        gram = _seminorm_gram(mesh, batch)
        stiffness = basis.T @ batch.stiffness @ basis
        reduced = basis.T @ gram @ basis
        lower = np.linalg.cholesky(reduced)
        left = np.linalg.solve(lower, stiffness)
        pencil = np.linalg.solve(lower, np.transpose(left, (0, 2, 1)))
        pencil = 0.5 * (pencil + np.transpose(pencil, (0, 2, 1)))
        eigenvalues = np.linalg.eigvalsh(pencil)
        cell_delta = np.minimum(eigenvalues[:, 0], 1.0 / eigenvalues[:, -1])
        delta = min(delta, float(cell_delta.min()))
    logger.info("measured stability constant delta=%.4g", delta)
    return delta


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "assemble_diffusion",
    "assemble_scalar_diffusion",
    "measure_stability_constant",
]
