# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Local Cell Operator Functions
======================================

Cellwise gradient reconstruction of hybrid velocities and the local
operators derived from it.

On a cell c with faces f_1 .. f_m, the reconstructed gradient is constant
on every subpyramid p_fc and reads

    G_c(v)|p_fc = Gcons_c(v) + alpha |f| / |p_fc|
                  ((v_f - v_c) - Gcons_c(v) (x_f - x_c)) (x) n_fc,

    Gcons_c(v) = 1 / |c| sum_f |f| (v_f - v_c) (x) n_fc,

with ``(a (x) b)_ik = a_i b_k``. Both parts are linear combinations
``sum_j v_j (x) g_j`` of the local DoFs (faces first, then the cell), so a
cell is fully described by its coefficient vectors g_j. Cells are
processed in batches of equal face count.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

# Import | Libraries
import numpy as np

# Import | Local Modules
from ..mesh import PolytopalMesh
from .config_operator import OperatorConfig


# =============================================================================
# Classes
# =============================================================================

@dataclass(frozen=True, eq=False)
class LocalCellOperators:
    """
    Local Cell Operators Class
    ==========================

    Local operators of a batch of g cells sharing the same face count m.
    Local DoF index j < m is the j-th face of the cell, j = m the cell.

    Attributes:
        cells (np.ndarray): Cell ids, shape ``(g,)``.
        faces (np.ndarray): Face ids, shape ``(g, m)``.
        incidences (np.ndarray): Positions in per-incidence arrays,
            shape ``(g, m)``.
        consistent (np.ndarray): Coefficients of the consistent gradient,
            shape ``(g, m + 1, d)``. They also define the divergence
            ``D_c(v) = sum_j g_j . v_j``.
        gradient (np.ndarray): Coefficients of the full gradient on each
            subpyramid, shape ``(g, m, m + 1, d)``.
        pyramids (np.ndarray): Subpyramid measures, shape ``(g, m)``.
        measures (np.ndarray): Cell measures, shape ``(g,)``.
        stiffness (np.ndarray): Scalar local diffusion matrices
            ``S_jl = sum_f |p_fc| g^f_j . g^f_l``, shape ``(g, m+1, m+1)``.
            The vector-valued a_c is ``S (x) I_d``.
    """

    cells: np.ndarray
    faces: np.ndarray
    incidences: np.ndarray
    consistent: np.ndarray
    gradient: np.ndarray
    pyramids: np.ndarray
    measures: np.ndarray
    stiffness: np.ndarray

    @property
    def n_local_faces(self) -> int:
        return int(self.faces.shape[1])

    def scalar_dofs(self, n_faces: int) -> np.ndarray:
        """
        Returns scalar hybrid DoF ids (faces, then ``n_faces + cell``) of
        every local DoF, shape ``(g, m + 1)``.
        """
        return np.concatenate(
            (self.faces, n_faces + self.cells[:, None]), axis=1
        )

    def divdiv(self) -> np.ndarray:
        """
        Returns the local div-div matrices ``|c| D D^T`` in the local
        vector layout (DoF-major, component-minor), shape
        ``(g, (m+1) d, (m+1) d)``.
        """
        rows = self.consistent.reshape(self.cells.size, -1)
        return self.measures[:, None, None] * (
            rows[:, :, None] * rows[:, None, :]
        )


class GradientReconstruction(NamedTuple):
    """
    Gradient of one cell: the consistent tensor, the stabilization tensor
    of every subpyramid and their sum.
    """

    consistent: np.ndarray
    stabilization: np.ndarray
    total: np.ndarray


# =============================================================================
# Functions
# =============================================================================

def _cell_batch(
    mesh: PolytopalMesh, cells: np.ndarray, alpha: float
) -> LocalCellOperators:
    m = int(mesh.faces_per_cell[cells[0]])
    offsets = mesh.topology.cell_face_offsets
    incidences = offsets[cells][:, None] + np.arange(m)[None, :]
    faces = mesh.incidence_faces[incidences]
    area = mesh.face_measures[faces]
    normals = mesh.incidence_normals[incidences]
    measures = mesh.cell_measures[cells]
    pyramids = mesh.subpyramid_measures[incidences]
    delta = (
        mesh.face_barycenters[faces]
        - mesh.cell_barycenters[cells][:, None, :]
    )

    face_coefficients = area[:, :, None] * normals / measures[:, None, None]
    consistent = np.concatenate(
        (face_coefficients, -face_coefficients.sum(axis=1, keepdims=True)),
        axis=1,
    )
    # residual_f(v) = (v_f - v_c) - Gcons(v) (x_f - x_c) = sum_j r_fj v_j
    residual = np.eye(m)[None, :, :] - np.einsum(
        "gfd,gjd->gfj", delta, face_coefficients
    )
    residual = np.concatenate(
        (residual, -residual.sum(axis=2, keepdims=True)), axis=2
    )
    beta = alpha * area / pyramids
    gradient = consistent[:, None, :, :] + (
        beta[:, :, None, None]
        * residual[:, :, :, None]
        * normals[:, :, None, :]
    )
    stiffness = np.einsum("gf,gfjd,gfld->gjl", pyramids, gradient, gradient)
    stiffness = 0.5 * (stiffness + np.transpose(stiffness, (0, 2, 1)))
    return LocalCellOperators(
        cells=cells,
        faces=faces,
        incidences=incidences,
        consistent=consistent,
        gradient=gradient,
        pyramids=pyramids,
        measures=measures,
        stiffness=stiffness,
    )


@lru_cache(maxsize=16)
def local_cell_operators(
    mesh: PolytopalMesh, config: OperatorConfig = OperatorConfig()
) -> tuple[LocalCellOperators, ...]:
    """
    Local Cell Operators Function
    =============================

    Computes the local operators of every cell of `mesh`, one batch per
    distinct face count. Cached per mesh and configuration.

    Returns:
        tuple[LocalCellOperators, ...]: Batches in increasing face count.
    """

    alpha = config.alpha(mesh.dim)
    counts = mesh.faces_per_cell
    return tuple(
        _cell_batch(mesh, np.flatnonzero(counts == m), alpha)
        for m in np.unique(counts)
    )


def _local_values(face_values, cell_value) -> np.ndarray:
    return np.vstack(
        (np.asarray(face_values, float), np.asarray(cell_value, float))
    )


def grad_reconstruct(
    mesh: PolytopalMesh,
    cell: int,
    face_values: np.ndarray,
    cell_value: np.ndarray,
    config: OperatorConfig = OperatorConfig(),
) -> GradientReconstruction:
    """
    Gradient Reconstruction Function
    ================================

    Reconstructs the piecewise-constant gradient of a hybrid field on one
    cell.

    Parameters:
        mesh (PolytopalMesh): The mesh.
        cell (int): Cell id.
        face_values (np.ndarray): Values on the cell faces, in the order of
            ``mesh.cell_faces(cell)``, shape ``(m, d)``.
        cell_value (np.ndarray): Cell value, shape ``(d,)``.
        config (OperatorConfig): Stabilization parameter.

    Returns:
        GradientReconstruction: Consistent tensor ``(d, d)``, stabilization
            and total tensors per subpyramid ``(m, d, d)``.
    """

    batch = _cell_batch(mesh, np.array([cell]), config.alpha(mesh.dim))
    values = _local_values(face_values, cell_value)
    consistent = np.einsum("ji,jk->ik", values, batch.consistent[0])
    total = np.einsum("ji,fjk->fik", values, batch.gradient[0])
    return GradientReconstruction(
        consistent=consistent,
        stabilization=total - consistent[None, :, :],
        total=total,
    )


def divergence(
    mesh: PolytopalMesh,
    cell: int,
    face_values: np.ndarray,
    cell_value: np.ndarray,
) -> float:
    """
    Returns the discrete divergence ``D_c = trace(Gcons_c)`` of one cell.
    """
    batch = _cell_batch(mesh, np.array([cell]), 1.0)
    values = _local_values(face_values, cell_value)
    return float(np.einsum("jk,jk->", values, batch.consistent[0]))


def cell_gradients(
    mesh: PolytopalMesh,
    vector: np.ndarray,
    config: OperatorConfig = OperatorConfig(),
) -> np.ndarray:
    """
    Returns the reconstructed gradient on every subpyramid of the mesh,
    shape ``(n_incidences, d, d)``, for a hybrid field in flat layout.
    """
    d = mesh.dim
    values = vector.reshape(-1, d)
    out = np.empty((mesh.n_incidences, d, d))
    for batch in local_cell_operators(mesh, config):
        local = values[batch.scalar_dofs(mesh.n_faces)]
        out[batch.incidences.ravel()] = np.einsum(
            "gji,gfjk->gfik", local, batch.gradient
        ).reshape(-1, d, d)
    return out


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "GradientReconstruction",
    "LocalCellOperators",
    "cell_gradients",
    "divergence",
    "grad_reconstruct",
    "local_cell_operators",
]
