# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Convection Operator Functions
======================================

The convection trilinear form

    t_h(w; u, v) = sum_c 1/2 sum_f |f| (w_f . n_fc) (u_f - u_c) . (v_f + v_c)
                 + sum_{f boundary} |f| (w_f . n_f)^- u_f . v_f,

with ``x^- = (|x| - x) / 2``. Only the face values of the transport field
w enter the form. It is skew-symmetric when w is discretely
divergence-free with zero normal flux on the boundary, and nonnegative
(``t_h(w; u, u) >= 0``) when w is only discretely divergence-free.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Libraries
import numpy as np
import scipy.sparse as sp

# Import | Local Modules
from ..mesh import PolytopalMesh
from ..spaces import HybridVelocity
from .dof_map import expand_components


# =============================================================================
# Functions
# =============================================================================

def _fluxes(w: HybridVelocity, mesh: PolytopalMesh):
    """
    Returns the half fluxes ``|f| (w_f . n_fc) / 2`` of every incidence and
    the inflow weights ``|f| (w_f . n_f)^-`` of every boundary face.
    """
    faces = mesh.incidence_faces
    half = 0.5 * mesh.face_measures[faces] * np.einsum(
        "ij,ij->i", w.face_values[faces], mesh.incidence_normals
    )
    boundary = mesh.boundary_faces
    normal_flux = np.einsum(
        "ij,ij->i", w.face_values[boundary], mesh.face_normals[boundary]
    )
    inflow = mesh.face_measures[boundary] * 0.5 * (
        np.abs(normal_flux) - normal_flux
    )
    return half, inflow


def convection_matrix(w: HybridVelocity, mesh: PolytopalMesh) -> sp.csr_matrix:
    """
    Convection Matrix Function
    ==========================

    Assembles T(w) with ``t_h(w; u, v) = v^T T(w) u`` on the full velocity
    vector; used for Picard linearization.

    Parameters:
        w (HybridVelocity): Transport field.
        mesh (PolytopalMesh): The mesh.

    Returns:
        scipy.sparse.csr_matrix: Square matrix of size ``n_velocity``.
    """

    half, inflow = _fluxes(w, mesh)
    faces = mesh.incidence_faces
    cells = mesh.n_faces + mesh.incidence_cells
    boundary = mesh.boundary_faces
    rows = np.concatenate((faces, faces, cells, cells, boundary))
    cols = np.concatenate((faces, cells, faces, cells, boundary))
    vals = np.concatenate((half, -half, half, -half, inflow))
    n = mesh.n_faces + mesh.n_cells
    scalar = sp.csr_matrix((vals, (rows, cols)), shape=(n, n))
    return expand_components(scalar, mesh.dim)


def convection_apply(
    w: HybridVelocity, u: HybridVelocity, mesh: PolytopalMesh
) -> np.ndarray:
    """
    Convection Apply Function
    =========================

    Returns the dual vector ``v -> t_h(w; u, v)`` in flat layout, without
    assembling a matrix.
    """

    half, inflow = _fluxes(w, mesh)
    faces = mesh.incidence_faces
    cells = mesh.incidence_cells
    jumps = half[:, None] * (u.face_values[faces] - u.cell_values[cells])
    face_part = np.zeros_like(u.face_values)
    cell_part = np.zeros_like(u.cell_values)
    np.add.at(face_part, faces, jumps)
    np.add.at(cell_part, cells, jumps)
    boundary = mesh.boundary_faces
    face_part[boundary] += inflow[:, None] * u.face_values[boundary]
    return np.concatenate((face_part.ravel(), cell_part.ravel()))


def convection_form(
    w: HybridVelocity,
    u: HybridVelocity,
    v: HybridVelocity,
    mesh: PolytopalMesh,
) -> float:
    """
    Returns ``t_h(w; u, v)``.
    """
    return float(v.to_vector() @ convection_apply(w, u, mesh))


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "convection_apply",
    "convection_form",
    "convection_matrix",
]
