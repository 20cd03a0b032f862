# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Inf-Sup Diagnostic Inputs
==================================

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
from typing import NamedTuple

# Import | Libraries
import numpy as np
import scipy.sparse as sp

# Import | Local Modules
from ..exceptions import ValidationError
from ..mesh import PolytopalMesh
from .coupling import assemble_coupling
from .dof_map import DofMap, expand_components


# =============================================================================
# Classes
# =============================================================================

class InfSupInputs(NamedTuple):
    """
    Matrices defining the discrete inf-sup constant
    ``min_q max_v |q^T B v| / (|q|_h |v|_{1,h})`` over zero-mean q and
    velocities with zero boundary values.

    Attributes:
        coupling: B restricted to free velocity DoFs, ``(nc, n_free)``.
        velocity_gram: Gram matrix of the H1 seminorm on free DoFs.
        pressure_gram: Diagonal Gram matrix ``diag(|c|)``.
    """

    coupling: sp.csr_matrix
    velocity_gram: sp.csr_matrix
    pressure_gram: sp.csr_matrix


# =============================================================================
# Functions
# =============================================================================

def seminorm_gram(mesh: PolytopalMesh) -> sp.csr_matrix:
    """
    Returns the Gram matrix of
    ``|v|_{1,h}^2 = sum_c sum_f |f| / h_c |v_f - v_c|^2`` on the full
    velocity vector.
    """
    faces = mesh.incidence_faces
    cells = mesh.n_faces + mesh.incidence_cells
    weights = mesh.face_measures[faces] / mesh.cell_diameters[
        mesh.incidence_cells
    ]
    rows = np.concatenate((faces, faces, cells, cells))
    cols = np.concatenate((faces, cells, faces, cells))
    vals = np.concatenate((weights, -weights, -weights, weights))
    n = mesh.n_faces + mesh.n_cells
    scalar = sp.csr_matrix((vals, (rows, cols)), shape=(n, n))
    return expand_components(scalar, mesh.dim)


def infsup_inputs(mesh: PolytopalMesh) -> InfSupInputs:
    """
    Inf-Sup Inputs Function
    =======================

    Builds the matrices from which `infsup_estimate` computes the discrete
    inf-sup constant.

    Raises:
        ValidationError: On a single-cell mesh, where the zero-mean
            pressure space is trivial and the constant is undefined.
    """

    if mesh.n_cells < 2:
        raise ValidationError(
            message="inf-sup constant is undefined on a mesh with "
            "%(n)s cell: the zero-mean pressure space is trivial.",
            params={"n": mesh.n_cells},
            code="trivial_pressure_space",
        )
    dofs = DofMap(mesh)
    coupling = sp.csr_matrix(assemble_coupling(mesh)[:, dofs.free])
    return InfSupInputs(
        coupling=coupling,
        velocity_gram=dofs.free_block(seminorm_gram(mesh)),
        pressure_gram=sp.diags(mesh.cell_measures, format="csr"),
    )


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "InfSupInputs",
    "infsup_inputs",
    "seminorm_gram",
]
