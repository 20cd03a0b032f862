# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Projection Functions
=============================

L2-orthogonal projections onto the hybrid velocity and cell pressure
spaces (face and cell means computed by quadrature), strong imposition of
Dirichlet data on boundary faces, and the zero-mean pressure adjustment.

Field arguments are vectorized callables ``field(t, x)`` taking points of
shape ``(n, d)`` and returning ``(n, d)`` (vector fields) or ``(n,)``
(scalar fields).

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
from typing import Callable, Optional

# Import | Libraries
import numpy as np

# Import | Local Modules
from ..mesh import PolytopalMesh
from .field_hybrid_velocity import HybridVelocity
from .field_pressure import PressureField
from .quadrature import DEFAULT_DEGREE, cell_quadrature, face_quadrature


# =============================================================================
# Variables
# =============================================================================

VectorField = Callable[[float, np.ndarray], np.ndarray]
ScalarField = Callable[[float, np.ndarray], np.ndarray]


# =============================================================================
# Functions
# =============================================================================

def cell_means(
    mesh: PolytopalMesh,
    field: Callable,
    t: float,
    degree: int = DEFAULT_DEGREE,
) -> np.ndarray:
    """
    Returns the mean of `field` at time `t` over every cell.
    """
    quadrature = cell_quadrature(mesh, degree)
    values = np.asarray(field(t, quadrature.points), dtype=float)
    integrals = quadrature.integrate(values)
    if integrals.ndim == 1:
        return integrals / mesh.cell_measures
    return integrals / mesh.cell_measures[:, None]


def face_means(
    mesh: PolytopalMesh,
    field: Callable,
    t: float,
    degree: int = DEFAULT_DEGREE,
) -> np.ndarray:
    """
    Returns the mean of `field` at time `t` over every face.
    """
    quadrature = face_quadrature(mesh, degree)
    values = np.asarray(field(t, quadrature.points), dtype=float)
    integrals = quadrature.integrate(values)
    if integrals.ndim == 1:
        return integrals / mesh.face_measures
    return integrals / mesh.face_measures[:, None]


def project_velocity(
    mesh: PolytopalMesh,
    field: VectorField,
    t: float = 0.0,
    degree: int = DEFAULT_DEGREE,
) -> HybridVelocity:
    """
    Velocity Projection Function
    ============================

    Projects a vector field onto the hybrid space: every face value is the
    face mean of `field` and every cell value its cell mean.

    Parameters:
        mesh (PolytopalMesh): The mesh.
        field (VectorField): Vectorized ``field(t, x)``.
        t (float): Evaluation time.
        degree (int): Quadrature degree on sub-simplices.

    Returns:
        HybridVelocity: The projection.
    """

    return HybridVelocity(
        face_values=face_means(mesh, field, t, degree),
        cell_values=cell_means(mesh, field, t, degree),
    )


def project_pressure(
    mesh: PolytopalMesh,
    field: ScalarField,
    t: float = 0.0,
    degree: int = DEFAULT_DEGREE,
) -> PressureField:
    """
    Projects a scalar field onto cell means.
    """
    return PressureField(cell_means(mesh, field, t, degree))


def boundary_face_values(
    mesh: PolytopalMesh,
    boundary_data: Optional[VectorField],
    t: float,
    degree: int = DEFAULT_DEGREE,
) -> np.ndarray:
    """
    Returns the face means of `boundary_data` on the boundary faces, in the
    order of ``mesh.boundary_faces``; zero when `boundary_data` is None.
    """
    if boundary_data is None or mesh.boundary_faces.size == 0:
        return np.zeros((mesh.boundary_faces.size, mesh.dim))
    # Face quadrature is cached for the whole mesh; evaluate the boundary
    # points only.
    quadrature = face_quadrature(mesh, degree)
    mask = mesh.is_boundary_face[quadrature.owners]
    values = np.asarray(
        boundary_data(t, quadrature.points[mask]), dtype=float
    )
    weighted = values * quadrature.weights[mask][:, None]
    owners = quadrature.owners[mask]
    sums = np.stack(
        [
            np.bincount(owners, weights=weighted[:, k],
                        minlength=mesh.n_faces)
            for k in range(mesh.dim)
        ],
        axis=1,
    )
    faces = mesh.boundary_faces
    return sums[faces] / mesh.face_measures[faces][:, None]


def apply_dirichlet(
    velocity: HybridVelocity,
    mesh: PolytopalMesh,
    boundary_data: Optional[VectorField],
    t: float,
    degree: int = DEFAULT_DEGREE,
) -> HybridVelocity:
    """
    Dirichlet Imposition Function
    =============================

    Overwrites the boundary face values of `velocity` with the face means
    of `boundary_data` at time `t`; interior face and cell values are
    untouched. ``boundary_data=None`` imposes zero.

    Returns:
        HybridVelocity: A new field.
    """

    if mesh.boundary_faces.size == 0:
        return velocity
    return velocity.with_faces(
        mesh.boundary_faces,
        boundary_face_values(mesh, boundary_data, t, degree),
    )


def zero_mean_adjust(
    pressure: PressureField, mesh: PolytopalMesh
) -> PressureField:
    """
    Subtracts the volume-weighted mean of `pressure`. Idempotent.
    """
    return PressureField(pressure.cell_values - pressure.mean(mesh))


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "ScalarField",
    "VectorField",
    "apply_dirichlet",
    "boundary_face_values",
    "cell_means",
    "face_means",
    "project_pressure",
    "project_velocity",
    "zero_mean_adjust",
]
