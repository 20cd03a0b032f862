# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Cartesian Mesh Generator
=================================

Tensor-product meshes of axis-aligned boxes in 2D and 3D.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
from numbers import Integral
from typing import Optional, Sequence

# Import | Libraries
import numpy as np

# Import | Local Modules
from ..exceptions import ValidationError
from ..utils import validate_positive, validate_positive_int
from .geometry import compute_geometry
from .model_mesh_topology import MeshTopology
from .model_polytopal_mesh import PolytopalMesh


# =============================================================================
# Functions
# =============================================================================

def _validate_box(
    dim: int, box: Optional[Sequence[Sequence[float]]]
) -> np.ndarray:
    if box is None:
        return np.array([[0.0, 1.0]] * dim)
    extents = np.asarray(box, dtype=float)
    if extents.shape != (dim, 2):
        raise ValidationError(
            message="box must give (low, high) for each of %(dim)s axes.",
            params={"dim": dim},
            code="invalid_box",
        )
    for axis, (low, high) in enumerate(extents):
        validate_positive(high - low, name=f"box extent along axis {axis}")
    return extents


def _cartesian_topology_2d(nx: int, ny: int, box: np.ndarray) -> MeshTopology:
    xs = np.linspace(box[0, 0], box[0, 1], nx + 1)
    ys = np.linspace(box[1, 0], box[1, 1], ny + 1)
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    vertices = np.column_stack((gx.ravel(), gy.ravel()))

    def vid(i, j):
        return i * (ny + 1) + j

    # Vertical faces (normal +x), indexed by (i, j), i <= nx, j < ny.
    i, j = np.meshgrid(np.arange(nx + 1), np.arange(ny), indexing="ij")
    vertical = np.column_stack((vid(i, j).ravel(), vid(i, j + 1).ravel()))
    n_vertical = vertical.shape[0]

    def vface(i, j):
        return i * ny + j

    # Horizontal faces (normal +y), indexed by (i, j), i < nx, j <= ny.
    i, j = np.meshgrid(np.arange(nx), np.arange(ny + 1), indexing="ij")
    horizontal = np.column_stack(
        (vid(i + 1, j).ravel(), vid(i, j).ravel())
    )

    def hface(i, j):
        return n_vertical + i * (ny + 1) + j

    i, j = np.meshgrid(np.arange(nx), np.arange(ny), indexing="ij")
    i, j = i.ravel(), j.ravel()
    cell_faces = np.column_stack(
        (hface(i, j), vface(i + 1, j), hface(i, j + 1), vface(i, j))
    )
    cell_signs = np.tile([-1, 1, 1, -1], (cell_faces.shape[0], 1))
    faces = np.vstack((vertical, horizontal))
    return MeshTopology(
        dim=2,
        vertices=vertices,
        face_vertex_offsets=np.arange(0, 2 * faces.shape[0] + 1, 2),
        face_vertex_ids=faces.ravel(),
        cell_face_offsets=np.arange(0, 4 * cell_faces.shape[0] + 1, 4),
        cell_face_ids=cell_faces.ravel(),
        cell_face_signs=cell_signs.ravel(),
    )


def _cartesian_topology_3d(
    nx: int, ny: int, nz: int, box: np.ndarray
) -> MeshTopology:
    axes = [
        np.linspace(box[k, 0], box[k, 1], n + 1)
        for k, n in enumerate((nx, ny, nz))
    ]
    grid = np.meshgrid(*axes, indexing="ij")
    vertices = np.column_stack([g.ravel() for g in grid])

    def vid(i, j, k):
        return (i * (ny + 1) + j) * (nz + 1) + k

    def block(shape):
        return [a.ravel() for a in np.meshgrid(
            *(np.arange(s) for s in shape), indexing="ij"
        )]

    # Loops are ordered so that the right-hand normal points along +axis.
    i, j, k = block((nx + 1, ny, nz))
    x_faces = np.column_stack((
        vid(i, j, k), vid(i, j + 1, k), vid(i, j + 1, k + 1), vid(i, j, k + 1)
    ))
    i, j, k = block((nx, ny + 1, nz))
    y_faces = np.column_stack((
        vid(i, j, k), vid(i, j, k + 1), vid(i + 1, j, k + 1), vid(i + 1, j, k)
    ))
    i, j, k = block((nx, ny, nz + 1))
    z_faces = np.column_stack((
        vid(i, j, k), vid(i + 1, j, k), vid(i + 1, j + 1, k), vid(i, j + 1, k)
    ))
    y_start = x_faces.shape[0]
    z_start = y_start + y_faces.shape[0]

    def xface(i, j, k):
        return (i * ny + j) * nz + k

    def yface(i, j, k):
        return y_start + (i * (ny + 1) + j) * nz + k

    def zface(i, j, k):
        return z_start + (i * ny + j) * (nz + 1) + k

    i, j, k = block((nx, ny, nz))
    cell_faces = np.column_stack((
        xface(i, j, k), xface(i + 1, j, k),
        yface(i, j, k), yface(i, j + 1, k),
        zface(i, j, k), zface(i, j, k + 1),
    ))
    cell_signs = np.tile([-1, 1, -1, 1, -1, 1], (cell_faces.shape[0], 1))
    faces = np.vstack((x_faces, y_faces, z_faces))
    return MeshTopology(
        dim=3,
        vertices=vertices,
        face_vertex_offsets=np.arange(0, 4 * faces.shape[0] + 1, 4),
        face_vertex_ids=faces.ravel(),
        cell_face_offsets=np.arange(0, 6 * cell_faces.shape[0] + 1, 6),
        cell_face_ids=cell_faces.ravel(),
        cell_face_signs=cell_signs.ravel(),
    )


def build_cartesian(
    dim: int,
    cells_per_axis: Sequence[int] | int,
    box: Optional[Sequence[Sequence[float]]] = None,
) -> PolytopalMesh:
    """
    Cartesian Mesh Generator
    ========================

    Builds a tensor-product mesh of an axis-aligned box.

    Parameters:
        dim (int): Space dimension, 2 or 3.
        cells_per_axis (Sequence[int] | int): Cells along each axis; a
            single integer is used for every axis.
        box (Sequence[Sequence[float]], optional): ``(low, high)`` per
            axis. Defaults to the unit square or cube.

    Returns:
        PolytopalMesh: The mesh, with geometry.

    Raises:
        ValidationError: On a non-positive count or extent.

    Example:
        >>> mesh = build_cartesian(2, 2)
        >>> mesh.n_cells, mesh.n_faces
        (4, 12)
    """

    if dim not in (2, 3):
        raise ValidationError(
            message="dim must be 2 or 3, got %(dim)r.",
            params={"dim": dim},
            code="invalid_dim",
        )
    if isinstance(cells_per_axis, Integral):
        cells_per_axis = [cells_per_axis] * dim
    counts = [
        validate_positive_int(n, name="cells_per_axis")
        for n in cells_per_axis
    ]
    if len(counts) != dim:
        raise ValidationError(
            message="cells_per_axis needs %(dim)s entries.",
            params={"dim": dim},
            code="invalid",
        )
    extents = _validate_box(dim, box)
    if dim == 2:
        topology = _cartesian_topology_2d(*counts, extents)
    else:
        topology = _cartesian_topology_3d(*counts, extents)
    return compute_geometry(topology)


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "build_cartesian",
]
