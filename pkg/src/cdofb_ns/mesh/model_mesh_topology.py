# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Mesh Topology Model Class
==================================

Connectivity and vertex coordinates of a polytopal mesh, before any
geometric quantity has been derived. Generators and the file reader build
a `MeshTopology` and hand it to `compute_geometry`.

Connectivity is stored in flat offset arrays (the compressed layout used
throughout the package): the vertices of face `f` are
``face_vertex_ids[face_vertex_offsets[f]:face_vertex_offsets[f + 1]]`` and
the faces of cell `c` are the matching slice of ``cell_face_ids``, with the
orientation of each incidence in ``cell_face_signs``.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
from dataclasses import dataclass
from typing import Sequence

# Import | Libraries
import numpy as np

# Import | Local Modules
from ..exceptions import MeshError


# =============================================================================
# Classes
# =============================================================================

@dataclass(frozen=True, eq=False)
class MeshTopology:
    """
    Mesh Topology Class
    ===================

    Attributes:
        dim (int): Space dimension, 2 or 3.
        vertices (np.ndarray): Vertex coordinates, shape ``(nv, dim)``.
        face_vertex_offsets (np.ndarray): Offsets into `face_vertex_ids`,
            length ``nf + 1``.
        face_vertex_ids (np.ndarray): Vertex loops of all faces. In 2D every
            face is a vertex pair.
        cell_face_offsets (np.ndarray): Offsets into `cell_face_ids`,
            length ``nc + 1``.
        cell_face_ids (np.ndarray): Faces of all cells.
        cell_face_signs (np.ndarray): +1 when the normal induced by the face
            loop points out of the cell, -1 otherwise.

    Note:
        The loop normal of a 2D face ``(v0, v1)`` with tangent
        ``t = v1 - v0`` is ``(t_y, -t_x) / |t|``; in 3D it follows the
        right-hand rule around the loop.
    """

    dim: int
    vertices: np.ndarray
    face_vertex_offsets: np.ndarray
    face_vertex_ids: np.ndarray
    cell_face_offsets: np.ndarray
    cell_face_ids: np.ndarray
    cell_face_signs: np.ndarray

    def __post_init__(self) -> None:
        if self.dim not in (2, 3):
            raise MeshError(f"dimension must be 2 or 3, got {self.dim}")
        if self.vertices.ndim != 2 or self.vertices.shape[1] != self.dim:
            raise MeshError(
                f"vertices must have shape (nv, {self.dim}), got "
                f"{self.vertices.shape}"
            )
        if self.cell_face_ids.shape != self.cell_face_signs.shape:
            raise MeshError("cell face ids and signs differ in length")

    @property
    def n_vertices(self) -> int:
        return int(self.vertices.shape[0])

    @property
    def n_faces(self) -> int:
        return int(self.face_vertex_offsets.size - 1)

    @property
    def n_cells(self) -> int:
        return int(self.cell_face_offsets.size - 1)

    def face_loop(self, face: int) -> np.ndarray:
        """
        Returns the vertex ids of `face` in loop order.
        """
        start, stop = self.face_vertex_offsets[face : face + 2]
        return self.face_vertex_ids[start:stop]

    def cell_faces(self, cell: int) -> tuple[np.ndarray, np.ndarray]:
        """
        Returns the face ids and incidence signs of `cell`.
        """
        start, stop = self.cell_face_offsets[cell : cell + 2]
        return (
            self.cell_face_ids[start:stop],
            self.cell_face_signs[start:stop],
        )

    @classmethod
    def from_lists(
        cls,
        dim: int,
        vertices: Sequence[Sequence[float]],
        faces: Sequence[Sequence[int]],
        cells: Sequence[Sequence[tuple[int, int]]],
    ) -> "MeshTopology":
        """
        Mesh Topology Builder
        =====================

        Builds a topology from nested Python lists.

        Parameters:
            dim (int): Space dimension.
            vertices (Sequence): One coordinate tuple per vertex.
            faces (Sequence): One vertex loop per face (0-based ids).
            cells (Sequence): Per cell, a list of ``(face id, sign)``.

        Returns:
            MeshTopology: The packed topology.
        """

        face_sizes = [len(loop) for loop in faces]
        cell_sizes = [len(cell) for cell in cells]
        flat_faces = [v for loop in faces for v in loop]
        flat_cells = [item for cell in cells for item in cell]
        vertex_array = np.asarray(vertices, dtype=float).reshape(-1, dim)
        return cls(
            dim=dim,
            vertices=vertex_array,
            face_vertex_offsets=np.concatenate(
                ([0], np.cumsum(face_sizes, dtype=np.int64))
            ).astype(np.int64),
            face_vertex_ids=np.asarray(flat_faces, dtype=np.int64),
            cell_face_offsets=np.concatenate(
                ([0], np.cumsum(cell_sizes, dtype=np.int64))
            ).astype(np.int64),
            cell_face_ids=np.asarray(
                [f for f, _ in flat_cells], dtype=np.int64
            ),
            cell_face_signs=np.asarray(
                [s for _, s in flat_cells], dtype=np.int64
            ),
        )


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "MeshTopology",
]
