# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Polytopal Mesh Model Class
===================================

Immutable polytopal mesh with all the geometric quantities used by the
face-based discretization: face normals, barycenters and measures, cell
barycenters, measures and diameters, and the measure of each subpyramid
(the cone joining the cell barycenter to one of its faces).

Per-incidence arrays (one entry per (cell, face) pair) follow the order of
``topology.cell_face_ids``.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
from dataclasses import dataclass
from functools import cached_property

# Import | Libraries
import numpy as np

# Import | Local Modules
from .model_mesh_topology import MeshTopology


# =============================================================================
# Classes
# =============================================================================

@dataclass(frozen=True, eq=False)
class PolytopalMesh:
    """
    Polytopal Mesh Class
    ====================

    Attributes:
        topology (MeshTopology): Connectivity, with every face loop oriented
            so that its normal matches `face_normals`.
        face_normals (np.ndarray): Unit normal n_f of each face, pointing
            from the lower to the higher cell id, or outward on the boundary.
        face_barycenters (np.ndarray): Face barycenters x_f.
        face_measures (np.ndarray): Face measures |f|.
        cell_barycenters (np.ndarray): Cell barycenters x_c.
        cell_measures (np.ndarray): Cell measures |c|.
        cell_diameters (np.ndarray): Cell diameters h_c.
        subpyramid_measures (np.ndarray): |p_fc| per incidence.
        face_cells (np.ndarray): Shape ``(nf, 2)``; the lower and higher
            incident cell ids, the second is -1 on boundary faces.
        boundary_faces (np.ndarray): Ids of boundary faces, increasing.
        interior_faces (np.ndarray): Ids of interior faces, increasing.

    Note:
        Instances hash by identity, so they can key per-mesh caches.
    """

    topology: MeshTopology
    face_normals: np.ndarray
    face_barycenters: np.ndarray
    face_measures: np.ndarray
    cell_barycenters: np.ndarray
    cell_measures: np.ndarray
    cell_diameters: np.ndarray
    subpyramid_measures: np.ndarray
    face_cells: np.ndarray
    boundary_faces: np.ndarray
    interior_faces: np.ndarray

    @property
    def dim(self) -> int:
        return self.topology.dim

    @property
    def vertices(self) -> np.ndarray:
        return self.topology.vertices

    @property
    def n_vertices(self) -> int:
        return self.topology.n_vertices

    @property
    def n_faces(self) -> int:
        return self.topology.n_faces

    @property
    def n_cells(self) -> int:
        return self.topology.n_cells

    @property
    def n_incidences(self) -> int:
        return int(self.topology.cell_face_ids.size)

    @property
    def h(self) -> float:
        """Mesh size, the largest cell diameter."""
        return float(self.cell_diameters.max())

    @property
    def domain_measure(self) -> float:
        return float(self.cell_measures.sum())

    @cached_property
    def faces_per_cell(self) -> np.ndarray:
        return np.diff(self.topology.cell_face_offsets)

    @cached_property
    def incidence_cells(self) -> np.ndarray:
        """Cell id of every incidence."""
        return np.repeat(np.arange(self.n_cells), self.faces_per_cell)

    @cached_property
    def incidence_faces(self) -> np.ndarray:
        """Face id of every incidence."""
        return self.topology.cell_face_ids

    @cached_property
    def incidence_normals(self) -> np.ndarray:
        """Outward unit normal n_fc of every incidence."""
        signs = self.topology.cell_face_signs.astype(float)
        return signs[:, None] * self.face_normals[self.incidence_faces]

    @cached_property
    def is_boundary_face(self) -> np.ndarray:
        mask = np.zeros(self.n_faces, dtype=bool)
        mask[self.boundary_faces] = True
        return mask

    def cell_faces(self, cell: int) -> tuple[np.ndarray, np.ndarray]:
        """
        Returns the face ids and incidence signs of `cell`.
        """
        return self.topology.cell_faces(cell)

    def cell_incidences(self, cell: int) -> slice:
        """
        Returns the slice of per-incidence arrays belonging to `cell`.
        """
        start, stop = self.topology.cell_face_offsets[cell : cell + 2]
        return slice(int(start), int(stop))

    def cell_vertices(self, cell: int) -> np.ndarray:
        """
        Returns the sorted unique vertex ids of `cell`.
        """
        faces, _ = self.cell_faces(cell)
        return np.unique(
            np.concatenate([self.topology.face_loop(f) for f in faces])
        )

    def summary(self) -> dict:
        """
        Returns counts and sizes, as printed by ``cdofb-ns mesh check``.
        """
        return {
            "dim": self.dim,
            "vertices": self.n_vertices,
            "faces": self.n_faces,
            "boundary_faces": int(self.boundary_faces.size),
            "cells": self.n_cells,
            "h": self.h,
            "measure": self.domain_measure,
        }


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "PolytopalMesh",
]
