# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Hybrid Velocity Field Class
====================================

A discrete velocity with one d-vector per face and one d-vector per cell.

The flat layout used by the linear systems stores all face blocks first,
then all cell blocks, with the d components of an entity contiguous: the
k-th component of face f sits at ``f * d + k`` and that of cell c at
``(nf + c) * d + k``.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
from dataclasses import dataclass

# Import | Libraries
import numpy as np

# Import | Local Modules
from ..exceptions import ValidationError
from ..mesh import PolytopalMesh


# =============================================================================
# Classes
# =============================================================================

@dataclass(frozen=True, eq=False)
class HybridVelocity:
    """
    Hybrid Velocity Class
    =====================

    Attributes:
        face_values (np.ndarray): Shape ``(nf, d)``.
        cell_values (np.ndarray): Shape ``(nc, d)``.
    """

    face_values: np.ndarray
    cell_values: np.ndarray

    def __post_init__(self) -> None:
        faces, cells = self.face_values, self.cell_values
        if faces.ndim != 2 or cells.ndim != 2 or (
            faces.shape[1] != cells.shape[1]
        ):
            raise ValidationError(
                message="face and cell values must be (n, d) arrays with the "
                "same d, got %(faces)s and %(cells)s.",
                params={"faces": faces.shape, "cells": cells.shape},
                code="invalid_shape",
            )
        if not (np.all(np.isfinite(faces)) and np.all(np.isfinite(cells))):
            raise ValidationError(
                message="velocity values must be finite.", code="not_finite"
            )

    @property
    def dim(self) -> int:
        return int(self.cell_values.shape[1])

    @classmethod
    def zeros(cls, mesh: PolytopalMesh) -> "HybridVelocity":
        return cls(
            face_values=np.zeros((mesh.n_faces, mesh.dim)),
            cell_values=np.zeros((mesh.n_cells, mesh.dim)),
        )

    @classmethod
    def constant(
        cls, mesh: PolytopalMesh, value: np.ndarray
    ) -> "HybridVelocity":
        value = np.asarray(value, dtype=float)
        return cls(
            face_values=np.tile(value, (mesh.n_faces, 1)),
            cell_values=np.tile(value, (mesh.n_cells, 1)),
        )

    @classmethod
    def from_vector(
        cls, mesh: PolytopalMesh, vector: np.ndarray
    ) -> "HybridVelocity":
        """
        Builds a field from its flat layout.
        """
        d = mesh.dim
        expected = (mesh.n_faces + mesh.n_cells) * d
        if vector.shape != (expected,):
            raise ValidationError(
                message="expected a vector of length %(n)s, got %(shape)s.",
                params={"n": expected, "shape": vector.shape},
                code="invalid_shape",
            )
        split = mesh.n_faces * d
        return cls(
            face_values=vector[:split].reshape(-1, d).copy(),
            cell_values=vector[split:].reshape(-1, d).copy(),
        )

    def to_vector(self) -> np.ndarray:
        return np.concatenate(
            (self.face_values.ravel(), self.cell_values.ravel())
        )

    def with_faces(self, faces: np.ndarray, values: np.ndarray):
        """
        Returns a copy with the values of `faces` replaced.
        """
        face_values = self.face_values.copy()
        face_values[faces] = values
        return HybridVelocity(face_values, self.cell_values.copy())

    def is_homogeneous(self, mesh: PolytopalMesh) -> bool:
        """
        Whether every boundary face value is exactly zero.
        """
        return bool(np.all(self.face_values[mesh.boundary_faces] == 0.0))

    def __add__(self, other: "HybridVelocity") -> "HybridVelocity":
        return HybridVelocity(
            self.face_values + other.face_values,
            self.cell_values + other.cell_values,
        )

    def __sub__(self, other: "HybridVelocity") -> "HybridVelocity":
        return HybridVelocity(
            self.face_values - other.face_values,
            self.cell_values - other.cell_values,
        )

    def __mul__(self, scale: float) -> "HybridVelocity":
        return HybridVelocity(
            scale * self.face_values, scale * self.cell_values
        )

    __rmul__ = __mul__


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "HybridVelocity",
]
