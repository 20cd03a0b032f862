# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides DoF Map Class
======================

Numbering of the velocity unknowns. The full velocity vector follows the
flat layout of `HybridVelocity` (faces, then cells, components
interleaved). Boundary face DoFs carry Dirichlet data and are eliminated;
the remaining (free) DoFs are numbered interior faces first, then cells.
Pressure DoFs are the cells.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
from dataclasses import dataclass
from functools import cached_property

# Import | Libraries
import numpy as np
import scipy.sparse as sp

# Import | Local Modules
from ..mesh import PolytopalMesh


# =============================================================================
# Classes
# =============================================================================

@dataclass(frozen=True, eq=False)
class DofMap:
    """
    DoF Map Class
    =============

    Attributes:
        mesh (PolytopalMesh): The mesh.
    """

    mesh: PolytopalMesh

    @property
    def dim(self) -> int:
        return self.mesh.dim

    @property
    def n_velocity(self) -> int:
        return (self.mesh.n_faces + self.mesh.n_cells) * self.mesh.dim

    @property
    def n_pressure(self) -> int:
        return self.mesh.n_cells

    def _entity_dofs(self, entities: np.ndarray) -> np.ndarray:
        d = self.mesh.dim
        return (entities[:, None] * d + np.arange(d)[None, :]).ravel()

    @cached_property
    def free(self) -> np.ndarray:
        """Full-vector indices of the free DoFs, in solve order."""
        cells = self.mesh.n_faces + np.arange(self.mesh.n_cells)
        return self._entity_dofs(
            np.concatenate((self.mesh.interior_faces, cells))
        )

    @cached_property
    def fixed(self) -> np.ndarray:
        """Full-vector indices of the boundary face DoFs."""
        return self._entity_dofs(self.mesh.boundary_faces)

    @cached_property
    def cell_dofs(self) -> np.ndarray:
        """Full-vector indices of the cell DoFs."""
        return self._entity_dofs(
            self.mesh.n_faces + np.arange(self.mesh.n_cells)
        )

    @property
    def n_free(self) -> int:
        return int(self.free.size)

    def restrict(self, vector: np.ndarray) -> np.ndarray:
        return vector[self.free]

    def assemble(self, free: np.ndarray, fixed: np.ndarray) -> np.ndarray:
        """
        Builds a full vector from free and boundary values.
        """
        vector = np.empty(self.n_velocity)
        vector[self.free] = free
        vector[self.fixed] = fixed
        return vector

    def free_block(self, matrix: sp.spmatrix) -> sp.csr_matrix:
        """Returns ``K_ff``."""
        return sp.csr_matrix(matrix[self.free][:, self.free])

    def lifting_block(self, matrix: sp.spmatrix) -> sp.csr_matrix:
        """Returns ``K_fb``, the columns multiplying boundary data."""
        return sp.csr_matrix(matrix[self.free][:, self.fixed])


# =============================================================================
# Functions
# =============================================================================

def expand_components(scalar: sp.spmatrix, dim: int) -> sp.csr_matrix:
    """
    Expands a scalar hybrid operator to vector unknowns, ``S (x) I_d``.
    """
    return sp.kron(scalar, sp.identity(dim), format="csr")


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "DofMap",
    "expand_components",
]
