# -*- coding: utf-8 -*-

"""
CDO-Fb Mesh Module
==================

Polytopal mesh data model, geometry, generators and file I/O.

Currently, the module includes:
- `MeshTopology`: Connectivity and coordinates without geometry.
- `PolytopalMesh`: Immutable mesh with all geometric quantities.
- `compute_geometry`: Builds a `PolytopalMesh` from a topology.
- `build_cartesian`: Tensor-product meshes in 2D and 3D.
- `build_voronoi_polygonal_2d`: Clipped Voronoi meshes of a rectangle.
- `read_mesh` / `write_mesh`: JSON mesh files.

"""

# =============================================================================
# Imports
# =============================================================================

from .generator_cartesian import build_cartesian
from .generator_voronoi import build_voronoi_polygonal_2d
from .geometry import compute_geometry, mesh_invariant_residuals
from .mesh_io import mesh_from_dict, mesh_to_dict, read_mesh, write_mesh
from .model_mesh_topology import MeshTopology
from .model_polytopal_mesh import PolytopalMesh


# =============================================================================
# Public Interface
# =============================================================================

__all__ = [
    "MeshTopology",
    "PolytopalMesh",
    "build_cartesian",
    "build_voronoi_polygonal_2d",
    "compute_geometry",
    "mesh_from_dict",
    "mesh_invariant_residuals",
    "mesh_to_dict",
    "read_mesh",
    "write_mesh",
]
