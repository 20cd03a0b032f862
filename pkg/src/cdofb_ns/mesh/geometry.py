# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Mesh Geometry Functions
================================

Derives every geometric quantity of a `PolytopalMesh` from a
`MeshTopology`, fixes the global face orientation, and checks the mesh
invariants:

- every face belongs to one (boundary) or two (interior) cells, with
  opposite orientations;
- faces and cells have positive measure;
- the outward face normals of each cell weighted by face measure sum to
  zero;
- 3D faces are planar within ``1e-10 * h_c``.

Subpyramids are assumed to be nondegenerate (cells star-shaped with respect
to their barycenter); a warning is logged when a signed subpyramid measure
comes out negative.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
import logging

# Import | Libraries
import numpy as np
from scipy.spatial.distance import pdist

# Import | Local Modules
from ..exceptions import MeshError
from .model_mesh_topology import MeshTopology
from .model_polytopal_mesh import PolytopalMesh


# =============================================================================
# Variables
# =============================================================================

logger = logging.getLogger(__name__)

PLANARITY_TOLERANCE = 1e-10
CLOSURE_TOLERANCE = 1e-10


# =============================================================================
# Functions
# =============================================================================

def _segment_sums(values: np.ndarray, groups: np.ndarray, n: int):
    """
    Sums rows of `values` (1D or 2D) sharing the same group id.
    """
    if values.ndim == 1:
        return np.bincount(groups, weights=values, minlength=n)
    return np.stack(
        [
            np.bincount(groups, weights=values[:, k], minlength=n)
            for k in range(values.shape[1])
        ],
        axis=1,
    )


def _loop_successors(offsets: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    Returns, for every position of a flat loop array, its face id and the
    position of the next vertex around the same loop.
    """
    sizes = np.diff(offsets)
    owner = np.repeat(np.arange(sizes.size), sizes)
    local = np.arange(offsets[-1]) - offsets[owner]
    successor = offsets[owner] + (local + 1) % sizes[owner]
    return owner, successor


def _face_geometry(topology: MeshTopology):
    """
    Computes loop normals, barycenters and measures of all faces.
    """
    vertices = topology.vertices
    offsets = topology.face_vertex_offsets
    ids = topology.face_vertex_ids
    sizes = np.diff(offsets)
    n_faces = topology.n_faces

    if topology.dim == 2:
        if np.any(sizes != 2):
            bad = int(np.flatnonzero(sizes != 2)[0])
            raise MeshError(f"2D face {bad} does not have two vertices")
        a = vertices[ids[0::2]]
        b = vertices[ids[1::2]]
        tangent = b - a
        measures = np.linalg.norm(tangent, axis=1)
        normals = np.column_stack((tangent[:, 1], -tangent[:, 0]))
        barycenters = 0.5 * (a + b)
    else:
        if np.any(sizes < 3):
            bad = int(np.flatnonzero(sizes < 3)[0])
            raise MeshError(f"3D face {bad} has fewer than three vertices")
        owner, successor = _loop_successors(offsets)
        here = vertices[ids]
        there = vertices[ids[successor]]
        newell = 0.5 * _segment_sums(np.cross(here, there), owner, n_faces)
        measures = np.linalg.norm(newell, axis=1)
        normals = newell
        # Fan triangulation around the vertex average.
        anchor = _segment_sums(here, owner, n_faces) / sizes[:, None]
        area_vectors = 0.5 * np.cross(
            here - anchor[owner], there - anchor[owner]
        )
        unit = newell / np.where(measures > 0, measures, 1.0)[:, None]
        areas = np.einsum("ij,ij->i", area_vectors, unit[owner])
        centroids = (anchor[owner] + here + there) / 3.0
        barycenters = _segment_sums(
            areas[:, None] * centroids, owner, n_faces
        ) / np.where(measures > 0, measures, 1.0)[:, None]

    if np.any(measures <= 0):
        bad = int(np.flatnonzero(measures <= 0)[0])
        raise MeshError(f"face {bad} has zero measure")
    normals = normals / measures[:, None]
    return normals, barycenters, measures


def _orient_faces(topology: MeshTopology):
    """
    Checks face-cell incidences and orients every face from its lower to
    its higher cell id.

    Returns the reoriented topology, the per-face flip flags and the
    ``(nf, 2)`` face-to-cell table.
    """
    n_faces = topology.n_faces
    n_cells = topology.n_cells
    face_ids = topology.cell_face_ids
    signs = topology.cell_face_signs
    if face_ids.size and (face_ids.min() < 0 or face_ids.max() >= n_faces):
        raise MeshError("cell references a face id out of range")
    if np.any(np.abs(signs) != 1):
        raise MeshError("incidence signs must be +1 or -1")
    cells = np.repeat(np.arange(n_cells), np.diff(topology.cell_face_offsets))

    counts = np.bincount(face_ids, minlength=n_faces)
    if np.any(counts == 0):
        bad = int(np.flatnonzero(counts == 0)[0])
        raise MeshError(f"face {bad} belongs to no cell")
    if np.any(counts > 2):
        bad = int(np.flatnonzero(counts > 2)[0])
        raise MeshError(f"face {bad} belongs to {counts[bad]} cells")

    order = np.lexsort((cells, face_ids))
    first = order[np.concatenate(([0], np.cumsum(counts)[:-1]))]
    face_cells = np.full((n_faces, 2), -1, dtype=np.int64)
    face_cells[:, 0] = cells[first]
    interior = np.flatnonzero(counts == 2)
    second = order[np.cumsum(counts)[interior] - 1]
    face_cells[interior, 1] = cells[second]

    same_cell = face_cells[interior, 0] == face_cells[interior, 1]
    if np.any(same_cell):
        bad = int(interior[np.flatnonzero(same_cell)[0]])
        raise MeshError(f"face {bad} appears twice in one cell")
    clash = signs[first[interior]] == signs[second]
    if np.any(clash):
        bad = int(interior[np.flatnonzero(clash)[0]])
        raise MeshError(
            f"face {bad} has the same orientation in cells "
            f"{face_cells[bad, 0]} and {face_cells[bad, 1]}"
        )

    flip = signs[first] < 0
    new_signs = np.where(flip[face_ids], -signs, signs)

    offsets = topology.face_vertex_offsets
    owner = np.repeat(np.arange(n_faces), np.diff(offsets))
    local = np.arange(offsets[-1]) - offsets[owner]
    size = np.diff(offsets)[owner]
    permutation = np.where(
        flip[owner], offsets[owner] + size - 1 - local, offsets[owner] + local
    )
    oriented = MeshTopology(
        dim=topology.dim,
        vertices=topology.vertices,
        face_vertex_offsets=offsets,
        face_vertex_ids=topology.face_vertex_ids[permutation],
        cell_face_offsets=topology.cell_face_offsets,
        cell_face_ids=face_ids,
        cell_face_signs=new_signs,
    )
    return oriented, flip, face_cells


def _cell_diameters(topology: MeshTopology) -> np.ndarray:
    diameters = np.empty(topology.n_cells)
    for cell in range(topology.n_cells):
        faces, _ = topology.cell_faces(cell)
        loop_ids = np.unique(
            np.concatenate([topology.face_loop(f) for f in faces])
        )
        diameters[cell] = pdist(topology.vertices[loop_ids]).max()
    return diameters


def compute_geometry(topology: MeshTopology) -> PolytopalMesh:
    """
    Mesh Geometry Function
    ======================

    Builds a `PolytopalMesh` from a topology-only description.

    Cell measures and barycenters come from the signed cones joining a
    reference point (the mean of the cell's face barycenters) to each face;
    subpyramid measures are ``|f| (x_f - x_c) . n_fc / d``.

    Parameters:
        topology (MeshTopology): Vertex coordinates and connectivity.

    Returns:
        PolytopalMesh: The mesh with all geometric fields populated.

    Raises:
        MeshError: If the topology or geometry violates a mesh invariant.
    """

    if topology.n_cells == 0:
        raise MeshError("mesh has no cells")
    if topology.face_vertex_ids.size and (
        topology.face_vertex_ids.min() < 0
        or topology.face_vertex_ids.max() >= topology.n_vertices
    ):
        raise MeshError("face references a vertex id out of range")

    dim = topology.dim
    oriented, flip, face_cells = _orient_faces(topology)
    normals, face_barycenters, face_measures = _face_geometry(topology)
    normals = np.where(flip[:, None], -normals, normals)

    n_cells = oriented.n_cells
    cells = np.repeat(
        np.arange(n_cells), np.diff(oriented.cell_face_offsets)
    )
    faces = oriented.cell_face_ids
    n_fc = oriented.cell_face_signs[:, None] * normals[faces]
    x_f = face_barycenters[faces]
    area = face_measures[faces]

    faces_per_cell = np.diff(oriented.cell_face_offsets)
    if np.any(faces_per_cell == 0):
        bad = int(np.flatnonzero(faces_per_cell == 0)[0])
        raise MeshError(f"cell {bad} has no faces")
    reference = _segment_sums(x_f, cells, n_cells) / faces_per_cell[:, None]
    offset = x_f - reference[cells]
    cones = area * np.einsum("ij,ij->i", offset, n_fc) / dim
    cell_measures = _segment_sums(cones, cells, n_cells)
    if np.any(cell_measures <= 0):
        bad = int(np.flatnonzero(cell_measures <= 0)[0])
        raise MeshError(
            f"cell {bad} has non-positive measure {cell_measures[bad]:.3e}"
        )
    centroids = reference[cells] + dim / (dim + 1.0) * offset
    cell_barycenters = (
        _segment_sums(cones[:, None] * centroids, cells, n_cells)
        / cell_measures[:, None]
    )

    closure = _segment_sums(area[:, None] * n_fc, cells, n_cells)
    perimeter = _segment_sums(area, cells, n_cells)
    residual = np.linalg.norm(closure, axis=1) / perimeter
    if np.any(residual > CLOSURE_TOLERANCE):
        bad = int(np.argmax(residual))
        raise MeshError(
            f"cell {bad} is not closed (relative residual "
            f"{residual[bad]:.3e}); check incidence signs"
        )

    subpyramids = (
        area
        * np.einsum("ij,ij->i", x_f - cell_barycenters[cells], n_fc)
        / dim
    )
    negative = np.count_nonzero(subpyramids < 0)
    if negative:
        logger.warning(
            "%d subpyramids have negative signed measure; cells are not "
            "star-shaped with respect to their barycenter",
            negative,
        )

    diameters = _cell_diameters(oriented)
    if dim == 3:
        _check_planarity(oriented, normals, face_barycenters, face_cells,
                         diameters)

    boundary = np.flatnonzero(face_cells[:, 1] < 0)
    interior = np.flatnonzero(face_cells[:, 1] >= 0)
    logger.debug(
        "geometry: %d cells, %d faces (%d boundary), h=%.4g",
        n_cells, oriented.n_faces, boundary.size, diameters.max(),
    )
    return PolytopalMesh(
        topology=oriented,
        face_normals=normals,
        face_barycenters=face_barycenters,
        face_measures=face_measures,
        cell_barycenters=cell_barycenters,
        cell_measures=cell_measures,
        cell_diameters=diameters,
        subpyramid_measures=subpyramids,
        face_cells=face_cells,
        boundary_faces=boundary,
        interior_faces=interior,
    )


def _check_planarity(
    topology: MeshTopology,
    normals: np.ndarray,
    barycenters: np.ndarray,
    face_cells: np.ndarray,
    diameters: np.ndarray,
) -> None:
    offsets = topology.face_vertex_offsets
    owner = np.repeat(np.arange(topology.n_faces), np.diff(offsets))
    points = topology.vertices[topology.face_vertex_ids]
    distance = np.abs(
        np.einsum("ij,ij->i", points - barycenters[owner], normals[owner])
    )
    worst = np.zeros(topology.n_faces)
    np.maximum.at(worst, owner, distance)
    scale = diameters[face_cells[:, 0]]
    has_second = face_cells[:, 1] >= 0
    scale[has_second] = np.minimum(
        scale[has_second], diameters[face_cells[has_second, 1]]
    )
    bad = np.flatnonzero(worst > PLANARITY_TOLERANCE * scale)
    if bad.size:
        raise MeshError(
            f"face {int(bad[0])} is not planar (distance "
            f"{worst[bad[0]]:.3e} to its plane)"
        )


def mesh_invariant_residuals(mesh: PolytopalMesh) -> dict[str, float]:
    """
    Mesh Invariant Residuals Function
    =================================

    Measures how well `mesh` satisfies its invariants.

    Returns:
        dict: ``subpyramid_partition`` and ``closure`` are the largest
            relative residuals over cells; ``min_face_measure``,
            ``min_cell_measure`` and ``min_subpyramid_measure`` are the
            smallest measures.
    """

    cells = mesh.incidence_cells
    area = mesh.face_measures[mesh.incidence_faces]
    partition = np.bincount(
        cells, weights=mesh.subpyramid_measures, minlength=mesh.n_cells
    )
    closure = _segment_sums(
        area[:, None] * mesh.incidence_normals, cells, mesh.n_cells
    )
    perimeter = np.bincount(cells, weights=area, minlength=mesh.n_cells)
    return {
        "subpyramid_partition": float(
            np.max(np.abs(partition - mesh.cell_measures) / mesh.cell_measures)
        ),
        "closure": float(
            np.max(np.linalg.norm(closure, axis=1) / perimeter)
        ),
        "min_face_measure": float(mesh.face_measures.min()),
        "min_cell_measure": float(mesh.cell_measures.min()),
        "min_subpyramid_measure": float(mesh.subpyramid_measures.min()),
    }


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "compute_geometry",
    "mesh_invariant_residuals",
]
