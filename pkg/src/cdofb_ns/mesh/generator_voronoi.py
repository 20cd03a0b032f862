# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Voronoi Polygonal Mesh Generator
=========================================

Polygonal 2D meshes made of the Voronoi cells of a jittered lattice of
seeds, clipped to a rectangle by mirroring the seeds across its four sides.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
import logging
import math
from numbers import Integral
from typing import Optional, Sequence

# Import | Libraries
import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from scipy.spatial import Voronoi, cKDTree
from shapely.geometry import LinearRing, Polygon

# Import | Local Modules
from ..exceptions import MeshError, ValidationError
from ..utils import validate_in_range, validate_positive
from .geometry import compute_geometry
from .model_mesh_topology import MeshTopology
from .model_polytopal_mesh import PolytopalMesh


# =============================================================================
# Variables
# =============================================================================

logger = logging.getLogger(__name__)

MAX_SEED_ATTEMPTS = 10
DUPLICATE_TOLERANCE = 1e-10
MERGE_TOLERANCE = 1e-9


# =============================================================================
# Functions
# =============================================================================

def jittered_lattice(
    n_seeds: int,
    box: np.ndarray,
    jitter: float,
    rng: np.random.Generator,
) -> np.ndarray:
    """
    Returns the first `n_seeds` centers of a ``ceil(sqrt(n))`` by
    ``ceil(n / nx)`` lattice, each moved by up to `jitter` lattice spacings
    along each axis.
    """
    nx = math.ceil(math.sqrt(n_seeds))
    ny = math.ceil(n_seeds / nx)
    dx = (box[0, 1] - box[0, 0]) / nx
    dy = (box[1, 1] - box[1, 0]) / ny
    j, i = np.divmod(np.arange(n_seeds), nx)
    seeds = np.column_stack(
        (box[0, 0] + (i + 0.5) * dx, box[1, 0] + (j + 0.5) * dy)
    )
    if jitter > 0:
        seeds += rng.uniform(-jitter, jitter, size=seeds.shape) * (dx, dy)
    return seeds


def _mirror(seeds: np.ndarray, box: np.ndarray) -> np.ndarray:
    left = seeds.copy()
    left[:, 0] = 2 * box[0, 0] - left[:, 0]
    right = seeds.copy()
    right[:, 0] = 2 * box[0, 1] - right[:, 0]
    down = seeds.copy()
    down[:, 1] = 2 * box[1, 0] - down[:, 1]
    up = seeds.copy()
    up[:, 1] = 2 * box[1, 1] - up[:, 1]
    return np.vstack((seeds, left, right, down, up))


def _merge_vertices(points: np.ndarray, tolerance: float) -> np.ndarray:
    """
    Returns a cluster label per point; points closer than `tolerance`
    share a label.
    """
    pairs = cKDTree(points).query_pairs(tolerance, output_type="ndarray")
    n = points.shape[0]
    graph = coo_matrix(
        (np.ones(pairs.shape[0]), (pairs[:, 0], pairs[:, 1])), shape=(n, n)
    )
    _, labels = connected_components(graph, directed=False)
    return labels


def _voronoi_topology(seeds: np.ndarray, box: np.ndarray) -> MeshTopology:
    n_seeds = seeds.shape[0]
    diagram = Voronoi(_mirror(seeds, box))
    scale = float(np.min(box[:, 1] - box[:, 0]) / math.sqrt(n_seeds))

    points = diagram.vertices.copy()
    snap = MERGE_TOLERANCE * scale
    for axis in range(2):
        for bound in box[axis]:
            points[np.abs(points[:, axis] - bound) <= snap, axis] = bound
    labels = _merge_vertices(points, snap)

    loops = []
    for seed in range(n_seeds):
        region = diagram.regions[diagram.point_region[seed]]
        if not region or -1 in region:
            raise MeshError(f"Voronoi cell of seed {seed} is unbounded")
        loop: list[int] = []
        for vertex in labels[region]:
            if not loop or loop[-1] != vertex:
                loop.append(int(vertex))
        while len(loop) > 1 and loop[0] == loop[-1]:
            loop.pop()
        if len(loop) < 3:
            raise MeshError(f"Voronoi cell of seed {seed} is degenerate")
        loops.append(loop)

    used = np.unique(np.concatenate(loops))
    renumber = {int(old): new for new, old in enumerate(used)}
    representative = np.zeros((labels.max() + 1, 2))
    representative[labels] = points
    vertices = representative[used]

    faces: list[tuple[int, int]] = []
    face_index: dict[tuple[int, int], int] = {}
    cells: list[list[tuple[int, int]]] = []
    for seed, loop in enumerate(loops):
        coords = vertices[[renumber[v] for v in loop]]
        if not LinearRing(coords).is_ccw:
            loop = loop[::-1]
            coords = coords[::-1]
        if not Polygon(coords).is_valid:
            raise MeshError(f"Voronoi cell of seed {seed} is not simple")
        cell = []
        for a, b in zip(loop, loop[1:] + loop[:1]):
            a, b = renumber[a], renumber[b]
            key = (min(a, b), max(a, b))
            if key in face_index:
                cell.append((face_index[key], -1))
            else:
                face_index[key] = len(faces)
                faces.append((a, b))
                cell.append((face_index[key], 1))
        cells.append(cell)
    return MeshTopology.from_lists(2, vertices, faces, cells)


def build_voronoi_polygonal_2d(
    n_seeds: int,
    box: Optional[Sequence[Sequence[float]]] = None,
    jitter: float = 0.3,
    rng_seed: int = 0,
) -> PolytopalMesh:
    """
    Voronoi Mesh Generator
    ======================

    Builds a polygonal mesh of a rectangle from the Voronoi diagram of a
    jittered lattice of `n_seeds` points. The output is deterministic for a
    given `rng_seed`.

    Parameters:
        n_seeds (int): Number of cells, at least 4.
        box (Sequence[Sequence[float]], optional): ``((x0, x1), (y0, y1))``,
            defaults to the unit square.
        jitter (float): Seed displacement in lattice spacings, in
            ``[0, 0.5)``. With zero jitter and a square number of seeds the
            Cartesian mesh is recovered.
        rng_seed (int): Seed of the random generator.

    Returns:
        PolytopalMesh: One cell per seed.

    Raises:
        ValidationError: On invalid parameters.
        MeshError: When distinct seeds cannot be drawn in ten attempts.
    """

    if (
        isinstance(n_seeds, bool)
        or not isinstance(n_seeds, Integral)
        or n_seeds < 4
    ):
        raise ValidationError(
            message="n_seeds must be an integer >= 4, got %(n)r.",
            params={"n": n_seeds},
            code="out_of_range",
        )
    validate_in_range(jitter, 0.0, 0.5, name="jitter", closed_low=True)
    extents = np.asarray(
        box if box is not None else ((0.0, 1.0), (0.0, 1.0)), dtype=float
    )
    if extents.shape != (2, 2):
        raise ValidationError(
            message="box must be ((x0, x1), (y0, y1)).", code="invalid_box"
        )
    for axis in range(2):
        validate_positive(
            extents[axis, 1] - extents[axis, 0], name=f"box extent {axis}"
        )

    n_seeds = int(n_seeds)
    rng = np.random.default_rng(rng_seed)
    seeds = jittered_lattice(n_seeds, extents, jitter, rng)
    spacing = float(np.min(extents[:, 1] - extents[:, 0])) / math.sqrt(
        n_seeds
    )
    for attempt in range(MAX_SEED_ATTEMPTS):
        if not cKDTree(seeds).query_pairs(DUPLICATE_TOLERANCE * spacing):
            break
        logger.info("duplicate Voronoi seeds, perturbing (attempt %d)",
                    attempt + 1)
        seeds = seeds + rng.uniform(-1e-6, 1e-6, size=seeds.shape) * spacing
        seeds = np.clip(seeds, extents[:, 0], extents[:, 1])
    else:
        raise MeshError(
            f"could not draw {n_seeds} distinct seeds in "
            f"{MAX_SEED_ATTEMPTS} attempts"
        )

    mesh = compute_geometry(_voronoi_topology(seeds, extents))
    logger.info(
        "Voronoi mesh: %d cells, %d faces, h=%.4g",
        mesh.n_cells, mesh.n_faces, mesh.h,
    )
    return mesh


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "build_voronoi_polygonal_2d",
    "jittered_lattice",
]
