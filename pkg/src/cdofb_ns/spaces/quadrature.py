# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Simplex Quadrature Functions
=====================================

Collapsed Gauss-Jacobi rules on the reference simplex, and quadratures of
whole meshes built by splitting every cell into simplices anchored at the
cell barycenter (2D: one triangle per face; 3D: one tetrahedron per face
edge, through the face barycenter) and every face into simplices anchored
at the face barycenter.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
import math
from dataclasses import dataclass
from functools import lru_cache

# Import | Libraries
import numpy as np
from scipy.special import roots_jacobi

# Import | Local Modules
from ..exceptions import ValidationError
from ..mesh import PolytopalMesh


# =============================================================================
# Variables
# =============================================================================

DEFAULT_DEGREE = 6


# =============================================================================
# Classes
# =============================================================================

@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """
    Quadrature Rule Class
    =====================

    Rule on the reference simplex ``{y >= 0, sum(y) <= 1}``.

    Attributes:
        dim (int): Simplex dimension.
        degree (int): Polynomial degree integrated exactly.
        points (np.ndarray): Reference points, shape ``(n, dim)``.
        weights (np.ndarray): Positive weights summing to ``1 / dim!``.
    """

    dim: int
    degree: int
    points: np.ndarray
    weights: np.ndarray

    @property
    def size(self) -> int:
        return int(self.weights.size)


@dataclass(frozen=True, eq=False)
class EntityQuadrature:
    """
    Entity Quadrature Class
    =======================

    Quadrature points of a family of mesh entities (cells or faces).

    Attributes:
        points (np.ndarray): Physical points, shape ``(n, d)``.
        weights (np.ndarray): Signed weights, summing per entity to the
            entity measure.
        owners (np.ndarray): Entity id of every point.
        n_entities (int): Number of entities.
    """

    points: np.ndarray
    weights: np.ndarray
    owners: np.ndarray
    n_entities: int

    def integrate(self, values: np.ndarray) -> np.ndarray:
        """
        Integrates point values entity by entity.

        Parameters:
            values (np.ndarray): Shape ``(n,)`` or ``(n, k)``.

        Returns:
            np.ndarray: Shape ``(n_entities,)`` or ``(n_entities, k)``.
        """
        weighted = values * (
            self.weights if values.ndim == 1 else self.weights[:, None]
        )
        if values.ndim == 1:
            return np.bincount(
                self.owners, weights=weighted, minlength=self.n_entities
            )
        return np.stack(
            [
                np.bincount(
                    self.owners,
                    weights=weighted[:, k],
                    minlength=self.n_entities,
                )
                for k in range(values.shape[1])
            ],
            axis=1,
        )


# =============================================================================
# Functions
# =============================================================================

@lru_cache(maxsize=None)
def simplex_rule(dim: int, degree: int = DEFAULT_DEGREE) -> QuadratureRule:
    """
    Simplex Rule Function
    =====================

    Builds a collapsed (Duffy) rule exact up to `degree` on the reference
    `dim`-simplex, using ``degree // 2 + 1`` Gauss-Jacobi points per
    direction.

    Integration over the k-simplex is reduced to the (k-1)-simplex with
    ``y_1 = u`` and ``y' = (1 - u) z``; the Jacobian ``(1 - u)^(k-1)`` is
    absorbed in the Jacobi weight.

    Raises:
        ValidationError: If `dim` is not 1, 2 or 3 or `degree` is negative.
    """

    if dim not in (1, 2, 3) or degree < 0:
        raise ValidationError(
            message="no simplex rule for dim=%(dim)s, degree=%(degree)s.",
            params={"dim": dim, "degree": degree},
            code="invalid",
        )
    n = degree // 2 + 1
    points = np.zeros((1, 0))
    weights = np.ones(1)
    for k in range(1, dim + 1):
        x, w = roots_jacobi(n, k - 1, 0)
        u = 0.5 * (1.0 + x)
        w = w / 2.0**k
        points = np.vstack(
            [
                np.column_stack(
                    (np.full(points.shape[0], ui), (1.0 - ui) * points)
                )
                for ui in u
            ]
        )
        weights = np.concatenate([wi * weights for wi in w])
    return QuadratureRule(
        dim=dim, degree=degree, points=points, weights=weights
    )


def map_rule(
    rule: QuadratureRule, simplices: np.ndarray, volumes: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """
    Maps `rule` onto physical simplices.

    Parameters:
        rule (QuadratureRule): Reference rule of dimension k.
        simplices (np.ndarray): Vertex coordinates, shape ``(m, k + 1, d)``.
        volumes (np.ndarray): Signed simplex volumes, shape ``(m,)``.

    Returns:
        tuple: Points of shape ``(m * n, d)`` and weights ``(m * n,)``,
            grouped simplex by simplex.
    """
    origin = simplices[:, 0, :]
    edges = simplices[:, 1:, :] - origin[:, None, :]
    points = origin[:, None, :] + np.einsum("qk,mkd->mqd", rule.points, edges)
    weights = (
        volumes[:, None] * rule.weights[None, :] * math.factorial(rule.dim)
    )
    return points.reshape(-1, simplices.shape[2]), weights.ravel()


def _face_edges(mesh: PolytopalMesh):
    """
    Returns, per face edge, the owning face and the two vertex ids.
    """
    offsets = mesh.topology.face_vertex_offsets
    ids = mesh.topology.face_vertex_ids
    sizes = np.diff(offsets)
    owner = np.repeat(np.arange(mesh.n_faces), sizes)
    local = np.arange(offsets[-1]) - offsets[owner]
    successor = offsets[owner] + (local + 1) % sizes[owner]
    return owner, ids, ids[successor]


def _fan_triangle_areas(mesh, owner, here, there) -> np.ndarray:
    x_f = mesh.face_barycenters[owner]
    cross = np.cross(
        mesh.vertices[here] - x_f, mesh.vertices[there] - x_f
    )
    return 0.5 * np.einsum("ij,ij->i", cross, mesh.face_normals[owner])


@lru_cache(maxsize=32)
def cell_quadrature(
    mesh: PolytopalMesh, degree: int = DEFAULT_DEGREE
) -> EntityQuadrature:
    """
    Cell Quadrature Function
    ========================

    Quadrature of every cell of `mesh`, exact up to `degree` on each
    simplex of the barycentric subdivision.

    Note:
        Cached per mesh and degree.
    """

    rule = simplex_rule(mesh.dim, degree)
    x_c = mesh.cell_barycenters
    if mesh.dim == 2:
        faces = mesh.incidence_faces
        loops = mesh.topology.face_vertex_ids.reshape(-1, 2)[faces]
        simplices = np.stack(
            (
                x_c[mesh.incidence_cells],
                mesh.vertices[loops[:, 0]],
                mesh.vertices[loops[:, 1]],
            ),
            axis=1,
        )
        volumes = mesh.subpyramid_measures
        owners = mesh.incidence_cells
    else:
        owner, here, there = _face_edges(mesh)
        areas = _fan_triangle_areas(mesh, owner, here, there)
        edge_offsets = mesh.topology.face_vertex_offsets
        faces = mesh.incidence_faces
        counts = np.diff(edge_offsets)[faces]
        incidence = np.repeat(np.arange(mesh.n_incidences), counts)
        start = np.repeat(edge_offsets[faces], counts)
        edge = start + (
            np.arange(counts.sum()) - np.repeat(np.cumsum(counts) - counts,
                                                counts)
        )
        cells = mesh.incidence_cells[incidence]
        face = faces[incidence]
        height = np.einsum(
            "ij,ij->i",
            mesh.face_barycenters[face] - x_c[cells],
            mesh.incidence_normals[incidence],
        )
        simplices = np.stack(
            (
                x_c[cells],
                mesh.face_barycenters[face],
                mesh.vertices[here[edge]],
                mesh.vertices[there[edge]],
            ),
            axis=1,
        )
        volumes = areas[edge] * height / 3.0
        owners = cells
    points, weights = map_rule(rule, simplices, volumes)
    return EntityQuadrature(
        points=points,
        weights=weights,
        owners=np.repeat(owners, rule.size),
        n_entities=mesh.n_cells,
    )


@lru_cache(maxsize=32)
def face_quadrature(
    mesh: PolytopalMesh, degree: int = DEFAULT_DEGREE
) -> EntityQuadrature:
    """
    Quadrature of every face of `mesh` (segments in 2D, fan triangles
    around the face barycenter in 3D). Cached per mesh and degree.
    """
    rule = simplex_rule(mesh.dim - 1, degree)
    if mesh.dim == 2:
        loops = mesh.topology.face_vertex_ids.reshape(-1, 2)
        simplices = np.stack(
            (mesh.vertices[loops[:, 0]], mesh.vertices[loops[:, 1]]), axis=1
        )
        volumes = mesh.face_measures
        owners = np.arange(mesh.n_faces)
    else:
        owner, here, there = _face_edges(mesh)
        simplices = np.stack(
            (
                mesh.face_barycenters[owner],
                mesh.vertices[here],
                mesh.vertices[there],
            ),
            axis=1,
        )
        volumes = _fan_triangle_areas(mesh, owner, here, there)
        owners = owner
    points, weights = map_rule(rule, simplices, volumes)
    return EntityQuadrature(
        points=points,
        weights=weights,
        owners=np.repeat(owners, rule.size),
        n_entities=mesh.n_faces,
    )


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "DEFAULT_DEGREE",
    "EntityQuadrature",
    "QuadratureRule",
    "cell_quadrature",
    "face_quadrature",
    "map_rule",
    "simplex_rule",
]
