# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Mesh File Functions
============================

Reads and writes meshes in the JSON layout::

    {
        "dim": 2,
        "vertices": [[x, y], ...],
        "faces": [[v0, v1], ...],
        "cells": [[+1, -7, ...], ...]
    }

Vertex ids are 0-based. Cells list 1-based face ids whose sign gives the
orientation of the face loop with respect to the cell (positive when the
loop normal points out of the cell). Geometry is never stored; it is
recomputed on read.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
import json
import os
from typing import Any, Union

# Import | Libraries
import numpy as np

# Import | Local Modules
from ..exceptions import MeshParseError
from .geometry import compute_geometry
from .model_mesh_topology import MeshTopology
from .model_polytopal_mesh import PolytopalMesh


# =============================================================================
# Functions
# =============================================================================

def _require_list(value: Any, location: str) -> list:
    if not isinstance(value, list):
        raise MeshParseError("expected a list", location)
    return value


def mesh_to_dict(mesh: PolytopalMesh) -> dict:
    """
    Returns the JSON-ready dictionary of `mesh`.
    """
    topology = mesh.topology
    faces = [
        [int(v) for v in topology.face_loop(f)] for f in range(mesh.n_faces)
    ]
    cells = []
    for cell in range(mesh.n_cells):
        ids, signs = topology.cell_faces(cell)
        cells.append([int(s) * (int(f) + 1) for f, s in zip(ids, signs)])
    return {
        "dim": mesh.dim,
        "vertices": topology.vertices.tolist(),
        "faces": faces,
        "cells": cells,
    }


def mesh_from_dict(data: Any) -> PolytopalMesh:
    """
    Mesh Decoder
    ============

    Validates and decodes a mesh dictionary.

    Raises:
        MeshParseError: On a malformed document or a dangling index; the
            error location names the offending entry.
        MeshError: If the decoded mesh violates a mesh invariant.
    """

    if not isinstance(data, dict):
        raise MeshParseError("expected a JSON object", "$")
    for key in ("dim", "vertices", "faces", "cells"):
        if key not in data:
            raise MeshParseError(f"missing key '{key}'", "$")
    dim = data["dim"]
    if dim not in (2, 3) or isinstance(dim, bool):
        raise MeshParseError(f"dim must be 2 or 3, got {dim!r}", "$.dim")

    vertices = _require_list(data["vertices"], "$.vertices")
    for index, point in enumerate(vertices):
        if (
            not isinstance(point, list)
            or len(point) != dim
            or not all(
                isinstance(x, (int, float)) and not isinstance(x, bool)
                for x in point
            )
        ):
            raise MeshParseError(
                f"expected {dim} coordinates", f"$.vertices[{index}]"
            )

    faces = _require_list(data["faces"], "$.faces")
    n_vertices = len(vertices)
    for index, loop in enumerate(faces):
        location = f"$.faces[{index}]"
        if not isinstance(loop, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in loop
        ):
            raise MeshParseError("expected a list of vertex ids", location)

    cells = _require_list(data["cells"], "$.cells")
    if not cells:
        raise MeshParseError("mesh has no cells", "$.cells")
    n_faces = len(faces)
    incidences = []
    for index, cell in enumerate(cells):
        location = f"$.cells[{index}] (cell {index})"
        if not isinstance(cell, list) or not cell:
            raise MeshParseError("expected a nonempty list", location)
        entry = []
        for signed in cell:
            if isinstance(signed, bool) or not isinstance(signed, int):
                raise MeshParseError("expected signed face ids", location)
            face = abs(signed) - 1
            if signed == 0 or face >= n_faces:
                raise MeshParseError(
                    f"face id {signed} out of range (mesh has {n_faces} "
                    f"faces)",
                    location,
                )
            for v in faces[face]:
                if v < 0 or v >= n_vertices:
                    raise MeshParseError(
                        f"face {signed} references vertex index {v} out "
                        f"of range (mesh has {n_vertices} vertices)",
                        location,
                    )
            entry.append((face, 1 if signed > 0 else -1))
        incidences.append(entry)
    for index, loop in enumerate(faces):
        if any(v < 0 or v >= n_vertices for v in loop):
            raise MeshParseError(
                "vertex index out of range", f"$.faces[{index}]"
            )

    topology = MeshTopology.from_lists(
        dim, np.asarray(vertices, dtype=float), faces, incidences
    )
    return compute_geometry(topology)


def write_mesh(mesh: PolytopalMesh, path: Union[str, os.PathLike]) -> None:
    """
    Writes `mesh` to `path`. Coordinates are written with up to 17
    significant digits (shortest round-trip form), so a read-back
    reproduces them bit for bit.
    """
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(mesh_to_dict(mesh), handle)


def read_mesh(path: Union[str, os.PathLike]) -> PolytopalMesh:
    """
    Mesh Reader
    ===========

    Reads a mesh file and recomputes its geometry.

    Parameters:
        path (str | os.PathLike): JSON mesh file.

    Returns:
        PolytopalMesh: The mesh.

    Raises:
        MeshParseError: If the file is missing, not JSON or malformed.
        MeshError: If the mesh violates an invariant.
    """

    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as error:
        raise MeshParseError(str(error), str(path)) from error
    except json.JSONDecodeError as error:
        raise MeshParseError(
            error.msg, f"{path}:{error.lineno}:{error.colno}"
        ) from error
    try:
        return mesh_from_dict(data)
    except MeshParseError as error:
        raise MeshParseError(str(error), str(path)) from error


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "mesh_from_dict",
    "mesh_to_dict",
    "read_mesh",
    "write_mesh",
]
