# -*- coding: utf-8 -*-

"""
CDO-Fb Spaces Module
====================

Discrete velocity and pressure spaces: fields, projections, boundary data,
quadrature, norms and snapshots.

"""

# =============================================================================
# Imports
# =============================================================================

from .field_hybrid_velocity import HybridVelocity
from .field_io import (
    SNAPSHOT_COLUMNS,
    velocity_table,
    write_pressure_csv,
    write_velocity_csv,
)
from .field_pressure import PressureField
from .norms import (
    cell_velocity_norm,
    h1_seminorm,
    kinetic_energy,
    pressure_norm,
)
from .projection import (
    ScalarField,
    VectorField,
    apply_dirichlet,
    boundary_face_values,
    cell_means,
    face_means,
    project_pressure,
    project_velocity,
    zero_mean_adjust,
)
from .quadrature import (
    DEFAULT_DEGREE,
    EntityQuadrature,
    QuadratureRule,
    cell_quadrature,
    face_quadrature,
    simplex_rule,
)


# =============================================================================
# Public Interface
# =============================================================================

__all__ = [
    "SNAPSHOT_COLUMNS",
    "DEFAULT_DEGREE",
    "EntityQuadrature",
    "HybridVelocity",
    "PressureField",
    "QuadratureRule",
    "ScalarField",
    "VectorField",
    "apply_dirichlet",
    "boundary_face_values",
    "cell_means",
    "cell_quadrature",
    "cell_velocity_norm",
    "face_means",
    "face_quadrature",
    "h1_seminorm",
    "kinetic_energy",
    "pressure_norm",
    "project_pressure",
    "project_velocity",
    "simplex_rule",
    "velocity_table",
    "write_pressure_csv",
    "write_velocity_csv",
    "zero_mean_adjust",
]
