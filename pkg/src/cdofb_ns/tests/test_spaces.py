# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Spaces Tests
============

"""


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
import math

# Import | Libraries
import numpy as np
import pandas as pd
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

# Import | Local Modules
from cdofb_ns.bench import TGV2D_BOX
from cdofb_ns.exceptions import ValidationError
from cdofb_ns.mesh import build_cartesian
from cdofb_ns.spaces import (
    SNAPSHOT_COLUMNS,
    HybridVelocity,
    PressureField,
    apply_dirichlet,
    h1_seminorm,
    kinetic_energy,
    project_pressure,
    project_velocity,
    simplex_rule,
    write_pressure_csv,
    write_velocity_csv,
    zero_mean_adjust,
)


# =============================================================================
# Helpers
# =============================================================================

def tgv_velocity(t, x):
    return np.column_stack(
        (
            np.sin(x[:, 0]) * np.cos(x[:, 1]),
            -np.cos(x[:, 0]) * np.sin(x[:, 1]),
        )
    )


def tgv_pressure(t, x):
    return 0.25 * (np.cos(2.0 * x[:, 0]) + np.cos(2.0 * x[:, 1]))


def random_homogeneous(mesh, rng):
    velocity = HybridVelocity(
        face_values=rng.standard_normal((mesh.n_faces, mesh.dim)),
        cell_values=rng.standard_normal((mesh.n_cells, mesh.dim)),
    )
    return apply_dirichlet(velocity, mesh, None, 0.0)


# =============================================================================
# Tests | Quadrature
# =============================================================================

@pytest.mark.parametrize("dim", [1, 2, 3])
def test_simplex_rule_weights(dim):
    rule = simplex_rule(dim, 6)
    assert np.all(rule.weights > 0.0)
    assert rule.weights.sum() == pytest.approx(1.0 / math.factorial(dim))


@pytest.mark.parametrize("a,b", [(0, 0), (1, 0), (2, 3), (4, 2), (0, 6)])
def test_triangle_rule_monomials(a, b):
    rule = simplex_rule(2, 6)
    value = rule.weights @ (rule.points[:, 0] ** a * rule.points[:, 1] ** b)
    exact = math.factorial(a) * math.factorial(b) / math.factorial(a + b + 2)
    assert value == pytest.approx(exact, rel=1e-13)


def test_simplex_rule_rejects_dimension():
    with pytest.raises(ValidationError):
        simplex_rule(4)


# =============================================================================
# Tests | Projection
# =============================================================================

def test_constant_velocity_projection(voronoi_mesh):
    velocity = project_velocity(
        voronoi_mesh,
        lambda t, x: np.tile([1.0, 2.0], (x.shape[0], 1)),
    )
    np.testing.assert_allclose(
        velocity.face_values, np.tile([1.0, 2.0], (voronoi_mesh.n_faces, 1))
    )
    np.testing.assert_allclose(
        velocity.cell_values, np.tile([1.0, 2.0], (voronoi_mesh.n_cells, 1))
    )


def test_linear_field_cell_mean(unit_square):
    velocity = project_velocity(unit_square, lambda t, x: x.copy())
    np.testing.assert_allclose(velocity.cell_values[0], [0.5, 0.5])
    pressure = project_pressure(unit_square, lambda t, x: x[:, 0])
    assert pressure.cell_values[0] == pytest.approx(0.5)


def test_constant_pressure_projection(square_4x4):
    pressure = project_pressure(
        square_4x4, lambda t, x: np.full(x.shape[0], 3.0)
    )
    np.testing.assert_allclose(pressure.cell_values, 3.0)


def test_tgv_projection_energy_and_mean():
    mesh = build_cartesian(2, 64, box=TGV2D_BOX)
    velocity = project_velocity(mesh, tgv_velocity)
    assert kinetic_energy(velocity, mesh) == pytest.approx(
        math.pi**2, rel=1e-2
    )
    pressure = project_pressure(mesh, tgv_pressure)
    assert abs(pressure.mean(mesh)) <= 1e-9


# =============================================================================
# Tests | Dirichlet
# =============================================================================

def test_zero_dirichlet_is_homogeneous(square_4x4, rng):
    velocity = random_homogeneous(square_4x4, rng)
    assert velocity.is_homogeneous(square_4x4)


def test_dirichlet_matches_projection(tgv_mesh_16):
    mesh = tgv_mesh_16
    base = HybridVelocity.zeros(mesh)
    imposed = apply_dirichlet(base, mesh, tgv_velocity, 0.0)
    projected = project_velocity(mesh, tgv_velocity, 0.0)
    faces = mesh.boundary_faces
    np.testing.assert_allclose(
        imposed.face_values[faces], projected.face_values[faces],
        atol=1e-14,
    )
    np.testing.assert_array_equal(
        imposed.face_values[mesh.interior_faces], 0.0
    )
    np.testing.assert_array_equal(imposed.cell_values, 0.0)


# =============================================================================
# Tests | Pressure
# =============================================================================

def test_zero_mean_of_constant(square_4x4):
    pressure = PressureField(np.full(square_4x4.n_cells, 5.0))
    np.testing.assert_allclose(
        zero_mean_adjust(pressure, square_4x4).cell_values, 0.0, atol=1e-15
    )


def test_zero_mean_single_cell(unit_square):
    pressure = zero_mean_adjust(PressureField(np.array([7.0])), unit_square)
    assert pressure.cell_values[0] == 0.0


@settings(max_examples=25, deadline=None)
@given(values=st.lists(
    st.floats(-1e3, 1e3, allow_nan=False), min_size=36, max_size=36
))
def test_zero_mean_is_idempotent(values):
    mesh = build_cartesian(2, 6)
    once = zero_mean_adjust(PressureField(np.array(values)), mesh)
    twice = zero_mean_adjust(once, mesh)
    scale = max(1.0, np.abs(values).max())
    np.testing.assert_allclose(
        twice.cell_values, once.cell_values, atol=1e-12 * scale
    )
    assert abs(mesh.cell_measures @ once.cell_values) <= 1e-12 * scale


def test_pressure_rejects_nan():
    with pytest.raises(ValidationError):
        PressureField(np.array([0.0, np.nan]))


# =============================================================================
# Tests | Norms
# =============================================================================

def test_kinetic_energy_of_constant(square_4x4):
    velocity = HybridVelocity.constant(square_4x4, [1.0, 0.0])
    assert kinetic_energy(velocity, square_4x4) == pytest.approx(0.5)
    assert kinetic_energy(HybridVelocity.zeros(square_4x4), square_4x4) == 0


def test_h1_seminorm_single_face(unit_square):
    velocity = HybridVelocity.zeros(unit_square)
    face = unit_square.boundary_faces[0]
    velocity = velocity.with_faces(np.array([face]), np.array([[1.0, 0.0]]))
    assert h1_seminorm(velocity, unit_square) == pytest.approx(2.0**-0.25)


def test_h1_seminorm_of_constant(voronoi_mesh):
    velocity = HybridVelocity.constant(voronoi_mesh, [0.3, -2.0])
    assert h1_seminorm(velocity, voronoi_mesh) == 0.0


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 2**31), scale=st.floats(-10.0, 10.0))
def test_h1_seminorm_homogeneity_and_definiteness(seed, scale):
    mesh = build_cartesian(2, 3)
    velocity = random_homogeneous(mesh, np.random.default_rng(seed))
    norm = h1_seminorm(velocity, mesh)
    assert norm > 0.0
    assert h1_seminorm(scale * velocity, mesh) == pytest.approx(
        abs(scale) * norm, rel=1e-12
    )


def test_velocity_vector_layout(square_2x2, rng):
    velocity = random_homogeneous(square_2x2, rng)
    vector = velocity.to_vector()
    back = HybridVelocity.from_vector(square_2x2, vector)
    np.testing.assert_array_equal(back.face_values, velocity.face_values)
    np.testing.assert_array_equal(back.cell_values, velocity.cell_values)
    with pytest.raises(ValidationError):
        HybridVelocity.from_vector(square_2x2, vector[:-1])


# =============================================================================
# Tests | Snapshots
# =============================================================================

def test_snapshot_files(tmp_path, square_2x2, rng):
    velocity = random_homogeneous(square_2x2, rng)
    pressure = PressureField(rng.standard_normal(square_2x2.n_cells))
    write_velocity_csv(velocity, tmp_path / "u.csv")
    write_pressure_csv(pressure, tmp_path / "p.csv")
    u_table = pd.read_csv(tmp_path / "u.csv")
    p_table = pd.read_csv(tmp_path / "p.csv")
    assert list(u_table.columns) == SNAPSHOT_COLUMNS
    assert len(u_table) == (square_2x2.n_faces + square_2x2.n_cells) * 2
    cells = u_table[u_table["entity"] == "cell"]
    np.testing.assert_allclose(
        cells["value"].to_numpy(), velocity.cell_values.ravel()
    )
    np.testing.assert_allclose(
        p_table["value"].to_numpy(), pressure.cell_values
    )
