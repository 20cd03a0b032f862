# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Operators Tests
===============

"""


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
import math

# Import | Libraries
import numpy as np
import pytest
import scipy.sparse as sp
from hypothesis import given, settings
from hypothesis import strategies as st

# Import | Local Modules
from cdofb_ns.exceptions import ValidationError
from cdofb_ns.linalg import infsup_estimate
from cdofb_ns.mesh import build_cartesian, build_voronoi_polygonal_2d
from cdofb_ns.operators import (
    DofMap,
    OperatorConfig,
    assemble_coupling,
    assemble_diffusion,
    assemble_divdiv,
    assemble_global_system,
    assemble_mass_and_source,
    cell_gradients,
    convection_apply,
    convection_form,
    convection_matrix,
    divergence,
    divergence_values,
    grad_reconstruct,
    infsup_inputs,
    measure_stability_constant,
    seminorm_gram,
)
from cdofb_ns.spaces import (
    HybridVelocity,
    apply_dirichlet,
    kinetic_energy,
    project_pressure,
    project_velocity,
)


# =============================================================================
# Variables
# =============================================================================

CONFIGS = [
    OperatorConfig(),
    OperatorConfig(stab_param=1.0),
]

MESHES_2D = {
    "cartesian": build_cartesian(2, 4),
    "voronoi": build_voronoi_polygonal_2d(25, jitter=0.3, rng_seed=11),
}


# =============================================================================
# Helpers
# =============================================================================

def affine(matrix, shift):
    return lambda t, x: x @ np.asarray(matrix).T + np.asarray(shift)


def identity_field(t, x):
    return x.copy()


def local_values(mesh, velocity, cell):
    faces, _ = mesh.cell_faces(cell)
    return velocity.face_values[faces], velocity.cell_values[cell]


def random_velocity(mesh, rng, homogeneous=False):
    velocity = HybridVelocity(
        face_values=rng.standard_normal((mesh.n_faces, mesh.dim)),
        cell_values=rng.standard_normal((mesh.n_cells, mesh.dim)),
    )
    if homogeneous:
        velocity = apply_dirichlet(velocity, mesh, None, 0.0)
    return velocity


def stream_transport(mesh, rng, wall=True):
    """
    Transport field whose face fluxes are differences of a random vertex
    stream function; discretely divergence-free on any 2D mesh, with zero
    boundary flux when the stream function vanishes on the boundary.
    """
    psi = rng.standard_normal(mesh.n_vertices)
    if wall:
        boundary_vertices = np.unique(
            np.concatenate(
                [mesh.topology.face_loop(f) for f in mesh.boundary_faces]
            )
        )
        psi[boundary_vertices] = 0.0
    faces = np.empty((mesh.n_faces, 2))
    for face in range(mesh.n_faces):
        a, b = mesh.topology.face_loop(face)
        flux = psi[b] - psi[a]
        faces[face] = flux / mesh.face_measures[face] * mesh.face_normals[face]
    return HybridVelocity(
        face_values=faces,
        cell_values=rng.standard_normal((mesh.n_cells, 2)),
    )


# =============================================================================
# Tests | Gradient
# =============================================================================

@pytest.mark.parametrize("config", CONFIGS)
def test_gradient_affine_consistency(any_mesh, config, rng):
    d = any_mesh.dim
    for _ in range(10):
        matrix = rng.standard_normal((d, d))
        velocity = project_velocity(
            any_mesh, affine(matrix, rng.standard_normal(d))
        )
        gradients = cell_gradients(any_mesh, velocity.to_vector(), config)
        error = np.abs(gradients - matrix[None, :, :]).max()
        assert error <= 1e-12 * max(1.0, np.abs(matrix).max())


def test_gradient_split_on_affine_cell(voronoi_mesh):
    matrix = np.array([[1.0, -2.0], [0.5, 3.0]])
    velocity = project_velocity(voronoi_mesh, affine(matrix, [0.2, 0.1]))
    for cell in range(voronoi_mesh.n_cells):
        result = grad_reconstruct(
            voronoi_mesh, cell, *local_values(voronoi_mesh, velocity, cell)
        )
        np.testing.assert_allclose(result.consistent, matrix, atol=1e-12)
        np.testing.assert_allclose(result.stabilization, 0.0, atol=1e-12)


def test_gradient_of_constant(square_4x4):
    velocity = HybridVelocity.constant(square_4x4, [2.0, -1.0])
    gradients = cell_gradients(square_4x4, velocity.to_vector())
    np.testing.assert_allclose(gradients, 0.0, atol=1e-13)


@pytest.mark.parametrize("config", CONFIGS)
@pytest.mark.parametrize("name", sorted(MESHES_2D))
def test_consistent_stabilization_orthogonality(name, config, rng):
    mesh = MESHES_2D[name]
    velocity = random_velocity(mesh, rng)
    for cell in range(mesh.n_cells):
        result = grad_reconstruct(
            mesh, cell, *local_values(mesh, velocity, cell), config
        )
        incidences = mesh.cell_incidences(cell)
        pyramids = mesh.subpyramid_measures[incidences]
        inner = np.einsum(
            "f,ij,fij->", pyramids, result.consistent, result.stabilization
        )
        scale = mesh.cell_measures[cell] * (
            np.abs(result.total).max() ** 2
        )
        assert abs(inner) <= 1e-12 * scale


# =============================================================================
# Tests | Diffusion
# =============================================================================

@pytest.mark.parametrize("config", CONFIGS)
def test_diffusion_kernel_and_symmetry(any_mesh, config):
    matrix = assemble_diffusion(any_mesh, config)
    asymmetry = abs(matrix - matrix.T).max()
    assert asymmetry <= 1e-13 * abs(matrix).max()
    constant = HybridVelocity.constant(
        any_mesh, np.arange(1.0, any_mesh.dim + 1.0)
    ).to_vector()
    assert np.abs(matrix @ constant).max() <= 1e-12 * abs(matrix).max()


@pytest.mark.parametrize("config", CONFIGS)
def test_diffusion_of_identity_field(any_mesh, config):
    vector = project_velocity(any_mesh, identity_field).to_vector()
    value = vector @ (assemble_diffusion(any_mesh, config) @ vector)
    assert value == pytest.approx(
        any_mesh.dim * any_mesh.domain_measure, rel=1e-12
    )


@pytest.mark.parametrize("config", CONFIGS)
def test_diffusion_stability_bounds(square_4x4, config, rng):
    delta = measure_stability_constant(square_4x4, config)
    assert 0.0 < delta <= 1.0
    matrix = assemble_diffusion(square_4x4, config)
    gram = seminorm_gram(square_4x4)
    for _ in range(20):
        vector = random_velocity(square_4x4, rng, True).to_vector()
        energy = vector @ (matrix @ vector)
        seminorm = vector @ (gram @ vector)
        assert delta * seminorm <= energy * (1.0 + 1e-12)
        assert energy <= seminorm / delta * (1.0 + 1e-12)


def test_diffusion_positive_on_homogeneous(voronoi_mesh):
    dofs = DofMap(voronoi_mesh)
    matrix = dofs.free_block(assemble_diffusion(voronoi_mesh)).toarray()
    assert np.linalg.eigvalsh(matrix).min() > 0.0


# =============================================================================
# Tests | Divergence and Coupling
# =============================================================================

def test_divergence_of_identity(any_mesh):
    vector = project_velocity(any_mesh, identity_field).to_vector()
    np.testing.assert_allclose(
        divergence_values(any_mesh, vector), any_mesh.dim, rtol=1e-12
    )


def test_divergence_of_constant(voronoi_mesh):
    vector = HybridVelocity.constant(voronoi_mesh, [1.0, 4.0]).to_vector()
    np.testing.assert_allclose(
        divergence_values(voronoi_mesh, vector), 0.0, atol=1e-12
    )


def test_divergence_commutes_with_projection(unit_square):
    velocity = project_velocity(
        unit_square,
        lambda t, x: np.column_stack((x[:, 0] ** 2, x[:, 0] * x[:, 1])),
    )
    value = divergence(unit_square, 0, *local_values(unit_square, velocity, 0))
    assert value == pytest.approx(1.5, abs=1e-10)


@settings(max_examples=20, deadline=None)
@given(coefficients=st.lists(
    st.floats(-2.0, 2.0, allow_nan=False), min_size=12, max_size=12
))
def test_divergence_commutes_for_quadratics(coefficients):
    mesh = MESHES_2D["voronoi"]
    a = np.reshape(coefficients, (2, 6))

    def field(t, x):
        monomials = np.column_stack((
            np.ones(x.shape[0]), x[:, 0], x[:, 1],
            x[:, 0] ** 2, x[:, 0] * x[:, 1], x[:, 1] ** 2,
        ))
        return monomials @ a.T

    def field_divergence(t, x):
        return (
            a[0, 1] + 2.0 * a[0, 3] * x[:, 0] + a[0, 4] * x[:, 1]
            + a[1, 2] + a[1, 4] * x[:, 0] + 2.0 * a[1, 5] * x[:, 1]
        )

    vector = project_velocity(mesh, field).to_vector()
    expected = project_pressure(mesh, field_divergence).cell_values
    np.testing.assert_allclose(
        divergence_values(mesh, vector), expected, atol=1e-10
    )


def test_coupling_annihilates_constants(any_mesh):
    vector = HybridVelocity.constant(
        any_mesh, np.ones(any_mesh.dim)
    ).to_vector()
    assert np.abs(assemble_coupling(any_mesh) @ vector).max() <= 1e-13


def test_divdiv_identity_field_and_rank(any_mesh):
    matrix = assemble_divdiv(any_mesh)
    vector = project_velocity(any_mesh, identity_field).to_vector()
    assert vector @ (matrix @ vector) == pytest.approx(
        any_mesh.dim**2 * any_mesh.domain_measure, rel=1e-12
    )
    assert abs(matrix - matrix.T).max() <= 1e-13 * abs(matrix).max()
    if matrix.shape[0] <= 400:
        rank = np.linalg.matrix_rank(matrix.toarray())
        assert rank <= any_mesh.n_cells


@pytest.mark.parametrize("name", sorted(MESHES_2D))
def test_divdiv_vanishes_on_divergence_free(name, rng):
    mesh = MESHES_2D[name]
    w = stream_transport(mesh, rng)
    np.testing.assert_allclose(
        divergence_values(mesh, w.to_vector()), 0.0, atol=1e-12
    )
    row = assemble_divdiv(mesh) @ w.to_vector()
    assert np.abs(row).max() <= 1e-12


# =============================================================================
# Tests | Convection
# =============================================================================

def test_convection_with_zero_transport(square_4x4, rng):
    u = random_velocity(square_4x4, rng)
    zero = HybridVelocity.zeros(square_4x4)
    np.testing.assert_array_equal(convection_apply(zero, u, square_4x4), 0)
    assert convection_matrix(zero, square_4x4).count_nonzero() == 0


@pytest.mark.parametrize("name", sorted(MESHES_2D))
def test_convection_matrix_matches_apply(name, rng):
    mesh = MESHES_2D[name]
    w = random_velocity(mesh, rng)
    u = random_velocity(mesh, rng)
    np.testing.assert_allclose(
        convection_matrix(w, mesh) @ u.to_vector(),
        convection_apply(w, u, mesh),
        rtol=1e-13, atol=1e-13,
    )


@pytest.mark.parametrize("name", sorted(MESHES_2D))
def test_convection_skew_symmetry(name):
    mesh = MESHES_2D[name]
    rng = np.random.default_rng(5)
    for _ in range(100):
        w = stream_transport(mesh, rng, wall=True)
        u = random_velocity(mesh, rng)
        scale = np.abs(w.face_values).max() * (
            np.abs(u.to_vector()).max() ** 2
        ) * mesh.domain_measure
        assert abs(convection_form(w, u, u, mesh)) <= 1e-12 * scale


@pytest.mark.parametrize("name", sorted(MESHES_2D))
def test_convection_positivity_with_boundary_flux(name):
    mesh = MESHES_2D[name]
    rng = np.random.default_rng(6)
    for _ in range(100):
        w = stream_transport(mesh, rng, wall=False)
        u = random_velocity(mesh, rng)
        scale = np.abs(w.face_values).max() * (
            np.abs(u.to_vector()).max() ** 2
        ) * mesh.domain_measure
        assert convection_form(w, u, u, mesh) >= -1e-12 * scale


# =============================================================================
# Tests | Mass and Source
# =============================================================================

def test_constant_source_on_unit_cell(unit_square):
    mass, rhs = assemble_mass_and_source(
        unit_square,
        lambda t, x: np.tile([1.0, 0.0], (x.shape[0], 1)),
        0.0,
    )
    faces = unit_square.n_faces * 2
    np.testing.assert_allclose(rhs[faces:], [1.0, 0.0])
    np.testing.assert_array_equal(rhs[:faces], 0.0)
    np.testing.assert_allclose(mass[faces:], 1.0)


def test_mass_is_twice_kinetic_energy(voronoi_mesh, rng):
    velocity = random_velocity(voronoi_mesh, rng)
    mass, rhs = assemble_mass_and_source(voronoi_mesh, None, 0.0)
    vector = velocity.to_vector()
    assert vector @ (mass * vector) == pytest.approx(
        2.0 * kinetic_energy(velocity, voronoi_mesh)
    )
    np.testing.assert_array_equal(rhs, 0.0)


# =============================================================================
# Tests | Global System
# =============================================================================

def test_global_system_blocks(square_4x4):
    system = assemble_global_system(square_4x4, nu=0.5, eta=10.0)
    n = system.dofs.n_velocity
    assert system.A_visc.shape == (n, n)
    assert system.coupling.shape == (square_4x4.n_cells, n)
    np.testing.assert_allclose(
        system.A_divdiv.toarray(), 5.0 * system.divdiv.toarray()
    )
    expected = -sp.diags(square_4x4.cell_measures) @ system.divergence
    np.testing.assert_allclose(
        system.coupling.toarray(), expected.toarray()
    )
    plain = assemble_global_system(square_4x4, nu=0.5)
    assert plain.A_divdiv.count_nonzero() == 0


def test_global_system_rejects_bad_viscosity(square_4x4):
    with pytest.raises(ValidationError):
        assemble_global_system(square_4x4, nu=0.0)


def test_dof_map_partition(square_4x4):
    dofs = DofMap(square_4x4)
    both = np.concatenate((dofs.free, dofs.fixed))
    assert np.array_equal(np.sort(both), np.arange(dofs.n_velocity))
    vector = np.arange(dofs.n_velocity, dtype=float)
    np.testing.assert_array_equal(
        dofs.assemble(dofs.restrict(vector), vector[dofs.fixed]), vector
    )


# =============================================================================
# Tests | Inf-Sup
# =============================================================================

def test_infsup_positive_on_2x2(square_2x2):
    inputs = infsup_inputs(square_2x2)
    beta = infsup_estimate(*inputs)
    assert beta > 0.1


def test_infsup_mesh_family():
    betas = [
        infsup_estimate(*infsup_inputs(build_cartesian(2, n)))
        for n in (4, 8, 16)
    ]
    assert min(betas) > 0.0
    assert min(betas) / max(betas) > 0.5


def test_infsup_single_cell(unit_square):
    with pytest.raises(ValidationError):
        infsup_inputs(unit_square)


def test_stability_constant_is_positive_on_voronoi(voronoi_mesh):
    assert measure_stability_constant(voronoi_mesh) > 0.0
    assert math.isfinite(measure_stability_constant(voronoi_mesh))
