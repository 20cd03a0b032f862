# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Linear Algebra Tests
====================

"""


# =============================================================================
# Imports
# =============================================================================

# Import | Libraries
import numpy as np
import pytest
import scipy.sparse as sp
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.linalg import hilbert

# Import | Local Modules
from cdofb_ns.exceptions import (
    LinearSolverError,
    SingularMatrixError,
    ValidationError,
)
from cdofb_ns.linalg import (
    DirectFactorization,
    SolverConfig,
    as_csr,
    cg_jacobi,
    dense_solve,
    direct_saddle,
    direct_solve,
    dump_matrix,
    gkb_saddle,
    gmres,
    infsup_estimate,
    is_canonical,
    is_symmetric,
    load_matrix,
)
from cdofb_ns.operators import assemble_global_system, infsup_inputs


# =============================================================================
# Variables
# =============================================================================

TIGHT = SolverConfig(tolerance=1e-12, inner_tolerance=1e-13)


# =============================================================================
# Helpers
# =============================================================================

def random_spd(rng, n):
    factor = rng.standard_normal((n, n))
    return factor @ factor.T + n * np.eye(n)


def stokes_blocks(mesh):
    system = assemble_global_system(mesh, nu=1.0)
    dofs = system.dofs
    A = dofs.free_block(system.A_visc + system.M)
    return A, system.coupling_free, mesh.cell_measures


# =============================================================================
# Tests | Configuration
# =============================================================================

def test_solver_config_defaults():
    assert SolverConfig.for_order(1).tolerance == 1e-4
    assert SolverConfig.for_order(2).tolerance == 1e-5
    assert SolverConfig(tolerance=1e-6).inner().tolerance == pytest.approx(
        1e-7
    )
    overridden = SolverConfig.for_order(2, tolerance=1e-8, restart=10)
    assert overridden.tolerance == 1e-8
    assert overridden.restart == 10


@pytest.mark.parametrize(
    "kwargs",
    [{"tolerance": 0.0}, {"tolerance": 1.5}, {"max_iterations": 0},
     {"restart": -1}, {"inner_tolerance": 2.0}],
)
def test_solver_config_rejects(kwargs):
    with pytest.raises(ValidationError):
        SolverConfig(**kwargs)


def test_solver_report_drops_histories():
    _, report = cg_jacobi(np.eye(3), np.ones(3))
    data = report.to_dict()
    assert data["method"] == "cg_jacobi"
    assert "residual_history" not in data
    assert "energy_history" not in data


# =============================================================================
# Tests | CSR
# =============================================================================

def test_as_csr_canonicalizes():
    coo = sp.coo_matrix(
        ([1.0, 2.0, 3.0], ([0, 0, 1], [1, 1, 0])), shape=(2, 2)
    )
    csr = as_csr(coo, square=True)
    assert is_canonical(csr)
    assert csr[0, 1] == 3.0


def test_as_csr_rejects():
    with pytest.raises(ValidationError):
        as_csr(np.ones((2, 3)), square=True)
    with pytest.raises(ValidationError):
        as_csr(np.array([[np.nan]]))


def test_is_symmetric():
    assert is_symmetric(sp.csr_matrix([[2.0, 1.0], [1.0, 2.0]]))
    assert not is_symmetric(sp.csr_matrix([[2.0, 1.0], [0.0, 2.0]]))


# =============================================================================
# Tests | Conjugate Gradient
# =============================================================================

def test_cg_small_system():
    x, report = cg_jacobi([[2.0, 1.0], [1.0, 2.0]], np.array([3.0, 3.0]),
                          TIGHT)
    np.testing.assert_allclose(x, [1.0, 1.0], rtol=1e-10)
    assert report.converged


def test_cg_identity_single_iteration(rng):
    b = rng.standard_normal(10)
    x, report = cg_jacobi(sp.identity(10), b)
    np.testing.assert_allclose(x, b)
    assert report.iterations == 1


def test_cg_zero_rhs():
    x, report = cg_jacobi(np.eye(4), np.zeros(4))
    np.testing.assert_array_equal(x, 0.0)
    assert report.iterations == 0
    assert report.converged


def test_cg_rejects_non_positive_diagonal():
    with pytest.raises(LinearSolverError):
        cg_jacobi([[0.0, 1.0], [1.0, 1.0]], np.ones(2))


def test_cg_rejects_shape_mismatch():
    with pytest.raises(ValidationError):
        cg_jacobi(np.eye(3), np.ones(2))


@settings(max_examples=25, deadline=None)
@given(n=st.integers(2, 30), seed=st.integers(0, 2**16))
def test_cg_matches_dense(n, seed):
    rng = np.random.default_rng(seed)
    A = random_spd(rng, n)
    b = rng.standard_normal(n)
    x, report = cg_jacobi(A, b, TIGHT)
    assert report.converged
    np.testing.assert_allclose(x, dense_solve(A, b), rtol=1e-8, atol=1e-10)


def test_cg_energy_decreases(rng):
    A = random_spd(rng, 40)
    _, report = cg_jacobi(A, rng.standard_normal(40), TIGHT)
    energies = np.asarray(report.energy_history)
    assert np.all(np.diff(energies) <= 1e-12 * np.abs(energies).max())


# =============================================================================
# Tests | GMRES
# =============================================================================

def test_gmres_rotation():
    x, report = gmres([[0.0, -2.0], [2.0, 0.0]], np.array([2.0, 2.0]),
                      TIGHT)
    np.testing.assert_allclose(x, [1.0, -1.0], rtol=1e-10)
    assert report.converged


@pytest.mark.parametrize("restart", [3, 50])
def test_gmres_nonsymmetric(rng, restart):
    n = 30
    A = random_spd(rng, n) + rng.standard_normal((n, n))
    b = rng.standard_normal(n)
    config = SolverConfig(tolerance=1e-11, restart=restart)
    x, report = gmres(A, b, config)
    assert report.converged
    np.testing.assert_allclose(A @ x, b, atol=1e-9 * np.linalg.norm(b))


def test_gmres_zero_rhs():
    x, report = gmres(np.eye(3), np.zeros(3))
    np.testing.assert_array_equal(x, 0.0)
    assert report.iterations == 0


# =============================================================================
# Tests | Golub-Kahan
# =============================================================================

def test_gkb_two_unknowns():
    u, p, report = gkb_saddle(
        np.eye(2), [[1.0, -1.0]], np.array([1.0, 0.0]), np.zeros(1), TIGHT
    )
    np.testing.assert_allclose(u, [0.5, 0.5], atol=1e-12)
    np.testing.assert_allclose(p, [0.5], atol=1e-12)
    assert report.converged
    assert report.criterion == "relative_energy_error_estimate"


def test_gkb_matches_direct_on_stokes(square_4x4, rng):
    A, B, weights = stokes_blocks(square_4x4)
    f = rng.standard_normal(A.shape[0])
    g = np.zeros(B.shape[0])
    u, p, report = gkb_saddle(A, B, f, g, TIGHT, pressure_weights=weights)
    u_ref, p_ref, _ = direct_saddle(A, B, f, g, pressure_weights=weights)
    assert report.converged
    assert report.inner_iterations > 0
    np.testing.assert_allclose(u, u_ref, atol=1e-8 * np.abs(u_ref).max())
    np.testing.assert_allclose(p, p_ref, atol=1e-7 * np.abs(p_ref).max())
    assert abs(weights @ p) <= 1e-10 * np.abs(p).max()


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_gkb_tight_tolerance_stays_on_stokes_solution(square_4x4, seed):
    A, B, weights = stokes_blocks(square_4x4)
    f = np.random.default_rng(seed).standard_normal(A.shape[0])
    g = np.zeros(B.shape[0])
    u, p, report = gkb_saddle(A, B, f, g, TIGHT, pressure_weights=weights)
    u_ref, p_ref, _ = direct_saddle(A, B, f, g, pressure_weights=weights)
    assert report.converged
    assert report.iterations <= B.shape[0]
    np.testing.assert_allclose(u, u_ref, atol=1e-8 * np.abs(u_ref).max())
    np.testing.assert_allclose(p, p_ref, atol=1e-7 * np.abs(p_ref).max())


def test_gkb_with_external_velocity_solve(square_4x4, rng):
    A, B, weights = stokes_blocks(square_4x4)
    factorization = DirectFactorization(A)
    f = rng.standard_normal(A.shape[0])
    u, _, report = gkb_saddle(
        A, B, f, np.zeros(B.shape[0]), TIGHT,
        pressure_weights=weights, velocity_solve=factorization,
    )
    assert report.inner_iterations == 0
    np.testing.assert_allclose(B @ u, 0.0, atol=1e-9)


def test_gkb_rejects_shapes():
    with pytest.raises(ValidationError):
        gkb_saddle(np.eye(2), [[1.0, 1.0, 1.0]], np.ones(2), np.zeros(1))


# =============================================================================
# Tests | Dense and Direct
# =============================================================================

def test_dense_singular():
    with pytest.raises(SingularMatrixError):
        dense_solve([[1.0, 2.0], [2.0, 4.0]], np.ones(2))


def test_dense_hilbert():
    matrix = hilbert(8)
    x = dense_solve(matrix, matrix @ np.ones(8))
    np.testing.assert_allclose(x, 1.0, rtol=1e-4)


def test_dense_rejects_shapes():
    with pytest.raises(ValidationError):
        dense_solve(np.ones((2, 3)), np.ones(2))


def test_direct_solve(rng):
    A = sp.csr_matrix(random_spd(rng, 12))
    b = rng.standard_normal(12)
    x, report = direct_solve(A, b)
    np.testing.assert_allclose(A @ x, b, atol=1e-12 * np.linalg.norm(b)
                               + 1e-12)
    assert report.method == "direct"
    assert report.residual <= 1e-12


def test_direct_singular():
    with pytest.raises(SingularMatrixError):
        direct_solve(sp.csr_matrix((3, 3)), np.ones(3))


def test_direct_factorization_reuse(rng):
    A = random_spd(rng, 6)
    factorization = DirectFactorization(A)
    for _ in range(3):
        b = rng.standard_normal(6)
        np.testing.assert_allclose(A @ factorization(b), b, atol=1e-12)


# =============================================================================
# Tests | Inf-Sup
# =============================================================================

def test_infsup_scalar():
    one = sp.csr_matrix([[1.0]])
    assert infsup_estimate(one, one, one) == pytest.approx(1.0)


def test_infsup_skips_zero_rows():
    B = sp.csr_matrix([[2.0, 0.0], [0.0, 0.0]])
    identity = sp.identity(2, format="csr")
    assert infsup_estimate(B, identity, identity) == pytest.approx(2.0)


def test_infsup_zero_coupling():
    identity = sp.identity(2, format="csr")
    assert infsup_estimate(sp.csr_matrix((2, 2)), identity, identity) == 0.0


def test_infsup_sparse_path_matches_dense(square_4x4):
    inputs = infsup_inputs(square_4x4)
    dense = infsup_estimate(*inputs)
    sparse = infsup_estimate(*inputs, dense_threshold=0)
    assert sparse == pytest.approx(dense, rel=1e-5)


def test_infsup_rejects_shapes():
    identity = sp.identity(2, format="csr")
    with pytest.raises(ValidationError):
        infsup_estimate(sp.csr_matrix((3, 2)), identity, identity)


# =============================================================================
# Tests | Matrix Market
# =============================================================================

def test_matrix_market_round_trip(tmp_path, square_2x2):
    matrix = assemble_global_system(square_2x2, nu=0.3).A_visc
    path = dump_matrix(matrix, tmp_path / "nested" / "a.mtx", "viscous")
    loaded = load_matrix(path)
    assert abs(loaded - matrix).max() <= 1e-15 * abs(matrix).max()


def test_matrix_market_missing(tmp_path):
    with pytest.raises(ValidationError):
        load_matrix(tmp_path / "none.mtx")
