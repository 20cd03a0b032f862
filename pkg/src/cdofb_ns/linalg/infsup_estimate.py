# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Discrete Inf-Sup Constant Estimation
=============================================

The constant is the square root of the smallest nonzero eigenvalue of the
pressure Schur complement ``S = B G_v^{-1} B^T`` relative to the pressure
Gram matrix ``G_p``.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
import logging
from typing import Optional

# Import | Libraries
import numpy as np
import scipy.sparse as sp
from scipy.linalg import cholesky, eigh, solve_triangular
from scipy.sparse.linalg import LinearOperator, cg, splu

# Import | Local Modules
from ..exceptions import LinearSolverError, ValidationError
from .csr import as_csr


# =============================================================================
# Variables
# =============================================================================

logger = logging.getLogger(__name__)

DENSE_THRESHOLD = 1500
MAX_INVERSE_ITERATIONS = 200


# =============================================================================
# Functions
# =============================================================================

def _dense_estimate(B, velocity_gram, pressure_gram, tol) -> float:
    lower = cholesky(velocity_gram.toarray(), lower=True)
    factor = solve_triangular(lower, B.T.toarray(), lower=True)
    schur = factor.T @ factor
    eigenvalues = eigh(schur, pressure_gram.toarray(), eigvals_only=True)
    largest = eigenvalues.max(initial=0.0)
    if largest <= 0.0:
        return 0.0
    nonzero = eigenvalues[eigenvalues > tol * largest]
    return float(np.sqrt(nonzero.min()))


def _sparse_estimate(
    B, velocity_gram, pressure_gram, kernel, tol
) -> float:
    velocity_lu = splu(velocity_gram.tocsc())
    n = B.shape[0]

    def project(x: np.ndarray) -> np.ndarray:
        for vector in kernel:
            weighted = pressure_gram @ vector
            x = x - vector * (weighted @ x) / (weighted @ vector)
        return x

    def schur(x: np.ndarray) -> np.ndarray:
        return B @ velocity_lu.solve(B.T @ x)

    operator = LinearOperator(
        (n, n), matvec=lambda x: project(schur(project(x)))
    )
    rng = np.random.default_rng(0)
    x = project(rng.standard_normal(n))
    previous = np.inf
    for iteration in range(1, MAX_INVERSE_ITERATIONS + 1):
        x = x / np.sqrt(x @ (pressure_gram @ x))
        y, info = cg(operator, project(pressure_gram @ x), rtol=1e-12)
        if info < 0:
            raise LinearSolverError("inner solve breakdown", iteration)
        x = project(y)
        value = float(x @ schur(x) / (x @ (pressure_gram @ x)))
        if abs(value - previous) <= tol * abs(value):
            break
        previous = value
    logger.debug("inverse iteration stopped after %d steps", iteration)
    return float(np.sqrt(max(value, 0.0)))


def infsup_estimate(
    coupling,
    velocity_gram,
    pressure_gram,
    kernel: Optional[list[np.ndarray]] = None,
    tol: float = 1e-10,
    dense_threshold: int = DENSE_THRESHOLD,
) -> float:
    """
    Inf-Sup Estimate Function
    =========================

    Parameters:
        coupling: ``B`` of shape ``(n_p, n_v)``.
        velocity_gram: SPD velocity Gram matrix ``G_v``.
        pressure_gram: SPD pressure Gram matrix ``G_p``.
        kernel (list[np.ndarray], optional): Known kernel vectors of
            ``B^T``, deflated on the sparse path. Defaults to the constant
            pressure.
        tol (float): Eigenvalues below ``tol`` times the largest one are
            treated as zero on the dense path; relative change stopping
            the inverse iteration on the sparse path.
        dense_threshold (int): Largest pressure size solved densely.

    Returns:
        float: The estimate, zero when ``B`` vanishes.

    Raises:
        ValidationError: On inconsistent shapes.
    """

    B = as_csr(coupling)
    G_v = as_csr(velocity_gram, square=True)
    G_p = as_csr(pressure_gram, square=True)
    if B.shape != (G_p.shape[0], G_v.shape[0]):
        raise ValidationError(
            message="coupling %(b)s does not match Gram sizes %(v)d, %(p)d.",
            params={"b": B.shape, "v": G_v.shape[0], "p": G_p.shape[0]},
            code="shape_mismatch",
        )
    if B.nnz == 0 or B.shape[0] == 0:
        return 0.0
    if B.shape[0] <= dense_threshold:
        return _dense_estimate(B, G_v, G_p, tol)
    if kernel is None:
        kernel = [np.ones(B.shape[0])]
    return _sparse_estimate(B, sp.csr_matrix(G_v), G_p, kernel, tol)


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "infsup_estimate",
]
