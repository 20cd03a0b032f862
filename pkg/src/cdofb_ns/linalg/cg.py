# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Jacobi-Preconditioned Conjugate Gradient
=================================================

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
import logging
import time
from typing import Optional

# Import | Libraries
import numpy as np

# Import | Local Modules
from ..exceptions import LinearSolverError, ValidationError
from .config_solver import SolverConfig, SolverReport
from .csr import as_csr


# =============================================================================
# Variables
# =============================================================================

logger = logging.getLogger(__name__)


# =============================================================================
# Functions
# =============================================================================

def jacobi_inverse(diagonal: np.ndarray, strict: bool) -> np.ndarray:
    """
    Returns the inverse of a Jacobi preconditioner.

    With `strict`, zero or negative entries raise; otherwise zero entries
    are replaced by one.
    """
    if strict:
        bad = np.flatnonzero(diagonal <= 0)
        if bad.size:
            raise LinearSolverError(
                f"non-positive diagonal entry at row {bad[0]}", iteration=0
            )
        return 1.0 / diagonal
    return 1.0 / np.where(diagonal == 0, 1.0, diagonal)


def cg_jacobi(
    matrix,
    rhs: np.ndarray,
    config: SolverConfig = SolverConfig(),
    x0: Optional[np.ndarray] = None,
) -> tuple[np.ndarray, SolverReport]:
    """
    Conjugate Gradient Function
    ===========================

    Solves ``A x = b`` for symmetric positive definite `A` with Jacobi
    preconditioning, stopping when ``||b - A x|| <= tol ||b||``.

    A zero right-hand side returns the zero vector after zero iterations.
    When the recursive residual meets the tolerance but the true residual
    does not, the true residual replaces it and iterations continue.

    Parameters:
        matrix: Square SPD matrix.
        rhs (np.ndarray): Right-hand side.
        config (SolverConfig): Tolerance and iteration cap.
        x0 (np.ndarray, optional): Initial guess, zero by default.

    Returns:
        tuple[np.ndarray, SolverReport]: The iterate and its report. The
            report records the relative residual and the energy
            ``1/2 x^T A x - b^T x`` after every iteration.

    Raises:
        ValidationError: On shape mismatches.
        LinearSolverError: On a non-positive diagonal entry or when
            ``p^T A p`` stops being positive and finite.
    """

    start = time.perf_counter()
    A = as_csr(matrix, square=True)
    b = np.asarray(rhs, dtype=float)
    if b.shape != (A.shape[0],):
        raise ValidationError(
            message="rhs of shape %(got)s does not match %(n)d unknowns.",
            params={"got": b.shape, "n": A.shape[0]},
            code="shape_mismatch",
        )
    inverse = jacobi_inverse(A.diagonal(), strict=True)
    tolerance = config.tolerance

    b_norm = float(np.linalg.norm(b))
    if b_norm == 0.0:
        return np.zeros_like(b), SolverReport(
            method="cg_jacobi",
            iterations=0,
            residual=0.0,
            converged=True,
            wall_time=time.perf_counter() - start,
        )

    x = np.zeros_like(b) if x0 is None else np.array(x0, dtype=float)
    r = b - A @ x
    z = inverse * r
    p = z.copy()
    rz = float(r @ z)
    residuals = [float(np.linalg.norm(r)) / b_norm]
    energies = [-0.5 * float(x @ (b + r))]

    iteration = 0
    while iteration < config.max_iterations:
        if residuals[-1] <= tolerance:
            r_true = b - A @ x
            true_residual = float(np.linalg.norm(r_true)) / b_norm
            if true_residual <= tolerance:
                break
            r = r_true
            z = inverse * r
            p = z.copy()
            rz = float(r @ z)
            residuals[-1] = true_residual
        iteration += 1
        Ap = A @ p
        pAp = float(p @ Ap)
        if not np.isfinite(pAp) or pAp <= 0.0:
            raise LinearSolverError(
                f"conjugate gradient breakdown, p^T A p = {pAp:.3e}",
                iteration=iteration,
            )
        alpha = rz / pAp
        x += alpha * p
        r -= alpha * Ap
        residuals.append(float(np.linalg.norm(r)) / b_norm)
        energies.append(-0.5 * float(x @ (b + r)))
        z = inverse * r
        rz_next = float(r @ z)
        p = z + (rz_next / rz) * p
        rz = rz_next

    residual = float(np.linalg.norm(b - A @ x)) / b_norm
    converged = residual <= tolerance
    if not converged:
        logger.warning(
            "cg_jacobi stopped after %d iterations at residual %.3e",
            iteration, residual,
        )
    return x, SolverReport(
        method="cg_jacobi",
        iterations=iteration,
        residual=residual,
        converged=converged,
        wall_time=time.perf_counter() - start,
        residual_history=tuple(residuals),
        energy_history=tuple(energies),
    )


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "cg_jacobi",
    "jacobi_inverse",
]
