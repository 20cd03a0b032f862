# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Restarted GMRES
========================

Right Jacobi preconditioning keeps the monitored residual equal to the true
residual of the unpreconditioned system.

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
from scipy.linalg import solve_triangular

# Import | Local Modules
from ..exceptions import LinearSolverError, ValidationError
from .cg import jacobi_inverse
from .config_solver import SolverConfig, SolverReport
from .csr import as_csr


# =============================================================================
# Variables
# =============================================================================

logger = logging.getLogger(__name__)


# =============================================================================
# Functions
# =============================================================================

def gmres(
    matrix,
    rhs: np.ndarray,
    config: SolverConfig = SolverConfig(),
    x0: Optional[np.ndarray] = None,
    preconditioner: Optional[np.ndarray] = None,
) -> tuple[np.ndarray, SolverReport]:
    """
    GMRES Function
    ==============

    Solves ``A x = b`` with GMRES restarted every `config.restart` Arnoldi
    steps, stopping when ``||b - A x|| <= tol ||b||``.

    Parameters:
        matrix: Square matrix.
        rhs (np.ndarray): Right-hand side.
        config (SolverConfig): Tolerance, iteration cap and restart length.
        x0 (np.ndarray, optional): Initial guess, zero by default.
        preconditioner (np.ndarray, optional): Diagonal of the right
            preconditioner, the diagonal of `matrix` by default. Zero
            entries are replaced by one.

    Returns:
        tuple[np.ndarray, SolverReport]: The iterate and its report;
            `iterations` counts Arnoldi steps over all cycles.

    Raises:
        ValidationError: On shape mismatches.
        LinearSolverError: On non-finite values or a singular Hessenberg
            column.
    """

    start = time.perf_counter()
    A = as_csr(matrix, square=True)
    b = np.asarray(rhs, dtype=float)
    n = A.shape[0]
    if b.shape != (n,):
        raise ValidationError(
            message="rhs of shape %(got)s does not match %(n)d unknowns.",
            params={"got": b.shape, "n": n},
            code="shape_mismatch",
        )
    diagonal = A.diagonal() if preconditioner is None else preconditioner
    inverse = jacobi_inverse(np.asarray(diagonal, dtype=float), strict=False)
    tolerance = config.tolerance

    b_norm = float(np.linalg.norm(b))
    if b_norm == 0.0:
        return np.zeros_like(b), SolverReport(
            method="gmres",
            iterations=0,
            residual=0.0,
            converged=True,
            wall_time=time.perf_counter() - start,
        )

    x = np.zeros_like(b) if x0 is None else np.array(x0, dtype=float)
    m = min(config.restart, n)
    total = 0
    history: list[float] = []
    while True:
        r = b - A @ x
        beta = float(np.linalg.norm(r))
        history.append(beta / b_norm)
        if history[-1] <= tolerance or total >= config.max_iterations:
            break

        V = np.zeros((m + 1, n))
        H = np.zeros((m + 1, m))
        cs = np.zeros(m)
        sn = np.zeros(m)
        g = np.zeros(m + 1)
        g[0] = beta
        V[0] = r / beta
        k = 0
        for j in range(m):
            if total >= config.max_iterations:
                break
            w = A @ (inverse * V[j])
            total += 1
            for i in range(j + 1):
                H[i, j] = w @ V[i]
                w -= H[i, j] * V[i]
            h_next = float(np.linalg.norm(w))
            if not np.isfinite(h_next):
                raise LinearSolverError("non-finite Arnoldi vector", total)
            H[j + 1, j] = h_next
            for i in range(j):
                upper = cs[i] * H[i, j] + sn[i] * H[i + 1, j]
                H[i + 1, j] = -sn[i] * H[i, j] + cs[i] * H[i + 1, j]
                H[i, j] = upper
            denominator = float(np.hypot(H[j, j], H[j + 1, j]))
            if denominator == 0.0:
                raise LinearSolverError("singular Hessenberg column", total)
            cs[j] = H[j, j] / denominator
            sn[j] = H[j + 1, j] / denominator
            H[j, j] = denominator
            H[j + 1, j] = 0.0
            g[j + 1] = -sn[j] * g[j]
            g[j] = cs[j] * g[j]
            k = j + 1
            if h_next == 0.0 or abs(g[j + 1]) / b_norm <= tolerance:
                break
            V[j + 1] = w / h_next
        if k == 0:
            break
        y = solve_triangular(H[:k, :k], g[:k])
        x += inverse * (V[:k].T @ y)

    residual = history[-1]
    converged = residual <= tolerance
    if not converged:
        logger.warning(
            "gmres stopped after %d iterations at residual %.3e",
            total, residual,
        )
    return x, SolverReport(
        method="gmres",
        iterations=total,
        residual=residual,
        converged=converged,
        wall_time=time.perf_counter() - start,
        residual_history=tuple(history),
    )


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "gmres",
]
