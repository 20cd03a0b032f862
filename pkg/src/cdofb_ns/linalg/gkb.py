# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Golub-Kahan Bidiagonalization Saddle-Point Solver
==========================================================

Solves symmetric saddle-point systems

    [ A  B^T ] [u]   [f]
    [ B   0  ] [p] = [g]

with `A` SPD, by bidiagonalizing `B^T` in the `A`- and `N`-inner products.
The error in the `A`-energy norm of the velocity is estimated from the
last few bidiagonalization coefficients and drives the stopping test.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
import logging
import math
import time
from typing import Callable, Optional

# Import | Libraries
import numpy as np

# Import | Local Modules
from ..exceptions import LinearSolverError, ValidationError
from .cg import cg_jacobi
from .config_solver import SolverConfig, SolverReport
from .csr import as_csr


# =============================================================================
# Variables
# =============================================================================

logger = logging.getLogger(__name__)

# Largest admissible ratio between a new coefficient of the energy-norm
# expansion and the largest previous one; beyond it orthogonality is lost.
GROWTH_LIMIT = 1e8

VelocitySolve = Callable[[np.ndarray], np.ndarray]


# =============================================================================
# Functions
# =============================================================================

def gkb_saddle(
    matrix,
    constraint,
    rhs_u: np.ndarray,
    rhs_p: np.ndarray,
    config: SolverConfig = SolverConfig(),
    pressure_weights: Optional[np.ndarray] = None,
    velocity_solve: Optional[VelocitySolve] = None,
) -> tuple[np.ndarray, np.ndarray, SolverReport]:
    """
    GKB Saddle Solver Function
    ==========================

    Parameters:
        matrix: SPD velocity block `A` of size ``m x m``.
        constraint: Constraint block `B` of size ``k x m``.
        rhs_u (np.ndarray): Velocity right-hand side `f`.
        rhs_p (np.ndarray): Constraint right-hand side `g`.
        config (SolverConfig): Outer tolerance on the relative energy-norm
            error estimate, delay length and inner tolerance.
        pressure_weights (np.ndarray, optional): Diagonal of the pressure
            inner product `N`, identity by default. When given, the
            constraint residual and every pressure direction are projected
            to zero weighted mean, so the pressure keeps zero weighted mean.
        velocity_solve (Callable, optional): Applies ``A^{-1}``; inner
            Jacobi-CG solves with the inner tolerance by default.

    Returns:
        tuple[np.ndarray, np.ndarray, SolverReport]: Velocity, pressure and
            the report; `inner_iterations` sums the inner CG iterations.

    Raises:
        ValidationError: On shape mismatches.
        LinearSolverError: When an inner solve breaks down or a
            bidiagonalization coefficient is not finite.
    """

    start = time.perf_counter()
    A = as_csr(matrix, square=True)
    B = as_csr(constraint)
    f = np.asarray(rhs_u, dtype=float)
    g = np.asarray(rhs_p, dtype=float)
    if B.shape[1] != A.shape[0] or f.shape != (A.shape[0],) or g.shape != (
        B.shape[0],
    ):
        raise ValidationError(
            message="inconsistent saddle shapes A%(a)s B%(b)s f%(f)s g%(g)s.",
            params={"a": A.shape, "b": B.shape, "f": f.shape, "g": g.shape},
            code="shape_mismatch",
        )
    weights = (
        np.ones(B.shape[0])
        if pressure_weights is None
        else np.asarray(pressure_weights, dtype=float)
    )

    inner_config = config.inner()
    inner_iterations = 0

    def solve(rhs: np.ndarray) -> np.ndarray:
        nonlocal inner_iterations
        if velocity_solve is not None:
            return velocity_solve(rhs)
        solution, report = cg_jacobi(A, rhs, inner_config)
        inner_iterations += report.iterations
        return solution

    u0 = solve(f)
    residual_p = g - B @ u0
    if pressure_weights is not None and residual_p.size:
        residual_p -= weights * (residual_p.sum() / weights.sum())

    s = residual_p / weights
    beta = float(np.sqrt(max(s @ residual_p, 0.0)))
    u = np.zeros_like(u0)
    p = np.zeros(B.shape[0])
    z_history: list[float] = []
    estimates: list[float] = []
    iteration = 0
    converged = True
    estimate = 0.0

    if beta > 0.0:
        q = s / beta
        w = solve(B.T @ q)
        alpha = float(np.sqrt(max(w @ (A @ w), 0.0)))
        if not np.isfinite(alpha) or alpha == 0.0:
            raise LinearSolverError("zero bidiagonalization pivot", 0)
        v = w / alpha
        z = beta / alpha
        d = q / alpha
        u += z * v
        p -= z * d
        z_history.append(z)
        converged = False

        while iteration < config.max_iterations:
            iteration += 1
            t = (B @ v) / weights - alpha * q
            if pressure_weights is not None:
                t -= (weights @ t) / weights.sum()
            beta = float(np.sqrt(max(t @ (weights * t), 0.0)))
            if not np.isfinite(beta):
                raise LinearSolverError("non-finite coefficient", iteration)
            if beta <= 1e-14 * alpha:
                converged = True
                estimate = 0.0
                break
            q = t / beta
            w = solve(B.T @ q - beta * (A @ v))
            alpha = float(np.sqrt(max(w @ (A @ w), 0.0)))
            if not np.isfinite(alpha) or alpha == 0.0:
                raise LinearSolverError("zero bidiagonalization pivot",
                                        iteration)
            v = w / alpha
            z = -beta * z / alpha
            if abs(z) > GROWTH_LIMIT * max(abs(x) for x in z_history):
                logger.warning(
                    "gkb coefficients grow without bound at iteration %d",
                    iteration,
                )
                converged = False
                estimate = math.inf
                break
            d = (q - beta * d) / alpha
            u += z * v
            p -= z * d
            z_history.append(z)

            recent = np.asarray(z_history[-config.gkb_delay:])
            total = np.asarray(z_history)
            estimate = float(
                np.sqrt(recent @ recent) / np.sqrt(total @ total)
            )
            estimates.append(estimate)
            if (
                len(z_history) > config.gkb_delay
                and estimate <= config.tolerance
            ):
                converged = True
                break

    if not converged:
        logger.warning(
            "gkb stopped after %d iterations at estimate %.3e",
            iteration, estimate,
        )
    return u0 + u, p, SolverReport(
        method="gkb",
        iterations=iteration,
        residual=estimate,
        converged=converged,
        wall_time=time.perf_counter() - start,
        criterion="relative_energy_error_estimate",
        inner_iterations=inner_iterations,
        residual_history=tuple(estimates),
    )


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "gkb_saddle",
]
