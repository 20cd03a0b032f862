# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Sparse Direct Solvers
==============================

SuperLU factorizations of the velocity and saddle-point systems. Saddle
systems with a pure-Dirichlet pressure kernel are bordered with the
zero-mean constraint ``sum_c |c| p_c = 0``.

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
import scipy.sparse as sp
from scipy.sparse.linalg import splu

# Import | Local Modules
from ..exceptions import SingularMatrixError, ValidationError
from .config_solver import SolverReport
from .csr import as_csr


# =============================================================================
# Variables
# =============================================================================

logger = logging.getLogger(__name__)


# =============================================================================
# Classes
# =============================================================================

class DirectFactorization:
    """
    Direct Factorization Class
    ==========================

    A SuperLU factorization that can be applied to many right-hand sides.

    Attributes:
        size (int): Number of unknowns.
        factor_time (float): Seconds spent factorizing.
    """

    def __init__(self, matrix) -> None:
        start = time.perf_counter()
        A = as_csr(matrix, square=True)
        self.size = A.shape[0]
        try:
            self._lu = splu(A.tocsc())
        except RuntimeError as error:
            raise SingularMatrixError(str(error), iteration=0) from error
        self.factor_time = time.perf_counter() - start
        logger.debug(
            "factorized %d unknowns in %.3fs", self.size, self.factor_time
        )

    def solve(self, rhs: np.ndarray) -> np.ndarray:
        b = np.asarray(rhs, dtype=float)
        if b.shape != (self.size,):
            raise ValidationError(
                message="rhs of shape %(got)s does not match %(n)d unknowns.",
                params={"got": b.shape, "n": self.size},
                code="shape_mismatch",
            )
        x = self._lu.solve(b)
        if not np.all(np.isfinite(x)):
            raise SingularMatrixError("non-finite direct solution", 0)
        return x

    def __call__(self, rhs: np.ndarray) -> np.ndarray:
        return self.solve(rhs)


class SaddleFactorization:
    """
    Saddle Factorization Class
    ==========================

    Factorizes

        [ A  C^T  0 ]
        [ B   0   w ]
        [ 0  w^T  0 ]

    where `C` defaults to `B` and the last row and column are present only
    when `pressure_weights` is given.
    """

    def __init__(
        self,
        matrix,
        constraint,
        pressure_weights: Optional[np.ndarray] = None,
        transposed_constraint=None,
    ) -> None:
        A = as_csr(matrix, square=True)
        B = as_csr(constraint)
        C = B if transposed_constraint is None else as_csr(
            transposed_constraint
        )
        if B.shape[1] != A.shape[0] or C.shape != B.shape:
            raise ValidationError(
                message="inconsistent saddle shapes A%(a)s B%(b)s.",
                params={"a": A.shape, "b": B.shape},
                code="shape_mismatch",
            )
        self.n_velocity = A.shape[0]
        self.n_pressure = B.shape[0]
        self.bordered = pressure_weights is not None
        blocks = [[A, C.T], [B, None]]
        if self.bordered:
            w = sp.csr_matrix(
                np.asarray(pressure_weights, dtype=float).reshape(-1, 1)
            )
            blocks = [
                [A, C.T, None],
                [B, None, w],
                [None, w.T, None],
            ]
        self._factorization = DirectFactorization(
            sp.bmat(blocks, format="csr")
        )
        self.factor_time = self._factorization.factor_time

    def solve(
        self, rhs_u: np.ndarray, rhs_p: np.ndarray
    ) -> tuple[np.ndarray, np.ndarray]:
        pieces = [np.asarray(rhs_u, float), np.asarray(rhs_p, float)]
        if self.bordered:
            pieces.append(np.zeros(1))
        x = self._factorization.solve(np.concatenate(pieces))
        return (
            x[: self.n_velocity],
            x[self.n_velocity : self.n_velocity + self.n_pressure],
        )


# =============================================================================
# Functions
# =============================================================================

def direct_solve(matrix, rhs: np.ndarray) -> tuple[np.ndarray, SolverReport]:
    """
    Solves ``A x = b`` with SuperLU.
    """
    start = time.perf_counter()
    factorization = DirectFactorization(matrix)
    x = factorization.solve(rhs)
    return x, _direct_report(matrix, x, rhs, start)


def direct_saddle(
    matrix,
    constraint,
    rhs_u: np.ndarray,
    rhs_p: np.ndarray,
    pressure_weights: Optional[np.ndarray] = None,
    transposed_constraint=None,
) -> tuple[np.ndarray, np.ndarray, SolverReport]:
    """
    Direct Saddle Solver Function
    =============================

    Solves ``A u + C^T p = f, B u = g`` with SuperLU, bordered with
    ``w^T p = 0`` when `pressure_weights` is given.

    Returns:
        tuple[np.ndarray, np.ndarray, SolverReport]: Velocity, pressure and
            a report whose residual is that of the unbordered system.

    Raises:
        SingularMatrixError: When the system is singular.
    """
    start = time.perf_counter()
    factorization = SaddleFactorization(
        matrix, constraint, pressure_weights, transposed_constraint
    )
    u, p = factorization.solve(rhs_u, rhs_p)
    C = constraint if transposed_constraint is None else transposed_constraint
    full = sp.bmat([[matrix, sp.csr_matrix(C).T], [constraint, None]])
    return u, p, _direct_report(
        full,
        np.concatenate((u, p)),
        np.concatenate((np.asarray(rhs_u, float), np.asarray(rhs_p, float))),
        start,
    )


def _direct_report(matrix, x, rhs, start) -> SolverReport:
    b = np.asarray(rhs, dtype=float)
    b_norm = float(np.linalg.norm(b))
    residual = float(np.linalg.norm(b - matrix @ x))
    if b_norm > 0.0:
        residual /= b_norm
    return SolverReport(
        method="direct",
        iterations=1,
        residual=residual,
        converged=True,
        wall_time=time.perf_counter() - start,
        criterion="relative_residual",
    )


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "DirectFactorization",
    "SaddleFactorization",
    "direct_saddle",
    "direct_solve",
]
