# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Dense LU Solver
========================

Reference solver for small systems, used to check the iterative solvers.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
import warnings

# Import | Libraries
import numpy as np
import scipy.sparse as sp
from scipy.linalg import LinAlgWarning, lu_factor, lu_solve

# Import | Local Modules
from ..exceptions import SingularMatrixError, ValidationError


# =============================================================================
# Variables
# =============================================================================

PIVOT_TOLERANCE = 1e-13


# =============================================================================
# Functions
# =============================================================================

def dense_solve(matrix, rhs: np.ndarray) -> np.ndarray:
    """
    Solves ``A x = b`` by LU factorization with partial pivoting.

    Raises:
        ValidationError: On a non-square matrix or mismatched `rhs`.
        SingularMatrixError: When a pivot is below ``1e-13`` times the
            largest pivot magnitude.
    """
    A = matrix.toarray() if sp.issparse(matrix) else np.asarray(matrix)
    A = np.array(A, dtype=float)
    b = np.asarray(rhs, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or b.shape[0] != A.shape[0]:
        raise ValidationError(
            message="cannot solve A%(a)s x = b%(b)s.",
            params={"a": A.shape, "b": b.shape},
            code="shape_mismatch",
        )
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", LinAlgWarning)
        lu, pivots = lu_factor(A, check_finite=True)
    magnitudes = np.abs(np.diag(lu))
    if magnitudes.size and (
        magnitudes.max() == 0.0
        or magnitudes.min() <= PIVOT_TOLERANCE * magnitudes.max()
    ):
        raise SingularMatrixError(
            f"zero pivot in row {int(np.argmin(magnitudes))}", iteration=0
        )
    return lu_solve((lu, pivots), b)


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "dense_solve",
]
