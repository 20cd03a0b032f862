# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides CSR Matrix Helpers
===========================

Matrices are `scipy.sparse.csr_matrix` instances in canonical form: sorted,
unique column indices per row and finite values.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Libraries
import numpy as np
import scipy.sparse as sp

# Import | Local Modules
from ..exceptions import ValidationError


# =============================================================================
# Functions
# =============================================================================

def as_csr(matrix, square: bool = False) -> sp.csr_matrix:
    """
    CSR Conversion Function
    =======================

    Converts `matrix` (sparse or dense) to a canonical CSR matrix of
    floats.

    Parameters:
        matrix: Any input accepted by `scipy.sparse.csr_matrix`.
        square (bool): Whether to require a square matrix.

    Returns:
        scipy.sparse.csr_matrix: A canonical copy.

    Raises:
        ValidationError: On non-finite values or a non-square matrix when
            `square` is set.
    """

    csr = sp.csr_matrix(matrix, dtype=float, copy=True)
    csr.sum_duplicates()
    csr.sort_indices()
    if square and csr.shape[0] != csr.shape[1]:
        raise ValidationError(
            message="expected a square matrix, got shape %(shape)s.",
            params={"shape": csr.shape},
            code="not_square",
        )
    if not np.all(np.isfinite(csr.data)):
        raise ValidationError(
            message="matrix has non-finite entries.", code="not_finite"
        )
    return csr


def is_canonical(csr: sp.csr_matrix) -> bool:
    """
    Whether offsets are monotone and columns sorted and unique per row.
    """
    offsets = csr.indptr
    if np.any(np.diff(offsets) < 0):
        return False
    for row in range(csr.shape[0]):
        columns = csr.indices[offsets[row] : offsets[row + 1]]
        if np.any(np.diff(columns) <= 0):
            return False
    return True


def is_symmetric(csr: sp.spmatrix, rtol: float = 1e-12) -> bool:
    """
    Whether ``|A - A^T| <= rtol |A|`` entrywise in max norm.
    """
    scale = abs(csr).max() if csr.nnz else 0.0
    difference = csr - csr.T
    return bool(
        difference.nnz == 0 or abs(difference).max() <= rtol * scale
    )


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "as_csr",
    "is_canonical",
    "is_symmetric",
]
