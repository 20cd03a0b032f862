# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Matrix Market Dumps
============================

Assembled matrices are exchanged as coordinate Matrix Market files.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
from pathlib import Path
from typing import Union

# Import | Libraries
import scipy.sparse as sp
from scipy.io import mminfo, mmread, mmwrite

# Import | Local Modules
from ..exceptions import ValidationError
from .csr import as_csr


# =============================================================================
# Functions
# =============================================================================

def dump_matrix(
    matrix, path: Union[str, Path], comment: str = ""
) -> Path:
    """
    Writes `matrix` in coordinate format with 17 significant digits.
    """
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    mmwrite(
        str(target), sp.coo_matrix(as_csr(matrix)), comment=comment,
        precision=17,
    )
    return target


def load_matrix(path: Union[str, Path]) -> sp.csr_matrix:
    """
    Reads a coordinate Matrix Market file into canonical CSR.

    Raises:
        ValidationError: When the file is missing or not a sparse matrix.
    """
    source = Path(path)
    if not source.is_file():
        raise ValidationError(
            message="no matrix file at %(path)s.",
            params={"path": str(source)},
            code="missing_file",
        )
    if mminfo(str(source))[3] != "coordinate":
        raise ValidationError(
            message="%(path)s is not in coordinate format.",
            params={"path": str(source)},
            code="invalid_format",
        )
    return as_csr(mmread(str(source)))


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "dump_matrix",
    "load_matrix",
]
