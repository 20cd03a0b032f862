# -*- coding: utf-8 -*-

"""
CDO-Fb Linear Algebra Module
============================

Sparse solvers shared by the time-stepping schemes.

Currently, the module includes:
- `cg_jacobi`: Jacobi-preconditioned conjugate gradient.
- `gmres`: Restarted GMRES with right Jacobi preconditioning.
- `gkb_saddle`: Golub-Kahan bidiagonalization for symmetric saddle systems.
- `direct_solve` / `direct_saddle`: SuperLU factorizations.
- `dense_solve`: Dense LU reference solver.
- `infsup_estimate`: Discrete inf-sup constant.
- `dump_matrix` / `load_matrix`: Matrix Market files.

"""

# =============================================================================
# Imports
# =============================================================================

from .cg import cg_jacobi, jacobi_inverse
from .config_solver import SolverConfig, SolverReport
from .csr import as_csr, is_canonical, is_symmetric
from .dense import dense_solve
from .direct import (
    DirectFactorization,
    SaddleFactorization,
    direct_saddle,
    direct_solve,
)
from .gkb import gkb_saddle
from .gmres import gmres
from .infsup_estimate import infsup_estimate
from .matrix_market import dump_matrix, load_matrix


# =============================================================================
# Public Interface
# =============================================================================

__all__ = [
    "DirectFactorization",
    "SaddleFactorization",
    "SolverConfig",
    "SolverReport",
    "as_csr",
    "cg_jacobi",
    "dense_solve",
    "direct_saddle",
    "direct_solve",
    "dump_matrix",
    "gkb_saddle",
    "gmres",
    "infsup_estimate",
    "is_canonical",
    "is_symmetric",
    "jacobi_inverse",
    "load_matrix",
]
