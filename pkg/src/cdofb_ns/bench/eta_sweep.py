# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Parameter Studies
==========================

- `eta_sweep`: Artificial compressibility runs with ``eta = factor * Re``
  next to the monolithic reference at the same time step.
- `tolerance_study`: The same run for several iterative solver
  tolerances.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
import logging
from dataclasses import replace
from typing import Sequence

# Import | Libraries
import pandas as pd

# Import | Local Modules
from ..enums import CouplingEnum, NormalizationEnum
from ..linalg import SolverConfig
from ..mesh import PolytopalMesh
from ..timestep import SchemeConfig
from ..utils import validate_positive
from .cases import CaseSpec
from .convergence import (
    ERROR_COLUMNS,
    normalization_constants,
    run_with_errors,
)


# =============================================================================
# Variables
# =============================================================================

logger = logging.getLogger(__name__)

DEFAULT_ETA_FACTORS = (1.0, 10.0, 100.0)

SWEEP_COLUMNS = [
    "scheme",
    "eta_factor",
    "eta",
    "dt",
    *ERROR_COLUMNS,
    "diverged",
    "wall_time",
    "solver_iterations",
]

TOLERANCE_COLUMNS = [
    "scheme",
    "tolerance",
    "dt",
    *ERROR_COLUMNS,
    "diverged",
    "wall_time",
    "solver_iterations",
]


# =============================================================================
# Functions
# =============================================================================

def eta_sweep(
    case: CaseSpec,
    mesh: PolytopalMesh,
    scheme: SchemeConfig,
    dt: float,
    factors: Sequence[float] = DEFAULT_ETA_FACTORS,
    normalization: NormalizationEnum = NormalizationEnum.DISCRETE,
) -> pd.DataFrame:
    """
    Eta Sweep Function
    ==================

    Parameters:
        case (CaseSpec): Case with an exact solution.
        mesh (PolytopalMesh): The mesh.
        scheme (SchemeConfig): Template whose order, convection treatment
            and solver settings are kept; the coupling is overridden.
        dt (float): Common time step.
        factors (Sequence[float]): ``eta / Re`` values.
        normalization (NormalizationEnum): Error normalization.

    Returns:
        pd.DataFrame: One row per factor and a last monolithic row with
            empty ``eta`` columns.
    """

    dt = validate_positive(dt, name="dt")
    common = dict(dt=dt, T=case.T, nu=case.nu)
    constants = normalization_constants(case, mesh, normalization)
    rows = []
    for factor in factors:
        factor = validate_positive(factor, name="eta_factor")
        eta = factor * case.reynolds
        run_scheme = replace(
            scheme,
            coupling=CouplingEnum.ARTIFICIAL_COMPRESSIBILITY,
            eta=eta,
            **common,
        )
        logger.info("eta sweep: %s, eta=%.4g", run_scheme.name, eta)
        row, _ = run_with_errors(
            case, mesh, run_scheme, normalization, constants
        )
        rows.append({**row, "eta_factor": factor, "eta": eta})

    reference = replace(
        scheme, coupling=CouplingEnum.MONOLITHIC, eta=None, **common
    )
    logger.info("eta sweep: reference %s", reference.name)
    row, _ = run_with_errors(
        case, mesh, reference, normalization, constants
    )
    rows.append({**row, "eta_factor": None, "eta": None})
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)


def tolerance_study(
    case: CaseSpec,
    mesh: PolytopalMesh,
    scheme: SchemeConfig,
    dt: float,
    tolerances: Sequence[float],
    normalization: NormalizationEnum = NormalizationEnum.DISCRETE,
) -> pd.DataFrame:
    """
    Returns one error row per iterative solver tolerance, the rest of the
    solver settings taken from `scheme`.
    """
    dt = validate_positive(dt, name="dt")
    constants = normalization_constants(case, mesh, normalization)
    rows = []
    for tolerance in tolerances:
        solver = replace(scheme.solver or SolverConfig(), tolerance=tolerance)
        run_scheme = replace(
            scheme, dt=dt, T=case.T, nu=case.nu, solver=solver
        )
        logger.info(
            "tolerance study: %s, tolerance=%.1e", run_scheme.name, tolerance
        )
        row, _ = run_with_errors(
            case, mesh, run_scheme, normalization, constants
        )
        rows.append({**row, "tolerance": tolerance})
    return pd.DataFrame(rows, columns=TOLERANCE_COLUMNS)


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "DEFAULT_ETA_FACTORS",
    "SWEEP_COLUMNS",
    "TOLERANCE_COLUMNS",
    "eta_sweep",
    "tolerance_study",
]
