# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Temporal Convergence Studies
=====================================

Runs a case for a list of time steps, computes the normalized space-time
errors of every run and reports the observed order between consecutive
time steps.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
import logging
from dataclasses import replace
from typing import Optional, Sequence

# Import | Libraries
import numpy as np
import pandas as pd

# Import | Local Modules
from ..enums import NormalizationEnum
from ..exceptions import ValidationError
from ..mesh import PolytopalMesh
from ..timestep import RunResult, SchemeConfig, run_simulation
from .cases import CaseSpec
from .errors import (
    ErrorReport,
    compute_spacetime_errors,
    time_integral_constants,
)


# =============================================================================
# Variables
# =============================================================================

logger = logging.getLogger(__name__)

ERROR_COLUMNS = ["velocity_l2", "velocity_h1", "pressure_l2"]

RATE_COLUMNS = [
    "scheme",
    "dt",
    "n_steps",
    *ERROR_COLUMNS,
    *(f"rate_{name}" for name in ERROR_COLUMNS),
    "diverged",
    "t_div",
    "wall_time",
    "solver_iterations",
    "picard_iterations",
]


# =============================================================================
# Functions
# =============================================================================

def observed_orders(
    errors: Sequence[float],
    dts: Optional[Sequence[float]] = None,
) -> list[float]:
    """
    Observed Order Function
    =======================

    Returns ``log(e_i / e_{i+1}) / log(dt_i / dt_{i+1})`` for consecutive
    pairs. Without `dts` the time steps are taken as successive halvings,
    which gives ``log2(e_i / e_{i+1})``. Pairs with a non-positive or
    non-finite error give NaN.

    Raises:
        ValidationError: When `dts` does not match `errors` in length or
            holds equal consecutive steps.
    """

    errors = np.asarray(errors, dtype=float)
    if dts is None:
        dts = 0.5 ** np.arange(errors.size)
    dts = np.asarray(dts, dtype=float)
    if dts.shape != errors.shape:
        raise ValidationError(
            message="got %(errors)d errors for %(dts)d time steps.",
            params={"errors": errors.size, "dts": dts.size},
            code="shape_mismatch",
        )
    ratios = dts[:-1] / dts[1:]
    if np.any(ratios == 1.0):
        raise ValidationError(
            message="consecutive time steps must differ.",
            code="invalid",
        )
    orders = []
    for i, ratio in enumerate(ratios):
        a, b = errors[i], errors[i + 1]
        if not (np.isfinite(a) and np.isfinite(b)) or a <= 0.0 or b <= 0.0:
            orders.append(float("nan"))
            continue
        orders.append(float(np.log(a / b) / np.log(ratio)))
    return orders


def report_row(
    scheme: SchemeConfig,
    result: RunResult,
    report: Optional[ErrorReport],
) -> dict:
    """
    Returns the table row of one run; errors are NaN without a report.
    """
    row = {
        "scheme": scheme.name,
        "dt": scheme.dt,
        "n_steps": scheme.n_steps,
        "diverged": result.diverged,
        "t_div": result.t_div,
        "wall_time": result.wall_time,
        "solver_iterations": result.solver_iterations,
        "picard_iterations": result.picard_iterations,
    }
    for name in ERROR_COLUMNS:
        row[name] = float("nan") if report is None else getattr(report, name)
    return row


def normalization_constants(
    case: CaseSpec,
    mesh: PolytopalMesh,
    normalization: NormalizationEnum = NormalizationEnum.DISCRETE,
) -> Optional[tuple[float, float, float]]:
    """
    Returns the squared time-integral constants of `case`, or None for the
    discrete normalization whose constants come with every run.
    """
    normalization = NormalizationEnum.parse(normalization)
    if normalization is NormalizationEnum.DISCRETE:
        return None
    return time_integral_constants(mesh, case.problem(), case.T)


def run_with_errors(
    case: CaseSpec,
    mesh: PolytopalMesh,
    scheme: SchemeConfig,
    normalization: NormalizationEnum = NormalizationEnum.DISCRETE,
    constants: Optional[Sequence[float]] = None,
) -> tuple[dict, Optional[ErrorReport]]:
    """
    Runs one scheme on a case and returns its table row and error report.
    The report is None for a diverged run. Time-integral constants are
    computed when not given.
    """
    if constants is None:
        constants = normalization_constants(case, mesh, normalization)
    problem = case.problem()
    result = run_simulation(mesh, scheme, problem)
    report = None
    if not result.diverged and result.errors is not None:
        report = compute_spacetime_errors(
            result.errors, scheme.n_steps, normalization, constants
        )
    return report_row(scheme, result, report), report


def convergence_study(
    case: CaseSpec,
    mesh: PolytopalMesh,
    schemes: Sequence[SchemeConfig],
    dts: Sequence[float],
    normalization: NormalizationEnum = NormalizationEnum.DISCRETE,
) -> pd.DataFrame:
    """
    Convergence Study Function
    ==========================

    Parameters:
        case (CaseSpec): Case with an exact solution.
        mesh (PolytopalMesh): The mesh.
        schemes (Sequence[SchemeConfig]): Schemes to compare; their time
            step, observation time and viscosity are replaced by `dts` and
            the case values.
        dts (Sequence[float]): Time steps, coarse to fine.
        normalization (NormalizationEnum): Error normalization.

    Returns:
        pd.DataFrame: One row per scheme and time step with the normalized
            errors, the observed orders against the previous row of the
            same scheme (NaN on the first one), wall time and iteration
            counts.

    Raises:
        ValidationError: When the case has no exact solution or `dts` is
            empty.
    """

    if case.velocity is None or case.pressure is None:
        raise ValidationError(
            message="case %(case)s has no exact solution.",
            params={"case": case.case.value},
            code="no_exact_solution",
        )
    if len(dts) == 0:
        raise ValidationError(message="no time steps given.", code="empty")
    normalization = NormalizationEnum.parse(normalization)
    constants = normalization_constants(case, mesh, normalization)

    rows = []
    for template in schemes:
        scheme_rows = []
        for dt in dts:
            scheme = replace(template, dt=float(dt), T=case.T, nu=case.nu)
            logger.info("convergence: %s, dt=%.4g", scheme.name, dt)
            row, _ = run_with_errors(
                case, mesh, scheme, normalization, constants
            )
            scheme_rows.append(row)
        for name in ERROR_COLUMNS:
            orders = observed_orders(
                [row[name] for row in scheme_rows],
                [row["dt"] for row in scheme_rows],
            )
            scheme_rows[0][f"rate_{name}"] = float("nan")
            for row, order in zip(scheme_rows[1:], orders):
                row[f"rate_{name}"] = order
        rows.extend(scheme_rows)
    return pd.DataFrame(rows, columns=RATE_COLUMNS)


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "ERROR_COLUMNS",
    "RATE_COLUMNS",
    "convergence_study",
    "normalization_constants",
    "observed_orders",
    "report_row",
    "run_with_errors",
]
