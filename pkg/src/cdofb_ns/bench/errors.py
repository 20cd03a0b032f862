# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Space-Time Error Reports
=================================

Normalized space-time errors of a run. Each raw error is the square root of
an accumulated sum over the time nodes, divided by the square root of the
same sum taken on the projected exact solution (`DISCRETE`) or of the space
norms of the projection integrated in time over ``(0, T)`` (`TIME_INTEGRAL`).

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
from dataclasses import dataclass
from typing import Optional, Sequence

# Import | Libraries
import numpy as np
from numpy.polynomial.legendre import leggauss

# Import | Local Modules
from ..enums import NormalizationEnum
from ..exceptions import ValidationError
from ..mesh import PolytopalMesh
from ..operators import OperatorConfig
from ..spaces import HybridVelocity, PressureField
from ..timestep import ErrorAccumulator, ErrorTerms, FlowProblem, RunResult


# =============================================================================
# Variables
# =============================================================================

TIME_GAUSS_POINTS = 3


# =============================================================================
# Classes
# =============================================================================

@dataclass(frozen=True)
class ErrorReport:
    """
    Error Report Class
    ==================

    Attributes:
        velocity_l2 (float): Normalized l2(L2) velocity error.
        velocity_h1 (float): Normalized l2(H1) velocity error.
        pressure_l2 (float): Normalized l2(L2) pressure error.
        raw (tuple[float, float, float]): The same errors before
            normalization.
        constants (tuple[float, float, float]): Squared normalization
            constants.
        normalization (NormalizationEnum): How the constants were obtained.
        contributions (tuple): Per time node ``(n, velocity, gradient,
            pressure)`` squared terms.
    """

    velocity_l2: float
    velocity_h1: float
    pressure_l2: float
    raw: tuple[float, float, float]
    constants: tuple[float, float, float]
    normalization: NormalizationEnum
    contributions: tuple = ()

    def to_dict(self) -> dict:
        return {
            "velocity_l2": self.velocity_l2,
            "velocity_h1": self.velocity_h1,
            "pressure_l2": self.pressure_l2,
            "raw_velocity_l2": self.raw[0],
            "raw_velocity_h1": self.raw[1],
            "raw_pressure_l2": self.raw[2],
            "constant_velocity_l2": self.constants[0],
            "constant_velocity_h1": self.constants[1],
            "constant_pressure_l2": self.constants[2],
            "normalization": self.normalization.value,
        }


# =============================================================================
# Functions
# =============================================================================

def time_integral_constants(
    mesh: PolytopalMesh,
    problem: FlowProblem,
    T: float,
    intervals: int = 32,
    config: OperatorConfig = OperatorConfig(),
) -> tuple[float, float, float]:
    """
    Time-Integral Normalization Function
    ====================================

    Integrates the squared discrete norms of the projected exact solution
    over ``(0, T)`` with a composite Gauss-Legendre rule of three points on
    `intervals` uniform sub-intervals. The result does not depend on the
    time step of a run.

    Returns:
        tuple[float, float, float]: Squared velocity, gradient and pressure
            constants.
    """

    nodes, weights = leggauss(TIME_GAUSS_POINTS)
    width = T / intervals
    accumulator = ErrorAccumulator(
        mesh, problem.exact_velocity, problem.exact_pressure, 1.0, config
    )
    zero_u = HybridVelocity.zeros(mesh)
    zero_p = PressureField.zeros(mesh)
    step = 0
    for interval in range(intervals):
        centre = (interval + 0.5) * width
        for node, weight in zip(nodes, weights):
            step += 1
            accumulator.dt = 0.5 * width * weight
            accumulator.add(step, centre + 0.5 * width * node, zero_u, zero_p)
    terms = accumulator.terms
    return terms.exact_velocity, terms.exact_gradient, terms.exact_pressure


def compute_spacetime_errors(
    terms: ErrorTerms,
    n_steps: int,
    normalization: NormalizationEnum = NormalizationEnum.DISCRETE,
    constants: Optional[Sequence[float]] = None,
) -> ErrorReport:
    """
    Space-Time Error Function
    =========================

    Parameters:
        terms (ErrorTerms): Accumulated error terms of a run.
        n_steps (int): Number of time nodes N the terms must cover.
        normalization (NormalizationEnum): `DISCRETE` uses the projection
            sums of `terms`; `TIME_INTEGRAL` requires `constants`.
        constants (Sequence[float], optional): Squared constants from
            `time_integral_constants`.

    Returns:
        ErrorReport: The normalized errors.

    Raises:
        ValidationError: On a missing time node, missing constants or a
            vanishing normalization constant.
    """

    normalization = NormalizationEnum.parse(normalization)
    missing = sorted(set(range(1, n_steps + 1)) - set(terms.steps))
    if missing:
        raise ValidationError(
            message="missing time node %(n)d.",
            params={"n": missing[0]},
            code="missing_node",
        )
    if normalization is NormalizationEnum.DISCRETE:
        constants = (
            terms.exact_velocity, terms.exact_gradient, terms.exact_pressure
        )
    elif constants is None:
        raise ValidationError(
            message="time-integral normalization needs constants.",
            code="missing_constants",
        )
    constants = tuple(float(value) for value in constants)
    if min(constants) <= 0.0:
        raise ValidationError(
            message="normalization constants must be positive, got "
            "%(constants)s.",
            params={"constants": constants},
            code="not_positive",
        )
    raw = tuple(
        float(np.sqrt(value))
        for value in (terms.velocity, terms.gradient, terms.pressure)
    )
    normalized = [
        error / np.sqrt(constant) for error, constant in zip(raw, constants)
    ]
    return ErrorReport(
        velocity_l2=float(normalized[0]),
        velocity_h1=float(normalized[1]),
        pressure_l2=float(normalized[2]),
        raw=raw,
        constants=constants,
        normalization=normalization,
        contributions=tuple(terms.contributions),
    )


def errors_for_run(
    result: RunResult,
    mesh: PolytopalMesh,
    problem: FlowProblem,
    normalization: NormalizationEnum = NormalizationEnum.DISCRETE,
) -> ErrorReport:
    """
    Returns the error report of a completed run.

    Raises:
        ValidationError: When the run carries no error terms (no exact
            solution, or it diverged before the last node).
    """
    if result.errors is None:
        raise ValidationError(
            message="run has no exact solution to compare with.",
            code="no_exact_solution",
        )
    normalization = NormalizationEnum.parse(normalization)
    constants = None
    if normalization is NormalizationEnum.TIME_INTEGRAL:
        constants = time_integral_constants(
            mesh, problem, result.config.T, config=result.config.operators
        )
    return compute_spacetime_errors(
        result.errors, result.config.n_steps, normalization, constants
    )


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "ErrorReport",
    "compute_spacetime_errors",
    "errors_for_run",
    "time_integral_constants",
]
