# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Flow Problem Data
==========================

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
from dataclasses import dataclass
from typing import Optional

# Import | Local Modules
from ..spaces import ScalarField, VectorField


# =============================================================================
# Classes
# =============================================================================

@dataclass(frozen=True)
class FlowProblem:
    """
    Flow Problem Class
    ==================

    Data handles of an unsteady flow problem. Every handle is a vectorized
    callable ``field(t, x)`` with ``x`` of shape ``(n, d)``; missing
    handles stand for zero.

    Attributes:
        initial_velocity (VectorField, optional): ``u_0``.
        initial_pressure (ScalarField, optional): ``p_0``.
        boundary_velocity (VectorField, optional): Dirichlet data.
        forcing (VectorField, optional): Source term ``f``.
        exact_velocity (VectorField, optional): Exact velocity, enables
            error accumulation.
        exact_pressure (ScalarField, optional): Exact pressure.
    """

    initial_velocity: Optional[VectorField] = None
    initial_pressure: Optional[ScalarField] = None
    boundary_velocity: Optional[VectorField] = None
    forcing: Optional[VectorField] = None
    exact_velocity: Optional[VectorField] = None
    exact_pressure: Optional[ScalarField] = None

    @property
    def has_exact_solution(self) -> bool:
        return (
            self.exact_velocity is not None
            and self.exact_pressure is not None
        )


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "FlowProblem",
]
