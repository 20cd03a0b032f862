# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Streaming Space-Time Error Accumulation
================================================

Per time node n, with ``u*`` the hybrid projection and ``p*`` the
zero-mean cell projection of the exact solution at ``t^n``:

- velocity: ``sum_c |c| |u_c - u*_c|^2``,
- gradient: ``sum_c sum_f |p_fc| |G_fc(u - u*)|^2``,
- pressure: ``sum_c |c| (p_c - p*_c)^2``,

each multiplied by ``dt`` and summed over n = 1..N, together with the same
sums for the projection itself.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
from dataclasses import dataclass, field

# Import | Libraries
import numpy as np

# Import | Local Modules
from ..exceptions import ValidationError
from ..mesh import PolytopalMesh
from ..operators import OperatorConfig, cell_gradients
from ..spaces import (
    HybridVelocity,
    PressureField,
    ScalarField,
    VectorField,
    project_pressure,
    project_velocity,
    zero_mean_adjust,
)


# =============================================================================
# Classes
# =============================================================================

@dataclass
class ErrorTerms:
    """
    Error Terms Class
    =================

    Running sums of squared space-time norms.

    Attributes:
        velocity (float): Squared l2(L2) velocity error.
        gradient (float): Squared l2(H1) velocity error.
        pressure (float): Squared l2(L2) pressure error.
        exact_velocity (float): Squared l2(L2) norm of the projection.
        exact_gradient (float): Squared l2(H1) norm of the projection.
        exact_pressure (float): Squared l2(L2) norm of the projection.
        contributions (list[tuple[int, float, float, float]]): Per time
            node, the step index and its velocity, gradient and pressure
            terms.
    """

    velocity: float = 0.0
    gradient: float = 0.0
    pressure: float = 0.0
    exact_velocity: float = 0.0
    exact_gradient: float = 0.0
    exact_pressure: float = 0.0
    contributions: list[tuple[int, float, float, float]] = field(
        default_factory=list
    )

    @property
    def steps(self) -> list[int]:
        return [item[0] for item in self.contributions]

    def to_dict(self) -> dict:
        return {
            "velocity": self.velocity,
            "gradient": self.gradient,
            "pressure": self.pressure,
            "exact_velocity": self.exact_velocity,
            "exact_gradient": self.exact_gradient,
            "exact_pressure": self.exact_pressure,
            "n_nodes": len(self.contributions),
        }


class ErrorAccumulator:
    """
    Error Accumulator Class
    =======================

    Adds the error terms of every time node of a run as it is computed.

    Attributes:
        mesh (PolytopalMesh): The mesh.
        terms (ErrorTerms): The running sums.
    """

    def __init__(
        self,
        mesh: PolytopalMesh,
        exact_velocity: VectorField,
        exact_pressure: ScalarField,
        dt: float,
        config: OperatorConfig = OperatorConfig(),
    ) -> None:
        self.mesh = mesh
        self.exact_velocity = exact_velocity
        self.exact_pressure = exact_pressure
        self.dt = dt
        self.config = config
        self.terms = ErrorTerms()

    def _gradient_square(self, vector: np.ndarray) -> float:
        gradients = cell_gradients(self.mesh, vector, self.config)
        squares = np.einsum("nij,nij->n", gradients, gradients)
        return float(self.mesh.subpyramid_measures @ squares)

    def _cell_square(self, values: np.ndarray) -> float:
        if values.ndim == 2:
            values = np.einsum("ij,ij->i", values, values)
        else:
            values = values * values
        return float(self.mesh.cell_measures @ values)

    def add(
        self,
        step: int,
        time: float,
        velocity: HybridVelocity,
        pressure: PressureField,
    ) -> None:
        """
        Adds the terms of time node `step`.

        Raises:
            ValidationError: When `step` was already accumulated.
        """
        if step in self.terms.steps:
            raise ValidationError(
                message="time node %(n)d accumulated twice.",
                params={"n": step},
                code="duplicate_node",
            )
        degree = self.config.quadrature_degree
        exact_u = project_velocity(
            self.mesh, self.exact_velocity, time, degree
        )
        exact_p = zero_mean_adjust(
            project_pressure(self.mesh, self.exact_pressure, time, degree),
            self.mesh,
        )
        difference = velocity - exact_u
        dt = self.dt
        velocity_term = dt * self._cell_square(difference.cell_values)
        gradient_term = dt * self._gradient_square(difference.to_vector())
        pressure_term = dt * self._cell_square(
            pressure.cell_values - exact_p.cell_values
        )
        terms = self.terms
        terms.velocity += velocity_term
        terms.gradient += gradient_term
        terms.pressure += pressure_term
        terms.exact_velocity += dt * self._cell_square(exact_u.cell_values)
        terms.exact_gradient += dt * self._gradient_square(exact_u.to_vector())
        terms.exact_pressure += dt * self._cell_square(exact_p.cell_values)
        terms.contributions.append(
            (step, velocity_term, gradient_term, pressure_term)
        )

    def check_complete(self, n_steps: int) -> None:
        """
        Raises:
            ValidationError: When a time node in ``1..n_steps`` is missing.
        """
        missing = sorted(set(range(1, n_steps + 1)) - set(self.terms.steps))
        if missing:
            raise ValidationError(
                message="missing time node %(n)d.",
                params={"n": missing[0]},
                code="missing_node",
            )


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "ErrorAccumulator",
    "ErrorTerms",
]
