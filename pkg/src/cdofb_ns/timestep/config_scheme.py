# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Time-Stepping Scheme Configuration
===========================================

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
from dataclasses import dataclass, field
from typing import Optional

# Import | Local Modules
from ..enums import ConvectionEnum, CouplingEnum, LinearSolverEnum
from ..exceptions import ValidationError
from ..linalg import SolverConfig
from ..operators import OperatorConfig
from ..utils import validate_in_range, validate_positive, validate_positive_int


# =============================================================================
# Variables
# =============================================================================

DEFAULT_PICARD_TOLERANCE = 1e-8
DEFAULT_PICARD_MAX = 50


# =============================================================================
# Classes
# =============================================================================

@dataclass(frozen=True)
class SchemeConfig:
    """
    Scheme Configuration Class
    ==========================

    Attributes:
        coupling (CouplingEnum): Monolithic or artificial compressibility.
        order (int): Time order, 1 or 2.
        convection (ConvectionEnum): Implicit, explicit or disabled.
        dt (float): Time step.
        T (float): Observation time; ``N = round(T / dt)`` steps are run.
        nu (float): Viscosity.
        eta (float, optional): Grad-div parameter, required for artificial
            compressibility.
        picard_tol (float): Relative cell-velocity increment stopping the
            Picard iteration.
        picard_max (int): Picard iteration cap.
        linear_solver (LinearSolverEnum): Iterative or direct route.
        solver (SolverConfig, optional): Iterative solver settings;
            defaults to the tolerances of the time order.
        operators (OperatorConfig): Stabilization and quadrature settings.
    """

    coupling: CouplingEnum
    order: int
    convection: ConvectionEnum
    dt: float
    T: float
    nu: float
    eta: Optional[float] = None
    picard_tol: float = DEFAULT_PICARD_TOLERANCE
    picard_max: int = DEFAULT_PICARD_MAX
    linear_solver: LinearSolverEnum = LinearSolverEnum.ITERATIVE
    solver: Optional[SolverConfig] = None
    operators: OperatorConfig = field(default_factory=OperatorConfig)

    def __post_init__(self) -> None:
        object.__setattr__(self, "coupling", CouplingEnum.parse(self.coupling))
        object.__setattr__(
            self, "convection", ConvectionEnum.parse(self.convection)
        )
        object.__setattr__(
            self, "linear_solver", LinearSolverEnum.parse(self.linear_solver)
        )
        if self.order not in (1, 2) or isinstance(self.order, bool):
            raise ValidationError(
                message="order must be 1 or 2, got %(order)r.",
                params={"order": self.order},
                code="invalid_choice",
            )
        validate_positive(self.dt, name="dt")
        validate_positive(self.T, name="T")
        validate_positive(self.nu, name="nu")
        validate_in_range(self.picard_tol, 0.0, 1.0, name="picard_tol")
        validate_positive_int(self.picard_max, name="picard_max")
        if self.is_artificial_compressibility:
            if self.eta is None:
                raise ValidationError(
                    message="artificial compressibility needs eta.",
                    code="missing_eta",
                )
            validate_positive(self.eta, name="eta")
            if (
                self.order == 2
                and self.convection is ConvectionEnum.IMPLICIT
            ):
                raise ValidationError(
                    message="second-order artificial compressibility "
                    "supports explicit convection only.",
                    code="unsupported_scheme",
                )
        if self.solver is None:
            object.__setattr__(
                self, "solver", SolverConfig.for_order(self.order)
            )
        if self.T < self.dt:
            raise ValidationError(
                message="observation time shorter than time step "
                "(T=%(T)g, dt=%(dt)g).",
                params={"T": self.T, "dt": self.dt},
                code="observation_time",
            )

    @property
    def is_artificial_compressibility(self) -> bool:
        return self.coupling is CouplingEnum.ARTIFICIAL_COMPRESSIBILITY

    @property
    def n_steps(self) -> int:
        """``N = round(T / dt)``."""
        return int(round(self.T / self.dt))

    @property
    def name(self) -> str:
        """Short label such as ``"mono-o1-implicit"``."""
        coupling = "ac" if self.is_artificial_compressibility else "mono"
        return f"{coupling}-o{self.order}-{self.convection.value}"

    def to_dict(self) -> dict:
        return {
            "coupling": self.coupling.value,
            "order": self.order,
            "convection": self.convection.value,
            "dt": self.dt,
            "T": self.T,
            "N": self.n_steps,
            "nu": self.nu,
            "eta": self.eta,
            "picard_tol": self.picard_tol,
            "picard_max": self.picard_max,
            "linear_solver": self.linear_solver.value,
            "tolerance": self.solver.tolerance,
            "stab_param": self.operators.stab_param,
        }


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "DEFAULT_PICARD_MAX",
    "DEFAULT_PICARD_TOLERANCE",
    "SchemeConfig",
]
