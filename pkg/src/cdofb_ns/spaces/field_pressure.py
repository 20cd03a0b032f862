# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Pressure Field Class
=============================

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
from dataclasses import dataclass

# Import | Libraries
import numpy as np

# Import | Local Modules
from ..exceptions import ValidationError
from ..mesh import PolytopalMesh


# =============================================================================
# Classes
# =============================================================================

@dataclass(frozen=True, eq=False)
class PressureField:
    """
    Pressure Field Class
    ====================

    A discrete pressure, one scalar per cell.

    Attributes:
        cell_values (np.ndarray): Shape ``(nc,)``.
    """

    cell_values: np.ndarray

    def __post_init__(self) -> None:
        if self.cell_values.ndim != 1:
            raise ValidationError(
                message="pressure values must be a 1D array, got %(shape)s.",
                params={"shape": self.cell_values.shape},
                code="invalid_shape",
            )
        if not np.all(np.isfinite(self.cell_values)):
            raise ValidationError(
                message="pressure values must be finite.", code="not_finite"
            )

    @classmethod
    def zeros(cls, mesh: PolytopalMesh) -> "PressureField":
        return cls(np.zeros(mesh.n_cells))

    def mean(self, mesh: PolytopalMesh) -> float:
        """Volume-weighted mean over the domain."""
        return float(
            mesh.cell_measures @ self.cell_values / mesh.domain_measure
        )

    def __add__(self, other: "PressureField") -> "PressureField":
        return PressureField(self.cell_values + other.cell_values)

    def __sub__(self, other: "PressureField") -> "PressureField":
        return PressureField(self.cell_values - other.cell_values)

    def __mul__(self, scale: float) -> "PressureField":
        return PressureField(scale * self.cell_values)

    __rmul__ = __mul__


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "PressureField",
]
