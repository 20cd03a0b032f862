# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Benchmark Cases
========================

Exact solutions and case descriptions of the benchmark problems:

- `tgv2d`: Decaying Taylor-Green vortex on ``[0, 2 pi]^2``, ``Re = 1 / nu``.
- `mtgv3d`: Modified Taylor-Green vortex on ``(0, 1)^3`` with a sinusoidal
  amplitude ``sin(8 pi t)`` and the matching source term.
- `custom`: Constant data, for smoke runs.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

# Import | Libraries
import numpy as np

# Import | Local Modules
from ..enums import CaseEnum
from ..exceptions import ValidationError
from ..timestep import FlowProblem
from ..utils import validate_positive


# =============================================================================
# Variables
# =============================================================================

TGV2D_BOX = ((0.0, 2.0 * math.pi), (0.0, 2.0 * math.pi))
MTGV3D_BOX = ((0.0, 1.0), (0.0, 1.0), (0.0, 1.0))

# Viscosity of the Re ~ 33 accuracy study.
RE33_VISCOSITY = 0.03


# =============================================================================
# Functions | Exact Solutions
# =============================================================================

def exact_tgv2d(
    t: float, x: np.ndarray, nu: float
) -> tuple[np.ndarray, np.ndarray]:
    """
    2D Taylor-Green Function
    ========================

    Returns velocity ``e^{-2 nu t} (sin x cos y, -cos x sin y)`` and
    pressure ``1/4 e^{-4 nu t} (cos 2x + cos 2y)`` at the points `x`,
    shape ``(n, 2)``.
    """
    x = np.atleast_2d(np.asarray(x, dtype=float))
    sx, cx = np.sin(x[:, 0]), np.cos(x[:, 0])
    sy, cy = np.sin(x[:, 1]), np.cos(x[:, 1])
    decay = math.exp(-2.0 * nu * t)
    velocity = decay * np.column_stack((sx * cy, -cx * sy))
    pressure = 0.25 * decay * decay * (
        np.cos(2.0 * x[:, 0]) + np.cos(2.0 * x[:, 1])
    )
    return velocity, pressure


def _mtgv3d_shapes(x: np.ndarray):
    angles = 2.0 * math.pi * np.atleast_2d(np.asarray(x, dtype=float))
    s, c = np.sin(angles), np.cos(angles)
    velocity = np.column_stack(
        (
            -2.0 * c[:, 0] * s[:, 1] * s[:, 2],
            s[:, 0] * c[:, 1] * s[:, 2],
            s[:, 0] * s[:, 1] * c[:, 2],
        )
    )
    pressure = -6.0 * math.pi * s[:, 0] * s[:, 1] * s[:, 2]
    pressure_gradient = -12.0 * math.pi**2 * np.column_stack(
        (
            c[:, 0] * s[:, 1] * s[:, 2],
            s[:, 0] * c[:, 1] * s[:, 2],
            s[:, 0] * s[:, 1] * c[:, 2],
        )
    )
    s2, c2 = np.sin(2.0 * angles), np.cos(2.0 * angles)
    # (u' . grad) u'
    convection = np.column_stack(
        (
            math.pi * s2[:, 0] * (c2[:, 1] + c2[:, 2] - 2.0),
            -0.5 * math.pi * s2[:, 1] * (c2[:, 0] - 2.0 * c2[:, 2] + 1.0),
            -0.5 * math.pi * s2[:, 2] * (c2[:, 0] - 2.0 * c2[:, 1] + 1.0),
        )
    )
    return velocity, pressure, pressure_gradient, convection


def exact_mtgv3d(
    t: float, x: np.ndarray, nu: float = 1.0
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Modified 3D Taylor-Green Function
    =================================

    Returns velocity ``a(t) u'``, pressure ``a(t) p'`` and the source term

        f = a(t) (12 pi^2 nu u' + grad p') + 8 pi cos(8 pi t) u'
            + a(t)^2 (u' . grad) u'

    with ``a(t) = sin(8 pi t)``. For ``nu = 1`` the first bracket is
    ``(-36 pi^2 cos(2 pi x) sin(2 pi y) sin(2 pi z), 0, 0)``.

    Parameters:
        t (float): Time.
        x (np.ndarray): Points, shape ``(n, 3)``.
        nu (float): Viscosity.

    Returns:
        tuple[np.ndarray, np.ndarray, np.ndarray]: Velocity ``(n, 3)``,
            pressure ``(n,)`` and forcing ``(n, 3)``.
    """
    amplitude = math.sin(8.0 * math.pi * t)
    rate = 8.0 * math.pi * math.cos(8.0 * math.pi * t)
    velocity, pressure, gradient, convection = _mtgv3d_shapes(x)
    forcing = (
        amplitude * (12.0 * math.pi**2 * nu * velocity + gradient)
        + rate * velocity
        + amplitude**2 * convection
    )
    return amplitude * velocity, amplitude * pressure, forcing


# =============================================================================
# Classes
# =============================================================================

@dataclass(frozen=True)
class CaseSpec:
    """
    Case Specification Class
    ========================

    Attributes:
        case (CaseEnum): Case id.
        box (tuple): Domain extents per axis.
        nu (float): Viscosity; ``Re = 1 / nu`` with unit length and
            velocity scales.
        T (float): Observation time.
        velocity (Callable, optional): Exact velocity ``u(t, x)``.
        pressure (Callable, optional): Exact pressure ``p(t, x)``.
        forcing (Callable, optional): Source term ``f(t, x)``.
        initial_velocity (Callable, optional): Initial velocity; the exact
            velocity at ``t = 0`` when not given.
        boundary_velocity (Callable, optional): Dirichlet data; the exact
            velocity when not given.
        metadata (dict): Free-form notes recorded with the results.
    """

    case: CaseEnum
    box: tuple
    nu: float
    T: float
    velocity: Optional[Callable] = None
    pressure: Optional[Callable] = None
    forcing: Optional[Callable] = None
    initial_velocity: Optional[Callable] = None
    boundary_velocity: Optional[Callable] = None
    metadata: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "case", CaseEnum.parse(self.case))
        validate_positive(self.nu, name="nu")
        validate_positive(self.T, name="T")

    @property
    def dim(self) -> int:
        return len(self.box)

    @property
    def reynolds(self) -> float:
        return 1.0 / self.nu

    def problem(self) -> FlowProblem:
        """
        Returns the data handles of the case.
        """
        return FlowProblem(
            initial_velocity=self.initial_velocity or self.velocity,
            initial_pressure=self.pressure,
            boundary_velocity=self.boundary_velocity or self.velocity,
            forcing=self.forcing,
            exact_velocity=self.velocity,
            exact_pressure=self.pressure,
        )

    def to_dict(self) -> dict:
        return {
            "id": self.case.value,
            "box": [list(extent) for extent in self.box],
            "nu": self.nu,
            "reynolds": self.reynolds,
            "T": self.T,
            **self.metadata,
        }


# =============================================================================
# Functions | Case Factories
# =============================================================================

def tgv2d_case(
    nu: Optional[float] = None,
    T: float = 1.2,
    reynolds: Optional[float] = None,
) -> CaseSpec:
    """
    Returns the 2D Taylor-Green case for viscosity `nu` or Reynolds number
    `reynolds` (exactly one of them).
    """
    if (nu is None) == (reynolds is None):
        raise ValidationError(
            message="give exactly one of nu and reynolds.",
            code="invalid",
        )
    if nu is None:
        nu = 1.0 / validate_positive(reynolds, name="reynolds")
    nu = validate_positive(nu, name="nu")
    return CaseSpec(
        case=CaseEnum.TGV2D,
        box=TGV2D_BOX,
        nu=nu,
        T=T,
        velocity=lambda t, x: exact_tgv2d(t, x, nu)[0],
        pressure=lambda t, x: exact_tgv2d(t, x, nu)[1],
    )


def mtgv3d_case(T: float = 2.0, nu: float = 1.0) -> CaseSpec:
    """
    Returns the modified 3D Taylor-Green case on the unit cube.
    """
    return CaseSpec(
        case=CaseEnum.MTGV3D,
        box=MTGV3D_BOX,
        nu=nu,
        T=T,
        velocity=lambda t, x: exact_mtgv3d(t, x, nu)[0],
        pressure=lambda t, x: exact_mtgv3d(t, x, nu)[1],
        forcing=lambda t, x: exact_mtgv3d(t, x, nu)[2],
    )


def _constant_field(value: Optional[Sequence[float]], dim: int):
    if value is None:
        return None
    vector = np.asarray(value, dtype=float)
    if vector.shape != (dim,):
        raise ValidationError(
            message="expected %(dim)d components, got %(got)s.",
            params={"dim": dim, "got": list(vector)},
            code="dimension_mismatch",
        )
    return lambda t, x: np.tile(vector, (np.atleast_2d(x).shape[0], 1))


def custom_case(
    box: Sequence[Sequence[float]],
    nu: float,
    T: float,
    forcing: Optional[Sequence[float]] = None,
    boundary_velocity: Optional[Sequence[float]] = None,
    initial_velocity: Optional[Sequence[float]] = None,
) -> CaseSpec:
    """
    Returns a case with constant (or zero) forcing, boundary and initial
    velocities and no exact solution.
    """
    box = tuple(tuple(float(v) for v in extent) for extent in box)
    dim = len(box)
    boundary = _constant_field(boundary_velocity, dim)
    return CaseSpec(
        case=CaseEnum.CUSTOM,
        box=box,
        nu=nu,
        T=T,
        forcing=_constant_field(forcing, dim),
        initial_velocity=_constant_field(initial_velocity, dim),
        boundary_velocity=boundary,
    )


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "CaseSpec",
    "MTGV3D_BOX",
    "RE33_VISCOSITY",
    "TGV2D_BOX",
    "custom_case",
    "exact_mtgv3d",
    "exact_tgv2d",
    "mtgv3d_case",
    "tgv2d_case",
]
