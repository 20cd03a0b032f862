# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Case Enum Class
========================

Benchmark cases with known exact solutions.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
from enum import Enum

# Import | Local Modules
from ..exceptions import ValidationError


# =============================================================================
# Classes
# =============================================================================

class CaseEnum(Enum):
    """
    Case Enum Class
    ===============

    Enum Members:
    - TGV2D: Two-dimensional Taylor-Green vortex on the periodic box
        [0, 2pi]^2 with exact Dirichlet data.
    - MTGV3D: Three-dimensional Taylor-Green vortex with a sinusoidal
        amplitude and a manufactured source term on the unit cube.
    - CUSTOM: User-supplied handles.
    """
    TGV2D = "tgv2d"
    MTGV3D = "mtgv3d"
    CUSTOM = "custom"

    @classmethod
    def choices(cls) -> tuple[str, ...]:
        """
        Returns the string values accepted in run configurations and on the
        command line.
        """
        return tuple(item.value for item in cls)

    @classmethod
    def parse(cls, value: "str | CaseEnum") -> "CaseEnum":
        """
        Returns the member matching `value` (a member or its string value).

        Raises:
            ValidationError: If `value` names no member.
        """
        if isinstance(value, cls):
            return value
        for item in cls:
            if item.value == value:
                return item
        raise ValidationError(
            message="%(value)r is not one of %(choices)s.",
            params={"value": value, "choices": ", ".join(cls.choices())},
            code="invalid_choice",
        )


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "CaseEnum",
]
