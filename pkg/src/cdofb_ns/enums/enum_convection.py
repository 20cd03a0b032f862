# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Convection Enum Class
==============================

Treatment of the nonlinear convection term in time.

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

class ConvectionEnum(Enum):
    """
    Convection Enum Class
    =====================

    Enum Members:
    - IMPLICIT: Picard iteration with a frozen transport field.
    - EXPLICIT: Convection evaluated from previous time levels on the
        right-hand side.
    - NONE: Convection disabled (Stokes limit).
    """
    IMPLICIT = "implicit"
    EXPLICIT = "explicit"
    NONE = "none"

    @classmethod
    def choices(cls) -> tuple[str, ...]:
        """
        Returns the string values accepted in run configurations and on the
        command line.
        """
        return tuple(item.value for item in cls)

    @classmethod
    def parse(cls, value: "str | ConvectionEnum") -> "ConvectionEnum":
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
    "ConvectionEnum",
]
