# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Coupling Enum Class
============================

Velocity-pressure coupling strategies of the time-stepping schemes.

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

class CouplingEnum(Enum):
    """
    Coupling Enum Class
    ===================

    Enum Members:
    - MONOLITHIC: Velocity and pressure solved together as a saddle-point
        system at every time step.
    - ARTIFICIAL_COMPRESSIBILITY: Grad-div penalized velocity solve followed
        by an algebraic pressure update.
    """
    MONOLITHIC = "monolithic"
    ARTIFICIAL_COMPRESSIBILITY = "artificial_compressibility"

    @classmethod
    def choices(cls) -> tuple[str, ...]:
        """
        Returns the string values accepted in run configurations and on the
        command line.
        """
        return tuple(item.value for item in cls)

    @classmethod
    def parse(cls, value: "str | CouplingEnum") -> "CouplingEnum":
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
    "CouplingEnum",
]
