# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Normalization Enum Class
=================================

How space-time error norms are normalized.

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

class NormalizationEnum(Enum):
    """
    Normalization Enum Class
    ========================

    Enum Members:
    - DISCRETE: Same discrete norm of the projected exact solution at the
        time nodes of the run.
    - TIME_INTEGRAL: Same space norms of the projected exact solution
        integrated over the observation interval with a Gauss rule, so the
        constant does not depend on the time step.
    """
    DISCRETE = "discrete"
    TIME_INTEGRAL = "time_integral"

    @classmethod
    def choices(cls) -> tuple[str, ...]:
        """
        Returns the string values accepted in run configurations and on the
        command line.
        """
        return tuple(item.value for item in cls)

    @classmethod
    def parse(cls, value: "str | NormalizationEnum") -> "NormalizationEnum":
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
    "NormalizationEnum",
]
