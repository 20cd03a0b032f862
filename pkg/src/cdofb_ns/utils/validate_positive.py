# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Positivity Validation Functions
========================================

Validators for strictly positive scalars and integers, used by the
configuration dataclasses and the mesh generators.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
import math
from numbers import Integral, Real

# Import | Local Modules
from ..exceptions import ValidationError


# =============================================================================
# Variables
# =============================================================================

__all__: list[str] = [
    "validate_positive",
    "validate_positive_int",
]


# =============================================================================
# Functions
# =============================================================================

def validate_positive(value, name: str = "value") -> float:
    """
    Positive Scalar Validation Function
    ===================================

    Validates that `value` is a finite real number strictly greater than
    zero.

    Parameters:
        value (float): The number to check.
        name (str): Name used in the error message.

    Returns:
        float: The value, converted to float.

    Raises:
        ValidationError: If the value is not finite or not positive.
    """

    if (
        isinstance(value, bool)
        or not isinstance(value, Real)
        or not math.isfinite(value)
        or value <= 0
    ):
        raise ValidationError(
            message="%(name)s must be a positive finite number, got "
            "%(value)r.",
            params={"name": name, "value": value},
            code="not_positive",
        )
    return float(value)


def validate_positive_int(value, name: str = "value") -> int:
    """
    Validates that `value` is an integer greater than or equal to one.
    """

    if isinstance(value, bool) or not isinstance(value, Integral):
        raise ValidationError(
            message="%(name)s must be an integer, got %(value)r.",
            params={"name": name, "value": value},
            code="invalid",
        )
    if value < 1:
        raise ValidationError(
            message="%(name)s must be at least 1, got %(value)r.",
            params={"name": name, "value": value},
            code="not_positive",
        )
    return int(value)
