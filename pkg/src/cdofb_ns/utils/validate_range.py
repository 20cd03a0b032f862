# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Interval Validation Function
=====================================

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
import math
from numbers import Real

# Import | Local Modules
from ..exceptions import ValidationError


# =============================================================================
# Variables
# =============================================================================

__all__: list[str] = [
    "validate_in_range",
]


# =============================================================================
# Functions
# =============================================================================

def validate_in_range(
    value,
    low: float,
    high: float,
    name: str = "value",
    closed_low: bool = False,
    closed_high: bool = False,
) -> float:
    """
    Interval Validation Function
    ============================

    Validates that `value` lies in the interval between `low` and `high`,
    open by default on both ends.

    Parameters:
        value (float): The number to check.
        low (float): Lower bound.
        high (float): Upper bound.
        name (str): Name used in the error message.
        closed_low (bool): Whether `low` itself is admissible.
        closed_high (bool): Whether `high` itself is admissible.

    Returns:
        float: The value, converted to float.

    Raises:
        ValidationError: If the value is outside the interval.
    """

    ok = (
        not isinstance(value, bool)
        and isinstance(value, Real)
        and math.isfinite(value)
    )
    if ok:
        above = value >= low if closed_low else value > low
        below = value <= high if closed_high else value < high
        ok = above and below
    if not ok:
        left = "[" if closed_low else "("
        right = "]" if closed_high else ")"
        raise ValidationError(
            message="%(name)s must lie in %(interval)s, got %(value)r.",
            params={
                "name": name,
                "interval": f"{left}{low}, {high}{right}",
                "value": value,
            },
            code="out_of_range",
        )
    return float(value)
