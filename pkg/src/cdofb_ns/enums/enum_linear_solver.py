# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Linear Solver Enum Class
=================================

Linear solver routes available to the time-stepping schemes.

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

class LinearSolverEnum(Enum):
    """
    Linear Solver Enum Class
    ========================

    Enum Members:
    - ITERATIVE: Jacobi-CG for SPD velocity systems, right-preconditioned
        GMRES for nonsymmetric ones, Golub-Kahan bidiagonalization for
        symmetric saddle points and block GMRES for nonsymmetric ones.
    - DIRECT: Sparse LU factorization (SuperLU) for every system; saddle
        points are bordered with the zero-mean pressure constraint.
    """
    ITERATIVE = "iterative"
    DIRECT = "direct"

    @classmethod
    def choices(cls) -> tuple[str, ...]:
        """
        Returns the string values accepted in run configurations and on the
        command line.
        """
        return tuple(item.value for item in cls)

    @classmethod
    def parse(cls, value: "str | LinearSolverEnum") -> "LinearSolverEnum":
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
    "LinearSolverEnum",
]
