# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Operator Configuration Class
=====================================

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
import math
from dataclasses import dataclass
from numbers import Integral
from typing import Optional

# Import | Local Modules
from ..exceptions import ValidationError
from ..spaces import DEFAULT_DEGREE
from ..utils import validate_positive


# =============================================================================
# Classes
# =============================================================================

@dataclass(frozen=True)
class OperatorConfig:
    """
    Operator Configuration Class
    ============================

    Attributes:
        stab_param (float, optional): Stabilization coefficient alpha of
            the gradient reconstruction. None selects ``1 / sqrt(d)`` (the
            hybrid finite volume choice); 1 gives the generalized
            Crouzeix-Raviart scheme.
        quadrature_degree (int): Exactness degree of the sub-simplex
            quadrature used for projections and source terms.
    """

    stab_param: Optional[float] = None
    quadrature_degree: int = DEFAULT_DEGREE

    def __post_init__(self) -> None:
        if self.stab_param is not None:
            validate_positive(self.stab_param, name="stab_param")
        if (
            isinstance(self.quadrature_degree, bool)
            or not isinstance(self.quadrature_degree, Integral)
            or self.quadrature_degree < 0
        ):
            raise ValidationError(
                message="quadrature_degree must be a nonnegative integer, "
                "got %(degree)r.",
                params={"degree": self.quadrature_degree},
                code="out_of_range",
            )

    def alpha(self, dim: int) -> float:
        """
        Returns the stabilization coefficient used in dimension `dim`.
        """
        if self.stab_param is None:
            return 1.0 / math.sqrt(dim)
        return float(self.stab_param)


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "OperatorConfig",
]
