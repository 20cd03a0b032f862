# -*- coding: utf-8 -*-

"""
CDO-Fb Enums Module
===================

Enumerations shared by the configuration dataclasses and the command line.

Currently, the module includes:
- `CaseEnum`: Benchmark cases with exact solutions.
- `ConvectionEnum`: Implicit, explicit or disabled convection.
- `CouplingEnum`: Monolithic or artificial compressibility coupling.
- `LinearSolverEnum`: Iterative or direct linear solver route.
- `NormalizationEnum`: Normalization of space-time error norms.

"""

# =============================================================================
# Imports
# =============================================================================

from .enum_case import CaseEnum
from .enum_convection import ConvectionEnum
from .enum_coupling import CouplingEnum
from .enum_linear_solver import LinearSolverEnum
from .enum_normalization import NormalizationEnum


# =============================================================================
# Public Interface
# =============================================================================

__all__ = [
    "CaseEnum",
    "ConvectionEnum",
    "CouplingEnum",
    "LinearSolverEnum",
    "NormalizationEnum",
]
