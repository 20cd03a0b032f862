# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
CDO-Fb Utilities Module
=======================

Validation helpers shared by the configuration dataclasses.

"""


# =============================================================================
# Imports
# =============================================================================

# Import | Local Modules
from .validate_positive import validate_positive, validate_positive_int
from .validate_range import validate_in_range


# =============================================================================
# Module Level Variables
# =============================================================================

__all__ = [
    "validate_in_range",
    "validate_positive",
    "validate_positive_int",
]
