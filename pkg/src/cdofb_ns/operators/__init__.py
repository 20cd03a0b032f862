# -*- coding: utf-8 -*-

"""
CDO-Fb Operators Module
=======================

Assembly of the discrete operators: gradient reconstruction, diffusion,
divergence and coupling, div-div, convection, mass and source, and the
inputs of the inf-sup diagnostic.

"""

# =============================================================================
# Imports
# =============================================================================

from .config_operator import OperatorConfig
from .convection import convection_apply, convection_form, convection_matrix
from .coupling import (
    assemble_coupling,
    assemble_divdiv,
    assemble_divergence,
    divergence_values,
)
from .diffusion import (
    assemble_diffusion,
    assemble_scalar_diffusion,
    measure_stability_constant,
)
from .dof_map import DofMap, expand_components
from .global_system import GlobalSystem, assemble_global_system
from .infsup import InfSupInputs, infsup_inputs, seminorm_gram
from .local_cell import (
    GradientReconstruction,
    LocalCellOperators,
    cell_gradients,
    divergence,
    grad_reconstruct,
    local_cell_operators,
)
from .mass_source import (
    assemble_mass,
    assemble_mass_and_source,
    assemble_source,
    mass_diagonal,
)


# =============================================================================
# Public Interface
# =============================================================================

__all__ = [
    "DofMap",
    "GlobalSystem",
    "GradientReconstruction",
    "InfSupInputs",
    "LocalCellOperators",
    "OperatorConfig",
    "assemble_coupling",
    "assemble_diffusion",
    "assemble_divdiv",
    "assemble_divergence",
    "assemble_global_system",
    "assemble_mass",
    "assemble_mass_and_source",
    "assemble_scalar_diffusion",
    "assemble_source",
    "cell_gradients",
    "convection_apply",
    "convection_form",
    "convection_matrix",
    "divergence",
    "divergence_values",
    "expand_components",
    "grad_reconstruct",
    "infsup_inputs",
    "local_cell_operators",
    "mass_diagonal",
    "measure_stability_constant",
    "seminorm_gram",
]
