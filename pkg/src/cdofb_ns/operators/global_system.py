# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Global System Class
============================

The time-independent operator blocks of one simulation, assembled once on
the full velocity vector. Right-hand sides and Picard convection matrices
change every step and are built by the time-stepping schemes.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

# Import | Libraries
import numpy as np
import scipy.sparse as sp

# Import | Local Modules
from ..mesh import PolytopalMesh
from ..utils import validate_positive
from .config_operator import OperatorConfig
from .coupling import assemble_coupling, assemble_divdiv, assemble_divergence
from .diffusion import assemble_diffusion
from .dof_map import DofMap
from .mass_source import mass_diagonal


# =============================================================================
# Variables
# =============================================================================

logger = logging.getLogger(__name__)


# =============================================================================
# Classes
# =============================================================================

@dataclass(frozen=True, eq=False)
class GlobalSystem:
    """
    Global System Class
    ===================

    Attributes:
        mesh (PolytopalMesh): The mesh.
        dofs (DofMap): Velocity DoF numbering.
        diffusion (scipy.sparse.csr_matrix): a_h.
        divdiv (scipy.sparse.csr_matrix): d_h.
        coupling (scipy.sparse.csr_matrix): B, with ``b_h(v, q) = q^T B v``.
        divergence (scipy.sparse.csr_matrix): D, cellwise divergence.
        mass (np.ndarray): Mass diagonal in flat layout.
        nu (float): Viscosity.
        eta (float, optional): Grad-div parameter (artificial
            compressibility only).
        config (OperatorConfig): Operator settings used for assembly.
    """

    mesh: PolytopalMesh
    dofs: DofMap
    diffusion: sp.csr_matrix
    divdiv: sp.csr_matrix
    coupling: sp.csr_matrix
    divergence: sp.csr_matrix
    mass: np.ndarray
    nu: float
    eta: Optional[float]
    config: OperatorConfig

    @cached_property
    def A_visc(self) -> sp.csr_matrix:
        """``nu a_h``."""
        return sp.csr_matrix(self.nu * self.diffusion)

    @cached_property
    def A_divdiv(self) -> sp.csr_matrix:
        """``nu eta d_h``; zero without a grad-div parameter."""
        if self.eta is None:
            return sp.csr_matrix(self.divdiv.shape)
        return sp.csr_matrix(self.nu * self.eta * self.divdiv)

    @cached_property
    def M(self) -> sp.csr_matrix:
        return sp.diags(self.mass, format="csr")

    @cached_property
    def coupling_free(self) -> sp.csr_matrix:
        """B restricted to free velocity DoFs."""
        return sp.csr_matrix(self.coupling[:, self.dofs.free])

    @cached_property
    def coupling_fixed(self) -> sp.csr_matrix:
        """B restricted to boundary velocity DoFs."""
        return sp.csr_matrix(self.coupling[:, self.dofs.fixed])


# =============================================================================
# Functions
# =============================================================================

def assemble_global_system(
    mesh: PolytopalMesh,
    nu: float,
    eta: Optional[float] = None,
    config: OperatorConfig = OperatorConfig(),
) -> GlobalSystem:
    """
    Global Assembly Function
    ========================

    Assembles every time-independent block for viscosity `nu` and, for
    artificial compressibility, grad-div parameter `eta`.

    Returns:
        GlobalSystem: The assembled blocks.
    """

    validate_positive(nu, name="nu")
    if eta is not None:
        validate_positive(eta, name="eta")
    system = GlobalSystem(
        mesh=mesh,
        dofs=DofMap(mesh),
        diffusion=assemble_diffusion(mesh, config),
        divdiv=assemble_divdiv(mesh),
        coupling=assemble_coupling(mesh),
        divergence=assemble_divergence(mesh),
        mass=mass_diagonal(mesh),
        nu=float(nu),
        eta=None if eta is None else float(eta),
        config=config,
    )
    logger.debug(
        "assembled system: %d velocity DoFs (%d free), %d pressure DoFs",
        system.dofs.n_velocity, system.dofs.n_free, system.dofs.n_pressure,
    )
    return system


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "GlobalSystem",
    "assemble_global_system",
]
