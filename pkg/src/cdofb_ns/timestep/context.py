# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides the Step Context
=========================

The step context owns the assembled blocks of a run and routes every
momentum or saddle-point solve to a linear solver.

Routing:
- Direct route: SuperLU; factorizations of time-independent operators are
  cached for the whole run.
- Symmetric momentum systems: `cg_jacobi`.
- Nonsymmetric momentum systems (Picard convection): `gmres`.
- Symmetric saddle systems: `gkb_saddle`.
- Nonsymmetric saddle systems: `gmres` on the block system with a diagonal
  right preconditioner.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
import logging
from typing import Optional

# Import | Libraries
import numpy as np
import scipy.sparse as sp

# Import | Local Modules
from ..enums import LinearSolverEnum
from ..linalg import (
    DirectFactorization,
    SaddleFactorization,
    SolverReport,
    cg_jacobi,
    gkb_saddle,
    gmres,
)
from ..mesh import PolytopalMesh
from ..operators import (
    assemble_global_system,
    assemble_source,
    convection_apply,
    convection_matrix,
)
from ..spaces import (
    HybridVelocity,
    PressureField,
    boundary_face_values,
    zero_mean_adjust,
)
from .config_scheme import SchemeConfig
from .problem import FlowProblem


# =============================================================================
# Variables
# =============================================================================

logger = logging.getLogger(__name__)


# =============================================================================
# Classes
# =============================================================================

class StepContext:
    """
    Step Context Class
    ==================

    Attributes:
        mesh (PolytopalMesh): The mesh.
        config (SchemeConfig): The scheme.
        problem (FlowProblem): Data handles.
        system (GlobalSystem): Time-independent blocks; the grad-div block
            is assembled for artificial compressibility only.
    """

    def __init__(
        self,
        mesh: PolytopalMesh,
        config: SchemeConfig,
        problem: FlowProblem,
    ) -> None:
        self.mesh = mesh
        self.config = config
        self.problem = problem
        eta = config.eta if config.is_artificial_compressibility else None
        self.system = assemble_global_system(
            mesh, config.nu, eta, config.operators
        )
        self.dofs = self.system.dofs
        self._static: dict[float, sp.csr_matrix] = {}
        self._factorizations: dict[tuple, object] = {}

    @property
    def degree(self) -> int:
        return self.config.operators.quadrature_degree

    @property
    def direct(self) -> bool:
        return self.config.linear_solver is LinearSolverEnum.DIRECT

    # Right-hand side pieces, all dual vectors in flat layout.

    def boundary_values(self, t: float) -> np.ndarray:
        """Boundary face DoFs at time `t`, in the order of ``dofs.fixed``."""
        return boundary_face_values(
            self.mesh, self.problem.boundary_velocity, t, self.degree
        ).ravel()

    def source(self, t: float) -> np.ndarray:
        return assemble_source(self.mesh, self.problem.forcing, t, self.degree)

    def mass_apply(self, velocity: HybridVelocity) -> np.ndarray:
        return self.system.mass * velocity.to_vector()

    def convection_load(self, velocity: HybridVelocity) -> np.ndarray:
        """``v -> t_h(u; u, v)``."""
        return convection_apply(velocity, velocity, self.mesh)

    def pressure_load(self, pressure: PressureField) -> np.ndarray:
        """``v -> b_h(v, p)``."""
        return self.system.coupling.T @ pressure.cell_values

    def divergence(self, velocity: HybridVelocity) -> np.ndarray:
        """Cellwise discrete divergence ``D_c(u)``."""
        return self.system.divergence @ velocity.to_vector()

    def divergence_norm(self, velocity: HybridVelocity) -> float:
        values = self.divergence(velocity)
        return float(np.sqrt(self.mesh.cell_measures @ (values * values)))

    def pressure_update(self, velocity: HybridVelocity) -> PressureField:
        """``-nu eta D_h(u)``."""
        return PressureField(
            -self.config.nu * self.config.eta * self.divergence(velocity)
        )

    # Operators.

    def operator(
        self,
        mass_coefficient: float,
        transport: Optional[HybridVelocity] = None,
    ) -> sp.csr_matrix:
        """
        Returns ``c M + nu a_h (+ nu eta d_h) (+ T(w))`` on the full
        velocity vector.
        """
        static = self._static.get(mass_coefficient)
        if static is None:
            static = sp.csr_matrix(
                mass_coefficient * self.system.M
                + self.system.A_visc
                + self.system.A_divdiv
            )
            self._static[mass_coefficient] = static
        if transport is None:
            return static
        return sp.csr_matrix(static + convection_matrix(transport, self.mesh))

    def _reduce(self, operator, rhs, boundary):
        free_block = self.dofs.free_block(operator)
        load = self.dofs.restrict(rhs)
        if boundary.size:
            load = load - self.dofs.lifting_block(operator) @ boundary
        return free_block, load

    def _cached(self, key: tuple, build):
        factorization = self._factorizations.get(key)
        if factorization is None:
            factorization = build()
            self._factorizations[key] = factorization
            logger.debug("cached factorization %s", key)
        return factorization

    # Solves.

    def solve_momentum(
        self,
        mass_coefficient: float,
        transport: Optional[HybridVelocity],
        rhs: np.ndarray,
        boundary: np.ndarray,
    ) -> tuple[HybridVelocity, SolverReport]:
        """
        Momentum Solve Function
        =======================

        Solves ``K u = rhs`` on the free DoFs with the boundary DoFs fixed
        to `boundary`, where ``K = operator(mass_coefficient, transport)``.

        Returns:
            tuple[HybridVelocity, SolverReport]: The velocity and the
                solver report.
        """

        operator = self.operator(mass_coefficient, transport)
        matrix, load = self._reduce(operator, rhs, boundary)
        if self.direct:
            if transport is None:
                factorization = self._cached(
                    ("momentum", mass_coefficient),
                    lambda: DirectFactorization(matrix),
                )
            else:
                factorization = DirectFactorization(matrix)
            free = factorization.solve(load)
            report = SolverReport(
                method="direct",
                iterations=1,
                residual=_relative_residual(matrix, free, load),
                converged=True,
                wall_time=factorization.factor_time,
            )
        elif transport is None:
            free, report = cg_jacobi(matrix, load, self.config.solver)
        else:
            free, report = gmres(matrix, load, self.config.solver)
        logger.debug(
            "momentum solve: %s, %d iterations, residual %.3e",
            report.method, report.iterations, report.residual,
        )
        velocity = HybridVelocity.from_vector(
            self.mesh, self.dofs.assemble(free, boundary)
        )
        return velocity, report

    def solve_saddle(
        self,
        mass_coefficient: float,
        transport: Optional[HybridVelocity],
        rhs: np.ndarray,
        boundary: np.ndarray,
    ) -> tuple[HybridVelocity, PressureField, SolverReport]:
        """
        Saddle Solve Function
        =====================

        Solves ``K u + B^T p = rhs, B u = 0`` on the free velocity DoFs with
        the boundary DoFs fixed to `boundary`. The constraint load
        ``-B_b u_b`` is projected to zero sum so that the system is
        compatible with the constant-pressure kernel.

        Returns:
            tuple[HybridVelocity, PressureField, SolverReport]: Velocity,
                zero-mean pressure and the solver report.
        """

        operator = self.operator(mass_coefficient, transport)
        matrix, load = self._reduce(operator, rhs, boundary)
        coupling = self.system.coupling_free
        weights = self.mesh.cell_measures
        constraint = np.zeros(self.dofs.n_pressure)
        if boundary.size:
            constraint = -(self.system.coupling_fixed @ boundary)
        constraint -= weights * (constraint.sum() / weights.sum())

        if self.direct:
            if transport is None:
                factorization = self._cached(
                    ("saddle", mass_coefficient),
                    lambda: SaddleFactorization(matrix, coupling, weights),
                )
            else:
                factorization = SaddleFactorization(matrix, coupling, weights)
            free, pressure = factorization.solve(load, constraint)
            report = SolverReport(
                method="direct",
                iterations=1,
                residual=_relative_residual(
                    sp.bmat([[matrix, coupling.T], [coupling, None]]),
                    np.concatenate((free, pressure)),
                    np.concatenate((load, constraint)),
                ),
                converged=True,
                wall_time=factorization.factor_time,
            )
        elif transport is None:
            free, pressure, report = gkb_saddle(
                matrix,
                coupling,
                load,
                constraint,
                self.config.solver,
                pressure_weights=weights,
            )
        else:
            free, pressure, report = self._block_gmres(
                matrix, coupling, load, constraint
            )
        logger.debug(
            "saddle solve: %s, %d iterations, residual %.3e",
            report.method, report.iterations, report.residual,
        )
        velocity = HybridVelocity.from_vector(
            self.mesh, self.dofs.assemble(free, boundary)
        )
        return velocity, zero_mean_adjust(
            PressureField(pressure), self.mesh
        ), report

    def _block_gmres(self, matrix, coupling, load, constraint):
        block = sp.bmat([[matrix, coupling.T], [coupling, None]], format="csr")
        pressure_scale = self.mesh.cell_measures / (
            self.config.nu + self.mesh.cell_diameters**2 / self.config.dt
        )
        preconditioner = np.concatenate((matrix.diagonal(), pressure_scale))
        solution, report = gmres(
            block,
            np.concatenate((load, constraint)),
            self.config.solver,
            preconditioner=preconditioner,
        )
        n = matrix.shape[0]
        return solution[:n], solution[n:], report


# =============================================================================
# Functions
# =============================================================================

def _relative_residual(matrix, x: np.ndarray, b: np.ndarray) -> float:
    b_norm = float(np.linalg.norm(b))
    residual = float(np.linalg.norm(b - matrix @ x))
    return residual / b_norm if b_norm > 0.0 else residual


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "StepContext",
]
