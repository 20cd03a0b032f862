# -*- coding: utf-8 -*-

"""
CDO-Fb Time-Stepping Module
===========================

Time-stepping schemes, Picard iteration, diagnostics and the simulation
driver.

Currently, the module includes:
- `SchemeConfig`: Coupling, order, convection treatment and time data.
- `step_monolithic_o1` / `step_monolithic_o2`: Monolithic steps.
- `step_ac_o1`: First-order artificial compressibility steps.
- `step_ac_o2_bootstrap`: Second-order bootstrap AC steps.
- `run_simulation`: The time loop with divergence detection.

"""

# =============================================================================
# Imports
# =============================================================================

from .artificial_compressibility import step_ac_o1
from .bootstrap import step_ac_o2_bootstrap
from .config_scheme import (
    DEFAULT_PICARD_MAX,
    DEFAULT_PICARD_TOLERANCE,
    SchemeConfig,
)
from .context import StepContext
from .diagnostics import (
    DIVERGENCE_FACTOR,
    energy_balance_residual,
    is_diverged,
)
from .driver import RunResult, initialize, run_simulation, select_stepper
from .errors import ErrorAccumulator, ErrorTerms
from .monolithic import step_monolithic_o1, step_monolithic_o2
from .picard import PicardResult, picard_iterate
from .problem import FlowProblem
from .state import (
    DIAGNOSTICS_COLUMNS,
    BootstrapTrack,
    StepDiagnostics,
    StepState,
)

# =============================================================================
# Public Interface
# =============================================================================

__all__ = [
    "BootstrapTrack",
    "DEFAULT_PICARD_MAX",
    "DEFAULT_PICARD_TOLERANCE",
    "DIAGNOSTICS_COLUMNS",
    "DIVERGENCE_FACTOR",
    "ErrorAccumulator",
    "ErrorTerms",
    "FlowProblem",
    "PicardResult",
    "RunResult",
    "SchemeConfig",
    "StepContext",
    "StepDiagnostics",
    "StepState",
    "energy_balance_residual",
    "initialize",
    "is_diverged",
    "picard_iterate",
    "run_simulation",
    "select_stepper",
    "step_ac_o1",
    "step_ac_o2_bootstrap",
    "step_monolithic_o1",
    "step_monolithic_o2",
]
