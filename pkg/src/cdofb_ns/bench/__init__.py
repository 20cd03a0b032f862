# -*- coding: utf-8 -*-

"""
CDO-Fb Benchmark Module
=======================

Benchmark cases with exact solutions and the studies run on them.

Currently, the module includes:
- `CaseSpec`: Case description and the `tgv2d` / `mtgv3d` / `custom`
  factories.
- `ErrorReport`: Normalized space-time errors of a run.
- `convergence_study`: Observed temporal orders over a list of time steps.
- `eta_sweep` / `tolerance_study`: Parameter studies.
- `cfl_search`: Critical time step by bisection.
- `load_run_config`: JSON run configuration with dotted overrides.

"""

# =============================================================================
# Imports
# =============================================================================

from .artifacts import (
    DIAGNOSTICS_FILE,
    ERRORS_FILE,
    PROBES_FILE,
    RATES_FILE,
    run_payload,
    write_frame,
    write_json,
    write_run_artifacts,
)
from .cases import (
    MTGV3D_BOX,
    RE33_VISCOSITY,
    TGV2D_BOX,
    CaseSpec,
    custom_case,
    exact_mtgv3d,
    exact_tgv2d,
    mtgv3d_case,
    tgv2d_case,
)
from .cfl import (
    PROBE_COLUMNS,
    REFERENCE_CRITICAL_STEPS,
    CflSearchSpec,
    bisect_critical_step,
    cfl_search,
    cfl_study,
    scheme_probe,
)
from .config_run import (
    RunConfig,
    apply_overrides,
    load_run_config,
    parse_override,
    run_config_from_dict,
)
from .convergence import (
    RATE_COLUMNS,
    convergence_study,
    normalization_constants,
    observed_orders,
    report_row,
    run_with_errors,
)
from .errors import (
    ErrorReport,
    compute_spacetime_errors,
    errors_for_run,
    time_integral_constants,
)
from .eta_sweep import eta_sweep, tolerance_study


# =============================================================================
# Public Interface
# =============================================================================

__all__ = [
    "CaseSpec",
    "CflSearchSpec",
    "DIAGNOSTICS_FILE",
    "ERRORS_FILE",
    "ErrorReport",
    "MTGV3D_BOX",
    "PROBES_FILE",
    "PROBE_COLUMNS",
    "RATES_FILE",
    "RATE_COLUMNS",
    "RE33_VISCOSITY",
    "REFERENCE_CRITICAL_STEPS",
    "RunConfig",
    "TGV2D_BOX",
    "apply_overrides",
    "bisect_critical_step",
    "cfl_search",
    "cfl_study",
    "compute_spacetime_errors",
    "convergence_study",
    "custom_case",
    "errors_for_run",
    "eta_sweep",
    "exact_mtgv3d",
    "exact_tgv2d",
    "load_run_config",
    "mtgv3d_case",
    "normalization_constants",
    "observed_orders",
    "parse_override",
    "report_row",
    "run_config_from_dict",
    "run_payload",
    "run_with_errors",
    "scheme_probe",
    "tgv2d_case",
    "time_integral_constants",
    "tolerance_study",
    "write_frame",
    "write_json",
    "write_run_artifacts",
]
