# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Run Artifacts
======================

Writers for the files a benchmark run leaves in its output directory:

- ``errors.json``: Case, scheme, mesh summary, divergence and errors.
- ``diagnostics.csv``: One row per time step.
- ``rates.csv``: Errors and observed orders per time step.
- ``probes.csv``: Critical time-step search log.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
import json
import math
import os
from pathlib import Path
from typing import Any, Optional, Union

# Import | Libraries
import numpy as np
import pandas as pd

# Import | Local Modules
from ..spaces import write_pressure_csv, write_velocity_csv
from ..timestep import RunResult
from .cases import CaseSpec
from .errors import ErrorReport


# =============================================================================
# Variables
# =============================================================================

ERRORS_FILE = "errors.json"
DIAGNOSTICS_FILE = "diagnostics.csv"
RATES_FILE = "rates.csv"
PROBES_FILE = "probes.csv"


# =============================================================================
# Functions
# =============================================================================

def _plain(value: Any) -> Any:
    """
    Converts numpy scalars and non-finite floats into JSON values.
    """
    if isinstance(value, dict):
        return {str(key): _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def write_json(payload: dict, path: Union[str, os.PathLike]) -> Path:
    path = Path(path)
    path.write_text(
        json.dumps(_plain(payload), indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
    )
    return path


def write_frame(frame: pd.DataFrame, path: Union[str, os.PathLike]) -> Path:
    path = Path(path)
    frame.to_csv(path, index=False, float_format="%.10g")
    return path


def run_payload(
    case: CaseSpec,
    result: RunResult,
    report: Optional[ErrorReport] = None,
) -> dict:
    """
    Returns the ``errors.json`` document of one run.
    """
    return {
        "case": case.to_dict(),
        **result.to_dict(),
        "errors": None if report is None else report.to_dict(),
    }


def write_run_artifacts(
    output_dir: Union[str, os.PathLike],
    case: CaseSpec,
    result: RunResult,
    report: Optional[ErrorReport],
    rates: pd.DataFrame,
    snapshots: bool = False,
) -> dict[str, Path]:
    """
    Artifact Writer Function
    ========================

    Writes ``errors.json``, ``diagnostics.csv`` and ``rates.csv`` of a run
    into `output_dir` (created when missing), and the final velocity and
    pressure fields when `snapshots` is set.

    Returns:
        dict[str, Path]: Written files by name.
    """

    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    written = {
        ERRORS_FILE: write_json(
            run_payload(case, result, report), output_dir / ERRORS_FILE
        ),
        DIAGNOSTICS_FILE: write_frame(
            result.diagnostics_frame(), output_dir / DIAGNOSTICS_FILE
        ),
        RATES_FILE: write_frame(rates, output_dir / RATES_FILE),
    }
    if snapshots:
        state = result.final_state
        written["velocity.csv"] = output_dir / "velocity.csv"
        written["pressure.csv"] = output_dir / "pressure.csv"
        write_velocity_csv(state.velocity, written["velocity.csv"])
        write_pressure_csv(state.pressure, written["pressure.csv"])
    return written


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "DIAGNOSTICS_FILE",
    "ERRORS_FILE",
    "PROBES_FILE",
    "RATES_FILE",
    "run_payload",
    "write_frame",
    "write_json",
    "write_run_artifacts",
]
