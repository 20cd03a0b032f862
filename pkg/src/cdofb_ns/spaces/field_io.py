# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Field Snapshot Functions
=================================

Writes discrete fields as long-format CSV tables with the columns
``entity, id, component, value``. Velocity rows list all faces, then all
cells; pressure rows use component 0.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
import os
from typing import Union

# Import | Libraries
import numpy as np
import pandas as pd

# Import | Local Modules
from .field_hybrid_velocity import HybridVelocity
from .field_pressure import PressureField


# =============================================================================
# Variables
# =============================================================================

SNAPSHOT_COLUMNS = ["entity", "id", "component", "value"]


# =============================================================================
# Functions
# =============================================================================

def _long_table(entity: str, values: np.ndarray) -> pd.DataFrame:
    n, d = values.shape
    return pd.DataFrame(
        {
            "entity": entity,
            "id": np.repeat(np.arange(n), d),
            "component": np.tile(np.arange(d), n),
            "value": values.ravel(),
        }
    )


def velocity_table(velocity: HybridVelocity) -> pd.DataFrame:
    return pd.concat(
        [
            _long_table("face", velocity.face_values),
            _long_table("cell", velocity.cell_values),
        ],
        ignore_index=True,
    )[SNAPSHOT_COLUMNS]


def write_velocity_csv(
    velocity: HybridVelocity, path: Union[str, os.PathLike]
) -> None:
    """
    Writes a velocity snapshot to `path`.
    """
    velocity_table(velocity).to_csv(path, index=False, float_format="%.17g")


def write_pressure_csv(
    pressure: PressureField, path: Union[str, os.PathLike]
) -> None:
    """
    Writes a pressure snapshot to `path`.
    """
    table = _long_table("cell", pressure.cell_values[:, None])
    table[SNAPSHOT_COLUMNS].to_csv(path, index=False, float_format="%.17g")


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "SNAPSHOT_COLUMNS",
    "velocity_table",
    "write_pressure_csv",
    "write_velocity_csv",
]
