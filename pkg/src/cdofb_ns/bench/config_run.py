# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Run Configuration Files
================================

A run is described by a JSON document with the sections ``mesh``, ``case``,
``scheme``, ``solver`` and ``output`` (see ``docs/config_schema.md``).
Dotted overrides such as ``scheme.dt=0.1`` are applied before the sections
are turned into a mesh, a `CaseSpec` and a `SchemeConfig`.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
import copy
import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional, Sequence, Union

# Import | Local Modules
from ..enums import CaseEnum, CouplingEnum, NormalizationEnum
from ..exceptions import ConfigError, ValidationError
from ..linalg import SolverConfig
from ..mesh import (
    PolytopalMesh,
    build_cartesian,
    build_voronoi_polygonal_2d,
    read_mesh,
)
from ..operators import OperatorConfig
from ..timestep import SchemeConfig
from .cases import CaseSpec, custom_case, mtgv3d_case, tgv2d_case


# =============================================================================
# Variables
# =============================================================================

SECTIONS = ("mesh", "case", "scheme", "solver", "output")

MESH_KINDS = ("cartesian", "voronoi", "file")

DEFAULT_ETA_FACTOR = 10.0

_SCHEME_KEYS = {
    "coupling", "order", "convection", "dt", "eta", "eta_factor",
    "picard_tol", "picard_max", "linear_solver", "stab_param",
    "quadrature_degree",
}
_SOLVER_KEYS = {
    "tolerance", "max_iterations", "restart", "inner_tolerance", "gkb_delay",
}
_OUTPUT_KEYS = {"dir", "normalization", "snapshots", "dts", "eta_factors"}


# =============================================================================
# Classes
# =============================================================================

@dataclass(frozen=True)
class RunConfig:
    """
    Run Configuration Class
    =======================

    Attributes:
        mesh (PolytopalMesh): The mesh.
        case (CaseSpec): The case.
        scheme (SchemeConfig): The scheme, with the case viscosity and
            observation time.
        output_dir (Path): Directory receiving the artifacts.
        normalization (NormalizationEnum): Error normalization.
        snapshots (bool): Whether the final fields are written too.
        dts (tuple[float, ...]): Time steps of a convergence sweep; the
            scheme time step alone when not given.
        eta_factors (tuple[float, ...]): ``eta / Re`` values of a sweep.
        raw (dict): The document after overrides.
    """

    mesh: PolytopalMesh
    case: CaseSpec
    scheme: SchemeConfig
    output_dir: Path
    normalization: NormalizationEnum = NormalizationEnum.DISCRETE
    snapshots: bool = False
    dts: tuple = ()
    eta_factors: tuple = (1.0, 10.0, 100.0)
    raw: dict = field(default_factory=dict)


# =============================================================================
# Functions | Documents
# =============================================================================

def load_document(path: Union[str, os.PathLike]) -> dict:
    """
    Reads a JSON run document.

    Raises:
        ConfigError: When the file is missing, unreadable or not a JSON
            object.
    """
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError) as error:
        raise ConfigError(f"cannot read config file {path}: {error}") from (
            error
        )
    except json.JSONDecodeError as error:
        raise ConfigError(
            f"invalid JSON in {path} at line {error.lineno}: {error.msg}"
        ) from error
    if not isinstance(data, dict):
        raise ConfigError(f"config file {path} must hold a JSON object")
    return data


def parse_override(text: str) -> tuple[list[str], Any]:
    """
    Splits ``dotted.key=value``; the value is parsed as JSON and kept as a
    plain string when that fails.

    Raises:
        ConfigError: When there is no ``=`` or the key is empty.
    """
    key, sep, value = text.partition("=")
    keys = [part.strip() for part in key.split(".")]
    if not sep or not all(keys):
        raise ConfigError(f"override must read key.path=value, got {text!r}")
    try:
        parsed = json.loads(value)
    except json.JSONDecodeError:
        parsed = value
    return keys, parsed


def apply_overrides(data: dict, overrides: Sequence[str]) -> dict:
    """
    Returns a copy of `data` with every override applied in order;
    intermediate objects are created as needed.
    """
    data = copy.deepcopy(data)
    for text in overrides:
        keys, value = parse_override(text)
        target = data
        for key in keys[:-1]:
            child = target.setdefault(key, {})
            if not isinstance(child, dict):
                raise ConfigError(
                    f"override {text!r}: {key!r} is not an object"
                )
            target = child
        target[keys[-1]] = value
    return data


def _section(data: dict, name: str, allowed: Optional[set] = None) -> dict:
    section = data.get(name, {})
    if not isinstance(section, dict):
        raise ConfigError(f"section {name!r} must be an object")
    if allowed is not None:
        unknown = sorted(set(section) - allowed)
        if unknown:
            raise ConfigError(
                f"unknown key(s) in section {name!r}: {', '.join(unknown)}"
            )
    return section


# =============================================================================
# Functions | Builders
# =============================================================================

def build_case(section: dict) -> CaseSpec:
    """
    Returns the case of a ``case`` section.
    """
    section = dict(section)
    case = CaseEnum.parse(section.pop("id", CaseEnum.TGV2D.value))
    try:
        if case is CaseEnum.TGV2D:
            return tgv2d_case(**section)
        if case is CaseEnum.MTGV3D:
            return mtgv3d_case(**section)
        return custom_case(**section)
    except TypeError as error:
        raise ConfigError(f"section 'case': {error}") from error


def build_mesh(
    section: dict,
    box: Sequence[Sequence[float]],
    base: Optional[Path] = None,
) -> PolytopalMesh:
    """
    Returns the mesh of a ``mesh`` section; generated meshes cover `box`
    unless the section gives its own.
    """
    section = dict(section)
    kind = section.pop("kind", "cartesian")
    if kind not in MESH_KINDS:
        raise ConfigError(
            f"mesh kind must be one of {', '.join(MESH_KINDS)}, got {kind!r}"
        )
    box = section.pop("box", box)
    try:
        if kind == "cartesian":
            return build_cartesian(
                len(box), section.pop("cells", 16), box=box, **section
            )
        if kind == "voronoi":
            return build_voronoi_polygonal_2d(
                section.pop("n_seeds", 256), box=box, **section
            )
    except TypeError as error:
        raise ConfigError(f"section 'mesh': {error}") from error
    if "path" not in section:
        raise ConfigError("mesh kind 'file' needs a path")
    path = Path(section["path"])
    if base is not None and not path.is_absolute():
        path = base / path
    return read_mesh(path)


def build_scheme(
    section: dict, solver: dict, case: CaseSpec
) -> SchemeConfig:
    """
    Returns the scheme of the ``scheme`` and ``solver`` sections. Artificial
    compressibility without an explicit ``eta`` uses
    ``eta_factor * Re`` (factor 10 by default).
    """
    section = dict(section)
    if "dt" not in section:
        raise ConfigError("section 'scheme' needs dt")
    eta_factor = section.pop("eta_factor", DEFAULT_ETA_FACTOR)
    coupling = CouplingEnum.parse(
        section.get("coupling", CouplingEnum.MONOLITHIC.value)
    )
    section["coupling"] = coupling
    if coupling is CouplingEnum.ARTIFICIAL_COMPRESSIBILITY:
        if section.get("eta") is None:
            section["eta"] = float(eta_factor) * case.reynolds
    else:
        section["eta"] = None
    operators = OperatorConfig(**{
        key: section.pop(key)
        for key in ("stab_param", "quadrature_degree")
        if key in section
    })
    order = section.setdefault("order", 1)
    solver_config = (
        SolverConfig.for_order(order, **solver) if order in (1, 2) else None
    )
    section.setdefault("convection", "implicit")
    return SchemeConfig(
        T=case.T,
        nu=case.nu,
        solver=solver_config,
        operators=operators,
        **section,
    )


def load_run_config(
    path: Union[str, os.PathLike],
    overrides: Sequence[str] = (),
) -> RunConfig:
    """
    Run Configuration Loader
    ========================

    Parameters:
        path (str | os.PathLike): JSON document.
        overrides (Sequence[str]): ``dotted.key=value`` overrides.

    Returns:
        RunConfig: Mesh, case, scheme and output settings.

    Raises:
        ConfigError: On a missing file, malformed JSON, unknown sections
            or keys.
        ValidationError: On invalid values.
    """

    path = Path(path)
    return run_config_from_dict(
        apply_overrides(load_document(path), overrides), base=path.parent
    )


def run_config_from_dict(data: dict, base: Optional[Path] = None) -> RunConfig:
    """
    Builds a `RunConfig` from a parsed document.
    """
    unknown = sorted(set(data) - set(SECTIONS))
    if unknown:
        raise ConfigError(f"unknown section(s): {', '.join(unknown)}")
    case = build_case(_section(data, "case"))
    mesh = build_mesh(_section(data, "mesh"), case.box, base)
    if mesh.dim != case.dim:
        raise ValidationError(
            message="mesh is %(mesh)dD but case %(case)s is %(dim)dD.",
            params={
                "mesh": mesh.dim, "case": case.case.value, "dim": case.dim
            },
            code="dimension_mismatch",
        )
    scheme = build_scheme(
        _section(data, "scheme", _SCHEME_KEYS),
        _section(data, "solver", _SOLVER_KEYS),
        case,
    )
    output = _section(data, "output", _OUTPUT_KEYS)
    dts = tuple(float(dt) for dt in output.get("dts", ()))
    return RunConfig(
        mesh=mesh,
        case=case,
        scheme=scheme,
        output_dir=Path(output.get("dir", "cdofb-output")),
        normalization=NormalizationEnum.parse(
            output.get("normalization", NormalizationEnum.DISCRETE.value)
        ),
        snapshots=bool(output.get("snapshots", False)),
        dts=dts or (scheme.dt,),
        eta_factors=tuple(
            float(factor)
            for factor in output.get("eta_factors", (1.0, 10.0, 100.0))
        ),
        raw=data,
    )


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "DEFAULT_ETA_FACTOR",
    "MESH_KINDS",
    "RunConfig",
    "SECTIONS",
    "apply_overrides",
    "build_case",
    "build_mesh",
    "build_scheme",
    "load_document",
    "load_run_config",
    "parse_override",
    "run_config_from_dict",
]
