# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides the Command Line
=========================

``cdofb-ns`` subcommands:

- ``run``: One run of a configuration file.
- ``sweep-dt``: Temporal convergence study over ``output.dts``.
- ``sweep-eta``: Artificial compressibility parameter sweep.
- ``cfl-search``: Critical time step of the 2D Taylor-Green case.
- ``mesh gen`` / ``mesh check``: Generate or inspect a mesh file.

Exit codes: 0 on success, 2 when a run diverged, 1 on any error.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
import argparse
import json
import logging
import sys
from typing import Optional, Sequence

# Import | Libraries
import pandas as pd

# Import | Local Modules
from ..enums import CaseEnum
from ..exceptions import CdofbError, ConfigError
from ..mesh import (
    build_cartesian,
    build_voronoi_polygonal_2d,
    mesh_invariant_residuals,
    read_mesh,
    write_mesh,
)
from ..timestep import run_simulation
from .artifacts import (
    ERRORS_FILE,
    PROBES_FILE,
    RATES_FILE,
    write_frame,
    write_json,
    write_run_artifacts,
)
from .cfl import CflSearchSpec, cfl_study
from .config_run import load_run_config
from .convergence import RATE_COLUMNS, convergence_study, report_row
from .errors import errors_for_run
from .eta_sweep import eta_sweep


# =============================================================================
# Variables
# =============================================================================

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_DIVERGED = 2


# =============================================================================
# Functions | Commands
# =============================================================================

def _run(args: argparse.Namespace) -> int:
    config = load_run_config(args.config, args.overrides)
    problem = config.case.problem()
    result = run_simulation(config.mesh, config.scheme, problem)
    report = None
    if not result.diverged and result.errors is not None:
        report = errors_for_run(
            result, config.mesh, problem, config.normalization
        )
    row = report_row(config.scheme, result, report)
    written = write_run_artifacts(
        config.output_dir,
        config.case,
        result,
        report,
        pd.DataFrame([row], columns=RATE_COLUMNS),
        snapshots=config.snapshots,
    )
    for path in written.values():
        logger.info("wrote %s", path)
    if result.diverged:
        print(
            f"{config.scheme.name}: diverged at t={result.t_div:.6g}",
            file=sys.stderr,
        )
        return EXIT_DIVERGED
    return EXIT_OK


def _sweep_dt(args: argparse.Namespace) -> int:
    config = load_run_config(args.config, args.overrides)
    dts = tuple(args.dts) if args.dts else config.dts
    rates = convergence_study(
        config.case, config.mesh, [config.scheme], dts, config.normalization
    )
    config.output_dir.mkdir(parents=True, exist_ok=True)
    write_frame(rates, config.output_dir / RATES_FILE)
    write_json(
        {
            "case": config.case.to_dict(),
            "scheme": config.scheme.to_dict(),
            "mesh": config.mesh.summary(),
            "rows": rates.to_dict(orient="records"),
        },
        config.output_dir / ERRORS_FILE,
    )
    print(rates.to_string(index=False))
    return EXIT_DIVERGED if rates["diverged"].any() else EXIT_OK


def _sweep_eta(args: argparse.Namespace) -> int:
    config = load_run_config(args.config, args.overrides)
    factors = tuple(args.factors) if args.factors else config.eta_factors
    table = eta_sweep(
        config.case,
        config.mesh,
        config.scheme,
        config.scheme.dt,
        factors,
        config.normalization,
    )
    config.output_dir.mkdir(parents=True, exist_ok=True)
    write_frame(table, config.output_dir / "eta_sweep.csv")
    print(table.to_string(index=False))
    return EXIT_DIVERGED if table["diverged"].any() else EXIT_OK


def _cfl_search(args: argparse.Namespace) -> int:
    config = load_run_config(args.config, args.overrides)
    if config.case.case is not CaseEnum.TGV2D:
        raise ConfigError(
            "cfl-search runs the tgv2d case only, "
            f"got {config.case.case.value}"
        )
    spec = CflSearchSpec(
        reynolds=tuple(args.reynolds),
        eta_factor=args.eta_factor,
        resolution=args.resolution,
        bracket=tuple(args.bracket) if args.bracket else None,
        time_scale=args.time_scale,
    )
    critical, probes = cfl_study(config.scheme, config.mesh, spec)
    config.output_dir.mkdir(parents=True, exist_ok=True)
    write_frame(probes, config.output_dir / PROBES_FILE)
    write_frame(critical, config.output_dir / "critical_steps.csv")
    print(critical.to_string(index=False))
    return EXIT_OK


def _mesh_gen(args: argparse.Namespace) -> int:
    box = None
    if args.box:
        box = [args.box[i:i + 2] for i in range(0, len(args.box), 2)]
    if args.kind == "cartesian":
        mesh = build_cartesian(args.dim, args.cells, box=box)
    else:
        mesh = build_voronoi_polygonal_2d(
            args.n_seeds, box=box, jitter=args.jitter, rng_seed=args.seed
        )
    write_mesh(mesh, args.out)
    print(json.dumps(mesh.summary()))
    return EXIT_OK


def _mesh_check(args: argparse.Namespace) -> int:
    mesh = read_mesh(args.path)
    print(json.dumps(
        {**mesh.summary(), **mesh_invariant_residuals(mesh)}, indent=2
    ))
    return EXIT_OK


# =============================================================================
# Functions | Parser
# =============================================================================

def _add_config_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--config", required=True, help="JSON run configuration file"
    )
    parser.add_argument(
        "--set",
        dest="overrides",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="override a dotted configuration key (repeatable)",
    )


def build_parser() -> argparse.ArgumentParser:
    """
    Returns the ``cdofb-ns`` argument parser.
    """
    parser = argparse.ArgumentParser(
        prog="cdofb-ns",
        description="Face-based Navier-Stokes solver and benchmarks.",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="INFO with -v, DEBUG with -vv",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="run one configuration")
    _add_config_arguments(run)
    run.set_defaults(handler=_run)

    sweep_dt = commands.add_parser("sweep-dt", help="temporal convergence")
    _add_config_arguments(sweep_dt)
    sweep_dt.add_argument(
        "--dts", type=float, nargs="+", help="time steps, coarse to fine"
    )
    sweep_dt.set_defaults(handler=_sweep_dt)

    sweep_eta = commands.add_parser("sweep-eta", help="eta parameter sweep")
    _add_config_arguments(sweep_eta)
    sweep_eta.add_argument(
        "--factors", type=float, nargs="+", help="eta / Re values"
    )
    sweep_eta.set_defaults(handler=_sweep_eta)

    cfl = commands.add_parser("cfl-search", help="critical time step")
    _add_config_arguments(cfl)
    cfl.add_argument("--reynolds", type=float, nargs="+", default=[200.0])
    cfl.add_argument("--eta-factor", type=float, default=10.0)
    cfl.add_argument("--resolution", type=float, default=0.01)
    cfl.add_argument(
        "--bracket", type=float, nargs=2, metavar=("LO", "HI")
    )
    cfl.add_argument("--time-scale", type=float, default=1e4)
    cfl.set_defaults(handler=_cfl_search)

    mesh = commands.add_parser("mesh", help="mesh files")
    mesh_commands = mesh.add_subparsers(dest="mesh_command", required=True)
    gen = mesh_commands.add_parser("gen", help="generate a mesh")
    gen.add_argument(
        "--kind", choices=("cartesian", "voronoi"), default="cartesian"
    )
    gen.add_argument("--dim", type=int, default=2)
    gen.add_argument("--cells", type=int, default=16)
    gen.add_argument("--n-seeds", type=int, default=256)
    gen.add_argument("--jitter", type=float, default=0.3)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument(
        "--box", type=float, nargs="+", help="x0 x1 y0 y1 [z0 z1]"
    )
    gen.add_argument("--out", required=True)
    gen.set_defaults(handler=_mesh_gen)
    check = mesh_commands.add_parser("check", help="inspect a mesh file")
    check.add_argument("path")
    check.set_defaults(handler=_mesh_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Entry point of ``cdofb-ns``; returns the exit code.
    """
    args = build_parser().parse_args(argv)
    level = logging.WARNING
    if args.verbose == 1:
        level = logging.INFO
    elif args.verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, format="%(levelname)s %(name)s: %(message)s"
    )
    try:
        return args.handler(args)
    except (CdofbError, OSError) as error:
        print(f"cdofb-ns: error: {error}", file=sys.stderr)
        return EXIT_ERROR


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "EXIT_DIVERGED",
    "EXIT_ERROR",
    "EXIT_OK",
    "build_parser",
    "main",
]
