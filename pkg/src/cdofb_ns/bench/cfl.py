# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Critical Time-Step Searches
====================================

Bisection on the time step of an explicit-convection run for the largest
step whose kinetic energy stays within the divergence threshold over an
observation time ``T = time_scale / Re``.

"""


# =============================================================================
# Import
# =============================================================================

# Import | Standard Library
import logging
import math
from dataclasses import dataclass, replace
from typing import Callable, Optional, Sequence

# Import | Libraries
import pandas as pd

# Import | Local Modules
from ..enums import CouplingEnum
from ..exceptions import BracketError, ValidationError
from ..mesh import PolytopalMesh
from ..timestep import SchemeConfig, run_simulation
from ..utils import validate_in_range, validate_positive
from .cases import CaseSpec, tgv2d_case


# =============================================================================
# Variables
# =============================================================================

logger = logging.getLogger(__name__)

# Probe outcome: (diverged, divergence time or None).
Probe = Callable[[float], tuple[bool, Optional[float]]]

PROBE_COLUMNS = ["dt", "diverged", "t_div", "dt_re", "t_div_re"]

# Known critical steps on a 128^2 Cartesian mesh of [0, 2 pi]^2, keyed by
# (coupling, order, Re).
REFERENCE_CRITICAL_STEPS = {
    ("monolithic", 1, 200): 2.98e-2,
    ("monolithic", 2, 200): 1.15e-2,
    ("monolithic", 1, 500): 1.03e-2,
    ("monolithic", 2, 500): 4.16e-3,
    ("monolithic", 1, 700): 7.27e-3,
    ("monolithic", 2, 700): 2.97e-3,
    ("artificial_compressibility", 1, 200): 2.98e-2,
    ("artificial_compressibility", 2, 200): 1.14e-2,
    ("artificial_compressibility", 1, 500): 1.04e-2,
    ("artificial_compressibility", 2, 500): 4.16e-3,
    ("artificial_compressibility", 1, 700): 7.25e-3,
    ("artificial_compressibility", 2, 700): 2.95e-3,
}

SEEDED_BRACKET = (0.7, 1.3)
GENERIC_BRACKET = (1.0, 12.0)


# =============================================================================
# Classes
# =============================================================================

@dataclass(frozen=True)
class CflSearchSpec:
    """
    CFL Search Specification Class
    ==============================

    Attributes:
        reynolds (tuple[float, ...]): Reynolds numbers to search.
        eta_factor (float): ``eta = eta_factor * Re`` for artificial
            compressibility.
        resolution (float): Stop once ``(hi - lo) / lo`` is below it; in
            ``(0, 0.1]``.
        bracket (tuple[float, float], optional): Initial ``(lo, hi)``; when
            absent it is seeded from known values or ``[1/Re, 12/Re]``.
        time_scale (float): Observation time times Re.
    """

    reynolds: tuple = (200.0,)
    eta_factor: float = 10.0
    resolution: float = 0.01
    bracket: Optional[tuple[float, float]] = None
    time_scale: float = 1e4

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "reynolds",
            tuple(
                validate_positive(value, name="reynolds")
                for value in self.reynolds
            ),
        )
        validate_positive(self.eta_factor, name="eta_factor")
        validate_in_range(
            self.resolution, 0.0, 0.1, name="resolution", closed_high=True
        )
        validate_positive(self.time_scale, name="time_scale")
        if self.bracket is not None:
            lo, hi = (
                validate_positive(value, name="bracket")
                for value in self.bracket
            )
            if lo >= hi:
                raise ValidationError(
                    message="bracket must be ordered, got [%(lo)g, %(hi)g].",
                    params={"lo": lo, "hi": hi},
                    code="invalid",
                )
            object.__setattr__(self, "bracket", (lo, hi))

    def observation_time(self, reynolds: float) -> float:
        return self.time_scale / reynolds

    def bracket_for(
        self, coupling: CouplingEnum, order: int, reynolds: float
    ) -> tuple[float, float]:
        """
        Returns the initial bracket of one search.
        """
        if self.bracket is not None:
            return self.bracket
        key = (CouplingEnum.parse(coupling).value, order, round(reynolds))
        reference = REFERENCE_CRITICAL_STEPS.get(key)
        if reference is not None and math.isclose(reynolds, key[2]):
            return (SEEDED_BRACKET[0] * reference,
                    SEEDED_BRACKET[1] * reference)
        return GENERIC_BRACKET[0] / reynolds, GENERIC_BRACKET[1] / reynolds


# =============================================================================
# Functions
# =============================================================================

def bisect_critical_step(
    probe: Probe,
    lo: float,
    hi: float,
    resolution: float = 0.01,
) -> tuple[float, list[tuple[float, bool, Optional[float]]]]:
    """
    Bisection Function
    ==================

    Probes both ends of ``[lo, hi]`` and halves the bracket until
    ``(hi - lo) / lo <= resolution``.

    Parameters:
        probe (Probe): Returns ``(diverged, t_div)`` for a time step.
        lo (float): Lower end, expected stable.
        hi (float): Upper end, expected diverging.
        resolution (float): Relative bracket width to reach.

    Returns:
        tuple: The largest stable time step found and the probe log of
            ``(dt, diverged, t_div)`` in probing order.

    Raises:
        BracketError: When ``lo`` diverges or ``hi`` does not.
    """

    log = []

    def run(dt: float) -> bool:
        diverged, t_div = probe(dt)
        log.append((dt, bool(diverged), t_div))
        if diverged:
            logger.info("probe dt=%.5g: diverged at t=%s", dt, t_div)
        else:
            logger.info("probe dt=%.5g: stable", dt)
        return bool(diverged)

    lo_diverged = run(lo)
    hi_diverged = run(hi)
    if lo_diverged or not hi_diverged:
        raise BracketError(
            f"bracket does not straddle the transition: "
            f"dt={lo:g} {'diverged' if lo_diverged else 'stable'}, "
            f"dt={hi:g} {'diverged' if hi_diverged else 'stable'}"
        )
    while (hi - lo) / lo > resolution:
        middle = 0.5 * (lo + hi)
        if run(middle):
            hi = middle
        else:
            lo = middle
    return lo, log


def scheme_probe(
    case: CaseSpec,
    scheme: SchemeConfig,
    mesh: PolytopalMesh,
    eta_factor: float = 10.0,
) -> Probe:
    """
    Returns a probe running `scheme` on `case` at a given time step; the
    scheme's observation time and viscosity come from the case.
    """
    eta = eta_factor * case.reynolds
    problem = case.problem()

    def probe(dt: float) -> tuple[bool, Optional[float]]:
        run_scheme = replace(
            scheme,
            dt=dt,
            T=case.T,
            nu=case.nu,
            eta=eta if scheme.is_artificial_compressibility else None,
        )
        result = run_simulation(mesh, run_scheme, problem)
        return result.diverged, result.t_div

    return probe


def cfl_search(
    case: CaseSpec,
    scheme: SchemeConfig,
    mesh: PolytopalMesh,
    spec: CflSearchSpec,
    probe: Optional[Probe] = None,
) -> tuple[float, pd.DataFrame]:
    """
    CFL Search Function
    ===================

    Searches the critical time step of `scheme` on `case` at the case's
    Reynolds number.

    Parameters:
        case (CaseSpec): The case; its observation time is used as given.
        scheme (SchemeConfig): Template scheme.
        mesh (PolytopalMesh): The mesh.
        spec (CflSearchSpec): Bracket, resolution and eta rule.
        probe (Probe, optional): Replaces the simulation probe.

    Returns:
        tuple[float, pd.DataFrame]: The critical time step and the probe
            log with columns ``dt, diverged, t_div, dt_re, t_div_re``.

    Raises:
        BracketError: When the bracket does not straddle the transition.
    """

    reynolds = case.reynolds
    if probe is None:
        probe = scheme_probe(case, scheme, mesh, spec.eta_factor)
    lo, hi = spec.bracket_for(scheme.coupling, scheme.order, reynolds)
    logger.info(
        "cfl search %s at Re=%.4g: bracket [%.4g, %.4g]",
        scheme.name, reynolds, lo, hi,
    )
    dt_c, log = bisect_critical_step(probe, lo, hi, spec.resolution)
    frame = pd.DataFrame(log, columns=["dt", "diverged", "t_div"])
    frame["dt_re"] = frame["dt"] * reynolds
    frame["t_div_re"] = pd.to_numeric(frame["t_div"]) * reynolds
    logger.info("cfl search %s at Re=%.4g: dt_c=%.4g", scheme.name,
                reynolds, dt_c)
    return dt_c, frame[PROBE_COLUMNS]


def cfl_study(
    scheme: SchemeConfig,
    mesh: PolytopalMesh,
    spec: CflSearchSpec,
    schemes: Sequence[SchemeConfig] = (),
) -> tuple[pd.DataFrame, pd.DataFrame]:
    """
    Runs `cfl_search` on the 2D Taylor-Green case for every Reynolds
    number of `spec` and every scheme (`scheme` first, then `schemes`).

    Returns:
        tuple[pd.DataFrame, pd.DataFrame]: Critical steps per scheme and
            Reynolds number, and the concatenated probe logs.
    """
    results, logs = [], []
    for run_scheme in (scheme, *schemes):
        for reynolds in spec.reynolds:
            case = tgv2d_case(
                reynolds=reynolds, T=spec.observation_time(reynolds)
            )
            dt_c, frame = cfl_search(case, run_scheme, mesh, spec)
            results.append({
                "scheme": run_scheme.name,
                "reynolds": reynolds,
                "dt_c": dt_c,
                "dt_c_re": dt_c * reynolds,
                "probes": len(frame),
            })
            logs.append(frame.assign(scheme=run_scheme.name,
                                     reynolds=reynolds))
    return pd.DataFrame(results), pd.concat(logs, ignore_index=True)


# =============================================================================
# Module Variables
# =============================================================================

__all__: list[str] = [
    "CflSearchSpec",
    "PROBE_COLUMNS",
    "REFERENCE_CRITICAL_STEPS",
    "bisect_critical_step",
    "cfl_search",
    "cfl_study",
    "scheme_probe",
]
