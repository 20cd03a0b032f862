# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Benchmark Tests
===============

"""


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
import json
import math

# Import | Libraries
import numpy as np
import pandas as pd
import pytest

# Import | Local Modules
from cdofb_ns.bench import (
    ERRORS_FILE,
    RATE_COLUMNS,
    RE33_VISCOSITY,
    CflSearchSpec,
    apply_overrides,
    bisect_critical_step,
    cfl_search,
    cfl_study,
    compute_spacetime_errors,
    convergence_study,
    custom_case,
    errors_for_run,
    eta_sweep,
    exact_mtgv3d,
    exact_tgv2d,
    load_run_config,
    mtgv3d_case,
    observed_orders,
    parse_override,
    report_row,
    run_config_from_dict,
    tgv2d_case,
    time_integral_constants,
    tolerance_study,
    write_run_artifacts,
)
from cdofb_ns.bench import cfl as cfl_module
from cdofb_ns.enums import (
    CaseEnum,
    ConvectionEnum,
    CouplingEnum,
    NormalizationEnum,
)
from cdofb_ns.exceptions import BracketError, ConfigError, ValidationError
from cdofb_ns.mesh import build_cartesian, write_mesh
from cdofb_ns.spaces import (
    project_pressure,
    project_velocity,
    zero_mean_adjust,
)
from cdofb_ns.timestep import ErrorAccumulator, SchemeConfig, run_simulation


# =============================================================================
# Variables
# =============================================================================

MONO = CouplingEnum.MONOLITHIC
AC = CouplingEnum.ARTIFICIAL_COMPRESSIBILITY

SMALL_DOCUMENT = {
    "mesh": {"kind": "cartesian", "cells": 4},
    "case": {"id": "tgv2d", "nu": 0.1, "T": 0.2},
    "scheme": {
        "coupling": "artificial_compressibility",
        "order": 1,
        "convection": "explicit",
        "dt": 0.1,
    },
}


# =============================================================================
# Helpers
# =============================================================================

def template(coupling=MONO, order=1, convection=ConvectionEnum.EXPLICIT,
             **kwargs):
    if coupling is AC:
        kwargs.setdefault("eta", 100.0)
    for key, value in (("dt", 0.1), ("T", 1.0), ("nu", 1.0)):
        kwargs.setdefault(key, value)
    return SchemeConfig(
        coupling=coupling, order=order, convection=convection, **kwargs
    )


def step_probe(threshold, calls=None):
    def probe(dt):
        if calls is not None:
            calls.append(dt)
        if dt > threshold:
            return True, 10.0 * threshold / dt
        return False, None
    return probe


def smooth_velocity(t, x):
    return (1.0 + t) * np.column_stack(
        (np.sin(x[:, 0]), np.cos(x[:, 1]))
    )


def smooth_pressure(t, x):
    return (1.0 + t) * x[:, 0] * x[:, 1]


def stencil_first(function, x, axis, h):
    shift = np.zeros(x.shape[1])
    shift[axis] = h
    return (
        -function(x + 2 * shift) + 8.0 * function(x + shift)
        - 8.0 * function(x - shift) + function(x - 2 * shift)
    ) / (12.0 * h)


def stencil_second(function, x, axis, h):
    shift = np.zeros(x.shape[1])
    shift[axis] = h
    return (
        -function(x + 2 * shift) + 16.0 * function(x + shift)
        - 30.0 * function(x) + 16.0 * function(x - shift)
        - function(x - 2 * shift)
    ) / (12.0 * h * h)


# =============================================================================
# Tests | Cases
# =============================================================================

def test_tgv2d_values():
    points = np.array([[math.pi / 2.0, 0.0], [0.0, math.pi / 2.0]])
    velocity, pressure = exact_tgv2d(0.0, points, 1.0)
    np.testing.assert_allclose(velocity, [[1.0, 0.0], [0.0, -1.0]],
                               atol=1e-15)
    np.testing.assert_allclose(pressure, [0.0, 0.0], atol=1e-15)
    velocity, pressure = exact_tgv2d(0.5, np.zeros((1, 2)), 1.0)
    np.testing.assert_allclose(velocity, 0.0, atol=1e-15)
    assert pressure[0] == pytest.approx(0.5 * math.exp(-2.0))


def test_tgv2d_case_from_reynolds():
    case = tgv2d_case(reynolds=200.0, T=50.0)
    assert case.nu == pytest.approx(5e-3)
    assert case.reynolds == pytest.approx(200.0)
    assert case.dim == 2
    assert case.problem().has_exact_solution
    with pytest.raises(ValidationError):
        tgv2d_case(nu=1.0, reynolds=1.0)
    with pytest.raises(ValidationError):
        tgv2d_case()


def test_mtgv3d_vanishes_initially():
    points = np.random.default_rng(3).random((50, 3))
    velocity, pressure, _ = exact_mtgv3d(0.0, points)
    np.testing.assert_allclose(velocity, 0.0, atol=1e-15)
    np.testing.assert_allclose(pressure, 0.0, atol=1e-15)


@pytest.mark.parametrize("nu", [1.0, 0.25])
def test_mtgv3d_forcing_balances_momentum(nu):
    axis = (np.arange(20) + 0.5) / 20.0
    grid = np.stack(np.meshgrid(axis, axis, axis, indexing="ij"), axis=-1)
    points = grid.reshape(-1, 3)
    t, h, tau = 0.1, 1e-3, 1e-4

    def velocity(x, time=t):
        return exact_mtgv3d(time, x, nu)[0]

    def pressure(x):
        return exact_mtgv3d(t, x, nu)[1]

    u, _, forcing = exact_mtgv3d(t, points, nu)
    rate = (
        -velocity(points, t + 2 * tau) + 8.0 * velocity(points, t + tau)
        - 8.0 * velocity(points, t - tau) + velocity(points, t - 2 * tau)
    ) / (12.0 * tau)
    laplacian = sum(
        stencil_second(velocity, points, axis, h) for axis in range(3)
    )
    convection = sum(
        u[:, [axis]] * stencil_first(velocity, points, axis, h)
        for axis in range(3)
    )
    gradient = np.column_stack(
        [stencil_first(pressure, points, axis, h) for axis in range(3)]
    )
    residual = rate - nu * laplacian + convection + gradient - forcing
    assert np.abs(residual).max() <= 1e-6 * np.abs(forcing).max()


def test_custom_case():
    case = custom_case([[0, 1], [0, 2]], nu=0.5, T=1.0, forcing=[1.0, 0.0])
    assert case.case is CaseEnum.CUSTOM
    problem = case.problem()
    assert not problem.has_exact_solution
    np.testing.assert_allclose(problem.forcing(0.0, np.zeros((3, 2))),
                               [[1.0, 0.0]] * 3)
    with pytest.raises(ValidationError):
        custom_case([[0, 1], [0, 1]], nu=1.0, T=1.0, forcing=[1.0])


def test_mtgv3d_case_dimension():
    case = mtgv3d_case()
    assert case.dim == 3
    assert case.T == 2.0
    assert case.to_dict()["id"] == "mtgv3d"


# =============================================================================
# Tests | Errors
# =============================================================================

def accumulate(mesh, scale):
    accumulator = ErrorAccumulator(mesh, smooth_velocity, smooth_pressure, 0.5)
    for step in (1, 2):
        t = 0.5 * step
        velocity = project_velocity(mesh, smooth_velocity, t)
        pressure = zero_mean_adjust(
            project_pressure(mesh, smooth_pressure, t), mesh
        )
        accumulator.add(step, t, velocity * scale, pressure * scale)
    return accumulator


@pytest.mark.parametrize(("scale", "expected"), [(1.0, 0.0), (0.0, 1.0),
                                                 (2.0, 1.0)])
def test_discrete_normalization(square_4x4, scale, expected):
    terms = accumulate(square_4x4, scale).terms
    report = compute_spacetime_errors(terms, 2)
    values = [report.velocity_l2, report.velocity_h1, report.pressure_l2]
    assert values == pytest.approx([expected] * 3, abs=1e-12)
    assert report.to_dict()["normalization"] == "discrete"
    assert len(report.contributions) == 2


def test_missing_time_node(square_4x4):
    terms = accumulate(square_4x4, 1.0).terms
    with pytest.raises(ValidationError) as info:
        compute_spacetime_errors(terms, 3)
    assert info.value.code == "missing_node"
    assert "3" in str(info.value)


def test_duplicate_time_node(square_4x4):
    accumulator = accumulate(square_4x4, 1.0)
    velocity = project_velocity(square_4x4, smooth_velocity, 0.5)
    pressure = project_pressure(square_4x4, smooth_pressure, 0.5)
    with pytest.raises(ValidationError) as info:
        accumulator.add(1, 0.5, velocity, pressure)
    assert info.value.code == "duplicate_node"


def test_time_integral_needs_positive_constants(square_4x4):
    terms = accumulate(square_4x4, 0.0).terms
    time_integral = NormalizationEnum.TIME_INTEGRAL
    with pytest.raises(ValidationError) as info:
        compute_spacetime_errors(terms, 2, time_integral)
    assert info.value.code == "missing_constants"
    with pytest.raises(ValidationError) as info:
        compute_spacetime_errors(terms, 2, time_integral, (1.0, 0.0, 1.0))
    assert info.value.code == "not_positive"
    report = compute_spacetime_errors(terms, 2, time_integral, (4.0,) * 3)
    assert report.velocity_l2 == pytest.approx(report.raw[0] / 2.0)


def test_time_integral_constants_of_tgv():
    case = tgv2d_case(nu=1.0, T=1.2)
    mesh = build_cartesian(2, 32, box=case.box)
    velocity, gradient, pressure = time_integral_constants(
        mesh, case.problem(), case.T
    )
    decay = 1.0 - math.exp(-4.8)
    # cell means of cos(2x) over a width h carry the factor sin(h) / h
    h = 2.0 * math.pi / 32
    assert velocity == pytest.approx(4.89420, rel=1e-2)
    assert velocity == pytest.approx(math.pi**2 * decay / 2.0, rel=1e-2)
    assert pressure == pytest.approx(
        0.308404 * (math.sin(h) / h) ** 2, rel=1e-3
    )
    assert gradient == pytest.approx(math.pi**2 * decay, rel=3e-2)


def test_errors_for_run_needs_exact_solution(square_4x4):
    case = custom_case([[0, 1], [0, 1]], nu=1.0, T=0.2)
    scheme = template(T=case.T)
    result = run_simulation(square_4x4, scheme, case.problem())
    with pytest.raises(ValidationError) as info:
        errors_for_run(result, square_4x4, case.problem())
    assert info.value.code == "no_exact_solution"
    row = report_row(scheme, result, None)
    assert math.isnan(row["velocity_l2"])


# =============================================================================
# Tests | Convergence
# =============================================================================

def test_observed_orders():
    assert observed_orders([0.1, 0.05, 0.025]) == pytest.approx([1.0, 1.0])
    assert observed_orders([0.1, 0.025], [0.2, 0.1]) == pytest.approx([2.0])
    assert observed_orders([0.1, 0.01], [1.0, 0.1]) == pytest.approx([1.0])
    orders = observed_orders([0.1, 0.0, float("nan")])
    assert all(math.isnan(value) for value in orders)


def test_observed_orders_rejects():
    with pytest.raises(ValidationError):
        observed_orders([0.1, 0.05], [0.1])
    with pytest.raises(ValidationError):
        observed_orders([0.1, 0.05], [0.1, 0.1])


def test_convergence_study_table():
    case = tgv2d_case(nu=1.0, T=0.2)
    mesh = build_cartesian(2, 6, box=case.box)
    frame = convergence_study(
        case, mesh, [template(), template(AC)], [0.1, 0.05]
    )
    assert list(frame.columns) == RATE_COLUMNS
    assert frame["scheme"].tolist() == [
        "mono-o1-explicit", "mono-o1-explicit",
        "ac-o1-explicit", "ac-o1-explicit",
    ]
    assert frame["n_steps"].tolist() == [2, 4, 2, 4]
    assert frame["rate_velocity_l2"].isna().tolist() == [
        True, False, True, False,
    ]
    assert (frame["velocity_l2"] > 0.0).all()
    assert not frame["diverged"].any()


def test_convergence_study_rejects():
    mesh = build_cartesian(2, 2)
    with pytest.raises(ValidationError) as info:
        convergence_study(
            custom_case([[0, 1], [0, 1]], nu=1.0, T=1.0), mesh,
            [template()], [0.1],
        )
    assert info.value.code == "no_exact_solution"
    with pytest.raises(ValidationError) as info:
        convergence_study(tgv2d_case(nu=1.0), mesh, [template()], [])
    assert info.value.code == "empty"


def test_eta_sweep_rows():
    case = tgv2d_case(nu=0.1, T=0.3)
    mesh = build_cartesian(2, 6, box=case.box)
    frame = eta_sweep(case, mesh, template(), 0.1, factors=(1.0, 100.0))
    assert len(frame) == 3
    assert frame["eta"].iloc[:2].tolist() == pytest.approx([10.0, 1000.0])
    assert pd.isna(frame["eta"].iloc[2])
    assert frame["scheme"].tolist() == [
        "ac-o1-explicit", "ac-o1-explicit", "mono-o1-explicit",
    ]


def test_tolerance_study_rows():
    case = tgv2d_case(nu=0.1, T=0.2)
    mesh = build_cartesian(2, 4, box=case.box)
    frame = tolerance_study(case, mesh, template(AC), 0.1, [1e-3, 1e-6])
    assert frame["tolerance"].tolist() == [1e-3, 1e-6]
    assert frame["velocity_l2"].notna().all()


# =============================================================================
# Tests | Critical Time Step
# =============================================================================

def test_bisection_on_step_function():
    lo, hi, resolution = 0.005, 0.02, 0.01
    dt_c, log = bisect_critical_step(step_probe(0.01), lo, hi, resolution)
    assert 0.0099 <= dt_c <= 0.01
    assert [entry[0] for entry in log[:2]] == [lo, hi]
    bound = math.ceil(math.log2((hi - lo) / (resolution * 0.0099))) + 2
    assert len(log) <= bound


def test_bisection_rejects_bad_bracket():
    with pytest.raises(BracketError, match="does not straddle"):
        bisect_critical_step(step_probe(0.01), 0.02, 0.04)
    with pytest.raises(BracketError):
        bisect_critical_step(step_probe(0.01), 0.001, 0.005)


def test_cfl_search_with_probe():
    case = tgv2d_case(reynolds=200.0, T=50.0)
    spec = CflSearchSpec(bracket=(0.005, 0.02))
    dt_c, frame = cfl_search(case, template(), None, spec, step_probe(0.01))
    assert 0.0099 <= dt_c <= 0.01
    assert list(frame.columns) == [
        "dt", "diverged", "t_div", "dt_re", "t_div_re",
    ]
    np.testing.assert_allclose(frame["dt_re"], frame["dt"] * 200.0)
    stable = ~frame["diverged"]
    assert frame.loc[stable, "t_div_re"].isna().all()


def test_cfl_brackets():
    spec = CflSearchSpec()
    lo, hi = spec.bracket_for("monolithic", 1, 200.0)
    assert (lo, hi) == pytest.approx((0.7 * 2.98e-2, 1.3 * 2.98e-2))
    lo, hi = spec.bracket_for(AC, 2, 700.0)
    assert (lo, hi) == pytest.approx((0.7 * 2.95e-3, 1.3 * 2.95e-3))
    assert spec.bracket_for(MONO, 1, 300.0) == pytest.approx(
        (1.0 / 300.0, 12.0 / 300.0)
    )
    assert CflSearchSpec(bracket=(1, 2)).bracket_for(MONO, 2, 200.0) == (
        1.0, 2.0
    )
    assert spec.observation_time(200.0) == pytest.approx(50.0)


@pytest.mark.parametrize(
    "kwargs",
    [{"resolution": 0.2}, {"resolution": 0.0}, {"bracket": (2.0, 1.0)},
     {"reynolds": (200.0, -1.0)}, {"eta_factor": 0.0}],
)
def test_cfl_spec_rejects(kwargs):
    with pytest.raises(ValidationError):
        CflSearchSpec(**kwargs)


def test_cfl_study_scales_with_reynolds(monkeypatch):
    def fake_probe(case, scheme, mesh, eta_factor=10.0):
        return step_probe(6.0 / case.reynolds)

    monkeypatch.setattr(cfl_module, "scheme_probe", fake_probe)
    spec = CflSearchSpec(reynolds=(300.0, 600.0))
    critical, probes = cfl_study(template(), None, spec, [template(order=2)])
    assert len(critical) == 4
    assert critical["dt_c_re"].to_numpy() == pytest.approx(6.0, rel=0.02)
    assert set(probes["reynolds"]) == {300.0, 600.0}


# =============================================================================
# Tests | Run Configuration
# =============================================================================

def test_parse_override():
    assert parse_override("scheme.dt=0.05") == (["scheme", "dt"], 0.05)
    assert parse_override("output.dts=[0.1, 0.05]") == (
        ["output", "dts"], [0.1, 0.05]
    )
    assert parse_override("output.dir=runs/a") == (["output", "dir"],
                                                   "runs/a")
    with pytest.raises(ConfigError):
        parse_override("scheme.dt")


def test_apply_overrides_copies():
    updated = apply_overrides(
        SMALL_DOCUMENT, ["scheme.dt=0.05", "solver.tolerance=1e-6"]
    )
    assert updated["scheme"]["dt"] == 0.05
    assert updated["solver"] == {"tolerance": 1e-6}
    assert SMALL_DOCUMENT["scheme"]["dt"] == 0.1
    with pytest.raises(ConfigError):
        apply_overrides(SMALL_DOCUMENT, ["scheme.dt.value=1"])


def test_run_config_defaults():
    config = run_config_from_dict(SMALL_DOCUMENT)
    assert config.mesh.n_cells == 16
    assert config.case.case is CaseEnum.TGV2D
    assert config.scheme.eta == pytest.approx(100.0)
    assert config.scheme.T == pytest.approx(0.2)
    assert config.scheme.solver.tolerance == 1e-4
    assert config.dts == (0.1,)
    assert config.normalization is NormalizationEnum.DISCRETE
    assert str(config.output_dir) == "cdofb-output"


def test_run_config_scheme_details():
    document = apply_overrides(SMALL_DOCUMENT, [
        "scheme.eta_factor=1",
        "scheme.stab_param=1.0",
        "scheme.linear_solver=\"direct\"",
        "solver.restart=20",
        "output.normalization=time_integral",
        "output.dts=[0.1, 0.05]",
    ])
    config = run_config_from_dict(document)
    assert config.scheme.eta == pytest.approx(10.0)
    assert config.scheme.operators.stab_param == 1.0
    assert config.scheme.solver.restart == 20
    assert config.normalization is NormalizationEnum.TIME_INTEGRAL
    assert config.dts == (0.1, 0.05)


@pytest.mark.parametrize(
    "override",
    ["extra.key=1", "scheme.speed=2", "mesh.kind=\"tetra\"",
     "case.viscosity=1"],
)
def test_run_config_rejects(override):
    with pytest.raises(ConfigError):
        run_config_from_dict(apply_overrides(SMALL_DOCUMENT, [override]))


def test_run_config_requires_dt():
    document = json.loads(json.dumps(SMALL_DOCUMENT))
    del document["scheme"]["dt"]
    with pytest.raises(ConfigError, match="dt"):
        run_config_from_dict(document)


def test_run_config_dimension_mismatch():
    document = apply_overrides(
        SMALL_DOCUMENT, ["mesh.box=[[0, 1], [0, 1], [0, 1]]", "mesh.cells=2"]
    )
    with pytest.raises(ValidationError) as info:
        run_config_from_dict(document)
    assert info.value.code == "dimension_mismatch"


def test_load_run_config_with_mesh_file(tmp_path):
    write_mesh(build_cartesian(2, 3, box=((0, 1), (0, 1))),
               tmp_path / "mesh.json")
    document = {
        **SMALL_DOCUMENT,
        "mesh": {"kind": "file", "path": "mesh.json"},
        "case": {"id": "custom", "box": [[0, 1], [0, 1]], "nu": 1.0,
                 "T": 0.2},
    }
    path = tmp_path / "run.json"
    path.write_text(json.dumps(document), encoding="utf-8")
    config = load_run_config(path, ["scheme.coupling=monolithic"])
    assert config.mesh.n_cells == 9
    assert config.scheme.coupling is MONO
    assert config.scheme.eta is None


def test_load_run_config_errors(tmp_path):
    missing = tmp_path / "absent.json"
    with pytest.raises(ConfigError, match="absent.json"):
        load_run_config(missing)
    broken = tmp_path / "broken.json"
    broken.write_text("{\"mesh\": ", encoding="utf-8")
    with pytest.raises(ConfigError, match="invalid JSON"):
        load_run_config(broken)
    listed = tmp_path / "list.json"
    listed.write_text("[]", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_run_config(listed)


# =============================================================================
# Tests | Artifacts
# =============================================================================

def test_write_run_artifacts(tmp_path):
    config = run_config_from_dict(SMALL_DOCUMENT)
    problem = config.case.problem()
    result = run_simulation(config.mesh, config.scheme, problem)
    report = errors_for_run(result, config.mesh, problem)
    rates = pd.DataFrame([report_row(config.scheme, result, report)])
    written = write_run_artifacts(
        tmp_path / "out", config.case, result, report, rates, snapshots=True
    )
    assert {path.name for path in written.values()} == {
        "errors.json", "diagnostics.csv", "rates.csv", "velocity.csv",
        "pressure.csv",
    }
    payload = json.loads((tmp_path / "out" / ERRORS_FILE).read_text())
    assert payload["case"]["id"] == "tgv2d"
    assert payload["steps"] == 2
    assert payload["t_div"] is None
    assert payload["errors"]["velocity_l2"] > 0.0
    diagnostics = pd.read_csv(tmp_path / "out" / "diagnostics.csv")
    assert diagnostics["n"].tolist() == [1, 2]


# =============================================================================
# Tests | Acceptance
# =============================================================================

@pytest.mark.slow
def test_first_order_temporal_rates():
    case = tgv2d_case(nu=1.0, T=1.2)
    mesh = build_cartesian(2, 128, box=case.box)
    dts = [case.T / 2**k for k in range(1, 6)]
    frame = convergence_study(
        case, mesh,
        [template(convection=ConvectionEnum.IMPLICIT), template(AC)],
        dts, NormalizationEnum.TIME_INTEGRAL,
    )
    for name in ("rate_velocity_l2", "rate_velocity_h1"):
        rates = frame[name].dropna().to_numpy()
        assert np.all((rates >= 0.9) & (rates <= 1.1)), (name, rates)


@pytest.mark.slow
def test_second_order_temporal_rates():
    case = tgv2d_case(nu=1.0, T=1.2)
    mesh = build_cartesian(2, 128, box=case.box)
    dts = [case.T / 2**k for k in range(1, 6)]
    frame = convergence_study(
        case, mesh,
        [
            template(order=2, convection=ConvectionEnum.IMPLICIT),
            template(AC, order=2),
        ],
        dts, NormalizationEnum.TIME_INTEGRAL,
    )
    for name in ("rate_velocity_l2", "rate_velocity_h1"):
        rates = frame[name].dropna().to_numpy()
        assert np.all((rates >= 1.8) & (rates <= 2.2)), (name, rates)
    for _, rows in frame.groupby("scheme"):
        rates = rows["rate_pressure_l2"].dropna().to_numpy()
        assert np.all(rates[:-1] >= 1.8), rates
        assert rates[-1] >= 1.6, rates


@pytest.mark.slow
def test_mtgv3d_temporal_rates():
    case = mtgv3d_case(T=2.0, nu=1.0)
    mesh = build_cartesian(3, 16, box=case.box)
    dts = [case.T / 2**k for k in range(4, 8)]
    monolithic = template()
    compressible = template(AC, eta=50.0)
    bootstrap = template(AC, order=2, eta=50.0)
    frame = convergence_study(
        case, mesh, [monolithic, compressible, bootstrap], dts,
        NormalizationEnum.TIME_INTEGRAL,
    )
    rows = {name: group for name, group in frame.groupby("scheme")}

    for config in (monolithic, compressible):
        rates = rows[config.name]["rate_velocity_l2"].dropna().to_numpy()
        assert np.all(rates >= 0.9), (config.name, rates)

    at_dt = case.T / 64
    errors = [
        rows[config.name].set_index("dt").loc[at_dt, "velocity_l2"]
        for config in (monolithic, compressible)
    ]
    assert errors[1] == pytest.approx(errors[0], rel=0.15)

    rates = rows[bootstrap.name]["rate_velocity_l2"].dropna().to_numpy()
    assert rates.max() >= 1.6, rates


@pytest.mark.slow
def test_eta_sweep_moderate_reynolds():
    case = tgv2d_case(nu=RE33_VISCOSITY, T=40.0)
    mesh = build_cartesian(2, 128, box=case.box)
    frame = eta_sweep(
        case, mesh, template(), 0.625, normalization="time_integral"
    )
    expected_velocity = [1.0530e-2, 1.4097e-3, 1.2436e-3, 1.2369e-3]
    expected_pressure = [2.8050e-2, 1.1862e-2, 1.0313e-2, 9.9976e-3]
    np.testing.assert_allclose(frame["velocity_l2"], expected_velocity,
                               rtol=0.1)
    np.testing.assert_allclose(frame["pressure_l2"], expected_pressure,
                               rtol=0.1)
