# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Command Line Tests
==================

"""


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
import json

# Import | Libraries
import pandas as pd
import pytest

# Import | Local Modules
from cdofb_ns.bench import DIAGNOSTICS_FILE, ERRORS_FILE, RATES_FILE
from cdofb_ns.bench.cli import EXIT_DIVERGED, EXIT_ERROR, EXIT_OK, main


# =============================================================================
# Helpers
# =============================================================================

def write_config(tmp_path, **sections):
    document = {
        "mesh": {"kind": "cartesian", "cells": 4},
        "case": {"id": "tgv2d", "nu": 0.1, "T": 0.2},
        "scheme": {
            "coupling": "monolithic",
            "order": 1,
            "convection": "explicit",
            "dt": 0.1,
            "linear_solver": "direct",
        },
        "output": {"dir": str(tmp_path / "out")},
    }
    document.update(sections)
    path = tmp_path / "run.json"
    path.write_text(json.dumps(document), encoding="utf-8")
    return path


# =============================================================================
# Tests
# =============================================================================

def test_missing_config_reports_path(tmp_path, capsys):
    missing = tmp_path / "absent.json"
    assert main(["run", "--config", str(missing)]) == EXIT_ERROR
    assert "absent.json" in capsys.readouterr().err


def test_unknown_override_key_is_an_error(tmp_path, capsys):
    path = write_config(tmp_path)
    code = main(["run", "--config", str(path), "--set", "scheme.bogus=1"])
    assert code == EXIT_ERROR
    assert "bogus" in capsys.readouterr().err


def test_run_writes_artifacts(tmp_path):
    path = write_config(tmp_path)
    assert main(["run", "--config", str(path)]) == EXIT_OK
    out = tmp_path / "out"
    for name in (ERRORS_FILE, DIAGNOSTICS_FILE, RATES_FILE):
        assert (out / name).is_file()
    payload = json.loads((out / ERRORS_FILE).read_text(encoding="utf-8"))
    assert payload["diverged"] is False
    diagnostics = pd.read_csv(out / DIAGNOSTICS_FILE)
    assert len(diagnostics) == 2
    rates = pd.read_csv(out / RATES_FILE)
    assert len(rates) == 1


def test_run_accepts_overrides(tmp_path):
    path = write_config(tmp_path)
    code = main([
        "run", "--config", str(path),
        "--set", "scheme.dt=0.05",
        "--set", f"output.dir={tmp_path / 'fine'}",
    ])
    assert code == EXIT_OK
    diagnostics = pd.read_csv(tmp_path / "fine" / DIAGNOSTICS_FILE)
    assert len(diagnostics) == 4


def test_sweep_dt_writes_rates(tmp_path, capsys):
    path = write_config(tmp_path)
    code = main([
        "sweep-dt", "--config", str(path), "--dts", "0.1", "0.05",
    ])
    assert code == EXIT_OK
    rates = pd.read_csv(tmp_path / "out" / RATES_FILE)
    assert list(rates["dt"]) == pytest.approx([0.1, 0.05])
    assert "dt" in capsys.readouterr().out


def test_diverged_run_exits_with_two(tmp_path, capsys):
    path = write_config(
        tmp_path,
        mesh={"kind": "cartesian", "cells": 8},
        case={"id": "tgv2d", "reynolds": 2000.0, "T": 50.0},
        scheme={
            "coupling": "artificial_compressibility",
            "order": 2,
            "convection": "explicit",
            "dt": 1.0,
            "linear_solver": "direct",
        },
    )
    assert main(["run", "--config", str(path)]) == EXIT_DIVERGED
    assert "diverged at t=" in capsys.readouterr().err
    payload = json.loads(
        (tmp_path / "out" / ERRORS_FILE).read_text(encoding="utf-8")
    )
    assert payload["diverged"] is True


def test_mesh_gen_then_check(tmp_path, capsys):
    out = tmp_path / "mesh.json"
    code = main([
        "mesh", "gen", "--kind", "voronoi", "--n-seeds", "20",
        "--seed", "3", "--out", str(out),
    ])
    assert code == EXIT_OK
    generated = json.loads(capsys.readouterr().out)
    assert generated["dim"] == 2
    assert generated["measure"] == pytest.approx(1.0)

    assert main(["mesh", "check", str(out)]) == EXIT_OK
    checked = json.loads(capsys.readouterr().out)
    assert checked["cells"] == generated["cells"]
    assert checked["closure"] < 1e-10
    assert checked["min_cell_measure"] > 0.0


def test_mesh_gen_cartesian_box(tmp_path, capsys):
    out = tmp_path / "box.json"
    code = main([
        "mesh", "gen", "--dim", "3", "--cells", "2",
        "--box", "0", "2", "0", "1", "0", "1", "--out", str(out),
    ])
    assert code == EXIT_OK
    summary = json.loads(capsys.readouterr().out)
    assert summary["cells"] == 8
    assert summary["measure"] == pytest.approx(2.0)


def test_missing_subcommand_is_a_usage_error():
    with pytest.raises(SystemExit) as raised:
        main([])
    assert raised.value.code == 2


def test_cfl_search_rejects_other_cases(tmp_path, capsys):
    path = write_config(
        tmp_path,
        mesh={"kind": "cartesian", "cells": 2},
        case={"id": "mtgv3d", "T": 0.2},
    )
    assert main(["cfl-search", "--config", str(path)]) == EXIT_ERROR
    error = capsys.readouterr().err
    assert "tgv2d" in error
    assert "mtgv3d" in error
    assert not (tmp_path / "out").exists()
