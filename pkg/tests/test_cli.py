from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import numpy as np
import pytest

from bloch_synth import (
    ConfigError,
    InvalidExpression,
    NonzeroAlphaAtZero,
    TimeGrid,
    circle_h,
    parallel_alphas,
)
from bloch_synth.cli import (
    EXIT_FAILED_CHECKS,
    EXIT_INVALID,
    EXIT_OK,
    Command,
    Family,
    JobConfig,
    alpha_from_expressions,
    compile_expression,
    entry_columns,
    main,
)
from bloch_synth.dilation import shrink_h_ab_for
from tests.conftest import COS_THETA0, THETA0

JOBS_DIR = Path(__file__).parent.parent / "jobs"
CIRCLE_PARAMS = {"r0": 0.5, "cos_theta0": COS_THETA0, "omega": 1.0}


def write_job(tmp_path: Path, **job: Any) -> Path:
    job.setdefault("output", {"dir": str(tmp_path / "out")})
    job_path = tmp_path / "job.json"
    job_path.write_text(json.dumps(job), encoding="utf-8")
    return job_path


def last_json_line(text: str) -> dict:
    return json.loads(text.strip().splitlines()[-1])


def test_compile_expression():
    expression = compile_expression("omega*t^2 + sin(pi*t)", {"omega": 2.0})
    assert expression(3.0) == pytest.approx(18.0, abs=1e-12)
    assert expression.derivative()(3.0) == pytest.approx(12 - np.pi, abs=1e-12)


@pytest.mark.parametrize(
    "source", ["foo * t", "t; import os", "__import__('os')", "t +", "omega"]
)
def test_compile_expression_rejects(source: str):
    with pytest.raises(InvalidExpression):
        compile_expression(source)


def test_alpha_expressions(circle):
    params = {"theta0": THETA0}
    gauge = alpha_from_expressions("0.5*cos(theta0)*t", None, params)
    parallel = parallel_alphas(circle, TimeGrid.for_simpson(200, circle.tau))
    for t in np.linspace(0, circle.tau, 7):
        assert gauge.alpha1(t) == pytest.approx(parallel.alpha1(t), abs=1e-10)
        assert gauge.alpha2(t) == 0
    assert alpha_from_expressions("sin(t)", "t^2").values(0.0) == (0.0, 0.0)
    with pytest.raises(NonzeroAlphaAtZero):
        alpha_from_expressions("1+t", None)


def test_job_config_parses_enums(tmp_path):
    config = JobConfig.from_file(
        write_job(
            tmp_path,
            command="synth-unitary",
            path={"family": "circle", "params": CIRCLE_PARAMS},
        )
    )
    assert config.command is Command.SYNTH_UNITARY
    assert config.path.family is Family.CIRCLE
    assert config.path.numeric_params()["theta0"] == pytest.approx(THETA0)
    assert config.build_path().tau == pytest.approx(2 * np.pi)


@pytest.mark.parametrize(
    "job",
    [
        {"command": "transmogrify", "path": {"family": "circle"}},
        {"command": "verify", "path": {"family": "circle"}, "colour": "red"},
        {"command": "verify", "path": {"family": "sampled"}},
        {
            "command": "verify",
            "path": {"family": "circle"},
            "gauge": {"parallel": True, "alpha1_expr": "t"},
        },
        {"command": "verify", "path": {"family": "circle"}, "gauge": {"w": "sampled"}},
        {"command": "verify", "path": {"family": "circle"}, "grid": {"n": 0}},
    ],
)
def test_job_config_rejects(job: dict):
    with pytest.raises(ConfigError) as error:
        JobConfig.from_data(job)
    assert error.value.code == 1
    assert isinstance(error.value.data, list)


def test_missing_family_parameters():
    config = JobConfig.from_data(
        {"command": "verify", "path": {"family": "circle", "params": {"r0": 0.5}}}
    )
    with pytest.raises(ConfigError) as error:
        config.build_path()
    assert error.value.data == {"missing": ["theta0", "omega"]}


def test_synth_unitary_writes_the_circle_schedule(tmp_path):
    job_path = write_job(
        tmp_path,
        command="synth-unitary",
        path={"family": "circle", "params": CIRCLE_PARAMS},
        gauge={"parallel": True},
        grid={"n": 100},
    )
    assert main([str(job_path)]) == EXIT_OK

    csv_path = tmp_path / "out" / "hamiltonian.csv"
    header = csv_path.read_text().splitlines()[0].split(",")
    assert header == ["t", *entry_columns(2), "B0", "Bx", "By", "Bz"]
    rows = np.loadtxt(csv_path, delimiter=",", skiprows=1)
    assert rows.shape == (101, 13)
    sin = np.sin(THETA0)
    for row in rows[::10]:
        t = row[0]
        expected = circle_h(THETA0, 1.0, t)
        entries = row[1:9:2] + 1j * row[2:9:2]
        assert np.allclose(entries, expected.ravel(), atol=1e-12)
        field = sin * np.array([-COS_THETA0 * np.cos(t), -COS_THETA0 * np.sin(t), sin])
        assert np.allclose(row[10:], field, atol=1e-12)
        assert row[9] == pytest.approx(0, abs=1e-15)

    dump = json.loads((tmp_path / "out" / "hamiltonian.json").read_text())
    assert max(dump["hermiticity_residual"]) < 1e-12
    assert dump["provenance"]["gauge"] == "parallel"


def test_synth_unitary_rejects_open_paths(tmp_path, capsys):
    job_path = write_job(
        tmp_path,
        command="synth-unitary",
        path={"family": "ellipse", "params": {"omega": 1.0}},
    )
    assert main([str(job_path)]) == EXIT_INVALID
    error = last_json_line(capsys.readouterr().err)
    assert error["error"] == "KindMismatch"


def test_synth_open_writes_the_kick(tmp_path):
    job_path = write_job(
        tmp_path,
        command="synth-open",
        path={"family": "ellipse", "params": {"omega": 1.0}},
        grid={"n": 40},
        output={"dir": str(tmp_path / "out"), "formats": ["csv"]},
    )
    assert main([str(job_path)]) == EXIT_OK
    csv_path = tmp_path / "out" / "hamiltonian_ab.csv"
    rows = np.loadtxt(csv_path, delimiter=",", skiprows=1)
    assert rows.shape == (40, 33)
    assert rows[0, 0] == pytest.approx(np.pi / 40)
    assert rows[-1, 0] == pytest.approx(np.pi)
    kick = np.loadtxt(tmp_path / "out" / "kick.csv", delimiter=",", skiprows=1)
    matrix = (kick[0::2] + 1j * kick[1::2]).reshape(4, 4)
    assert np.allclose(matrix.conj().T @ matrix, np.eye(4), atol=1e-12)
    assert not (tmp_path / "out" / "hamiltonian_ab.json").exists()


def test_geomphase_prints_gamma(tmp_path, capsys):
    job_path = write_job(
        tmp_path,
        command="geomphase",
        path={"family": "circle", "params": CIRCLE_PARAMS},
        grid={"n": 2000},
    )
    assert main([str(job_path)]) == EXIT_OK
    printed = last_json_line(capsys.readouterr().out)
    assert printed["gamma"] == pytest.approx(-0.71372, abs=1e-4)
    written = json.loads((tmp_path / "out" / "phase.json").read_text())
    assert written["gamma"] == printed["gamma"]
    assert written["closed_form"] == pytest.approx(-0.7137243789, abs=1e-9)


@pytest.mark.slow
def test_verify_shrink_job(tmp_path):
    job_path = write_job(
        tmp_path,
        command="verify",
        path={"family": "shrink", "params": {"r_expr": "1 - t^2", "tau": 0.9}},
        grid={"n": 4000},
    )
    assert main([str(job_path)]) == EXIT_OK
    report = json.loads((tmp_path / "out" / "report.json").read_text())
    assert report["overall_pass"] is True
    assert report["provenance"]["choice"] == "shrink"


def test_verify_with_a_coarse_grid_fails_checks(tmp_path):
    job_path = write_job(
        tmp_path,
        command="verify",
        path={"family": "circle", "params": CIRCLE_PARAMS},
        grid={"n": 20},
    )
    assert main([str(job_path)]) == EXIT_FAILED_CHECKS
    report = json.loads((tmp_path / "out" / "report.json").read_text())
    assert report["overall_pass"] is False
    failed = {check["name"] for check in report["checks"] if not check["pass"]}
    assert "realization" in failed


@pytest.mark.parametrize(
    "content",
    [
        "{not json",
        json.dumps({"command": "verify"}),
        json.dumps({"command": "verify", "path": {"family": "spiral"}}),
    ],
)
def test_malformed_job_reports_json_error(tmp_path, capsys, content: str):
    job_path = tmp_path / "job.json"
    job_path.write_text(content, encoding="utf-8")
    assert main([str(job_path)]) == EXIT_INVALID
    error = last_json_line(capsys.readouterr().err)
    assert error["error"] == "ConfigError"
    assert error["code"] == 1
    assert "message" in error


def test_missing_job_file(tmp_path, capsys):
    assert main([str(tmp_path / "absent.json")]) == EXIT_INVALID
    assert last_json_line(capsys.readouterr().err)["error"] == "ConfigError"


def test_richardson_synth_open_matches_the_shrink_closed_form(tmp_path):
    job_path = write_job(
        tmp_path,
        command="synth-open",
        path={"family": "shrink", "params": {"r_expr": "1 - t^2", "tau": 0.9}},
        grid={"n": 9},
        richardson=True,
        output={"dir": str(tmp_path / "out"), "formats": ["csv"]},
    )
    config = JobConfig.from_file(job_path)
    assert config.richardson is True
    assert main([str(job_path)]) == EXIT_OK

    csv_path = tmp_path / "out" / "hamiltonian_ab.csv"
    rows = np.loadtxt(csv_path, delimiter=",", skiprows=1)
    assert rows.shape == (9, 33)
    path = config.build_path()
    for row in rows[:-1]:
        matrix = (row[1::2] + 1j * row[2::2]).reshape(4, 4)
        assert np.allclose(matrix, shrink_h_ab_for(path, row[0]), atol=1e-6)


def test_missing_sampled_csv_reports_json_error(tmp_path, capsys):
    job_path = write_job(
        tmp_path,
        command="synth-unitary",
        path={"family": "sampled", "csv_path": str(tmp_path / "absent.csv")},
    )
    assert main([str(job_path)]) == EXIT_INVALID
    error = last_json_line(capsys.readouterr().err)
    assert error["error"] == "InvalidFamilyParameter"
    assert error["data"]["file"].endswith("absent.csv")


def test_missing_w_samples_report_json_error(tmp_path, capsys):
    job_path = write_job(
        tmp_path,
        command="synth-open",
        path={"family": "ellipse", "params": {"omega": 1.0}},
        gauge={"w": "sampled", "w_csv_path": str(tmp_path / "absent.csv")},
        grid={"n": 10},
    )
    assert main([str(job_path)]) == EXIT_INVALID
    assert last_json_line(capsys.readouterr().err)["error"] == "InvalidFamilyParameter"


def test_undecodable_job_file(tmp_path, capsys):
    job_path = tmp_path / "job.json"
    job_path.write_bytes(b"\xff\xfe{bad")
    assert main([str(job_path)]) == EXIT_INVALID
    error = last_json_line(capsys.readouterr().err)
    assert error["error"] == "ConfigError"
    assert error["code"] == 1


def test_output_dir_blocked_by_a_file(tmp_path, capsys):
    blocker = tmp_path / "blocker"
    blocker.write_text("", encoding="utf-8")
    job_path = write_job(
        tmp_path,
        command="geomphase",
        path={"family": "circle", "params": CIRCLE_PARAMS},
        output={"dir": str(blocker / "out")},
    )
    assert main([str(job_path)]) == EXIT_INVALID
    error = last_json_line(capsys.readouterr().err)
    assert error["error"] == "ConfigError"
    assert error["data"]["dir"].endswith("out")


@pytest.mark.slow
@pytest.mark.parametrize(
    "shipped", sorted(JOBS_DIR.glob("*.json")), ids=lambda job: job.stem
)
def test_shipped_jobs_succeed(tmp_path, shipped: Path):
    job = json.loads(shipped.read_text(encoding="utf-8"))
    job["output"]["dir"] = str(tmp_path / shipped.stem)
    job_path = tmp_path / shipped.name
    job_path.write_text(json.dumps(job), encoding="utf-8")
    assert main([str(job_path)]) == EXIT_OK
    assert any((tmp_path / shipped.stem).iterdir())
