"""End-to-end tests for the command-line front end."""

import json

import numpy as np
import pytest

from incentive_games import cli
from incentive_games.matrix_games import (
    EquilibriumReport,
    IncentiveScheme,
    StateOutcome,
)
from incentive_games.oracle import OracleReport
from incentive_games.scenarios import load_scenario


def run(*argv):
    return cli.main(list(argv))


def run_json(capsys, *argv):
    assert run(*argv) == 0
    return json.loads(capsys.readouterr().out)


def run_csv(capsys, *argv):
    assert run(*argv) == 0
    lines = capsys.readouterr().out.splitlines()
    header = lines[0].split(",")
    rows = [[float(v) for v in line.split(",")] for line in lines[1:]]
    return header, rows


# ---------------------------------------------------------------------------
# solve subcommands
# ---------------------------------------------------------------------------


def test_g2_scenario_a_report(capsys):
    doc = run_json(capsys, "g2", "scenarioA")
    assert doc["game"] == "g2"
    assert doc["belief"] == 0.4
    assert doc["principal_cost"] == pytest.approx(2.6, abs=1e-9)
    assert doc["agent_cost"] == pytest.approx(2.6, abs=1e-9)
    assert doc["agent_actions"] == [0, 1]
    assert doc["scheme"]["state_dependent"] is False


def test_g3_scenario_b_report(capsys):
    doc = run_json(capsys, "g3", "scenarioB")
    assert doc["principal_cost"] == pytest.approx(1.0, abs=1e-9)
    assert doc["agent_cost"] == pytest.approx(1.75, abs=1e-9)
    assert doc["revealing"] is True
    split = {round(p, 6): w for p, w in doc["split"]}
    assert split == {0.0: pytest.approx(0.25), 1.0: pytest.approx(0.75)}


def test_g4_scenario_b_report(capsys):
    doc = run_json(capsys, "g4", "scenarioB")
    assert doc["kappa"] == 2.0
    assert doc["total_cost"] == pytest.approx(1.8809428908692696, abs=1e-9)
    assert doc["total_cost"] == pytest.approx(
        doc["gross_cost"] + doc["channel_cost"], abs=1e-9
    )


def test_g4_qg_scenario_report(capsys):
    doc = run_json(capsys, "g4", "qg_fig4")
    assert doc["game"] == "g4"
    assert doc["principal_cost"] == pytest.approx(2.3115717756571046, abs=1e-8)
    assert doc["channel_sigma_w_sq"] == pytest.approx(4.0, abs=1e-4)


def test_qg_subcommands_route_to_closed_forms(capsys):
    g1 = run_json(capsys, "g1", "qg_fig4")
    g2 = run_json(capsys, "g2", "qg_fig4")
    assert g1["principal_cost"] == pytest.approx(2.0)
    assert g2["principal_cost"] == pytest.approx(2.4)
    assert g2["agent_cost"] == pytest.approx(2.32)


def test_json_round_trip_reconstructs_equilibrium(capsys):
    """A printed report carries enough to rebuild and re-check the solution."""
    for name, game in (("scenarioA", "g1"), ("scenarioA", "g2"), ("scenarioB", "g2")):
        doc = run_json(capsys, game, name)
        scenario = load_scenario(name)
        report = EquilibriumReport(
            scheme=IncentiveScheme(np.array(doc["scheme"]["columns"])),
            agent_actions=tuple(doc["agent_actions"]),
            principal_cost=doc["principal_cost"],
            agent_cost=doc["agent_cost"],
            per_state=[StateOutcome(**o) for o in doc["per_state"]],
            belief=doc["belief"],
        )
        report.check(scenario.table, tol=1e-9)


def test_report_csv_format(capsys):
    assert run("g2", "scenarioA", "--format", "csv") == 0
    out = capsys.readouterr().out
    assert out.startswith("key,value\n")
    assert "principal_cost,2.6\n" in out


# ---------------------------------------------------------------------------
# figures and sweeps
# ---------------------------------------------------------------------------


def test_figure1_endpoints_match_degenerate_beliefs(capsys):
    header, rows = run_csv(capsys, "figure", "1", "--grid", "9")
    assert header == ["belief", "j_p1", "j_p2"]
    assert len(rows) == 9
    assert rows[0][1] == rows[0][2]  # at belief 0 information is symmetric
    assert rows[-1][1] == rows[-1][2]


def test_figure2_envelope_at_three_quarters(capsys):
    header, rows = run_csv(capsys, "figure", "2")
    assert header == ["belief", "j_a2", "j_a2_envelope"]
    at = {row[0]: row for row in rows}
    assert at[0.75][1] == pytest.approx(2.0, abs=1e-9)
    assert at[0.75][2] == pytest.approx(1.75, abs=1e-9)


def test_figure3_objective_vanishes_at_prior(capsys):
    header, rows = run_csv(capsys, "figure", "3", "--grid", "401")
    assert header == ["belief", "j_p2", "objective", "objective_envelope"]
    at = {row[0]: row for row in rows}
    assert at[0.75][2] == pytest.approx(at[0.75][1] - 2.0, abs=1e-9)
    assert all(row[3] <= row[2] + 1e-9 for row in rows)


def test_figure4_grid_shape(capsys):
    header, rows = run_csv(capsys, "figure", "4")
    assert header == ["beta", "kappa", "sigma_w_sq", "total_cost"]
    assert len(rows) == 2 * 4 * 200
    betas = sorted({row[0] for row in rows})
    kappas = sorted({row[1] for row in rows})
    assert betas == [0.5, 1.0]
    assert kappas == [0.5, 1.0, 2.0, 4.0]


def test_figure_scenario_kind_mismatch(capsys):
    assert run("figure", "4", "scenarioA") == 2
    assert run("figure", "1", "qg_fig4") == 2
    err = capsys.readouterr().err
    assert "figure 4 needs a qg scenario" in err


def test_sweep_matrix_columns(capsys):
    header, rows = run_csv(capsys, "sweep", "scenarioA", "--grid", "5")
    assert header == ["belief", "j_p1", "j_p2", "j_a2"]
    assert [row[0] for row in rows] == [0.0, 0.25, 0.5, 0.75, 1.0]
    assert rows[2][2] == pytest.approx(3.0, abs=1e-9)


def test_sweep_qg_uses_log_spaced_channel_grid(capsys):
    header, rows = run_csv(capsys, "sweep", "qg_fig4")
    assert header == ["sigma_w_sq", "total_cost"]
    assert len(rows) == 200
    assert rows[0][0] == pytest.approx(1e-6)
    assert rows[-1][0] == pytest.approx(1e6)
    # the raw grid min sits slightly above the refined optimum
    best = min(row[1] for row in rows)
    assert 2.3115717756571046 - 1e-9 <= best < 2.3115717756571046 + 1e-3


def test_sweep_over_kappa(capsys):
    header, rows = run_csv(capsys, "sweep", "scenarioB", "--grid", "5", "--over", "kappa")
    assert header[0] == "kappa"
    totals = [row[1] for row in rows]
    assert totals == sorted(totals)  # acquisition cost grows with kappa


def test_sweep_json_format(capsys):
    doc = run_json(capsys, "sweep", "scenarioA", "--grid", "3", "--format", "json")
    assert doc["columns"][0] == "belief"
    assert len(doc["rows"]) == 3


def test_csv_outputs_are_byte_deterministic(tmp_path):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for path in paths:
        assert run("figure", "1", "--grid", "101", "--out", str(path)) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    for path in paths:
        assert run("sweep", "qg_fig4", "--out", str(path)) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_out_flag_writes_file_and_keeps_stdout_quiet(tmp_path, capsys):
    path = tmp_path / "report.json"
    assert run("g2", "scenarioA", "--out", str(path)) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(path.read_text())["principal_cost"] == pytest.approx(2.6)


# ---------------------------------------------------------------------------
# verification and exit codes
# ---------------------------------------------------------------------------


def test_verify_scenario_a_passes(capsys):
    assert run("verify", "scenarioA", "--grid", "201") == 0
    out = capsys.readouterr().out
    assert "checks passed" in out
    assert "FAIL" not in out


def test_verify_json_format(capsys):
    assert run("verify", "scenarioB", "--grid", "201", "--format", "json") == 0
    docs = json.loads(capsys.readouterr().out)
    assert all(doc["passed"] for doc in docs)
    assert {"quantity", "solver_value", "oracle_value", "tolerance"} <= set(docs[0])


def test_verify_failure_exits_4(capsys, monkeypatch):
    bad = OracleReport("rigged check", solver_value=1.0, oracle_value=2.0, tolerance=1e-9)
    monkeypatch.setattr(cli, "verify_matrix", lambda *a, **k: [bad])
    assert run("verify", "scenarioA") == 4
    assert run("g2", "scenarioA", "--verify") == 4
    assert "FAIL  rigged check" in capsys.readouterr().err


def test_solve_with_verify_passes(capsys):
    assert run("g2", "scenarioA", "--verify", "--grid", "201") == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["principal_cost"] == pytest.approx(2.6)


def test_unknown_scenario_exits_2(capsys):
    assert run("g1", "nosuch") == 2
    err = capsys.readouterr().err
    assert "nosuch:1:" in err
    assert "scenarioA" in err  # error lists the bundled names


def test_scenario_errors_carry_file_and_line(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(
        '{\n  "kind": "matrix",\n  "prior": 1.5,\n'
        '  "cp": [[[5,5],[5,1]],[[5,1],[5,5]]],\n'
        '  "ca": [[[4,3],[2,3]],[[2,3],[4,2]]]\n}\n'
    )
    assert run("g2", str(path)) == 2
    err = capsys.readouterr().err
    assert f"{path}:3:" in err
    assert "prior" in err


def test_bad_grid_exits_2(capsys):
    assert run("sweep", "scenarioA", "--grid", "1") == 2
    assert "--grid" in capsys.readouterr().err


def test_argparse_errors_exit_2(capsys):
    assert run("g2") == 2
    assert run("sweep", "scenarioA", "--over", "bogus") == 2
    assert run("figure", "7") == 2


def test_help_exits_0(capsys):
    assert run("--help") == 0
    assert "incentive-games" in capsys.readouterr().out
