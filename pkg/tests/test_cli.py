import json
from pathlib import Path

from lfunc import report as R
from lfunc.cli import EXIT_ERROR, EXIT_FAILED, EXIT_OK, main, run

SCEN = Path(__file__).resolve().parent.parent / "scenarios"


def scen(name):
    return str(SCEN / name)


def machine(capsys, argv):
    status = main(argv + ["--format", "machine"])
    return json.loads(capsys.readouterr().out), status


def test_zeta_projective_line(capsys):
    out, status = machine(capsys, ["zeta", scen("p1_f2.json")])
    assert status == EXIT_OK
    f = out["functions"][0]
    assert f["numerator"] == ["1"] and f["denominator"] == ["1", "-3", "2"]
    assert out["schema"] == R.REPORT_SCHEMA


def test_zeta_empty_variety(capsys):
    out, status = machine(capsys, ["zeta", scen("empty.json")])
    assert status == EXIT_OK
    f = out["functions"][0]
    assert f["numerator"] == ["1"] and f["denominator"] == ["1"]


def test_lfunction_zero_dim_cover(capsys):
    out, status = machine(capsys, ["lfunction", scen("zerodim_cover.json")])
    assert status == EXIT_OK
    dens = [f["denominator"] for f in out["functions"]]
    assert dens == [["1", "-1"], ["1", "1"]]


def test_specialvalue(capsys):
    out, status = machine(capsys, ["specialvalue", scen("spec_f8.json"), "--at", "1"])
    assert status == EXIT_OK
    text = json.dumps(out)
    assert '"1/3"' in text
    out, status = machine(capsys, ["specialvalue", scen("spec_f8.json"), "--at", "x/y"])
    assert status == EXIT_ERROR


def test_charfrac(capsys):
    out, status = machine(capsys, ["charfrac", scen("p1_explicit.json")])
    assert status == EXIT_OK
    f = out["functions"][0] if "functions" in out else out["charfrac"][0]
    assert f["denominator"] == ["1", "-4", "3"]


def test_verify_pass_and_fail(capsys):
    out, status = machine(capsys, ["verify", scen("spec_f8.json")])
    assert status == EXIT_OK and out["passed"]
    assert [v["twist"] for v in out["verdicts"]] == [0, -1]
    out, status = machine(capsys, ["verify", scen("p1_explicit.json")])
    assert status == EXIT_OK
    out, status = machine(capsys, ["verify", scen("spec_f8_corrupt.json")])
    assert status == EXIT_FAILED and not out["passed"]


def test_verify_cover_carries_caveat(capsys):
    out, status = machine(capsys, ["verify", scen("zerodim_cover.json")])
    assert status == EXIT_OK
    assert all(v.get("caveat") for v in out["verdicts"])


def test_human_format(capsys):
    status = main(["zeta", scen("p1_f2.json")])
    text = capsys.readouterr().out
    assert status == EXIT_OK and "1 - 3*T + 2*T^2" in text


def test_determinism(capsys):
    a = R.dumps(R.without_timing(run(["verify", scen("spec_f8.json")])[0]))
    b = R.dumps(R.without_timing(run(["verify", scen("spec_f8.json")])[0]))
    assert a == b


def test_report_round_trip():
    out = R.without_timing(run(["lfunction", scen("zerodim_cover.json")])[0])
    text = R.dumps(out)
    assert R.dumps(json.loads(text)) == text


def test_positive_twist_rejected(capsys):
    out, status = machine(capsys, ["verify", scen("spec_f8.json"), "--twists", "1"])
    assert status == EXIT_ERROR and "twist" in out["error"]


def test_scenario_error_reports_position(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{\n  "schema": "lfunc.scenario/1",\n  "field": {"p": 2,}\n}\n')
    out, status = machine(capsys, ["zeta", str(bad)])
    assert status == EXIT_ERROR
    assert "ScenarioError" in out["error"] and "line 3" in out["error"]


def test_missing_file(capsys):
    out, status = machine(capsys, ["zeta", "/nonexistent/scenario.json"])
    assert status == EXIT_ERROR


def test_budget_dim(capsys):
    out, status = machine(capsys, ["verify", scen("spec_f8.json"), "--budget-dim", "1"])
    assert status == EXIT_ERROR and "ResourceLimitError" in out["error"]


def test_cache_env_and_flag(tmp_path, monkeypatch):
    env_path = tmp_path / "env.cache"
    monkeypatch.setenv("LFUNC_CACHE", str(env_path))
    first = R.without_timing(run(["zeta", scen("p1_f2.json")])[0])
    assert env_path.exists() and env_path.read_text()
    again = R.without_timing(run(["zeta", scen("p1_f2.json")])[0])
    assert R.dumps(first) == R.dumps(again)
    flag_path = tmp_path / "flag.cache"
    run(["zeta", scen("p1_f2.json"), "--cache", str(flag_path)])
    assert flag_path.exists()


def test_corrupt_cache_is_an_error(tmp_path, capsys):
    path = tmp_path / "c.cache"
    path.write_text("garbage line\n")
    out, status = machine(capsys, ["zeta", scen("p1_f2.json"), "--cache", str(path)])
    assert status == EXIT_ERROR and "CacheCorruptionError" in out["error"]
