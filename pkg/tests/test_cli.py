import json

import pytest

from ivpverify import cli
from ivpverify.report import VerificationReport, make_case


def test_task_dispatch_exit_zero(capsys):
    assert cli.main(["transform", "--n-max", "6"]) == 0
    out = capsys.readouterr().out
    assert out.endswith("PASS 7/7\n")


def test_unknown_task_exits_two():
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2


def test_bad_bounds_exit_two(capsys):
    assert cli.main(["transform", "--n-max", "-1"]) == 2
    assert "n-max" in capsys.readouterr().err
    assert cli.main(["recurrence", "--n-max", "1"]) == 2
    assert cli.main(["theorem1", "--l-max", "0"]) == 2
    assert cli.main(["conjecture-sun-m", "--m", "0"]) == 2
    assert cli.main(["catalan-form", "--x-min", "3", "--x-max", "-3"]) == 2
    assert cli.main(["theorem1", "--eps", "0"]) == 2
    assert cli.main(["transform", "--jobs", "0"]) == 2


def test_mathematical_failure_exits_one(capsys, monkeypatch):
    broken = VerificationReport(
        task="transform",
        config={},
        cases=[make_case((("n", 0),), False, "forced failure")],
    )
    monkeypatch.setitem(cli._TASKS, "transform", lambda c: broken)
    assert cli.main(["transform"]) == 1
    assert "FAIL 1/1" in capsys.readouterr().out


def test_json_output_to_file(tmp_path):
    out = tmp_path / "report.json"
    rc = cli.main(["q-sun", "--n-max", "5", "--format", "json", "--out", str(out)])
    assert rc == 0
    payload = json.loads(out.read_text())
    assert payload["task"] == "q-sun"
    assert payload["summary"]["fail"] == 0
    assert payload["config"] == {"n_max": 5}


def test_unwritable_out_path_exits_two(tmp_path, capsys):
    target = tmp_path / "missing" / "report.csv"
    rc = cli.main(["transform", "--n-max", "2", "--out", str(target)])
    assert rc == 2
    assert "cannot write" in capsys.readouterr().err


def test_csv_deterministic_across_jobs(tmp_path):
    a, b = tmp_path / "serial.csv", tmp_path / "parallel.csv"
    base = ["lemma-schmidt", "--n-max", "8", "--format", "csv"]
    assert cli.main(base + ["--jobs", "1", "--out", str(a)]) == 0
    assert cli.main(base + ["--jobs", "3", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_json_deterministic_modulo_meta(tmp_path):
    a, b = tmp_path / "serial.json", tmp_path / "parallel.json"
    base = ["telescope", "--n-max", "12", "--format", "json"]
    assert cli.main(base + ["--jobs", "1", "--out", str(a)]) == 0
    assert cli.main(base + ["--jobs", "4", "--out", str(b)]) == 0
    left, right = json.loads(a.read_text()), json.loads(b.read_text())
    left.pop("meta"), right.pop("meta")
    assert left == right


def test_all_runs_every_task(tmp_path):
    out = tmp_path / "all.json"
    rc = cli.main(
        ["all", "--n-max", "4", "--l-max", "1", "--k-max", "4",
         "--x-min", "-2", "--x-max", "2", "--format", "json", "--out", str(out)]
    )
    assert rc == 0
    payload = json.loads(out.read_text())
    assert [r["task"] for r in payload["reports"]] == cli._TASK_ORDER
    assert payload["summary"]["fail"] == 0


def test_eps_parsing():
    assert cli.parse_eps("+1,-1") == (1, -1)
    assert cli.parse_eps("-1") == (-1,)
    assert cli.parse_eps("1") == (1,)
    assert cli.parse_eps([-1, 1, 1]) == (1, -1)
    with pytest.raises(cli.UsageError):
        cli.parse_eps("2")
    with pytest.raises(cli.UsageError):
        cli.parse_eps("")


def test_config_file_flags_win(tmp_path, capsys):
    cfg = tmp_path / "grid.json"
    cfg.write_text(json.dumps({"n-max": 3, "format": "csv", "eps": "-1"}))
    rc = cli.main(["transform", "--config", str(cfg)])
    out = capsys.readouterr().out
    assert rc == 0
    assert out.startswith("task,case_key")       # format from config file
    assert len(out.splitlines()) == 1 + 4        # n_max=3 from config file
    rc = cli.main(["transform", "--config", str(cfg), "--n-max", "1", "--format", "text"])
    out = capsys.readouterr().out
    assert rc == 0 and out.endswith("PASS 2/2\n")  # flags beat the file


def test_config_file_validation(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n_biggest": 3}))
    assert cli.main(["transform", "--config", str(bad)]) == 2
    assert "unknown config key" in capsys.readouterr().err
    bad.write_text("[1,2]")
    assert cli.main(["transform", "--config", str(bad)]) == 2
    bad.write_text("{broken")
    assert cli.main(["transform", "--config", str(bad)]) == 2
    assert cli.main(["transform", "--config", str(tmp_path / "absent.json")]) == 2


def test_jobs_env_var_is_default(monkeypatch, capsys):
    monkeypatch.setenv(cli.JOBS_ENV, "2")
    assert cli.main(["chu-vandermonde", "--k-max", "3"]) == 0
    capsys.readouterr()
    monkeypatch.setenv(cli.JOBS_ENV, "zero")
    assert cli.main(["chu-vandermonde", "--k-max", "3"]) == 2


def test_config_echo_excludes_execution_details(capsys):
    assert cli.main(["theorem2", "--n-max", "4", "--jobs", "2", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["config"] == {"n_max": 4}
