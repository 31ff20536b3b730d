"""Front-door behaviour: output shapes, exit codes, config handling."""

import json

import pytest

from miniw.cli import run


def test_info_table(capsys):
    assert run(["info", "sl2"]) == 0
    out = capsys.readouterr().out
    assert "dual_coxeter" in out and "-7" in out


def test_info_json_is_deterministic(capsys):
    assert run(["info", "spo21", "-k", "1", "--format", "json"]) == 0
    first = capsys.readouterr().out
    assert run(["info", "spo21", "-k", "1", "--format", "json"]) == 0
    second = capsys.readouterr().out
    assert first == second
    payload = json.loads(first)
    assert payload["central_charge"] == "-81/10"
    assert payload["dual_coxeter"] == "3/2"


def test_free_series_plain(capsys):
    assert run(["wchar", "--algebra", "sl2", "--max-level", "5"]) == 0
    assert capsys.readouterr().out.strip() == "1,1,2,3,5,7"


def test_verify_reports_pass(capsys):
    assert run(["verify", "--algebra", "spo21", "--depth", "2"]) == 0
    out = capsys.readouterr().out
    assert "d^2 = 0: PASS" in out
    assert "structure identities: PASS" in out


def test_cohomology_json_schema(capsys):
    code = run(["cohomology", "--algebra", "sl2", "--xi-level", "2",
                "--chain", "4", "--format", "json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert set(payload) == {"xi", "dims", "stabilized", "window"}
    assert payload["xi"]["dW_offset"] == "2"
    assert payload["dims"]["0"] == 2
    assert payload["stabilized"] is True
    assert payload["window"]["chain"] == 4


def test_cohomology_json_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = run(["cohomology", "--algebra", "sl2", "--xi-level", "1",
                "--json", str(target)])
    capsys.readouterr()
    assert code == 0
    payload = json.loads(target.read_text())
    assert payload["dims"]["0"] == 1


def test_compare_series_agrees(capsys):
    code = run(["wchar", "--algebra", "sl2", "--lambda", "k=1/3; x=1/5",
                "--max-level", "2", "--compare-brst"])
    out = capsys.readouterr().out
    assert code == 0
    for line in out.splitlines()[1:]:
        cells = line.split()
        assert cells[1] == cells[2]


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["wchar", "--algebra", "f4"])
    assert exc.value.code == 2
    # -k contradicting the lambda spec
    assert run(["cohomology", "--algebra", "sl2",
                "--lambda", "k=1/3; x=1/5", "-k", "1"]) == 2


def test_computation_errors_exit_one(capsys):
    # critical level
    assert run(["info", "sl2", "-k", "-2"]) == 1
    err = capsys.readouterr().err
    assert "CriticalLevelError" in err


def test_config_overrides_flags(tmp_path, capsys):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"algebra": "sl2", "max-level": "4"}))
    assert run(["--config", str(cfg), "wchar", "--algebra", "sl21",
                "--max-level", "2"]) == 0
    assert capsys.readouterr().out.strip() == "1,1,2,3,5"


def test_config_rejects_unknown_field(tmp_path):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"window": 3}))
    with pytest.raises(SystemExit) as exc:
        run(["--config", str(cfg), "info", "sl2"])
    assert exc.value.code == 2


def test_char_table(capsys):
    assert run(["char", "--algebra", "sl2", "--lambda", "k=1/3; x=1/5",
                "--depth", "1", "--format", "csv"]) == 0
    rows = capsys.readouterr().out.strip().splitlines()
    assert rows[0].startswith("alpha0_drop")
    assert "0,0,1" in rows[1].replace("\r", "")
