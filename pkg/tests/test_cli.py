"""End-to-end command-line contract: exit codes, output formats,
determinism, and the fixture checker."""

import json

from summa.cli import main


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_verify_poisson_passes(capsys):
    code, out = run(capsys, ["verify", "--formula", "poisson",
                             "--function", "gaussian", "--y", "1",
                             "--tol", "1e-10"])
    assert code == 0
    assert "PASS" in out


def test_verify_mobius_naive_fails_tolerance(capsys):
    code, out = run(capsys, ["verify", "--formula", "mobius-naive",
                             "--function", "gaussian", "--y", "1",
                             "--tol", "1e-10", "--table-limit", "100000"])
    assert code == 1
    assert "FAIL" in out


def test_verify_unknown_formula(capsys):
    code, _ = run(capsys, ["verify", "--formula", "nope", "--y", "1"])
    assert code == 2


def test_verify_unknown_function(capsys):
    code, _ = run(capsys, ["verify", "--formula", "poisson",
                           "--function", "mystery", "--y", "1"])
    assert code == 2


def test_verify_missing_y(capsys):
    code, _ = run(capsys, ["verify", "--formula", "poisson"])
    assert code == 2


def test_verify_json_determinism(capsys):
    argv = ["verify", "--formula", "poisson", "--y", "1.3",
            "--output", "json", "--seed", "7"]
    _, out1 = run(capsys, argv)
    _, out2 = run(capsys, argv)
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["schema"] == 1
    assert doc["config"]["seed"] == 7
    assert doc["report"]["formula"] == "poisson"


def test_expand_table(capsys):
    code, out = run(capsys, ["expand", "--formula", "euler-maclaurin",
                             "--function", "gaussian", "--t", "-1", "--N", "3"])
    assert code == 0
    lines = [l for l in out.splitlines() if "|" in l]
    # header row plus t^-1 and t^0 .. t^5
    assert len(lines) == 1 + 7
    assert "remainder" in out


def test_expand_taylor_at_zero(capsys):
    code, out = run(capsys, ["expand", "--formula", "taylor", "--t", "0",
                             "--N", "0"])
    assert code == 0
    doc_lines = [l for l in out.splitlines() if "|" in l]
    assert len(doc_lines) == 1 + 1  # single power row
    assert "0.0" in out


def test_expand_json_round_trip(capsys):
    argv = ["expand", "--formula", "euler-voronoi", "--t", "-1", "--N", "2",
            "--output", "json"]
    _, out = run(capsys, argv)
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert {"terms", "remainder", "config", "regular_part", "total"} <= set(doc)
    assert json.dumps(doc, sort_keys=True) == json.dumps(json.loads(out),
                                                         sort_keys=True)
    powers = [t["power"] for t in doc["terms"]]
    assert "log" in powers


def test_expand_rejects_positive_t(capsys):
    code, _ = run(capsys, ["expand", "--formula", "taylor", "--t", "0.5"])
    assert code == 2


def test_scan_inside_strip(capsys):
    code, out = run(capsys, ["scan", "--theta-min", "0.0", "--theta-max",
                             "0.7", "--steps", "5"])
    assert code == 0
    rows = out.strip().splitlines()[1:]
    assert len(rows) == 5
    assert all(row.rsplit(",", 1)[1] == "False" for row in rows)


def test_scan_divergent_region(capsys):
    code, out = run(capsys, ["scan", "--theta-min", "0.9", "--theta-max",
                             "1.2", "--steps", "4"])
    assert code == 0
    rows = out.strip().splitlines()[1:]
    assert all(row.rsplit(",", 1)[1] == "True" for row in rows)


def test_scan_empty_grid(capsys):
    code, _ = run(capsys, ["scan", "--steps", "0"])
    assert code == 2


def test_fixtures_check(capsys):
    code, out = run(capsys, ["fixtures-check"])
    assert code == 0
    assert "files verified" in out


def test_fixtures_check_env_override(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("SUMMA_FIXTURES", str(tmp_path))
    code, _ = run(capsys, ["fixtures-check"])
    assert code == 2  # no manifest there
