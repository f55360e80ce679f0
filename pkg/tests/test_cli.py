import json

import pytest

from coxverify import cli, suites
from coxverify.report import FAIL, CheckResult, VerificationReport


def run(args):
    return cli.main(args)


def test_classify_preset(capsys):
    assert run(["classify", "--group", "affA1"]) == 0
    out = capsys.readouterr().out
    assert "classification" in out and "result: PASS" in out


def test_classify_from_file(tmp_path, capsys):
    path = tmp_path / "group.json"
    path.write_text(json.dumps({"name": "demo", "n": 2, "m": [[1, 0], [0, 1]]}))
    assert run(["classify", "--group", str(path)]) == 0
    assert "demo" in capsys.readouterr().out


@pytest.mark.parametrize("doc", [
    "not json at all",
    json.dumps({"n": 2}),
    json.dumps({"n": 2, "m": [[1, 3], [3, 2]]}),
    json.dumps({"n": 2, "m": [[1, 3]]}),
    json.dumps({"n": "2", "m": [[1, 3], [3, 1]]}),
    json.dumps({"n": 2, "m": [[1, -4], [-4, 1]]}),
])
def test_malformed_files_exit_3(tmp_path, capsys, doc):
    path = tmp_path / "bad.json"
    path.write_text(doc)
    assert run(["classify", "--group", str(path)]) == 3
    assert "input error" in capsys.readouterr().err


def test_unknown_group_exits_3(capsys):
    assert run(["classify", "--group", "Z9"]) == 3
    assert "Z9" in capsys.readouterr().err


def test_bad_cox_word_exits_3(capsys):
    assert run(["power-reduced", "--group", "affA1", "--cox-word", "1,1"]) == 3
    assert run(["power-reduced", "--group", "affA1", "--cox-word", "a,b"]) == 3


def test_hypothesis_violation_exits_2(capsys):
    assert run(["power-reduced", "--group", "A2"]) == 2
    assert "precondition" in capsys.readouterr().err
    assert run(["w0", "--group", "affA1"]) == 2
    assert run(["growth", "--group", "H3"]) == 2
    assert run(["power-reduced", "--group", "affA1", "--negative-control"]) == 2


def test_subcommands_run_clean(capsys):
    assert run(["power-reduced", "--group", "affA1", "--k-max", "6"]) == 0
    assert run(["admissible-reduced", "--group", "affA2", "--n-max", "6"]) == 0
    assert run(["prop-mt", "--group", "B2", "--n-max", "6"]) == 0
    assert run(["growth", "--group", "affA2", "--k-max", "5"]) == 0
    assert run(["w0", "--group", "G2"]) == 0
    assert run(["power-reduced", "--group", "A2", "--negative-control",
                "--serial"]) == 0


def test_json_output_written(tmp_path):
    out = tmp_path / "report.json"
    assert run(["growth", "--group", "affA1", "--k-max", "4",
                "--json", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["suite"] == "growth" and doc["group"] == "affA1"
    assert [c["status"] for c in doc["checks"]] == ["pass"] * 4
    assert doc["parameters"]["lengths"] == [2, 4, 6, 8]


def test_figures_written(tmp_path):
    figs = tmp_path / "figs"
    assert run(["growth", "--group", "affA1", "--k-max", "4",
                "--figures", str(figs)]) == 0
    names = sorted(p.name for p in figs.iterdir())
    assert "growth_affA1_checks.csv" in names
    assert any(n.endswith("_lengths.png") for n in names)
    assert any(n.endswith("_summary.png") for n in names)
    assert run(["admissible-reduced", "--group", "affC2", "--n-max", "5",
                "--figures", str(figs)]) == 0
    names = sorted(p.name for p in figs.iterdir())
    assert any(n.endswith("_census.png") for n in names)


def test_verify_all_single_group(tmp_path, capsys):
    out = tmp_path / "all.json"
    assert run(["verify-all", "--group", "A1", "--words", "20",
                "--json", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["suite"] == "verify-all"
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_falsified_check_exits_1(monkeypatch, capsys):
    def fake_suite(group, ctx):
        return VerificationReport("classify", group, {}, [
            CheckResult("forced", FAIL, {"reason": "injected"})], 0.0)

    monkeypatch.setattr(suites, "classify_suite", fake_suite)
    assert run(["classify", "--group", "A2"]) == 1
    assert "VERIFICATION FAILURE" in capsys.readouterr().err
