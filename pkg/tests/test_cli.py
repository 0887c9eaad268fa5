"""The command-line surface: outputs, exit codes, determinism."""

import json

import pytest

from nilheckeb import cli
from nilheckeb.report import SuiteReport


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def test_schur_text_example(capsys):
    code, out = run(capsys, ["schur", "--n", "2", "--alpha", "0,0", "--beta", "1", "--format", "text"])
    assert code == 0
    assert out == "w1 + x1^2*w2\n"


def test_poincare_text_example(capsys):
    code, out = run(capsys, ["poincare", "--n", "2"])
    assert code == 0
    assert out == "1 + 2q + 2q^2 + 2q^3 + q^4\n"


def test_verify_all_passes(capsys):
    code, out = run(capsys, ["verify", "--n", "2", "--suite", "all",
                             "--trials", "5", "--seed", "42", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["pass"] is True
    names = [s["suite"] for s in payload["suites"]]
    assert any("weyl" in s for s in names)
    assert any("solomon" in s for s in names)
    for suite in payload["suites"]:
        assert suite["pass"] is True
        for check in suite["checks"]:
            assert set(check) == {"check", "pass", "detail"}


def test_verify_single_suite(capsys):
    code, out = run(capsys, ["verify", "--n", "2", "--suite", "demazure", "--trials", "5"])
    assert code == 0
    assert out.startswith("[PASS] suite demazure")


def test_verify_exit_two_on_failure(capsys, monkeypatch):
    broken = SuiteReport("stub")
    broken.add("always fails", False, "forced")
    monkeypatch.setattr(cli, "_verify_suites", lambda ns: [broken])
    code, out = run(capsys, ["verify", "--n", "2"])
    assert code == 2
    assert "FAIL" in out


def test_validation_failure_is_exit_one(capsys):
    code = cli.main(["schur", "--n", "2", "--alpha", "0,0", "--beta", "7"])
    assert code == 1
    err = capsys.readouterr().err
    assert "7" in err


def test_usage_errors_are_exit_sixty_four(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["bogus"])
    assert exc.value.code == 64
    with pytest.raises(SystemExit) as exc:
        cli.main(["schur"])  # missing required --n
    assert exc.value.code == 64
    assert cli.main([]) == 64


def test_deterministic_output(capsys):
    argv = ["verify", "--n", "2", "--suite", "schur", "--trials", "8",
            "--seed", "3", "--format", "json"]
    _, first = run(capsys, argv)
    _, second = run(capsys, argv)
    assert first == second


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "out.txt"
    code, out = run(capsys, ["schur", "--n", "2", "--beta", "1,2", "--out", str(target)])
    assert code == 0
    assert out == ""
    assert target.read_text() == "w1*w2\n"


def test_basis_json_schema(capsys):
    code, out = run(capsys, ["basis", "--n", "2", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert [layer["k"] for layer in payload] == [0, 1, 2]
    for layer in payload:
        assert layer["n"] == 2
        for poly in layer["basis"]:
            assert set(poly) == {"nvars", "odd", "terms"}
    assert len(payload[1]["basis"]) == 2


def test_schubert_word(capsys):
    code, out = run(capsys, ["schubert", "--n", "2", "--word", "1,2,1,2"])
    assert code == 0
    assert out == "x1^3*x2\n"


def test_nh_normal_form(capsys):
    code, out = run(capsys, ["nh", "--n", "2", "D(1)", "x1"])
    assert code == 0
    assert out == "1 + x2*D(1)\n"
    code, out = run(capsys, ["nh", "--n", "2", "--word", "1,1"])
    assert code == 0
    assert out == "0\n"


def test_nh_rejects_expr_and_word_together(capsys):
    code = cli.main(["nh", "--n", "2", "D(1)", "--word", "1"])
    assert code == 1


def test_dg_command(capsys):
    code, out = run(capsys, ["dg", "--n", "2", "--N", "2", "w1"])
    assert code == 0
    assert out == "-x1^4\n"


def test_solomon_command(capsys):
    code, out = run(capsys, ["solomon", "--n", "2", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 2
    assert len(payload["P"]) == 2
    assert len(payload["J"]) == 2


def test_parse_canonicalizes(capsys):
    code, out = run(capsys, ["parse", "--n", "2", "w2*w1 + x1*x1"])
    assert code == 0
    assert out == "x1^2 - w1*w2\n"
