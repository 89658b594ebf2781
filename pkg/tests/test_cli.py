import json

import pytest

from kgroth import cli
from kgroth.cli import main
from kgroth.polyring import Poly, oplus, to_text, x


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_type_D_eyd(capsys):
    code, out, _ = run(capsys, "compute", "--type", "D", "--rank", "2", "--word", "1,1h", "--method", "eyd",
                       "--set", "a=0", "--set", "b=0")
    assert code == 0
    assert out.strip() == to_text(oplus(x(1), x(2)) ** 2)


def test_compute_type_A_specialized(capsys):
    code, out, _ = run(capsys, "compute", "--type", "A", "--rank", "4", "--window", "1,4,3,2",
                       "--set", "a=1", "--set", "b=0")
    assert code == 0
    assert out.strip() == to_text(Poly.const(5) + Poly.beta() * 5 + Poly.beta(2))


@pytest.mark.parametrize("method", ["genfun", "compat", "eyd"])
def test_compute_verify(capsys, method):
    code, _, _ = run(capsys, "compute", "--type", "C", "--rank", "2", "--word", "0", "--method", method, "--verify")
    assert code == 0


def test_compute_is_deterministic(capsys):
    argv = ["compute", "--type", "B", "--rank", "2", "--word", "0,1", "--format", "json"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    json.loads(first)


def test_mismatch_exit_code(capsys, monkeypatch):
    real = cli.compute_value

    def broken(letter, n, w, method, *rest):
        value = real(letter, n, w, method, *rest)
        return value + Poly.const(1) if method == "eyd" else value

    monkeypatch.setattr(cli, "compute_value", broken)
    code, _, err = run(capsys, "compute", "--type", "C", "--rank", "2", "--word", "0", "--verify")
    assert code == 4 and "mismatch" in err


def test_argparse_errors_return_code(capsys):
    assert main(["compute", "--type", "E", "--rank", "2"]) == 2
    assert main(["--help"]) == 0


@pytest.mark.parametrize("argv", [
    ["compute", "--type", "C", "--rank", "2", "--word", "5"],
    ["compute", "--type", "C", "--rank", "2", "--window", "1,2,3"],
    ["compute", "--type", "C", "--rank", "2", "--word", "0", "--window=-1,2"],
    ["compute", "--type", "C", "--rank", "2", "--word", "0", "--set", "q=1"],
    ["compute", "--type", "A", "--rank", "3", "--word", "1", "--method", "second"],
    ["verify", "no-such-suite"],
])
def test_bad_input_exit_code(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error")


def test_guard_exit_code(capsys):
    code, _, err = run(capsys, "adjoint", "--type", "C", "--rank", "4", "--word", "")
    assert code == 3 and "guard" in err


def test_lr_identity_row_and_symmetry(capsys):
    code, out, _ = run(capsys, "lr", "--type", "C", "--rank", "2", "--u", "", "--v", "1,0", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 1 and rows[0]["word"] == "1,0"
    _, uv, _ = run(capsys, "lr", "--type", "D", "--rank", "2", "--u", "1", "--v", "1h")
    _, vu, _ = run(capsys, "lr", "--type", "D", "--rank", "2", "--u", "1h", "--v", "1")
    assert uv == vu and uv.count("\n") == 1


def test_eyd_listing(capsys):
    code, out, _ = run(capsys, "eyd", "--type", "A", "--rank", "4", "--window", "1,4,3,2")
    assert code == 0 and out.count("boxes=") == 5
    code, out, _ = run(capsys, "eyd", "--type", "D", "--rank", "3", "--word", "1h", "--format", "json")
    assert code == 0 and json.loads(out)


def test_words_listing(capsys):
    code, out, _ = run(capsys, "words", "--type", "D", "--rank", "2", "--word", "1,1h", "--cap", "2")
    assert code == 0
    assert "[1, 1]" in out and "[2, 2]" in out


def test_adjoint_and_localize(capsys):
    code, out, _ = run(capsys, "adjoint", "--type", "C", "--rank", "2", "--window=-2,-1")
    assert code == 0 and out.strip()
    code, out, _ = run(capsys, "localize", "--type", "C", "--rank", "2", "--word", "0", "--at", "1")
    assert code == 0 and out.strip() == "0"


@pytest.mark.parametrize("suite,extra", [("yang-baxter", []), ("recurrence", ["--type", "C", "--rank", "2"]),
                                         ("eyd", ["--type", "D", "--rank", "2"]), ("grading", [])])
def test_verify_suites_pass(capsys, suite, extra):
    code, out, _ = run(capsys, "verify", suite, *extra)
    assert code == 0 and "FAIL" not in out


def test_gp_positivity_is_report_only(capsys):
    code, out, _ = run(capsys, "verify", "gp-positivity")
    assert code == 0 and "report only" in out
