import json
from fractions import Fraction

import pytest

from earlyexp.cli import cmd_e, cmd_eval, main, run
from earlyexp.exact_core import DomainError


def test_eval_ln_two(capsys):
    assert main(["eval", "ln", "2", "--prec", "1e-6"]) == 0
    out = capsys.readouterr().out
    line = next(l for l in out.splitlines() if l.startswith("ln: "))
    lo, hi = (Fraction(v) for v in line[5:-1].split(", "))
    assert Fraction("0.693146") <= lo and hi <= Fraction("0.693149")
    assert "width = " in out


def test_eval_exact_power(capsys):
    assert main(["eval", "pow", "4", "1/2"]) == 0
    assert "pow = 2 (exact)" in capsys.readouterr().out


def test_eval_compound():
    report = cmd_eval("compound", ["1", "1000000"], Fraction(1, 10**6))
    assert report.enclosures[0][1].startswith("2.718280")


@pytest.mark.parametrize("kind,args", [("log", ["e", "2"]), ("exp", ["-1/2"]), ("integral-ln", ["0.25"]), ("log", ["2", "3"])])
def test_eval_other_kinds(kind, args):
    code, text = run(["eval", kind, *args, "--digits", "6"])
    assert code == 0 and f"{kind}: [" in text


@pytest.mark.parametrize(
    "argv",
    [["eval", "ln", "x"], ["eval", "ln", "-1"], ["eval", "pow", "2"], ["e", "--digits", "0"], ["crosscheck", "--trials", "0"]],
)
def test_usage_errors_exit_two(argv, capsys):
    assert main(argv) == 2
    assert "error:" in capsys.readouterr().err


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as info:
        main(["eval", "sin", "1"])
    assert info.value.code == 2


def test_e_one_digit():
    report = cmd_e(1)
    assert "e = 2.7" in report.lines
    lo, hi = report.enclosures[0][1:]
    assert lo.startswith("2.7") and hi.startswith("2.7")
    assert any(l.startswith("faster route: ") for l in report.lines)
    with pytest.raises(DomainError):
        cmd_e(0)


def test_figures_command(tmp_path, capsys):
    out = tmp_path / "fig.json"
    assert main(["figures", "--bases", "2", "e", "--samples", "5", "--out", str(out)]) == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert [s["base"] for s in data["series"]] == ["2", "e"]
    assert set(data["series"][0]["tangent"]) >= {"slope_lo", "slope_hi", "intercept"}
    csv_out = tmp_path / "fig.csv"
    assert main(["figures", "--format", "csv", "--range", "-1", "1", "--samples", "3", "--out", str(csv_out)]) == 0
    assert csv_out.read_text(encoding="utf-8").startswith("base,kind")


def test_figures_unwritable(tmp_path):
    assert main(["figures", "--bases", "2", "--samples", "2", "--out", str(tmp_path / "missing" / "f.json")]) == 2


def test_falsified_report_exits_one(monkeypatch):
    from earlyexp import cli
    from earlyexp.inequalities import Verdict
    from earlyexp.report import CheckResult, RunReport

    def fake(prec, trials, seed):
        check = CheckResult("planted")
        check.add(Verdict.FALSIFIED)
        return RunReport("crosscheck", [check])

    monkeypatch.setattr(cli, "run_crosscheck", fake)
    assert main(["crosscheck"]) == 1
