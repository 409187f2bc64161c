"""Command line behavior: exit codes, output, TSV and figure files."""

import pytest

from freecheck import cli
from freecheck import harness
from freecheck.harness import LawResult


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExitCodes:
    def test_passing_suite_exits_zero(self, capsys):
        code, out, _ = run(["--effect", "maybe", "--suite", "append_assoc"], capsys)
        assert code == 0
        assert "suite append_assoc: PASS" in out

    def test_unknown_suite_is_a_usage_error(self, capsys):
        code, _, err = run(["--effect", "maybe", "--suite", "nosuch"], capsys)
        assert code == 2

    def test_unknown_effect_is_a_usage_error(self, capsys):
        code, _, _ = run(["--effect", "writer", "--suite", "monad_laws"], capsys)
        assert code == 2

    def test_inapplicable_combination_is_a_configuration_error(self, capsys):
        code, _, err = run(["--effect", "maybe", "--suite", "oracle_equiv"], capsys)
        assert code == 2
        assert "does not apply" in err

    def test_law_failure_exits_one(self, capsys, monkeypatch):
        broken = LawResult(
            law="demo",
            checked=1,
            case_failures=[],
            min_extras=(("witnesses", 1),),
        )
        monkeypatch.setitem(harness.SUITES, "container_iso", lambda c, cfg: [broken])
        code, out, _ = run(["--effect", "maybe", "--suite", "container_iso"], capsys)
        assert code == 1
        assert "FAIL" in out


class TestOutput:
    def test_prop_front_not_applicable_line(self, capsys):
        code, out, _ = run(["--effect", "identity", "--suite", "queue_props"], capsys)
        assert code == 0
        assert "prop_front: skip" in out
        assert "not applicable" in out

    def test_all_skips_inapplicable_suites(self, capsys):
        code, out, _ = run(
            ["--effect", "maybe", "--suite", "all", "--max-len", "1", "--depth", "1"],
            capsys,
        )
        assert code == 0
        assert "suite oracle_equiv: not applicable" in out
        assert "suite custom_eq: not applicable" in out
        assert "suite monad_laws: PASS" in out

    def test_tsv_file_is_written_and_stable(self, capsys, tmp_path):
        out_path = tmp_path / "report.tsv"
        argv = [
            "--effect",
            "maybe",
            "--suite",
            "queue_props",
            "--tsv",
            str(out_path),
        ]
        assert cli.main(argv) == 0
        first = out_path.read_text(encoding="utf-8")
        assert cli.main(argv) == 0
        assert out_path.read_text(encoding="utf-8") == first
        lines = first.splitlines()
        assert all(line.count("\t") == 5 for line in lines)
        assert lines[0].startswith("queue_props\tprop_isEmpty\tok\t")
        capsys.readouterr()

    def test_figures_are_rendered(self, capsys, tmp_path):
        figdir = tmp_path / "figs"
        argv = [
            "--effect",
            "maybe",
            "--suite",
            "append_assoc",
            "--max-len",
            "2",
            "--figures",
            str(figdir),
        ]
        assert cli.main(argv) == 0
        png = figdir / "append_assoc_maybe.png"
        assert png.is_file()
        assert png.stat().st_size > 0
        capsys.readouterr()
