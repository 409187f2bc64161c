"""Suite runner behavior: reports, determinism, merging, gating."""

import pytest

from freecheck.containers import ContainerError, builtin_container
from freecheck.enumgen import list_group_cases
from freecheck.harness import (
    DISCARDED,
    CheckConfig,
    CheckReport,
    LawResult,
    SuiteNotApplicableError,
    merge_law_results,
    merge_reports,
    run_law,
    run_suite,
)

EFFECTS = ("identity", "maybe", "error", "state", "choice")


def case_total(cfg):
    c = builtin_container("one")
    return len(list(list_group_cases(c, cfg.domain, cfg.max_len, 3, cfg.depth)))


class TestReports:
    def test_report_arithmetic_covers_every_case(self):
        cfg = CheckConfig(kind="maybe", suite="append_assoc")
        report = run_suite(cfg)
        law = report.laws[0]
        assert law.checked + law.discarded == case_total(cfg)

    def test_tsv_lines_have_six_columns(self):
        report = run_suite(CheckConfig(kind="maybe", suite="queue_props"))
        for line in report.tsv_lines():
            assert line.count("\t") == 5

    def test_failures_empty_only_on_ok(self):
        report = run_suite(CheckConfig(kind="maybe", suite="monad_laws"))
        for law in report.laws:
            assert (law.status == "ok") == (not law.failures)

    @pytest.mark.parametrize("effect", EFFECTS)
    def test_determinism_byte_for_byte(self, effect):
        cfg = CheckConfig(kind=effect, suite="queue_props")
        first = run_suite(cfg)
        second = run_suite(cfg)
        assert first.tsv_lines() == second.tsv_lines()
        assert first.text_lines() == second.text_lines()


class TestMerging:
    def check(self, case):
        if case % 5 == 0:
            return DISCARDED, None
        if case % 7 == 0:
            return (f"case {case}", "lhs", "rhs"), None
        return None, ("seen",)

    def partition(self, cases, pieces):
        size = (len(cases) + pieces - 1) // pieces
        out = []
        for i in range(0, len(cases), size):
            out.append((i, cases[i : i + size]))
        return out

    def test_partitioned_runs_merge_to_the_sequential_result(self):
        cases = list(range(40))
        sequential = run_law("demo", cases, self.check, counters=("seen",))
        parts = [
            run_law("demo", chunk, self.check, counters=("seen",), start_index=start)
            for start, chunk in self.partition(cases, 4)
        ]
        merged = parts[0]
        for part in parts[1:]:
            merged = merge_law_results(merged, part)
        assert merged == sequential

    def test_merge_is_commutative(self):
        cases = list(range(30))
        (s1, c1), (s2, c2) = self.partition(cases, 2)
        a = run_law("demo", c1, self.check, counters=("seen",), start_index=s1)
        b = run_law("demo", c2, self.check, counters=("seen",), start_index=s2)
        assert merge_law_results(a, b) == merge_law_results(b, a)

    def test_merge_rejects_different_laws(self):
        a = run_law("one_law", [], self.check)
        b = run_law("another", [], self.check)
        with pytest.raises(ValueError):
            merge_law_results(a, b)

    def test_report_merge_matches_sequential_suite(self):
        cfg = CheckConfig(kind="maybe", suite="append_assoc")
        sequential = run_suite(cfg)

        from freecheck.harness import build_container

        c = build_container(cfg)
        full = list(list_group_cases(c, cfg.domain, cfg.max_len, 3, cfg.depth))
        halves = self.partition(full, 2)

        def run_half(start, chunk):
            from freecheck.harness import run_law as rl
            from freecheck.free import eq_free, render_free
            from freecheck.mlist import append, show_list

            show = show_list()

            def check(case):
                (fxs, fys, fzs), effectful, branching = case
                bumps = []
                if effectful:
                    bumps.append("impure_cases")
                if branching:
                    bumps.append("branching_spine_cases")
                lhs = append(fxs, append(fys, fzs))
                rhs = append(append(fxs, fys), fzs)
                if eq_free(lhs, rhs):
                    return None, bumps
                return ("", "", ""), bumps

            law = rl(
                "append_assoc",
                chunk,
                check,
                counters=("impure_cases", "branching_spine_cases"),
                start_index=start,
            )
            return CheckReport("append_assoc", c.name, [law])

        merged = merge_reports(run_half(*halves[0]), run_half(*halves[1]))
        assert merged.tsv_lines() == sequential.tsv_lines()


class TestSuiteRuns:
    def test_append_assoc_tiny_bounds(self):
        report = run_suite(
            CheckConfig(kind="maybe", suite="append_assoc", max_len=2, domain_size=1)
        )
        assert not report.failures

    def test_prop_front_is_nonvacuous_at_defaults(self):
        report = run_suite(CheckConfig(kind="maybe", suite="queue_props"))
        front = {lr.law: lr for lr in report.laws}["prop_front"]
        assert not front.failures
        assert front.checked >= 1

    def test_custom_eq_reports_a_witness_informationally(self):
        report = run_suite(CheckConfig(kind="choice", suite="custom_eq"))
        assert not report.failures
        witness = {lr.law: lr for lr in report.laws}["induce_eq_witness"]
        assert dict(witness.extras)["witnesses"] >= 1
        assert witness.status == "ok"


class TestGating:
    def test_oracle_suite_needs_the_identity_effect(self):
        with pytest.raises(SuiteNotApplicableError):
            run_suite(CheckConfig(kind="maybe", suite="oracle_equiv"))

    def test_custom_eq_needs_extra_structure(self):
        with pytest.raises(SuiteNotApplicableError):
            run_suite(CheckConfig(kind="maybe", suite="custom_eq"))
        run_suite(CheckConfig(kind="state", suite="custom_eq"))
        run_suite(CheckConfig(kind="choice", suite="custom_eq"))

    def test_prop_front_is_gated_per_law_not_per_suite(self):
        report = run_suite(CheckConfig(kind="state", suite="queue_props"))
        by_name = {lr.law: lr for lr in report.laws}
        assert by_name["prop_front"].status == "skip"
        assert "not applicable" in by_name["prop_front"].detail

    def test_bad_bounds_rejected(self):
        with pytest.raises(ContainerError):
            run_suite(CheckConfig(kind="maybe", suite="monad_laws", depth=-1))
        with pytest.raises(ContainerError):
            CheckConfig(kind="maybe", suite="nosuch").validate()


class TestWitnessAccounting:
    def test_unmet_minimum_is_a_failure(self):
        law = LawResult(law="demo", checked=3, min_extras=(("witnesses", 1),))
        assert law.status == "fail"
        assert len(law.failures) == 1
        assert "witnesses" in law.failures[0].inputs

    def test_met_minimum_is_ok(self):
        law = LawResult(
            law="demo", checked=3, extras=(("witnesses", 2),), min_extras=(("witnesses", 1),)
        )
        assert law.status == "ok"
