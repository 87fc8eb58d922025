"""Command line interface: exit codes, report formats, determinism."""

import json

import pytest

from kleintwist import checks
from kleintwist.checks import (CheckResult, RunConfig, all_check_ids, run,
                               run_one)
from kleintwist.cli import main, render_json, render_markdown
from kleintwist.errors import UnknownCheck

CHEAP = "sign-table,det-to-perm,klein-classification"


class TestRunConfig:
    def test_unknown_check(self):
        with pytest.raises(UnknownCheck):
            RunConfig(checks=("no-such-check",))

    def test_max_n_bounds(self):
        with pytest.raises(ValueError):
            RunConfig(max_n=0)
        with pytest.raises(ValueError):
            RunConfig(max_n=9)

    def test_run_one_unknown(self):
        with pytest.raises(UnknownCheck):
            run_one("no-such-check", RunConfig())


class TestListChecks(object):
    def test_exit_and_output(self, capsys):
        assert main(["list-checks"]) == 0
        out = capsys.readouterr().out
        listed = [line.split()[0] for line in out.strip().splitlines()]
        assert listed == all_check_ids()
        assert len(listed) == 21


class TestVerify:
    def test_subset_passes(self, capsys, tmp_path):
        json_path = tmp_path / "report.json"
        code = main(["verify", "--checks", CHEAP, "--zero-durations",
                     "--json-out", str(json_path)])
        assert code == 0
        data = json.loads(json_path.read_text())
        assert [r["check_id"] for r in data] == sorted(CHEAP.split(","))
        for r in data:
            assert set(r) == {"check_id", "status", "metrics", "labels",
                              "details", "duration_ms"}
            assert r["status"] == "pass"
            assert r["duration_ms"] == 0.0

    def test_unknown_check_usage_error(self, capsys):
        assert main(["verify", "--checks", "bogus"]) == 2
        assert "usage error" in capsys.readouterr().err

    def test_max_n_usage_errors(self, capsys):
        assert main(["verify", "--checks", CHEAP, "--max-n", "0"]) == 2
        assert main(["verify", "--checks", CHEAP, "--max-n", "9"]) == 2

    def test_failing_check_exits_one(self, capsys, monkeypatch):
        def bad(cfg):
            """Stub that always fails."""
            return CheckResult("stub-fail", "fail", {}, (), "forced", 0.0)
        monkeypatch.setitem(checks.REGISTRY, "stub-fail", bad)
        assert main(["verify", "--checks", "stub-fail"]) == 1
        assert "[fail]" in capsys.readouterr().out

    def test_raising_check_reports_error(self, capsys, monkeypatch):
        def boom(cfg):
            """Stub that raises."""
            raise RuntimeError("kaput")
        monkeypatch.setitem(checks.REGISTRY, "stub-boom", boom)
        assert main(["verify", "--checks", "stub-boom"]) == 1
        out = capsys.readouterr().out
        assert "[error]" in out and "kaput" in out

    def test_parallel_matches_serial(self, tmp_path):
        base = RunConfig(checks=tuple(sorted(CHEAP.split(","))))
        serial = run(base)
        parallel = run(RunConfig(checks=base.checks, parallel=True))
        assert render_json(serial, True) == render_json(parallel, True)
        assert render_markdown(serial, True, 6) == \
            render_markdown(parallel, True, 6)


class TestReports:
    def test_markdown_shape(self):
        results = run(RunConfig(checks=("sign-table",)))
        md = render_markdown(results, True, 6)
        assert md.startswith("# Twisted symmetry verification")
        assert "| sign-table | pass |" in md
        assert render_markdown(results, True, 6) == md

    def test_json_sorted_and_terminated(self):
        results = run(RunConfig(checks=("det-to-perm", "sign-table")))
        text = render_json(results, True)
        assert text.endswith("\n")
        data = json.loads(text)
        assert [r["check_id"] for r in data] == ["det-to-perm", "sign-table"]

    def test_md_out_written(self, tmp_path):
        md_path = tmp_path / "report.md"
        code = main(["verify", "--checks", "sign-table", "--zero-durations",
                     "--md-out", str(md_path)])
        assert code == 0
        assert md_path.read_text().startswith("# Twisted symmetry verification")


class TestCharactersCommand:
    def test_finite_presentations(self, capsys):
        assert main(["characters", "o2minus"]) == 0
        out = capsys.readouterr().out
        assert "8" in out and "D4" in out

    def test_rectangular(self, capsys):
        assert main(["characters", "incseq:2:4"]) == 0
        out = capsys.readouterr().out
        assert "6" in out
        assert "undefined for rectangular shapes" in out

    def test_continuous_refused(self, capsys):
        assert main(["characters", "o2"]) == 1
        assert "refused" in capsys.readouterr().out

    def test_unknown_name(self, capsys):
        assert main(["characters", "so9minus"]) == 2


class TestDumpCommand:
    def test_qs4(self, capsys):
        assert main(["dump", "qs4"]) == 0
        assert capsys.readouterr().out.strip()

    def test_unknown_target(self, capsys):
        assert main(["dump", "nonsense"]) == 2
