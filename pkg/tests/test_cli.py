"""Command-line interface: reports, exit codes, determinism, CSV output."""

import json
import subprocess
import sys

import pytest

from contextuality_lab.cli import DEFAULT_SEED, build_report, main


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerify:
    def test_pm_report_content(self, capsys):
        code, out, _ = run_cli(["verify", "pm"], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["schema"] == 1
        assert report["suite"] == "pm"
        assert report["all_pass"] is True
        ids = [c["id"] for c in report["checks"]]
        assert sum(1 for i in ids if i.startswith("pm.word.")) == 6
        assert sum(1 for i in ids if i.startswith("pm.vector-line.")) == 6
        enum = next(c for c in report["checks"] if c["id"] == "pm.enumeration")
        assert enum["witness"]["assignments"] == 512
        assert enum["witness"]["satisfying"] == 0
        assert enum["witness"]["lhs_parity"] == 1
        assert enum["witness"]["rhs_parity"] == -1
        assert len(set(ids)) == len(ids)

    def test_bell_ghz_report_contains_column(self, capsys):
        code, out, _ = run_cli(["verify", "bell-ghz"], capsys)
        assert code == 0
        report = json.loads(out)
        column = next(
            c for c in report["checks"] if c["id"] == "bellghz.column.negated-f1"
        )
        assert column["witness"]["column"] == ["e1", "e1", "e1", "-e1"]
        assert column["witness"]["product"] == "-1"
        search = next(c for c in report["checks"] if c["id"] == "bellghz.search.e1")
        assert search["witness"]["includes_negated_f1"] is True

    def test_unknown_target_exits_2(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["verify", "bogus"])
        assert excinfo.value.code == 2

    def test_out_file(self, tmp_path, capsys):
        out_path = tmp_path / "report.json"
        code, out, _ = run_cli(["verify", "a3", "--out", str(out_path)], capsys)
        assert code == 0
        assert out == ""
        report = json.loads(out_path.read_text())
        assert report["suite"] == "a3"
        assert len(report["checks"]) == 6

    def test_reports_are_byte_stable(self, capsys):
        _, first, _ = run_cli(["verify", "operators"], capsys)
        _, second, _ = run_cli(["verify", "operators"], capsys)
        assert first == second

    def test_exit_code_tracks_check_status(self, capsys):
        for target in ("pm", "ghz", "states"):
            code, out, _ = run_cli(["verify", target], capsys)
            report = json.loads(out)
            assert (code == 0) == report["all_pass"]
            assert report["failed"] == 0

    def test_approx_mode_runs(self, capsys):
        code, out, _ = run_cli(["verify", "operators", "--mode", "approx"], capsys)
        assert code == 0
        assert json.loads(out)["environment"]["mode"] == "approx"

    def test_seed_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("CONTEXTUALITY_LAB_SEED", "7")
        code, out, _ = run_cli(["verify", "states", "--seed", "3"], capsys)
        assert code == 0
        assert json.loads(out)["environment"]["seed"] == 7

    def test_build_report_all_targets(self):
        report = build_report("all", seed=DEFAULT_SEED)
        assert report["all_pass"] is True
        suites = {c["id"].split(".")[0] for c in report["checks"]}
        assert {"pm", "ghz", "bellghz", "ga", "pauli", "iso", "systems", "states", "a3"} <= suites

    def test_constraints_file_round_trip(self, tmp_path, capsys):
        from contextuality_lab.constraints import builtin_constraints

        path = tmp_path / "pm.json"
        path.write_text(builtin_constraints("pm").to_json())
        code, out, _ = run_cli(["verify", "pm", "--constraints", str(path)], capsys)
        assert code == 0
        assert json.loads(out)["all_pass"] is True

    def test_constraints_file_with_flipped_sign_fails(self, tmp_path, capsys):
        from contextuality_lab.constraints import builtin_constraints

        doc = json.loads(builtin_constraints("pm").to_json())
        doc["lines"][5]["required"] = 1
        path = tmp_path / "flipped.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run_cli(["verify", "pm", "--constraints", str(path)], capsys)
        assert code == 1
        report = json.loads(out)
        assert report["all_pass"] is False
        assert report["failed"] > 0

    def test_constraints_flag_limited_to_line_targets(self, tmp_path):
        path = tmp_path / "pm.json"
        path.write_text("{}")
        with pytest.raises(SystemExit) as excinfo:
            main(["verify", "operators", "--constraints", str(path)])
        assert excinfo.value.code == 2

    def test_constraints_bad_file_exits_2(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(SystemExit) as excinfo:
            main(["verify", "pm", "--constraints", str(path)])
        assert excinfo.value.code == 2

    def test_unwritable_out_path_exits_2(self, tmp_path):
        with pytest.raises(SystemExit) as excinfo:
            main(["verify", "a3", "--out", str(tmp_path / "missing" / "r.json")])
        assert excinfo.value.code == 2

    def test_unwritable_csv_path_exits_2(self, tmp_path):
        with pytest.raises(SystemExit) as excinfo:
            main(["chsh", "0", "1", "5", "--csv", str(tmp_path / "missing" / "c.csv")])
        assert excinfo.value.code == 2


class TestChsh:
    def test_summary_line(self, capsys):
        code, out, _ = run_cli(["chsh", "0", "3.14159265", "2001"], capsys)
        assert code == 0
        assert out.splitlines()[0].startswith("max=2.5")
        assert "classical_bound=2.0" in out

    def test_csv_row_count(self, tmp_path, capsys):
        csv_path = tmp_path / "curve.csv"
        code, _, _ = run_cli(["chsh", "0", "0.1", "3", "--csv", str(csv_path)], capsys)
        assert code == 0
        lines = csv_path.read_text().strip().splitlines()
        assert lines[0] == "phi,F,qm_lhs,classical_bound,qm_bound"
        assert len(lines) == 1 + 3

    def test_bad_range_exits_2(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["chsh", "1", "0", "10"])
        assert excinfo.value.code == 2

    def test_too_few_steps_exits_2(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["chsh", "0", "1", "2"])
        assert excinfo.value.code == 2


class TestSearchIdentities:
    def test_target_e1_lists_negated_f1_map(self, capsys):
        code, out, _ = run_cli(["search-identities", "e1"], capsys)
        assert code == 0
        maps = json.loads(out)
        assert {"f1": "-e1", "f2": "e2", "g1": "e1", "g2": "e2"} in maps

    def test_negative_target_nonempty(self, capsys):
        code, out, _ = run_cli(["search-identities", "-e2"], capsys)
        assert code == 0
        assert len(json.loads(out)) > 0

    def test_out_of_plane_target_exits_2(self, capsys):
        code, _, err = run_cli(["search-identities", "e3"], capsys)
        assert code == 2
        assert "error" in err

    def test_unparsable_target_exits_2(self, capsys):
        code, _, _ = run_cli(["search-identities", "zap"], capsys)
        assert code == 2


def test_console_entry_point_runs():
    result = subprocess.run(
        [sys.executable, "-m", "contextuality_lab.cli", "verify", "a3"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert json.loads(result.stdout)["all_pass"] is True
