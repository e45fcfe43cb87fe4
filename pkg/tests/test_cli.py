import json

import pytest

from exen.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCompute:
    def test_family_path3(self, capsys):
        code, out, _ = run_cli(capsys, "compute", "--family", "path:3")
        assert code == 0
        doc = json.loads(out)
        assert doc["schema_version"] == "1"
        assert doc["indexing"] == "0-based"
        assert abs(doc["energy"]["extended_energy"] - 3.535534) <= 1e-6

    def test_g6_k2(self, capsys):
        code, out, _ = run_cli(capsys, "compute", "--g6", "A_")
        assert code == 0
        doc = json.loads(out)
        assert doc["energy"]["ordinary_energy"] == 2.0

    def test_star_vertex_flag(self, capsys):
        code, out, _ = run_cli(capsys, "compute", "--family", "star:4", "--vertex", "0")
        assert code == 0
        doc = json.loads(out)
        star_checks = [b for b in doc["bounds"] if b["bound_id"] == "vertex_upper_star"]
        assert len(star_checks) == 1
        assert star_checks[0]["vertex"] == 0
        assert star_checks[0]["status"] == "equality"

    def test_edgelist_input(self, capsys, tmp_path):
        f = tmp_path / "g.txt"
        f.write_text("3 2\n0 1\n1 2\n", encoding="ascii")
        code, out, _ = run_cli(capsys, "compute", "--edgelist", str(f))
        assert code == 0
        assert json.loads(out)["graph"]["n"] == 3

    def test_parse_error_exit_2(self, capsys):
        code, out, err = run_cli(capsys, "compute", "--g6", "A!")
        assert code == 2
        assert out == ""
        assert "error" in err

    def test_bad_family_exit_2(self, capsys):
        code, _, _ = run_cli(capsys, "compute", "--family", "paley:7")
        assert code == 2

    def test_requires_exactly_one_source(self, capsys):
        with pytest.raises(SystemExit):
            run_cli(capsys, "compute", "--g6", "A_", "--family", "path:3")

    def test_twelve_significant_digits(self, capsys):
        _, out, _ = run_cli(capsys, "compute", "--family", "path:3")
        doc = json.loads(out)
        val = doc["energy"]["extended_energy"]
        assert val == float(f"{2.5 * 2**0.5:.12g}")

    def test_json_round_trips(self, capsys):
        _, out, _ = run_cli(capsys, "compute", "--family", "cycle:5")
        doc = json.loads(out)
        assert json.loads(json.dumps(doc)) == doc

    def test_vertex_out_of_range_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "compute", "--family", "path:3", "--vertex", "5")
        assert code == 2
        assert "out of range" in err

    def test_numeric_failure_exit_3(self, capsys, monkeypatch):
        import exen.bounds
        from exen.linalg import ConvergenceError

        def boom(*a, **kw):
            raise ConvergenceError("forced")

        monkeypatch.setattr(exen.bounds, "energy_report", boom)
        code, out, err = run_cli(capsys, "compute", "--g6", "A_")
        assert code == 3
        assert out == ""
        assert "numeric failure" in err

    def test_env_threads_fallback(self, capsys, monkeypatch):
        monkeypatch.setenv("EXEN_THREADS", "2")
        code, out, _ = run_cli(capsys, "verify", "--exhaustive", "4", "--bounds", "sandwich_left")
        assert code == 0
        assert json.loads(out)["violations_total"] == 0


class TestVerify:
    def test_exhaustive_4_exit_0(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--exhaustive", "4", "--bounds", "all", "--pairs")
        assert code == 0
        doc = json.loads(out)
        assert doc["violations_total"] == 0
        assert doc["graphs_processed"] == 75

    def test_single_bound_filter(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--exhaustive", "3", "--bounds", "sandwich_left")
        assert code == 0
        doc = json.loads(out)
        assert [b["bound_id"] for b in doc["bounds"]] == ["sandwich_left"]

    def test_das_i_witnesses_include_empty3(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--exhaustive", "3", "--bounds", "das_i")
        assert code == 0
        doc = json.loads(out)
        assert "B?" in doc["bounds"][0]["equality_witnesses"]

    def test_family_source(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--family", "cycle:5", "--bounds", "all", "--pairs")
        assert code == 0
        assert json.loads(out)["graphs_processed"] == 1

    def test_corpus(self, capsys, tmp_path):
        f = tmp_path / "c.g6"
        f.write_text("A_\nBw\n# comment\n", encoding="ascii")
        code, out, _ = run_cli(capsys, "verify", "--corpus", str(f))
        assert code == 0
        assert json.loads(out)["graphs_processed"] == 2

    def test_missing_corpus_exit_2(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--corpus", "/nonexistent/file.g6")
        assert code == 2

    def test_unknown_bound_exit_2(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--exhaustive", "3", "--bounds", "bogus")
        assert code == 2

    def test_dominance_filter(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--exhaustive", "4", "--bounds", "dominance:*")
        assert code == 0
        doc = json.loads(out)
        assert len(doc["bounds"]) == 5
        assert all(b["violated"] == 0 for b in doc["bounds"])


class TestSweep:
    def test_writes_outputs(self, capsys, tmp_path):
        out_dir = tmp_path / "results"
        code, _, _ = run_cli(capsys, "sweep", "--exhaustive", "4", "--pairs",
                             "--out", str(out_dir))
        assert code == 0
        summary = json.loads((out_dir / "summary.json").read_text())
        assert summary["summary"]["violations_total"] == 0
        csv_lines = (out_dir / "slacks.csv").read_text().strip().splitlines()
        assert csv_lines[0] == "bound_id,worst_slack,witness_g6,equality_count"
        assert len(csv_lines) == len(summary["summary"]["bounds"]) + 1

    def test_deterministic_bytes(self, capsys, tmp_path):
        args = ["sweep", "--random", "--n", "10", "--p", "0.5", "--samples", "20",
                "--seed", "7", "--bounds", "sandwich_left,das_i"]
        code1, _, _ = run_cli(capsys, *args, "--out", str(tmp_path / "a"))
        code2, _, _ = run_cli(capsys, *args, "--out", str(tmp_path / "b"))
        assert code1 == code2 == 0
        assert (tmp_path / "a/summary.json").read_bytes() == (tmp_path / "b/summary.json").read_bytes()
        assert (tmp_path / "a/slacks.csv").read_bytes() == (tmp_path / "b/slacks.csv").read_bytes()

    def test_requires_mode(self, capsys, tmp_path):
        code, _, _ = run_cli(capsys, "sweep", "--out", str(tmp_path / "x"))
        assert code == 2


class TestCatalog:
    def test_text_lists_all(self, capsys):
        code, out, _ = run_cli(capsys, "catalog")
        assert code == 0
        assert "n_only_ex" in out
        assert "ng_radius_lower" in out
        assert "G and complement connected" in out

    def test_json_agrees_with_text(self, capsys):
        _, text_out, _ = run_cli(capsys, "catalog")
        text_count = int(text_out.strip().splitlines()[-1].split()[1])
        _, json_out, _ = run_cli(capsys, "catalog", "--json")
        doc = json.loads(json_out)
        assert doc["count"] == text_count == len(doc["bounds"])
        assert doc["count"] >= 19

    def test_entries_have_preconditions(self, capsys):
        _, out, _ = run_cli(capsys, "catalog", "--json")
        for entry in json.loads(out)["bounds"]:
            assert entry["precondition"]
            assert entry["source"]
