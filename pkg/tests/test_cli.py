"""End-to-end tests for the command-line interface."""

import json
import subprocess

import pytest

import hookpair.cli as cli
from hookpair.errors import CounterexampleFound


def run_cli(*argv, capsys=None):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestVerify:
    def test_box_identity_passes(self, capsys):
        code, out, _ = run_cli(
            "verify", "--k", "2", "--n", "2", "--alpha", "2,1",
            "--theorem", "2", capsys=capsys,
        )
        assert code == 0
        report = json.loads(out)
        assert report["verdict"] == "pass"
        assert report["theorem"] == 2
        assert report["alpha"] == [2, 1]

    def test_trailing_zeros_optional(self, capsys):
        code, out, _ = run_cli(
            "verify", "--k", "3", "--n", "2", "--alpha", "2",
            "--theorem", "3", capsys=capsys,
        )
        assert code == 0
        assert json.loads(out)["alpha"] == [2, 0, 0]

    def test_projective_member_passes(self, capsys):
        code, out, _ = run_cli(
            "verify", "--k", "5", "--n", "6", "--alpha", "5,4,2,1,0",
            "--theorem", "proj", capsys=capsys,
        )
        assert code == 0
        report = json.loads(out)
        assert report["theorem"] == "pass"
        assert report["lambda"] == [4, 2]

    def test_projective_rejects_outsider(self, capsys):
        code, _, err = run_cli(
            "verify", "--k", "2", "--n", "3", "--alpha", "1,1",
            "--theorem", "proj", capsys=capsys,
        )
        assert code == 2
        assert "error:" in err

    def test_projective_rejects_wrong_n(self, capsys):
        code, _, err = run_cli(
            "verify", "--k", "2", "--n", "2", "--alpha", "2,1",
            "--theorem", "proj", capsys=capsys,
        )
        assert code == 2
        assert "error:" in err

    def test_increasing_alpha_is_usage_error(self, capsys):
        code, _, err = run_cli(
            "verify", "--k", "2", "--n", "3", "--alpha", "1,2",
            "--theorem", "1", capsys=capsys,
        )
        assert code == 2
        assert "error:" in err

    def test_counterexample_exits_one(self, capsys, monkeypatch):
        def broken(p, which):
            raise CounterexampleFound("planted failure", case={}, detail=None)

        monkeypatch.setattr(cli, "verify_theorem", broken)
        code, _, err = run_cli(
            "verify", "--k", "1", "--n", "1", "--alpha", "1",
            "--theorem", "1", capsys=capsys,
        )
        assert code == 1
        assert "counterexample:" in err


class TestSweep:
    def test_box_sweep_passes(self, capsys):
        code, out, _ = run_cli(
            "sweep", "--max-k", "2", "--max-n", "2", capsys=capsys
        )
        assert code == 0
        assert out == "checked 42 cases: pass\n"

    def test_projective_sweep(self, capsys):
        code, out, _ = run_cli(
            "sweep", "--max-k", "3", "--projective", capsys=capsys
        )
        assert code == 0
        assert out == "checked 14 cases: pass\n"

    def test_report_file(self, capsys, tmp_path):
        out_path = tmp_path / "report.json"
        code, _, _ = run_cli(
            "sweep", "--max-k", "1", "--max-n", "1", "--out", str(out_path),
            capsys=capsys,
        )
        assert code == 0
        data = json.loads(out_path.read_text())
        assert data["verdict"] == "pass"
        assert data["config"] == {"maxK": 1, "maxN": 1, "theorems": ["1", "2", "3"]}

    def test_bad_bounds_are_usage_errors(self, capsys):
        code, _, err = run_cli(
            "sweep", "--max-k", "0", "--max-n", "2", capsys=capsys
        )
        assert code == 2
        assert "error:" in err
        code, _, err = run_cli("sweep", "--max-k", "2", capsys=capsys)
        assert code == 2
        assert "max_n" in err

    def test_jobs_from_environment(self, capsys, monkeypatch):
        monkeypatch.setenv("HOOKPAIR_JOBS", "2")
        code, out, _ = run_cli(
            "sweep", "--max-k", "2", "--max-n", "1", capsys=capsys
        )
        assert code == 0
        assert out == "checked 15 cases: pass\n"


class TestShow:
    def test_single_cell(self, capsys):
        code, out, _ = run_cli(
            "show", "--k", "1", "--n", "1", "--alpha", "1",
            "--region", "D", capsys=capsys,
        )
        assert code == 0
        assert out == "□\n"

    def test_diagonal_shading(self, capsys):
        code, out, _ = run_cli(
            "show", "--k", "1", "--n", "2", "--alpha", "2",
            "--region", "D", "--pq", capsys=capsys,
        )
        assert code == 0
        assert out == "■ □\n"

    def test_pq_outside_family(self, capsys):
        code, _, err = run_cli(
            "show", "--k", "1", "--n", "2", "--alpha", "1",
            "--region", "D", "--pq", capsys=capsys,
        )
        assert code == 2
        assert "error:" in err

    def test_dotted_rightmost_cells(self, capsys):
        code, out, _ = run_cli(
            "show", "--k", "2", "--n", "2", "--alpha", "2,1",
            "--region", "T", "--dots", "1", capsys=capsys,
        )
        assert code == 0
        assert out == "  □ ◉\n□ ◉\n"

    def test_dots_must_be_positive(self, capsys):
        code, _, err = run_cli(
            "show", "--k", "1", "--n", "1", "--alpha", "1",
            "--region", "T", "--dots", "0", capsys=capsys,
        )
        assert code == 2
        assert "error:" in err


class TestDyck:
    def test_alternating_golden(self, capsys):
        code, out, _ = run_cli(
            "dyck", "--k", "2", "--n", "1", "--alpha", "1,0",
            "--i", "1", capsys=capsys,
        )
        assert code == 0
        assert out.splitlines() == [
            "sigma_1: x1 z2 x2 z1",
            "U  D  U  D",
            "x1 z2 x2 z1",
            "P_1: (2, 1)",
        ]

    def test_cut_out_of_range(self, capsys):
        code, _, err = run_cli(
            "dyck", "--k", "2", "--n", "1", "--alpha", "1,0",
            "--i", "2", capsys=capsys,
        )
        assert code == 2
        assert "error:" in err


class TestMap:
    def test_phi_single_cell(self, capsys):
        code, out, _ = run_cli(
            "map", "--k", "1", "--n", "1", "--alpha", "1",
            "--phi", capsys=capsys,
        )
        assert code == 0
        assert json.loads(out) == [
            {"from": [1, 1], "to": [1, 1], "target": "Tstar", "al": [0, 0]}
        ]

    def test_psi_targets(self, capsys):
        code, out, _ = run_cli(
            "map", "--k", "1", "--n", "1", "--alpha", "1",
            "--psi", capsys=capsys,
        )
        assert code == 0
        tags = sorted(entry["target"] for entry in json.loads(out))
        assert tags == ["D", "R"]

    def test_requires_exactly_one_map(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["map", "--k", "1", "--n", "1", "--alpha", "1"])
        assert exc.value.code == 2
        capsys.readouterr()


class TestParser:
    def test_missing_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main([])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_installed_script(self):
        proc = subprocess.run(
            ["hookpair", "show", "--k", "1", "--n", "1", "--alpha", "1",
             "--region", "D"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == "□\n"
