import json

import pytest

from lexineq import cli, oracle
from lexineq.oracle import Membership, VerificationReport
from lexineq.region import Invert, Region, Rotate, Scale, Sqrt, Translate


def run(capsys, *argv):
    status = cli.main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


class TestSolve:
    def test_disc_solution(self, capsys):
        status, out, _ = run(capsys, "solve", "1/Z >= 1", "--verify")
        assert status == 0
        doc = json.loads(out)
        assert doc["schema"] == "lexineq/1"
        assert doc["problem"]["kind"] == "fractional"
        assert doc["classification"][0]["kind"] == "disc"
        assert doc["classification"][0]["center"] == {"re": 0.5, "im": 0.0}
        assert doc["classification"][0]["radius"] == 0.5
        assert doc["verification"]["passed"] is True
        assert doc["verification"]["mismatch_count"] == 0
        assert doc["solution"]["excluded_points"] == [{"re": 0.0, "im": 0.0}]

    def test_quadratic_chain_in_construction_order(self, capsys):
        status, out, _ = run(capsys, "solve", "(1i)*Z^2 + 2*Z + 1i >= 0")
        assert status == 0
        doc = json.loads(out)
        kinds = [t["kind"] for t in doc["solution"]["regions"][0]["transforms"]]
        assert kinds == ["sqrt", "rotate", "translate"]

    def test_system(self, capsys):
        status, out, _ = run(capsys, "solve", "Z >= 0 && (1i)*Z >= 0")
        assert status == 0
        doc = json.loads(out)
        assert doc["problem"]["kind"] == "linear-system"
        assert doc["solution"]["kind"] == "intersection"
        assert len(doc["solution"]["regions"]) == 2
        assert len(doc["classification"]) == 2

    def test_json_file_output(self, capsys, tmp_path):
        path = tmp_path / "doc.json"
        status, out, _ = run(capsys, "solve", "Z >= 1", "--json", str(path))
        assert status == 0
        assert out == ""
        doc = json.loads(path.read_text())
        assert doc["solution"]["regions"][0]["base"] == {"re": 1.0, "im": 0.0}

    def test_parse_error_exit_code(self, capsys):
        status, _, err = run(capsys, "solve", "Z >=")
        assert status == 1
        assert "error" in err

    def test_unsupported_form_exit_code(self, capsys):
        status, _, err = run(capsys, "solve", "Z^3 >= 0")
        assert status == 1
        assert "solvable" in err or "degree" in err

    def test_strict_degenerate(self, capsys):
        status, _, err = run(capsys, "solve", "(Z + 1)/(Z + 1) >= 0", "--strict")
        assert status == 1
        status, out, _ = run(capsys, "solve", "(Z + 1)/(Z + 1) >= 0")
        assert status == 0
        doc = json.loads(out)
        assert doc["solution"]["kind"] == "all"
        assert doc["solution"]["note"]

    def test_verification_failure_exit_code(self, capsys, monkeypatch):
        failing = VerificationReport(
            total=1, skipped_boundary=0, skipped_pole=0,
            mismatches=(oracle.Mismatch(0j, Membership.IN, Membership.OUT),),
            passed=False,
        )
        monkeypatch.setattr(cli.oracle, "verify", lambda *a, **k: failing)
        status, out, _ = run(capsys, "solve", "Z >= 0", "--verify")
        assert status == 2
        doc = json.loads(out)
        assert doc["verification"]["passed"] is False
        assert doc["verification"]["mismatches"][0]["expected"] == "in"


class TestCheck:
    @pytest.mark.parametrize(
        "expr,at,expected",
        [
            ("Z^2 >= 0", "i", "out"),
            ("Z^2 >= 0", "1", "in"),
            ("1/Z >= 1", "0", "pole"),
            ("1/Z >= 1", "0.5", "in"),
            ("Z >= 1+2i", "1+1.9i", "out"),
        ],
    )
    def test_check(self, capsys, expr, at, expected):
        status, out, _ = run(capsys, "check", expr, "--at", at)
        assert status == 0
        assert out.strip() == expected

    def test_bad_point(self, capsys):
        status, _, err = run(capsys, "check", "Z >= 0", "--at", "Z")
        assert status == 1


class TestRaster:
    def test_pgm(self, capsys, tmp_path):
        path = tmp_path / "out.pgm"
        status, _, _ = run(capsys, "raster", "Z >= 0", "--window=-1,1,-1,1",
                           "--res", "3,3", "--out", str(path))
        assert status == 0
        assert path.read_text() == "P2\n3 3\n2\n0 2 2\n0 2 2\n0 0 2\n"

    def test_csv(self, capsys, tmp_path):
        path = tmp_path / "out.csv"
        status, _, _ = run(capsys, "raster", "1/Z >= 1", "--window=-1,1,-1,1",
                           "--res", "3,3", "--out", str(path), "--format", "csv")
        assert status == 0
        lines = path.read_text().splitlines()
        assert lines[0] == "re,im,state"
        assert "0.0,0.0,pole" in lines

    def test_bad_window(self, capsys):
        with pytest.raises(SystemExit):
            cli.main(["raster", "Z >= 0", "--window", "1,2,3", "--out", "x.pgm"])


class TestLaws:
    def test_laws_json_and_exit(self, capsys):
        status, out, _ = run(capsys, "laws", "--seed", "42", "--samples", "2000")
        assert status == 0
        reports = json.loads(out)
        assert len(reports) == 10
        by_id = {r["law_id"]: r for r in reports}
        assert by_id["Transitivity"]["outcome"] == "pass"
        assert by_id["ComplexScalarMonotonicity"]["outcome"] == "counterexample"
        assert by_id["ComplexScalarMonotonicity"]["is_law"] is False
        assert by_id["ComplexScalarMonotonicity"]["witness"] is not None


class TestEntryPoints:
    def test_module_invocation(self):
        import subprocess
        import sys

        out = subprocess.run([sys.executable, "-m", "lexineq", "--help"],
                             capture_output=True, text=True)
        assert out.returncode == 0
        assert "solve" in out.stdout and "laws" in out.stdout

    def test_console_script_if_installed(self):
        import shutil
        import subprocess

        exe = shutil.which("lexineq")
        if exe is None:
            pytest.skip("console script not on PATH")
        out = subprocess.run([exe, "check", "Z >= 0", "--at", "1"],
                             capture_output=True, text=True)
        assert out.returncode == 0
        assert out.stdout.strip() == "in"


class TestRegionJson:
    def test_roundtrip(self):
        region = Region(1.5 - 0.25j, (Invert(), Rotate(0.75), Scale(2.0),
                                      Translate(1 + 2j), Sqrt()))
        doc = cli.region_to_json(region)
        assert cli.region_from_json(doc) == region

    def test_schema_shape(self):
        doc = cli.region_to_json(Region(0.5 + 0j, (Rotate(1.0),)))
        assert doc == {"base": {"re": 0.5, "im": 0.0},
                       "transforms": [{"kind": "rotate", "theta": 1.0}]}

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            cli.region_from_json({"base": {"re": 0, "im": 0},
                                  "transforms": [{"kind": "shear"}]})
