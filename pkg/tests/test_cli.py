import re
import subprocess
import sys

import pytest

from circulant_iso.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


class TestClassify:
    def test_type2(self, capsys):
        code, out = run_cli(capsys, "classify", "16", "1,2,7", "2,3,5")
        assert code == 0 and out.strip() == "Type2 m=2 t=2"

    def test_type1(self, capsys):
        code, out = run_cli(capsys, "classify", "16", "1,2,4,6,7", "2,3,4,5,6")
        assert code == 0 and out.strip() == "Type1 x=3"

    def test_identical(self, capsys):
        code, out = run_cli(capsys, "classify", "16", "1,2,7", "1,2,7")
        assert code == 0 and out.strip() == "Identical"

    def test_not_isomorphic_exit_code(self, capsys):
        code, out = run_cli(capsys, "classify", "16", "1,2,7", "1,2,3")
        assert code == 1 and out.strip() == "NotIsomorphic"

    def test_usage_error_exit_code(self, capsys):
        code, _ = run_cli(capsys, "classify", "16", "1,2,9", "1,2,3")
        assert code == 2

    def test_oracle_refusal_exit_code(self, capsys):
        code, _ = run_cli(capsys, "classify", "16", "1,2,7", "1,2,3",
                          "--budget", "2")
        assert code == 3


class TestSubcommands:
    def test_theta(self, capsys):
        code, out = run_cli(capsys, "theta", "16", "2", "2", "1,2,7")
        assert code == 0 and out.strip() == "2,3,5"

    def test_theta_not_circulant(self, capsys):
        code, out = run_cli(capsys, "theta", "16", "2", "1", "1,2,7")
        assert code == 0 and out.strip() == "not-circulant"

    def test_orbit(self, capsys):
        code, out = run_cli(capsys, "orbit", "48", "1,2,23")
        lines = out.strip().splitlines()
        assert code == 0 and len(lines) == 4
        assert lines[0] == "1,2,23\tx=1"

    def test_t2set(self, capsys):
        code, out = run_cli(capsys, "t2set", "16", "2", "1,2,7")
        assert code == 0
        assert out.strip().splitlines() == ["1,2,7", "2,3,5"]

    def test_family_42(self, capsys):
        code, out = run_cli(capsys, "family", "42", "2", "1")
        assert code == 0
        assert out.strip() == "order=16 R=1,2,7 S=2,3,5 t=2 degenerate=no"

    def test_family_43(self, capsys):
        code, out = run_cli(capsys, "family", "43", "3", "1", "1,4")
        assert code == 0
        assert "R=1,2,8,11 S=2,5,7,8" in out

    def test_family_degenerate(self, capsys):
        code, out = run_cli(capsys, "family", "42", "3", "2")
        assert code == 0 and "degenerate=yes" in out

    def test_census_summary(self, capsys, tmp_path):
        code, out = run_cli(capsys, "census", "16", "--out", str(tmp_path))
        assert code == 0
        assert "pairs=8" in out
        assert (tmp_path / "census_n16.txt").exists()
        assert (tmp_path / "census_n16_summary.csv").exists()

    def test_census_relaxed(self, capsys):
        code, out = run_cli(capsys, "census", "12", "--relaxed")
        assert code == 0 and "pairs=0" in out

    def test_census_cap(self, capsys):
        code, _ = run_cli(capsys, "census", "66")
        assert code == 2

    def test_render(self, capsys, tmp_path):
        out_dir = tmp_path / "frames"
        code, out = run_cli(capsys, "render", "16", "1,2,7", "2", "0", "7",
                            str(out_dir))
        assert code == 0 and "8 frames" in out
        assert sorted(p.name for p in out_dir.iterdir()) == [
            f"frame_t{t}.svg" for t in range(8)]


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "circulant_iso.cli", "classify", "16",
             "1,2,7", "2,3,5"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert proc.stdout.strip() == "Type2 m=2 t=2"
