"""Command-line behavior: verbs, exit codes, determinism."""

import subprocess
import sys

import pytest

from shortgf.cli import main


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def interval_file(tmp_path):
    path = tmp_path / "f.gf"
    path.write_text(
        "gf nvars=1 index=1\n"
        "term c=1/1 a=0 b=1\n"
        "term c=-1/1 a=4 b=1\n"
    )
    return str(path)


@pytest.fixture
def evens_file(tmp_path):
    path = tmp_path / "g.gf"
    path.write_text(
        "gf nvars=1 index=1\n"
        "term c=1/1 a=0 b=2\n"
        "term c=-1/1 a=8 b=2\n"
    )
    return str(path)


class TestBasicVerbs:
    def test_count(self, interval_file, capsys):
        code, out, err = run_cli(["count", interval_file], capsys)
        assert code == 0
        assert out.strip() == "4"
        assert "seed=0" in err

    def test_coeff(self, interval_file, capsys):
        code, out, _ = run_cli(
            ["coeff", interval_file, "--point", "2"], capsys
        )
        assert code == 0
        assert out.strip() == "1"

    def test_norm(self, interval_file, capsys):
        code, out, _ = run_cli(["norm", interval_file, "--box", "8"], capsys)
        assert code == 0
        assert out.strip() == "3"

    def test_intersect_then_count(
        self, interval_file, evens_file, tmp_path, capsys
    ):
        out_path = str(tmp_path / "c.gf")
        code, _, _ = run_cli(
            [
                "op", "intersect", interval_file, evens_file,
                "--box", "8", "-o", out_path,
            ],
            capsys,
        )
        assert code == 0
        code, out, _ = run_cli(["count", out_path], capsys)
        assert code == 0
        assert out.strip() == "2"  # {0, 2}

    def test_project(self, tmp_path, capsys):
        path = tmp_path / "h.gf"
        path.write_text(
            "gf nvars=2 index=0\n"
            "term c=1/1 a=0,0 b=\n"
            "term c=1/1 a=1,5 b=\n"
        )
        code, out, _ = run_cli(
            ["project", str(path), "--keep", "0", "--box", "2,8"], capsys
        )
        assert code == 0
        assert "a=0" in out and "a=1" in out


class TestErrors:
    def test_unknown_verb_exits_one(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["frobnicate"])
        assert info.value.code == 1

    def test_corrupt_gf_exits_two(self, tmp_path, capsys):
        path = tmp_path / "bad.gf"
        path.write_text("not a gf file\n")
        code, _, err = run_cli(["count", str(path)], capsys)
        assert code == 2
        assert "error" in err

    def test_missing_file_exits_two(self, capsys):
        code, _, _ = run_cli(["count", "/nonexistent/f.gf"], capsys)
        assert code == 2


class TestEncodePipeline:
    def test_encode_then_segment(self, tmp_path, capsys):
        circ = tmp_path / "even.circ"
        circ.write_text("circuit r=3\ng1 = NOT x1\nout g1\n")
        enc = tmp_path / "even.enc"
        code, _, _ = run_cli(
            ["encode", "--circuit", str(circ), "-o", str(enc)], capsys
        )
        assert code == 0
        code, out, _ = run_cli(["segment", str(enc)], capsys)
        assert code == 0
        assert out.strip() == "0 2 4 6"

    def test_alt_membership(self, tmp_path, capsys):
        circ = tmp_path / "a.circ"
        circ.write_text("circuit r=3\ng1 = AND x1 x3\nout g1\n")
        code, out, _ = run_cli(
            ["alt", "--prefix", "E", "--circuit", str(circ), "--cert-bits", "1"],
            capsys,
        )
        assert code == 0
        # exists certificate bit (input 3) making x1 AND cert true: odd x
        assert out.strip() == "1 3"


class TestDemos:
    def test_demo_squares(self, capsys):
        code, out, _ = run_cli(["demo", "squares", "--r", "6"], capsys)
        assert code == 0
        assert "0 1 4 9 16 25 36 49" in out

    def test_demo_factor(self, capsys):
        code, out, _ = run_cli(
            ["demo", "factor", "--n", "77", "--sigma", "96"], capsys
        )
        assert code == 0
        assert "77 = 7 * 11" in out

    def test_demo_pi(self, capsys):
        code, out, _ = run_cli(["demo", "pi", "--n", "100"], capsys)
        assert code == 0
        assert out.strip() == "25"

    def test_demo_ap(self, tmp_path, capsys):
        path = tmp_path / "set.txt"
        path.write_text("1 5 9 13\n")
        code, out, _ = run_cli(
            ["demo", "ap", "--set", str(path), "--k", "4"], capsys
        )
        assert code == 0
        assert "difference=4" in out


class TestDeterminism:
    def test_byte_identical_outputs(self, interval_file, evens_file, tmp_path):
        cmd = [
            sys.executable, "-m", "shortgf.cli",
            "op", "hadamard", interval_file, evens_file, "--box", "8",
        ]
        first = subprocess.run(cmd, capture_output=True)
        second = subprocess.run(cmd, capture_output=True)
        assert first.returncode == second.returncode == 0
        assert first.stdout == second.stdout
