import io
import json
import subprocess
import sys

import pytest

from exconim.cli import main
from exconim.closed_form import moore_sum
from exconim.game import Position


def run(*argv, stdin=""):
    out = io.StringIO()
    code = main(list(argv), out=out, inp=io.StringIO(stdin))
    return code, out.getvalue()


class TestSg:
    @pytest.mark.parametrize("argv,expected", [
        (("sg", "--game", "exco", "--pos", "1,2,3"), "6"),
        (("sg", "--game", "exco", "--pos", "0,5,5,6"), "2"),
        (("sg", "--game", "nim", "--pos", "3,5,6"), "0"),
        (("sg", "--game", "moore", "--k", "2", "--pos", "1,1,1"), "0"),
        (("sg", "--game", "conim", "--pos", "1,2"), "3"),
        (("sg", "--pos", "1,2,3", "--max", "6"), "6"),
        (("sg", "--pos", "1,5,6", "--max", "4"), "> 4"),
    ])
    def test_values(self, argv, expected):
        assert run(*argv) == (0, expected + "\n")

    def test_json(self):
        code, out = run("sg", "--pos", "1,5,6", "--max", "4", "--format", "json")
        assert json.loads(out) == {"game": "exco", "n": 2, "pos": [1, 5, 6], "exact": False, "bound": 8}

    def test_usage_errors(self):
        assert run("sg")[0] == 2
        assert run("sg", "--pos", "1,x")[0] == 2
        assert run("sg", "--pos", "1,2")[0] == 2
        assert run("sg", "--pos", "1,2,3", "--n", "3")[0] == 2
        assert run("sg", "--game", "moore", "--pos", "1,2,3")[0] == 2
        assert run("sg", "--game", "nim", "--k", "2", "--pos", "1,2,3")[0] == 2
        assert run("nonsense")[0] == 2

    def test_resource_limit(self):
        assert run("sg", "--game", "conim", "--pos", "9,9,9", "--limit", "100")[0] == 3

    def test_memory_limit(self):
        assert run("sg", "--pos", "0,40000,40000")[0] == 3

    def test_cache_reused(self, tmp_path):
        path = str(tmp_path / "c")
        assert run("sg", "--pos", "2,3,9", "--cache", path) == (0, "14\n")
        with open(path) as fh:
            assert fh.readline().startswith("grundy-cache v1 exco n=2 box=2,9,9")
        assert run("sg", "--pos", "1,2,3", "--cache", path) == (0, "6\n")


class TestMove:
    def test_exco(self):
        assert run("move", "--game", "exco", "--pos", "1,2,3") == (0, "1,2,3 -> 0,2,2\n")

    def test_p_position(self):
        assert run("move", "--game", "exco", "--pos", "0,4,4") == \
            (1, "position is a P-position (no winning move)\n")

    def test_moore(self):
        code, out = run("move", "--game", "moore", "--k", "2", "--pos", "3,5,6")
        dst = [int(t) for t in out.split("-> ")[1].split(",")]
        assert code == 0 and moore_sum(Position(0, tuple(dst)), 2).is_zero

    def test_nim_json(self):
        code, out = run("move", "--game", "nim", "--pos", "3,5,7", "--format", "json")
        rec = json.loads(out)
        assert code == 0 and rec["move"] == [0, 2, 5, 7] and rec["p_position"] is False


class TestVerify:
    @pytest.mark.parametrize("argv", [
        ("verify", "theorem1", "--n", "3", "--max", "6"),
        ("verify", "ppos", "--n", "2", "--max", "8"),
        ("verify", "moore", "--n", "4", "--k", "2", "--max", "6"),
        ("verify", "axioms", "--game", "nim", "--n", "3", "--max", "3"),
        ("verify", "shift"),
        ("verify", "appendix", "--n", "3", "--max", "3"),
        ("verify", "prop4", "--box", "8,8,20"),
    ])
    def test_pass(self, argv):
        code, out = run(*argv)
        assert code == 0 and ": pass (" in out

    def test_json(self):
        code, out = run("verify", "ppos", "--n", "3", "--max", "3", "--format", "json")
        assert json.loads(out)["status"] == "supported"


class TestConjecture:
    def test_c1(self):
        code, out = run("conjecture", "c1", "--x0", "0..3", "--x1-pow2", "1..4", "--x2-max", "64")
        rep = json.loads(out)
        assert code == 0 and rep["status"] == "supported" and rep["range"]["x1"] == [2, 4, 8, 16]

    def test_c5(self):
        code, out = run("conjecture", "c5", "--x1", "6", "--x2-max", "256")
        assert code == 0 and json.loads(out)["thresholds"][0]["pattern"] == [0, 0, 0, 4, 0, 2, 0, 2]

    def test_c4(self):
        code, out = run("conjecture", "c4", "--x0", "1", "--x1", "5", "--x2-max", "64")
        assert code == 0 and json.loads(out)["thresholds"][0]["threshold"] == 14

    def test_refuted_exit_code(self):
        code, out = run("conjecture", "c5", "--x1", "24", "--x2-max", "640")
        assert code == 1 and json.loads(out)["status"] == "refuted"

    def test_json_is_byte_stable(self):
        args = ("conjecture", "c2", "--x0", "0..2", "--x1", "1..9", "--x2-max", "40")
        assert run(*args) == run(*args)

    def test_shallow_is_usage_error(self):
        assert run("conjecture", "c5", "--x1", "6", "--x2-max", "20")[0] == 2


class TestTable:
    def test_rows(self):
        code, out = run("table", "--x0", "1", "--x1", "5", "--x2", "5..7")
        assert code == 0 and out == "x2,g,u,delta\n5,3,11,8\n6,11,12,1\n7,13,13,0\n"

    def test_example_two(self):
        assert run("table", "--x0", "0", "--x1", "1", "--x2", "2..3")[1] == "x2,g,u,delta\n2,3,3,0\n3,2,4,2\n"

    def test_empty(self):
        assert run("table", "--x0", "0", "--x1", "1", "--x2", "3..2") == (0, "x2,g,u,delta\n")

    def test_missing_flags(self):
        assert run("table", "--x0", "1")[0] == 2


class TestPlay:
    def test_engine_wins_from_123(self):
        code, out = run("play", "--pos", "1,2,3", "--first", "engine",
                        stdin="0,1,1\nfoo\n0,3,3\n0,0,2\n")
        assert code == 0
        assert "engine: 1,2,3 -> 0,2,2" in out
        assert "illegal move: every main pile was reduced" in out
        assert "could not read 'foo'" in out
        assert "illegal move: a pile was increased" in out
        assert out.rstrip().endswith("engine wins")

    def test_human_loses_from_p_position(self):
        code, out = run("play", "--pos", "0,1,1", stdin="0,0,1\n")
        assert code == 0 and out.rstrip().endswith("engine wins")

    def test_fallback_takes_from_largest(self):
        code, out = run("play", "--pos", "0,2,3", stdin="0,2,2\n")
        assert "engine: 0,2,2 -> 0,1,2" in out

    def test_human_can_win(self):
        code, out = run("play", "--game", "nim", "--pos", "1,1", "--first", "engine", stdin="0,0\n")
        assert "engine: 1,1 -> 0,1" in out and out.rstrip().endswith("you win")

    def test_input_ends(self):
        assert run("play", "--pos", "1,2,3")[0] == 1

    def test_seeded_fallback_is_reproducible(self):
        a = run("play", "--pos", "0,5,5", "--seed", "7", stdin="0,4,4\n")
        b = run("play", "--pos", "0,5,5", "--seed", "7", stdin="0,4,4\n")
        assert a == b


class TestCacheCommand:
    def test_build_and_check(self, tmp_path):
        path = str(tmp_path / "t.cache")
        assert run("cache", "build", "--box", "1,2,3", path)[0] == 0
        assert run("cache", "check", path) == (0, "ok: exco n=2 box=1,2,3\n")

    def test_bad_file(self, tmp_path):
        path = tmp_path / "bad.cache"
        path.write_text("grundy-cache v7 exco n=2 box=0,0,0\n0 0 0 0\n")
        code, out = run("cache", "check", str(path))
        assert code == 1 and "version" in out

    def test_missing_file(self, tmp_path):
        assert run("cache", "check", str(tmp_path / "none"))[0] == 2

    def test_moore(self, tmp_path):
        path = str(tmp_path / "m.cache")
        assert run("cache", "build", "--game", "moore", "--k", "2", "--box", "0,2,2,2", path)[0] == 0
        assert run("cache", "check", path)[1].startswith("ok: moore:k=2 n=3")


class TestConfig:
    def test_config_and_override(self, tmp_path):
        cfg = tmp_path / "cfg"
        cfg.write_text("# defaults\ngame = nim\nformat=json\n")
        code, out = run("sg", "--config", str(cfg), "--pos", "3,5")
        assert json.loads(out)["sg"] == 6
        assert run("sg", "--config", str(cfg), "--pos", "3,5", "--format", "human") == (0, "6\n")

    def test_bad_config(self, tmp_path):
        cfg = tmp_path / "cfg"
        cfg.write_text("colour=blue\n")
        assert run("sg", "--config", str(cfg), "--pos", "1,2,3")[0] == 2


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "exconim.cli", "sg", "--pos", "1,2,3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "6\n"
