import io
import json
import subprocess
import sys

import pytest

from bindecomp.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


@pytest.mark.parametrize("argv,expected", [
    (["factor", "45"], "45 = 3 × 15\n"),
    (["factor", "65537"], "65537 is prime\n"),
    (["factor", "45", "--complete"], "45 = 3 × 3 × 5\n"),
    (["factor", "0x2d"], "45 = 3 × 15\n"),
])
def test_factor(argv, expected):
    assert run(*argv) == (0, expected)


def test_json():
    code, out = run("factor", "27", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["verdict"] == "composite" and doc["factors"] == [3, 9]
    assert set(doc["stats"]) == {"branches_opened", "leaves", "columns_resolved", "primitive_ops"}
    doc = json.loads(run("factor", "65537", "--json")[1])
    assert doc["verdict"] == "prime" and doc["pairs_examined"] == 7


def test_is_prime():
    assert run("is-prime", "65537")[0] == 0
    assert run("is-prime", "91")[0] == 3


@pytest.mark.parametrize("argv,fragment", [
    (["factor", "44"], "NotOdd"),
    (["factor", "1"], "TooSmall"),
    (["factor", "4x"], "Malformed"),
    (["trace", "65537", "--pair", "2,2"], "not a candidate pair"),
    (["export", "45", "--pair", "2,4"], "not a candidate pair"),
    (["bench", "--odd-range", "9:3", "--csv", "x.csv"], "lo <= hi"),
])
def test_bad_input(argv, fragment, capsys):
    code, out = run(*argv)
    assert code == 1 and out == ""
    assert fragment in capsys.readouterr().err


def test_trace_and_export():
    code, out = run("trace", "45", "--pair", "1,3")
    assert code == 0 and out.endswith("SOLUTION A=3 B=15\n")
    code, out = run("export", "65537", "--pair", "7,8", "--widths", "paper")
    assert code == 0 and out.startswith("system: M=65537 m=7 n=8\n")


def test_trace_limit():
    out = run("trace", "65537", "--pair", "7,8")[1]
    assert "truncated" not in out
    code, out = run("trace", str(2**24 + 1), "--pair", "11,12")
    assert code == 0 and "output truncated at 10000 lines (use --no-limit)" in out


def test_bench(tmp_path, capsys):
    csv = tmp_path / "out.csv"
    png = tmp_path / "out.png"
    code, _ = run("bench", "--odd-range", "3:9", "--csv", str(csv), "--plot", str(png))
    assert code == 0
    assert len(csv.read_text().splitlines()) == 5
    assert png.exists()
    assert "4 rows" in capsys.readouterr().err


def test_invariant_exit_code(monkeypatch, capsys):
    from bindecomp import cli
    from bindecomp.search import InternalInvariant

    def boom(M):
        raise InternalInvariant("carry views disagree")

    monkeypatch.setattr(cli, "factor_once", boom)
    assert run("factor", "45")[0] == 2
    assert "carry views disagree" in capsys.readouterr().err


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "bindecomp", "factor", "91"], capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout == "91 = 7 × 13\n"
