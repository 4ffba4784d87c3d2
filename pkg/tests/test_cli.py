import io
import json
import subprocess
import sys

import pytest

from ordtrees.cli import main
from ordtrees.tree_core import enumerate_words


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, expected", [
    (["count", "--formula", "class", "-n", "3", "-k", "1", "-l", "1"], "2"),
    (["count", "--formula", "catalan", "-n", "3"], "5"),
    (["count", "--formula", "cumulative", "-n", "1", "-k", "1", "-l", "1"], "0"),
    (["count", "--formula", "outdeg-level", "-n", "3", "-k", "0", "-l", "1"], "5"),
    (["count", "--formula", "degree", "-n", "3", "-k", "2"], "3"),
    (["count", "--formula", "level", "-n", "3", "-l", "2"], "4"),
    (["count", "--formula", "half", "-n", "3"], "10"),
])
def test_count(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == expected


@pytest.mark.parametrize("argv", [
    ["count", "--formula", "class", "-n", "3"],
    ["count", "--formula", "class", "-n", "0", "-k", "1", "-l", "1"],
    ["verify", "--bound", "counts=x"],
    ["map", "A-E", "-k", "1", "-l", "1", "()@0"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


@pytest.mark.parametrize("argv", [["table"], ["count", "--formula", "nope", "-n", "3"]])
def test_argparse_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_map(capsys):
    assert run(capsys, "map", "A-D", "-k", "2", "-l", "1", "((()))@1")[:2] == (0, "()(())@0\n")
    assert run(capsys, "map", "A-D", "--inverse", "-k", "2", "-l", "1", "()(())@0")[1] == "((()))@1\n"
    assert run(capsys, "map", "A-C", "-k", "2", "-l", "1", "((()))@1")[1] == "()()()@2\n"


def test_map_not_in_class_exit_3(capsys):
    code, out, err = run(capsys, "map", "A-D", "-k", "2", "-l", "1", "()(())@2")
    assert code == 3 and out == ""
    assert "not a first-child" in err


def test_map_malformed_literal_exit_2(capsys):
    code, _, err = run(capsys, "map", "A-D", "-k", "2", "-l", "1", "(()@1")
    assert code == 2 and "offset" in err


def test_phi_map(capsys):
    assert run(capsys, "phi-map", "-k", "1", "-l", "1", "(())@1")[1] == "DDD@(1,1)\n"
    assert run(capsys, "phi-map", "--inverse", "-n", "2", "-k", "1", "-l", "1", "DDD@(1,1)")[1] == "(())@1\n"
    code, _, err = run(capsys, "phi-map", "-k", "2", "-l", "1", "(())@1")
    assert code == 3 and "outdegree" in err


def test_stdin_batch(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("()(()())(())\n((()))\n"))
    code, out, _ = run(capsys, "encode", "--code", "psi")
    assert code == 0 and out.split() == ["UUUDDUUDDDUD", "UDUDUD"]


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "-n", "3")
    assert out.split() == ["((()))", "(()())", "(())()", "()(())", "()()()"]


@pytest.mark.parametrize("code_name", ["phi", "psi"])
def test_decode_encode_round_trip_to_10(capsys, code_name):
    for n in range(1, 11):
        words = list(enumerate_words(n))
        _, encoded, _ = run(capsys, "encode", "--code", code_name, *words)
        paths = encoded.split()
        assert len(paths) == len(words)
        _, decoded, _ = run(capsys, "decode", "--code", code_name, *paths)
        assert decoded.split() == words


def test_decode_rejects_non_dyck(capsys):
    code, _, err = run(capsys, "decode", "DU")
    assert code == 2 and "Dyck" in err


def test_table_formats_and_determinism(capsys):
    _, csv1, _ = run(capsys, "table", "-n", "4", "--format", "csv")
    _, csv2, _ = run(capsys, "table", "-n", "4", "--format", "csv")
    assert csv1 == csv2
    assert csv1.splitlines()[0] == "n,k,l,statistic,count"
    _, js, _ = run(capsys, "table", "-n", "4", "--format", "json")
    rows = json.loads(js)
    assert set(rows[0]) == {"n", "k", "l", "statistic", "count"}
    assert len(rows) == len(csv1.splitlines()) - 1
    _, oracle1, _ = run(capsys, "table", "-n", "6", "--upto", "--oracle", "--workers", "1")
    _, oracle2, _ = run(capsys, "table", "-n", "6", "--upto", "--oracle", "--workers", "3")
    assert oracle1 == oracle2
    _, text, _ = run(capsys, "table", "-n", "2", "--format", "text")
    assert "n=2 k=1 l=1 class 1" in text.splitlines()


def test_verify(capsys, tmp_path):
    assert run(capsys, "verify", "--counts", "-n", "8")[0] == 0
    assert run(capsys, "verify", "--all", "-n", "1")[0] == 0
    out_file = tmp_path / "out.json"
    code, out, _ = run(capsys, "verify", "--phi", "-n", "7", "--json", str(out_file))
    assert code == 0 and out.startswith("phi: PASS")
    data = json.loads(out_file.read_text())
    assert data[0]["suite"] == "phi" and data[0]["failures"] == []


def test_verify_output_independent_of_workers(capsys, tmp_path):
    outs = []
    for w in ("1", "2"):
        f = tmp_path / f"r{w}.json"
        code, out, _ = run(capsys, "verify", "--all", "-n", "4", "--workers", w, "--json", str(f))
        assert code == 0
        outs.append((out, f.read_bytes()))
    assert outs[0] == outs[1]


def test_verify_failure_exit_1(capsys, monkeypatch):
    from ordtrees import oracle
    real = oracle.verify_counts
    monkeypatch.setattr(oracle, "verify_counts",
                        lambda n, **kw: real(n, class_formula=lambda *a: 0, **kw))
    code, out, _ = run(capsys, "verify", "--counts", "-n", "2")
    assert code == 1 and "FAIL" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ordtrees", "count", "--formula", "catalan", "-n", "10"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "16796"
