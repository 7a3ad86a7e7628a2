from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from uvbraid.cli import render_ascii, run
from uvbraid.braidword import parse_word


def call(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err, stdin=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


def test_eq_exit_codes():
    assert call("eq", "--model", "uvb", "-n", "3", "r2 s1 s2", "s1 s2 r1")[0] == 0
    assert call("eq", "--model", "wb", "-n", "3", "r2 s1 s2", "s1 s2 r1")[0] == 1
    assert call("eq", "--model", "fvb", "-n", "3", "r1 r2 s1", "s2 r1 r2")[0] == 0
    assert call("eq", "--model", "gvb", "-n", "2", "r1 s1 r1", "s1")[0] == 0
    assert call("eq", "--model", "fwb", "-n", "2", "s1 s1", "")[0] == 0


def test_vlk_output():
    code, out, _ = call("vlk", "-n", "2", "s1 r1 s1^-1 r1")
    assert code == 0
    assert [row.split() for row in out.splitlines()] == [["0", "-1"], ["1", "0"]]
    code, out, _ = call("vlk", "-n", "2", "--format", "json", "s1 r1 s1^-1 r1")
    assert json.loads(out)["vlk"] == [[0, -1], [1, 0]]


def test_error_codes():
    code, out, err = call("vlk", "-n", "2", "s1")
    assert code == 3 and not out and "not pure" in err
    code, _, err = call("nf", "-n", "2", "q1")
    assert code == 2 and "parse error" in err
    assert call("nf", "-n", "2", "s2")[0] == 2
    assert call("bogus")[0] == 2
    assert call("vlk", "--model", "fvb", "-n", "2", "")[0] == 3
    assert call("classify2", "-n", "3", "s1 s2")[0] == 3


def test_stdin_word():
    code, out, _ = call("nf", "-n", "2", "--format", "json", "-", stdin="s1 s1\n")
    assert code == 0
    data = json.loads(out)
    assert data["perm"] == [1, 2]
    assert data["pairs"] == [{"i": 1, "j": 2, "word": [["ij", -1], ["ji", -1]]}]


@pytest.mark.parametrize("model", ["uvb", "wb", "fwb", "fvb", "gvb"])
def test_nf_json_is_stable(model):
    code, out, _ = call("nf", "--model", model, "-n", "3", "--format", "json", "s1 r2 s2^-1 s1")
    assert code == 0
    data = json.loads(out)
    assert json.dumps(data, sort_keys=True) == out.strip()


def test_purify_and_classify():
    code, out, _ = call("purify", "-n", "3", "--trace", "--format", "json", "s1 s1 r2")
    data = json.loads(out)
    assert code == 0 and data["vlk"] == [[0, -1], [-1, 0]] and data["components"] == [1, 2]
    assert all("move" in step for step in data["trace"])
    code, out, _ = call("classify2", "-n", "2", "s1 r1 s1^-1 r1")
    assert code == 0 and "gamma = 1" in out
    code, out, _ = call("group", "-n", "2", "s1 s1")
    assert code == 0 and "[x1,x2]^-1" in out


def test_render():
    pic = render_ascii(parse_word("s1 s2^-1 r1", 3))
    assert pic.splitlines() == ["| | |", "\\+/ |   s1", "| /-\\   s2^-1", "(o) |   r1", "| | |"]
    code, out, _ = call("render", "-n", "3", "s1 s2^-1 r1")
    assert code == 0 and out.strip() == pic


def test_selftest():
    code, out, _ = call("selftest", "--max-n", "4")
    assert code == 0 and "FAIL" not in out
    code, out, _ = call("selftest", "--max-n", "3", "--format", "json")
    assert all(c["ok"] for c in json.loads(out))


def test_tits_cap_env(monkeypatch):
    monkeypatch.setenv("UVBRAID_TITS_MAX_LENGTH", "2")
    assert call("nf", "--model", "fvb", "-n", "3", "s1 s2 s1")[0] == 3


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "uvbraid", "eq", "-n", "2", "s1 s1^-1", ""],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "equal"
