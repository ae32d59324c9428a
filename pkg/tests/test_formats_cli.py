import json
import subprocess
import sys

import pytest

from treedim import cli, dimension
from treedim.formats import (
    FormatError,
    parse_family,
    parse_labeling,
    parse_leafset,
    render_family,
    render_leafset,
)
from treedim.learning import SetFamily
from treedim.tree_core import LeafSet

FIG1_FILE = "# four leaves\n2 3\n000\n010\n\n100\n101\n"


def test_leafset_round_trip(fig1, fig3):
    assert parse_leafset(FIG1_FILE) == fig1
    for B in (fig1, fig3, LeafSet(2, 4), LeafSet(3, 0, frozenset({()}))):
        assert parse_leafset(render_leafset(B)) == B


@pytest.mark.parametrize(
    "text,line",
    [
        ("", None),
        ("2\n", 1),
        ("1 3\n", 1),
        ("11 2\n", 1),
        ("2 3\n000\n00\n", 3),
        ("2 3\n000\n002\n", 3),
        ("# c\n2 2\n01\n\n01\n", 5),
    ],
)
def test_leafset_errors(text, line):
    with pytest.raises(FormatError) as info:
        parse_leafset(text)
    assert info.value.line == line


def test_family_round_trip():
    F = parse_family("universe 3 x y z\n100\n011\n")
    assert F == SetFamily.from_sets("xyz", [{"x"}, {"y", "z"}])
    assert parse_family(render_family(F)) == F
    assert parse_family("universe 2\n10\n").universe == ("x0", "x1")


@pytest.mark.parametrize(
    "text,line",
    [
        ("set 2 a b\n", 1),
        ("universe 2 a\n", 1),
        ("universe 2 a a\n", 1),
        ("universe 2 a b\n10\n1\n", 3),
        ("universe 2 a b\n10\n10\n", 3),
    ],
)
def test_family_errors(text, line):
    with pytest.raises(FormatError) as info:
        parse_family(text)
    assert info.value.line == line


def test_labeling():
    F = SetFamily.powerset("xy")
    alpha = parse_labeling("ε x\n0 y\n1 y\n", F)
    assert alpha.n == 2 and alpha.as_dict()[()] == "x"
    with pytest.raises(FormatError):
        parse_labeling("ε x\n0 y\n", F)
    with pytest.raises(FormatError):
        parse_labeling("ε w\n", F)
    with pytest.raises(FormatError):
        parse_labeling("ε x\nε y\n", F)
    with pytest.raises(FormatError):
        parse_labeling("2 x\n", F)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def fig1_path(tmp_path):
    p = tmp_path / "fig1.txt"
    p.write_text(FIG1_FILE)
    return str(p)


def test_dims(capsys, fig1_path):
    code, out, _ = run(capsys, "dims", fig1_path, "--witness", "--oracle")
    doc = json.loads(out)
    assert code == 0
    assert (doc["td"], doc["mtd"], doc["ltd"], doc["bound"], doc["boundTight"]) == (2, 2, 1, 4, True)
    assert set(doc["witnesses"]["ltd"]["map"]) == {"ε", "0", "1"}
    assert len(doc["witnesses"]["td"]["map"]) == 7
    assert doc["input_digest"].startswith("sha256:")


def test_dims_ternary(capsys, tmp_path, fig3):
    p = tmp_path / "fig3.txt"
    p.write_text(render_leafset(fig3))
    code, out, _ = run(capsys, "dims", str(p))
    doc = json.loads(out)
    assert (doc["ell"], doc["ltd"], doc["mtd"], doc["td"]) == (3, 1, 2, 3)
    code, out, _ = run(capsys, "dims", str(p), "--ell", "4")
    assert code == 2


def test_output_is_deterministic(capsys, fig1_path, tmp_path):
    out_file = tmp_path / "r.json"
    run(capsys, "--out", str(out_file), "dims", fig1_path, "--witness")
    first = out_file.read_bytes()
    _, out, _ = run(capsys, "dims", fig1_path, "--witness")
    assert out.encode() == first


def test_normalize(capsys, tmp_path):
    p = tmp_path / "s.txt"
    p.write_text("2 2\n01\n10\n")
    code, out, _ = run(capsys, "normalize", str(p), "--trace")
    doc = json.loads(out)
    assert code == 0
    assert doc["normalized"] == ["00", "10"] and doc["norm"] == 1 and doc["normEqualsMtd"]
    assert doc["trace"] == [{"node": "0", "k": 0}]


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "6", "2")
    assert code == 0 and json.loads(out)["bound"] == 22
    code, out, _ = run(capsys, "bound", "2", "1", "3", "3")
    assert json.loads(out)["bound"] == 8
    assert run(capsys, "bound", "2", "1", "2", "3")[0] == 2
    assert run(capsys, "bound", "2", "-2")[0] == 2


def test_family(capsys, tmp_path):
    fam = tmp_path / "f.txt"
    fam.write_text("universe 2 x y\n00\n10\n01\n11\n")
    code, out, _ = run(capsys, "family", str(fam), "--tuple", "x", "y")
    doc = json.loads(out)
    assert (doc["vc"], doc["ld"]) == (2, 2)
    assert doc["chi"]["leaves"] == ["00", "01", "10", "11"] and doc["chi"]["ltd"] == 2
    lab = tmp_path / "l.txt"
    lab.write_text("ε x\n0 y\n1 x\n")
    code, out, _ = run(capsys, "family", str(fam), "--labeling", str(lab))
    doc = json.loads(out)
    # members containing x ask about x again below node 1
    assert doc["chi"]["leaves"] == ["00", "01", "11"]
    assert doc["chi"]["kind"] == "labeling"
    assert run(capsys, "family", str(fam), "--tuple", "w")[0] == 2


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 2\n00\n00\n")
    code, out, err = run(capsys, "dims", str(bad))
    assert code == 2 and out == "" and "line 3" in err
    assert run(capsys, "dims", str(tmp_path / "missing.txt"))[0] == 2
    assert run(capsys, "verify", "no-such-suite")[0] == 2


def test_oracle_mismatch_exit_code(capsys, monkeypatch, fig1_path):
    monkeypatch.setattr(dimension, "ltd_indices", lambda idx, m, n, ell: 0)
    code, out, _ = run(capsys, "dims", fig1_path, "--oracle")
    doc = json.loads(out)
    assert code == 3
    assert doc["error"] == "oracle-mismatch" and doc["leafset"] == FIG1_FILE.split("\n", 1)[1].replace("\n\n", "\n")


def test_verify_small(capsys):
    code, out, err = run(capsys, "verify", "thm-ltd", "--max-n", "3", "--samples", "20", "--seed", "4")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    assert all(line.startswith("PASS ") for line in err.strip().splitlines())


def test_verify_independent_of_jobs(capsys):
    outs = []
    for jobs in ("1", "2"):
        code, out, _ = run(capsys, "verify", "thm-td-norm", "--max-n", "3", "--samples", "30", "--jobs", jobs)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_module_entry_point(fig1_path):
    res = subprocess.run([sys.executable, "-m", "treedim", "dims", fig1_path], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["td"] == 2
