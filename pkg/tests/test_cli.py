import json
import subprocess
import sys

import pytest

from twistcenter.cli import run
from twistcenter.pbw import enumerate_partitions
from twistcenter.cartan import parse_type
from twistcenter.roots import real_roots_upto


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info(capsys):
    code, out, _ = call(capsys, "info", "A2_2")
    assert code == 0
    data = json.loads(out)
    assert data["matrix"] == [[2, -1], [-4, 2]]
    assert data["d"] == [4, 1]
    assert data["r"] == [1, 2]


def test_jsets_empty(capsys):
    code, out, _ = call(capsys, "jsets", "D4_3", "-l", "5", "--rmax", "10")
    assert code == 0
    assert json.loads(out)["jsecond"] == []


def test_par_matches_oracle(capsys):
    code, out, _ = call(capsys, "par", "A2_2", "--eta", "1,2")
    t = parse_type("A2_2")
    assert json.loads(out)["par"] == len(enumerate_partitions(t, (1, 2), real_roots_upto(t, 1)))


def test_dethr_flags(capsys, tmp_path):
    log = tmp_path / "log.jsonl"
    code, out, _ = call(capsys, "dethr", "D3_2", "-l", "5", "--rmax", "10", "--log", str(log))
    rows = json.loads(out)["rows"]
    assert [r["r"] for r in rows if r["discrepancy"]] == [5]
    entries = [json.loads(line) for line in log.read_text().splitlines()]
    assert entries == [{"context": {"l": 5, "r": 5, "source": "det_hr", "type": "D3_2"}, "expected": 2, "got": 1}]


def test_mult(capsys):
    code, out, _ = call(capsys, "mult", "D3_2", "-l", "5", "--eta", "5,5,5")
    data = json.loads(out)
    assert data["ziz_bound"] - data["highest_coeff_mult"] == data["discrepancy_excess"] == 1


def test_star(capsys):
    code, out, _ = call(capsys, "star", "A4_2", "-l", "5", "-r", "1")
    data = json.loads(out)
    assert data["coeffs"] == {"1": "q^2 + q^-2", "2": "q + q^-1"}
    assert data["i_star"] == 2


def test_center(capsys):
    code, out, _ = call(capsys, "center", "A2_2", "-l", "5", "--ddeg", "5")
    data = json.loads(out)
    assert data["pz"]["exponents"] == [1, 2]
    tags = {g["tag"] for g in data["generators"]}
    assert {"RealPower", "NegRealPower", "ImaginarySlot", "KPower", "KDelta"} <= tags


def test_roots_tsv(capsys):
    code, out, _ = call(capsys, "--format", "tsv", "roots", "A2_2", "--ddeg", "1")
    lines = out.splitlines()
    assert lines[0] == "root\tcoords\tddeg\td_alpha"
    assert lines[1] == "a1\t0,1\t0\t1"
    assert len(lines) == 6


def test_text_format_after_subcommand(capsys):
    code, out, _ = call(capsys, "info", "D4_3", "--format", "text")
    assert out.splitlines()[0].split() == ["i", "d", "r", "matrix_row"]


@pytest.mark.parametrize(
    "argv,code",
    [
        (["info", "A3_2"], 2),
        (["dethr", "A4_2", "-l", "4", "--rmax", "3"], 2),
        (["dethr", "D4_3", "-l", "3", "--rmax", "3"], 2),
        (["jsets", "A4_2", "-l", "1", "--rmax", "3"], 2),
        (["star", "A4_2", "-l", "5", "-r", "5"], 2),
        (["par", "A2_2", "--eta", "1,-2"], 2),
        (["par", "A2_2", "--eta", "1,2,3"], 2),
        (["par", "A2_2", "--eta", "x"], 1),
        (["frobnicate"], 1),
        ([], 1),
        (["info"], 1),
    ],
)
def test_exit_codes(capsys, argv, code):
    got, _, err = call(capsys, *argv)
    assert got == code
    assert err


def test_l_validated_identically(capsys):
    messages = set()
    for argv in (
        ["dethr", "A4_2", "-l", "6", "--rmax", "3"],
        ["mult", "A4_2", "-l", "6", "--eta", "0,0,0"],
        ["jsets", "A4_2", "-l", "6", "--rmax", "3"],
        ["star", "A4_2", "-l", "6", "-r", "1"],
        ["center", "A4_2", "-l", "6", "--ddeg", "1"],
    ):
        code, _, err = call(capsys, *argv)
        assert code == 2
        messages.add(err)
    assert len(messages) == 1


def test_selftest(capsys):
    code, out, _ = call(capsys, "selftest")
    data = json.loads(out)
    assert code == 0
    assert data["passed"]
    assert all(c["failures"] == [] for c in data["checks"])
    assert data["flagged"] and all(item["flagged_r"] for item in data["flagged"])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "twistcenter", "info", "D4_3"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["matrix"] == [[2, -1, 0], [-1, 2, -3], [0, -1, 2]]
