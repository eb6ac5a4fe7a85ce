import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from p2tensor.cli import main
from p2tensor.cohomology import CohomologyReport, Region
from p2tensor.chern import parse_character


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_cohomology_json():
    code, text = run("cohomology", "4 4 -7", "8 1 -17/2", "--format", "json")
    assert code == 0
    rec = json.loads(text)
    assert (rec["h0"], rec["h1"], rec["h2"]) == (3, 3, 0)
    assert rec["special"] is True and rec["region"] == "IIIb"
    assert set(rec) == {
        "h0", "h1", "h2", "chi", "region", "special",
        "requires_divisibility", "sufficient_multiple", "notes",
    }


@pytest.mark.parametrize(
    "v,w",
    [
        ("4 4 -7", "8 1 -17/2"),
        ("4 4 -7", "1 1 1/2"),
        ("0 3 1", "4 4 -7"),
        ("1 -2 -1", "3 -6 3"),
        ("2 0 -6", "3 9 -25/2"),
    ],
)
def test_json_round_trip(v, w):
    code, text = run("cohomology", v, w, "--format", "json")
    assert code == 0
    rec = json.loads(text)
    rec["region"] = Region(rec["region"])
    rec["notes"] = tuple(rec["notes"])
    rep = CohomologyReport(**rec)
    rank_one = min(parse_character(v).r, parse_character(w).r) == 1
    rep.validate(rank_one=rank_one)
    assert json.loads(json.dumps(rep.to_dict())) == json.loads(text)


@pytest.mark.parametrize(
    "argv",
    [
        ("cohomology", "4 4 -7", "8 1 -17/2", "--format", "json"),
        ("correspond", "4 4 -7", "--format", "json"),
        ("regions", "4 4 -7", "--grid", "2"),
        ("oracle", "kronecker-hom", "3:2,2", "3:3,3", "--seed", "9"),
        ("dlp", "sample", "--min", "-1", "--max", "1", "--denominator", "8"),
    ],
)
def test_byte_identical(argv):
    assert run(*argv) == run(*argv)


def test_exit_codes():
    assert run("cohomology", "4 1 -7", "8 1 -17/2")[0] == 2  # not integral
    assert run("correspond", "2 0 -1")[0] == 3
    assert run("stable", "2 0 -1")[0] == 3
    assert run("dlp", "value", "2/5", "--max-order", "1")[0] == 4
    assert run("oracle", "kronecker-hom", "3:1,1", "3:1,1", "--prime", "100")[0] == 5
    assert run("exceptional", "1/3")[0] == 2
    assert run("kronecker", "info", "3-1-1")[0] == 2


def test_error_produces_no_stdout(capsys):
    code, text = run("correspond", "2 0 -1", "--format", "json")
    assert code == 3 and text == ""
    assert "error:" in capsys.readouterr().err


def test_stable_plain():
    assert run("stable", "1 0 0") == (0, "exceptional (moduli = point)\n")
    assert run("stable", "1 0 -1")[1] == "positive-dimensional moduli\n"


def test_dlp_sample_rows():
    code, text = run("dlp", "sample", "--min", "0", "--max", "1", "--denominator", "64")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == 0 and len(rows) == 65
    by_mu = {Fraction(r["mu"]): Fraction(r["delta"]) for r in rows}
    assert by_mu[Fraction(0)] == 1 and by_mu[Fraction(1, 2)] == Fraction(5, 8)
    assert abs(float(rows[1]["mu_decimal"]) - 1 / 64) < 1e-12


def test_regions_csv():
    box = ("--mu-min", "0", "--mu-max", "1", "--delta-min", "1", "--delta-max", "2")
    code, text = run("regions", "4 4 -7", "--grid", "2", *box)
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == 0 and len(rows) == 9
    assert set(rows[0]) == {"mu", "mu_decimal", "delta", "delta_decimal", "region"}


def test_correspond_fields():
    code, text = run("correspond", "4 4 -7", "--format", "json")
    rec = json.loads(text)
    assert rec["nu_plus"] == {"mu": "0", "index": "0/2^0"}
    assert rec["nu_minus"]["mu"] == "-5"
    assert rec["sign_case"] == "PositiveChi"
    assert (rec["m1"], rec["m2"], rec["m3"]) == (5, 6, 3)
    assert rec["kronecker"] == {"N": 3, "b": 5, "a": 6}
    assert rec["u_plus"] == str(parse_character("4 1 -11/2"))
    code, text = run("correspond", "0 3 1", "--format", "json")
    assert json.loads(text)["nu_minus"] is None


def test_misc_subcommands():
    code, text = run("chern", "4 1 -7", "--serre-dual", "--format", "json")
    assert code == 0
    assert json.loads(text)["mu"] == "-13/4"
    rec = json.loads(run("chern", "4 4 -7", "--with", "1 0 0", "--format", "json")[1])
    assert rec["chi_tensor"] == "3"
    rec = json.loads(run("exceptional", "3/2^3", "--format", "json")[1])
    assert (rec["mu"], rec["rank"]) == ("12/29", 29)
    assert run("kronecker", "orbit", "3", "5")[1].split() == ["0", "1", "1", "3", "3", "8", "8", "21", "21", "55"]
    rec = json.loads(run("kronecker", "homext", "3:4,11", "3:1,4", "--format", "json")[1])
    assert (rec["hom"], rec["ext"]) == (1, 1)
    rec = json.loads(run("orthogonal", "4 4 -7", "8 1 -17/2", "--format", "json")[1])
    assert rec == {"orthogonal": False, "sufficient_multiple": 22, "region": "IIIb"}
    rec = json.loads(run("gg", "4 4 -7", "2 0 -6", "--format", "json")[1])
    assert set(rec) == {"hom", "tensor"}
    rec = json.loads(run("oracle", "delta", "1/8", "--max-order", "6", "--format", "json")[1])
    assert rec["delta"] == "105/128"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "p2tensor", "stable", "1 0 0"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout == "exceptional (moduli = point)\n"
