import json
import subprocess
import sys

import pytest

from mahonia.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_stat_word_and_perm(capsys):
    assert run(capsys, "stat", "ls", "12134243221435322") == (0, "27", "")
    assert run(capsys, "stat", "L", "12134243221435322")[1] == "[1, 2, 4, 5, 14]"
    assert run(capsys, "stat", "BAST", "3214")[1] == "5"
    assert run(capsys, "stat", "2_31", "2341")[1] == "2"


def test_stat_omp(capsys):
    assert run(capsys, "stat", "maj", "124|35|12")[1] == "5"
    assert run(capsys, "stat", "inv", "23|12|1")[1] == "5"


def test_dist_outputs(capsys):
    assert run(capsys, "dist", "--family", "URG", "--n", "3", "--k", "2", "--stat", "bmajMIL")[1] == "2*q + 3*q^2 + q^3"
    code, out, _ = run(capsys, "dist", "--family", "RG", "--n", "3", "--k", "2", "--stat", "ls", "--json")
    assert json.loads(out) == {"stats": ["ls"], "coeffs": [0, 2, 1]}
    code, out, _ = run(capsys, "dist", "--family", "RG", "--n", "3", "--stat", "bk,ls", "--csv")
    lines = out.splitlines()
    assert lines[0] == "bk,ls,count"
    assert sum(int(line.rsplit(",", 1)[1]) for line in lines[1:]) == 5


def test_verify_single_and_json(capsys):
    code, out, _ = run(capsys, "verify", "table-1")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "verify", "eq-2.2", "--max-n", "6", "--json")
    data = json.loads(out)
    assert code == 0 and data["pass"] is True and data["range"] == "n<=6"


def test_verify_all_parallel(capsys):
    code, out, _ = run(capsys, "verify", "all", "--max-n", "4", "--jobs", "2")
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines() if not line.startswith(" "))


def test_verify_unknown_id(capsys):
    code, _, err = run(capsys, "verify", "thm-0")
    assert code == 2 and "unknown check" in err


def test_table1(capsys):
    code, out, _ = run(capsys, "table1", "--json")
    rows = json.loads(out)
    assert len(rows) == 15 and rows[3] == {"perm": "2341", "Db": [1, 2], "Id": [1], "MAJ": 3, "BAST": 1}
    code, out, _ = run(capsys, "table1")
    assert out.splitlines()[0].split() == ["perm", "Db", "Id", "MAJ", "BAST"]


@pytest.mark.parametrize("name,obj,want", [
    ("xi", "12134243221435322", "12134244322325211"),
    ("xi-inv", "12134244322325211", "12134243221435322"),
    ("phi-rgf", "12131435564341474", "12232435466263673"),
    ("gamma", "12345433673573", "12345334675733"),
    ("gamma-inv", "12345334675733", "12345433673573"),
    ("psi", "4312", "4132"),
    ("eta", "121", "122"),
    ("eta-hat", "23|12|1", "1|23|12"),
])
def test_bij(capsys, name, obj, want):
    assert run(capsys, "bij", name, obj) == (0, want, "")


def test_bij_trace(capsys):
    code, out, _ = run(capsys, "bij", "gamma", "12345433673573", "--trace")
    data = json.loads(out)
    swaps = [(r["index"], r["swap_type"]) for r in data["trace"]["rounds"] if r["swap_type"]]
    assert swaps == [(6, 1), (7, 1), (11, 2), (12, 2)]


def test_bad_input_exit_code(capsys):
    code, _, err = run(capsys, "bij", "xi", "2211")
    assert code == 2 and err.startswith("mahonia: error:")


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "mahonia", "stat", "pro", "12134243221435322"],
                       capture_output=True, text=True, check=True)
    assert r.stdout.strip() == "11"
