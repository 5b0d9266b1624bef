import csv
import io
import json
import subprocess
import sys

import pytest

from invariant_lab.carmichael import CarmichaelRecord
from invariant_lab.cli import main
from invariant_lab.euler import EulerClassification, SubgroupTable
from invariant_lab.invariants import CompositeCertificate, InvariantReport


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_invariants_paper_style_golden():
    code, text = run("invariants", "15", "--paper-style")
    assert code == 0
    assert text.splitlines() == [
        "m = 15",
        "invariants: 1, 6, 10, 15",
        "anti-invariants: 14, 9, 5, 0",
        "tuples: (0, 1), (5, 6), (9, 10), (14, 15)",
        "nontrivial: 6, 10",
    ]


def test_invariants_canonical():
    code, text = run("invariants", "7")
    assert code == 0
    assert "invariants: 0, 1" in text.splitlines()


def test_invariants_json():
    code, text = run("invariants", "105", "--json")
    env = json.loads(text)
    assert code == 0
    assert env["command"] == "invariants" and env["modulus"] == 105 and env["style"] == "json"
    assert len(env["payload"]["invariants"]) == 8
    rep = InvariantReport.from_dict(env["payload"])
    assert rep.as_dict() == env["payload"]


def test_invariants_json_paper_style():
    _, text = run("invariants", "15", "--json", "--paper-style")
    assert json.loads(text)["payload"]["paper"]["invariants"] == [1, 6, 10, 15]


def test_usage_errors():
    assert run("invariants", "fifteen")[0] == 2
    assert run("invariants", "0")[0] == 2
    assert run()[0] == 2
    assert run("euler", "105", "--a", "105")[0] == 2
    assert run("table", "36", "6")[0] == 2
    assert run("carmichael", "check", "13")[0] == 2
    assert run("invariants", str(2**64))[0] == 2


def test_euler_all_rows():
    code, text = run("euler", "105", "--all")
    assert code == 0
    rows = {}
    for line in text.splitlines()[2:]:
        support, inv, _ = map(int, line.split())
        rows[support] = inv
    assert rows[1] == 1
    assert {rows[s] for s in (3, 5, 7, 15, 21, 35)} == {36, 85, 91, 15, 21, 70}
    assert [rows[s] for s in (3, 5, 7, 15, 21, 35)] == [36, 85, 91, 15, 21, 70]


def test_euler_single():
    assert run("euler", "105", "--a", "2")[1].strip().endswith("= 1")
    assert run("euler", "105", "--a", "35")[1].strip().endswith("= 70")
    env = json.loads(run("euler", "105", "--a", "35", "--json")[1])
    assert env["payload"] == {"a": 35, "phi": 48, "support": 35, "invariant": 70}


def test_euler_json_round_trip():
    env = json.loads(run("euler", "105", "--json")[1])
    assert EulerClassification.from_dict(env["payload"]).as_dict() == env["payload"]


def test_primality_exit_codes():
    code, text = run("primality", "15")
    assert code == 0 and "witness 6" in text and "3 x 5" in text
    code, text = run("primality", "13")
    assert code == 1 and text.strip() == "prime-or-prime-power"
    assert run("primality", "49")[0] == 1
    env = json.loads(run("primality", "15", "--json")[1])
    assert CompositeCertificate.from_dict(env["payload"]["certificate"]).factor_b == 5


def test_primality_bound_exit(monkeypatch):
    monkeypatch.setenv("INVARIANT_LAB_ORACLE_BOUND", "1000")
    assert run("primality", "1001")[0] == 3
    assert run("carmichael", "scan", "2", "5000")[0] == 3


def test_table_golden():
    code, text = run("table", "35", "5")
    lines = text.splitlines()
    assert code == 0
    first = [int(v) for v in lines[2].split("|")[1].split()]
    assert first == [25, 15, 5, 30, 20, 10]
    assert "I=15 A=20" in lines


def test_table_15_3():
    code, text = run("table", "15", "3")
    body = [l for l in text.splitlines() if "|" in l][1:]
    assert code == 0 and len(body) == 4
    assert "I=6 A=9" in text
    env = json.loads(run("table", "15", "3", "--json")[1])
    assert SubgroupTable.from_dict(env["payload"]).as_dict() == env["payload"]


def test_carmichael_check():
    code, text = run("carmichael", "check", "561")
    assert code == 0
    assert "omega: 80" in text and "ratio: 7" in text
    code, text = run("carmichael", "check", "15")
    assert code == 0
    assert "ratio: non-integral (14/4)" in text and "korselt: false" in text


def test_carmichael_scan_csv():
    code, text = run("carmichael", "scan", "2", "2000", "--csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert code == 0
    assert rows[0] == ["m", "factorization", "omega", "ratio", "korselt", "fermat_verified"]
    assert rows[1:] == [
        ["561", "3*11*17", "80", "7", "true", "true"],
        ["1105", "5*13*17", "48", "23", "true", "true"],
        ["1729", "7*13*19", "36", "48", "true", "true"],
    ]


def test_carmichael_scan_json_round_trip():
    env = json.loads(run("carmichael", "scan", "2", "2000", "--json")[1])
    assert env["range"] == [2, 2000]
    for rec in env["payload"]["records"]:
        assert CarmichaelRecord.from_dict(rec).as_dict() == rec


def test_omega_command():
    code, text = run("omega", "8")
    assert code == 0 and "omega: 4" in text and "lambda: 2" in text


@pytest.mark.parametrize(
    "argv",
    [["invariants", "360", "--json"], ["euler", "105"], ["table", "35", "5"],
     ["carmichael", "scan", "2", "3000", "--csv"], ["omega", "561", "--json"]],
)
def test_deterministic_output(argv):
    assert run(*argv) == run(*argv)


def test_module_entry_point_streams():
    proc = subprocess.run(
        [sys.executable, "-m", "invariant_lab", "carmichael", "scan", "2", "20001", "--csv", "--progress"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout.splitlines()[1].startswith("561,")
    assert "scanning" in proc.stderr and "scanning" not in proc.stdout
