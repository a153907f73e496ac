import io
import json
import subprocess
import sys

import pytest

from howe3.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_check_superspecial():
    code, out, _ = run("check", "7", "3", "4")
    assert code == 0
    data = json.loads(out)
    assert data["field"] == {"p": 7, "k": 2, "modulus": [4, 0, 1]}
    assert data["superspecial"] and data["agrees"]
    assert data["count"]["N"] == 49 + 1 + 42 and data["verdict"] == "Maximal"


def test_domain_errors_exit_1():
    assert run("check", "7", "3", "3")[0] == 1  # singular
    assert run("check", "9", "3", "4")[0] == 1  # not prime
    assert run("check", "7", "3", "t^5")[0] == 1  # unparseable element
    assert run("table", "5", "20")[0] == 1
    assert run("twist", "97", "3", "4", "1", "4")[0] == 1  # field too large
    assert run("enumerate", "--p", "37", "--oracle")[0] == 1
    assert run("bogus")[0] == 1


def test_hasse_weil_violation_exit_2(monkeypatch):
    import howe3.point_count as pc
    monkeypatch.setattr(pc, "square_root_of_q", lambda ctx: 0)
    code, _, err = run("check", "7", "3", "4")
    assert code == 2 and "invariant violation" in err


def test_table_formats():
    code, md, _ = run("table", "11", "17")
    assert code == 0
    assert md.splitlines()[0] == "| G | 17 |"
    code, js, _ = run("table", "--pmin", "11", "--pmax", "17", "--format", "json")
    rows = json.loads(js)["rows"]
    assert [r["zero"] for r in rows] == [True, True, False]
    assert rows[0]["field"]["p"] == 11
    code, csv_out, _ = run("table", "11", "17", "csv")
    assert csv_out.splitlines()[0] == "p,C2xC2xC2,C2xD8,V8,C2xS4,total"
    assert len(csv_out.splitlines()) == 4


def test_output_is_byte_identical():
    assert run("enumerate", "--p", "23") == run("enumerate", "--p", "23")
    assert run("table", "17", "31", "json") == run("table", "17", "31", "json")


def test_enumerate_oracle_matches():
    s = json.loads(run("enumerate", "--p", "23")[1])
    b = json.loads(run("enumerate", "--p", "23", "--oracle")[1])
    assert [c["aut"] for c in s["classes"]] == [c["aut"] for c in b["classes"]]
    assert s["method"] == "structured" and b["method"] == "brute"


def test_howe_generic_and_hyperelliptic():
    code, out, _ = run("howe", "11", "3", "5", "6")  # mu^2 l2 = 4 != 3
    data = json.loads(out)
    assert code == 0 and data["genus_class"]["genus"] == 3
    assert data["hyperelliptic_mu"] is False and data["hyperelliptic_D"] is False
    # mu^2 l2 = 81 = 4 = l1 (mod 11)
    code, out, _ = run("howe", "11", "4", "9", "3")
    data = json.loads(out)
    assert data["hyperelliptic_mu"] is True and data["hyperelliptic_D"] is True
    code, out, _ = run("howe", "11", "3", "5", "3")
    assert json.loads(out)["lambda3"] is None


def test_twist_command():
    code, out, _ = run("twist", "7", "3", "4", "3*t", "1")
    data = json.loads(out)
    assert code == 0 and data["agrees"]
    code, out, _ = run("twist", "7", "3", "4", "1", "2")
    data = json.loads(out)
    assert data["q"] == 7 ** 4 and data["eps_square"] and data["verdict"] == "Minimal"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "howe3", "check", "7", "3", "3"], capture_output=True, text=True)
    assert proc.returncode == 1 and "error" in proc.stderr
