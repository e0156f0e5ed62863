import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from commvar.chevalley import chevalley_algebra
from commvar.cli import main
from commvar.matrixreal import example_point


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_sp4_text(capsys):
    code, out, _ = run(capsys, "verify-paper", "--section", "4.2", "--m", "3")
    assert code == 0
    row = next(l for l in out.splitlines() if l.startswith("sp4/tspace-dim[m=3]"))
    assert row.split()[1:] == ["12", "12", "printed", "pass"]
    assert out.rstrip().endswith("0 failed")


def test_verify_named_and_alias_agree(capsys):
    _, a, _ = run(capsys, "verify-paper", "--section", "sp4", "--m", "3,4", "--format", "json")
    _, b, _ = run(capsys, "verify-paper", "--section", "4.2", "--m", "3,4", "--format", "json")
    assert a == b


def test_verify_g2_signs(capsys):
    code, out, _ = run(capsys, "verify-paper", "--section", "app2", "--format", "json")
    recs = json.loads(out)
    assert code == 0
    table = [r for r in recs if r["check_id"] == "g2-signs/table-entries"]
    assert table and table[0]["computed"] == 144


def test_verify_e7_chain(capsys):
    code, out, _ = run(capsys, "verify-paper", "--section", "4.5", "--format", "json")
    recs = {r["check_id"]: r["computed"] for r in json.loads(out)}
    assert code == 0
    chain = [recs["e7/" + k] for k in ("centralizer", "graded-centralizer-1", "graded-centralizer-2",
                                       "graded-centralizer-3", "graded-centralizer-4",
                                       "graded-centralizer-2+4", "S-bound", "C-bound", "reg-dim")]
    assert chain == [49, 0, 28, 0, 7, 35, 63, 147, 147]


def test_verify_json_round_trip_and_keys(capsys):
    _, out, _ = run(capsys, "verify-paper", "--section", "g2", "--format", "json")
    recs = json.loads(out)
    assert json.loads(json.dumps(recs, indent=1)) == recs
    assert json.dumps(recs, indent=1) + "\n" == out
    for r in recs:
        assert set(r) == {"check_id", "expected", "computed", "origin", "pass"}
        assert r["origin"] in {"printed", "derived", "trivial"}


def test_verify_csv(capsys):
    _, out, _ = run(capsys, "verify-paper", "--section", "sl4", "--m", "4,10", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert {r["pass"] for r in rows} == {"pass"}
    assert any(r["check_id"] == "sl4/tspace-dim[m=10]" and r["computed"] == "44" for r in rows)


def test_verify_output_is_deterministic(capsys):
    _, a, _ = run(capsys, "verify-paper", "--section", "so4s", "--format", "json")
    _, b, _ = run(capsys, "verify-paper", "--section", "so4s", "--format", "json")
    assert a == b


def test_verify_failure_exit_code(capsys, monkeypatch):
    from commvar import cli
    from commvar.reproduction import VerificationRecord
    monkeypatch.setattr(cli, "run_checks",
                        lambda g, m: [VerificationRecord("x", 1, 2, "printed")])
    code, out, _ = run(capsys, "verify-paper")
    assert code == 1 and "FAIL" in out


@pytest.mark.parametrize("argv,expected", [
    (("--algebra", "sl4", "--point", "sl4-guralnick", "--m", "4"), "20"),
    (("--algebra", "g2", "--point", "g2-triple", "--m", "3"), "17"),
    (("--algebra", "sp4", "--point", "sp4-triple", "--m", "6"), "21"),
    (("--algebra", "sp4", "--point", "sp4-triple"), "12"),
])
def test_tspace(capsys, argv, expected):
    code, out, _ = run(capsys, "tspace", *argv)
    assert code == 0 and out.strip() == expected


def test_tspace_basis_json(capsys):
    code, out, _ = run(capsys, "tspace", "--algebra", "sp4", "--point", "sp4-triple", "--basis",
                       "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["tspace_dim"] == 12 and len(doc["basis"]) == 12
    assert all(len(v) == 30 for v in doc["basis"])


def test_grading(capsys):
    code, out, _ = run(capsys, "grading", "--algebra", "e7", "--x", "e7-orbit-0200000", "--h", "e7-h",
                       "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["d"] == 4
    assert doc["pieces"] == {"-4": 7, "-3": 0, "-2": 35, "-1": 0, "0": 49, "1": 0, "2": 35,
                             "3": 0, "4": 7}
    assert doc["graded_centralizer"]["2"] == 28 and doc["centralizer_dim"] == 49
    _, text, _ = run(capsys, "grading", "--algebra", "e7", "--x", "e7-orbit-0200000", "--h", "e7-h")
    assert text.startswith("d = 4")


def test_adding_diagonals(capsys):
    code, out, _ = run(capsys, "adding-diagonals", "--ambient", "E8", "--sub", "E7", "--m", "3",
                       "--dim-cprime", "147")
    assert code == 0 and out.strip() == "264"
    code, _, err = run(capsys, "adding-diagonals", "--ambient", "A3", "--sub", "G2", "--m", "3",
                       "--dim-cprime", "1")
    assert code == 2 and "sub-diagram" in err


def test_centralizer_label(capsys):
    code, out, _ = run(capsys, "centralizer", "--algebra", "so20", "--x", "so4s-x1")
    assert code == 0 and out.strip() == "70"


def test_centralizer_element_file(capsys, tmp_path):
    ls = chevalley_algebra("G2")
    x = ls.x((1, 0)) + ls.x((0, 1))
    path = tmp_path / "x.json"
    path.write_text(json.dumps({"coefficients": [str(c) for c in x.coeffs]}))
    code, out, _ = run(capsys, "centralizer", "--algebra", "g2", "--element-file", str(path))
    assert code == 0 and out.strip() == "2"
    path.write_text(json.dumps([1, 2]))
    code, _, err = run(capsys, "centralizer", "--algebra", "g2", "--element-file", str(path))
    assert code == 2 and "14 coefficients" in err


@pytest.mark.parametrize("argv", [
    ("tspace", "--algebra", "sl4", "--point", "bogus"),
    ("tspace", "--algebra", "sp4", "--point", "sl4-guralnick"),
    ("tspace", "--algebra", "sl4", "--point", "sl4-guralnick", "--m", "2"),
    ("verify-paper", "--section", "9.9"),
    ("centralizer", "--algebra", "zz3", "--x", "e7-h"),
    ("centralizer", "--algebra", "g2"),
    ("dump",),
    ("dump", "--dump-roots", "Q7"),
    (),
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify-paper", "--m", "x,y"])
    assert exc.value.code == 2


def test_dump_roots(capsys):
    code, out, _ = run(capsys, "--dump-roots", "G2")
    doc = json.loads(out)
    assert code == 0 and doc["type"] == "G2" and len(doc["roots"]) == 12
    _, again, _ = run(capsys, "dump", "--dump-roots", "G2")
    assert again == out


def test_dump_constants(capsys):
    code, out, _ = run(capsys, "--dump-constants", "G2")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0] == ["i", "j", "k", "gamma"]
    ls = chevalley_algebra("G2")
    for i, j, k, g in rows[1:]:
        assert ls.structure(int(i), int(j))[int(k)] == Fraction(g)


def test_dump_matrix_point(capsys):
    code, out, _ = run(capsys, "--dump-point", "sp4-triple")
    mats = json.loads(out)
    p = example_point("sp4-triple")
    alg = p.algebra.matrix_algebra
    assert code == 0 and len(mats) == 3
    for m, x in zip(mats, p.tuple):
        assert [[Fraction(a, b) for a, b in row] for row in m] == alg.matrix(x).to_lists()


def test_dump_chevalley_point(capsys):
    code, out, _ = run(capsys, "--dump-point", "e7-h")
    doc = json.loads(out)
    assert code == 0 and len(doc["basis"]) == 133 and len(doc["elements"]) == 1


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "commvar", "tspace", "--algebra", "g2", "--point",
                          "g2-triple"], capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout.strip() == "17"
