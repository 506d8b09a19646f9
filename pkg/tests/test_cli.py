"""Command-line surface: determinism, schemas, exit codes."""

import csv
import io
import json

from pfrac.cli import main
from pfrac.refdata import PSI_211


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_zeros_max_b_zero(capsys):
    code, out = run_cli(capsys, "zeros", "--max-b", "0")
    assert code == 0
    rows = [l for l in out.splitlines() if l and not l.startswith("#")]
    assert rows == ["A,B,re_w,im_w,residual"]


def test_zeros_max_b_one(capsys):
    code, out = run_cli(capsys, "zeros", "--max-b", "1")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out.split("\n", 1)[1])))
    assert len(rows) == 2
    assert sorted((int(r["A"]), int(r["B"])) for r in rows) == [(0, -1), (0, 1)]
    pair = {int(r["B"]): (float(r["re_w"]), float(r["im_w"])) for r in rows}
    assert pair[1][0] == pair[-1][0] and pair[1][1] == -pair[-1][1]


def test_zeros_max_b_three(capsys):
    # all admissible labels: sum over |B| <= 3 of 2 |B| = 12, conjugate-closed
    code, out = run_cli(capsys, "zeros", "--max-b", "3")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out.split("\n", 1)[1])))
    assert len(rows) == 12
    got = {(int(r["A"]), int(r["B"])): (float(r["re_w"]), float(r["im_w"])) for r in rows}
    re, im = got[(-1, -3)]
    assert abs(re - (-0.5459030969)) < 1e-9 and abs(im - 0.8812307423) < 1e-9
    assert all(float(r["residual"]) < 1e-20 for r in rows)


def test_psi_csv_matches_reference(capsys):
    code, out = run_cli(capsys, "psi", "--k", "211")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out.split("\n", 1)[1])))
    assert len(rows) == 210
    ref = dict(PSI_211)
    for r in rows:
        assert abs(float(r["psi"]) - ref[int(r["h"])]) < 5e-6
    assert int(rows[0]["D"]) == 1 and int(rows[1]["D"]) == 2


def test_psi_deterministic(capsys):
    _, out1 = run_cli(capsys, "psi", "--k", "101")
    _, out2 = run_cli(capsys, "psi", "--k", "101")
    assert out1 == out2


def test_identity_exit_zero(capsys):
    code, out = run_cli(capsys, "identity", "--n-max", "8", "--sigma-set=-2,0,1,3")
    assert code == 0
    assert "ok" in out


def test_table_a1_row_matches(capsys):
    code, out = run_cli(capsys, "--precision-bits", "320", "table", "a1", "--rows", "200")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out.split("\n", 1)[1])))
    assert rows[0]["N"] == "200"
    assert rows[0]["m1"].startswith("-33.868")
    assert rows[0]["m4"].startswith("-32.468")
    assert rows[0]["reference"].startswith("-32.469")


def test_table_header_has_caption(capsys):
    code, out = run_cli(capsys, "--precision-bits", "320", "table", "a1", "--rows", "200")
    assert out.splitlines()[0].startswith("#")


def test_expansion_json(capsys):
    code, out = run_cli(capsys, "expansion", "D", "--parity", "1")
    assert code == 0
    js = json.loads(out)
    assert js["kind"] == "familyD" and js["parity"] == 1
    assert js["base"] == {"A": 0, "B": -1, "w": js["base"]["w"]}


def test_residues_json(capsys):
    code, out = run_cli(capsys, "residues", "--n", "5", "--sigma", "2")
    assert code == 0
    rows = json.loads(out)
    assert rows[0]["order"] == 5 and rows[0]["k"] == 1
    assert len(rows) == 10  # |farey(5)|


def test_a1_sweep(capsys):
    code, out = run_cli(capsys, "a1", "--rows", "200", "--sigma", "1")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out.split("\n", 1)[1])))
    assert abs(float(rows[0]["a1"]) - (-32.4692)) < 1e-3


def test_out_file(tmp_path, capsys):
    target = tmp_path / "psi.csv"
    code, _ = run_cli(capsys, "--out", str(target), "psi", "--k", "11")
    assert code == 0
    text = target.read_text()
    assert text.startswith("#") and "h,psi,D" in text


def test_table_c121_row(capsys):
    # leading-term column and the family-sum reference both match print digits
    code, out = run_cli(capsys, "table", "c121", "--rows", "1001")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out.split("\n", 1)[1])))
    assert rows[0]["m1"].startswith("2.10996")
    assert rows[0]["reference"].startswith("2.11418")


def test_verify_exit_code_mapping(monkeypatch, capsys):
    from pfrac import acceptance

    def fake_run_all(report=print, seed=0):
        return [acceptance.CriterionResult(5, "x", False, "d", 0.0,
                                           acceptance.TABLE_MISMATCH)]

    monkeypatch.setattr(acceptance, "run_all", fake_run_all)
    code, out = run_cli(capsys, "verify")
    assert code == acceptance.TABLE_MISMATCH
    assert "0/1 criteria passed" in out
