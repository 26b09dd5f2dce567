import csv
import io
import json

import pytest

from legmat import closed_forms
from legmat.cli import main
from legmat.field import make_field
from legmat.harness import (
    CSV_COLUMNS, KNOWN_DISCREPANCY, Report, ScanConfig, Theorem, VerificationRecord,
    emit_report, enumerate_cases, records_from_csv, records_from_json, scan, verify_case,
)


def test_verify_dk_value():
    rec = verify_case(make_field(7), 3, Theorem.DK_VALUE)
    assert (rec.brute_value, rec.closed_value, rec.match_value) == (5, 5, True)
    assert rec.status() == "pass"


def test_verify_thalf_value_known_discrepancy():
    rec = verify_case(make_field(5), 2, "THALF_VALUE")
    assert (rec.brute_value, rec.closed_value, rec.match_value) == (3, 4, False)
    assert rec.note == KNOWN_DISCREPANCY
    assert rec.status() == "known"
    assert rec.status(strict=True) == "fail"


def test_verify_tk_singularity():
    rec = verify_case(make_field(5), 4, Theorem.TK_SINGULARITY)
    assert rec.brute_value == 0 and rec.closed_value == 0
    assert rec.match_value is True
    assert rec.note.startswith("witness")


def test_verify_symbol_records():
    rec = verify_case(make_field(7), 3, Theorem.DK_SYMBOL_ODDK)
    assert (rec.brute_symbol, rec.closed_symbol, rec.match_symbol) == (-1, -1, True)
    assert rec.closed_value is None and rec.match_value is None
    rec = verify_case(make_field(23), 11, Theorem.DHALF_SYMBOL)
    assert rec.closed_symbol == 1 and rec.match_symbol
    rec = verify_case(make_field(7), 3, Theorem.THALF_SYMBOL)
    assert rec.brute_symbol == rec.closed_symbol == 1


def test_not_applicable_is_skip():
    rec = verify_case(make_field(7), 2, Theorem.DK_SYMBOL_ODDK)
    assert rec.status() == "skip" and rec.note.startswith("not applicable")
    assert verify_case(make_field(7), 4, Theorem.DK_VALUE).status() == "skip"
    assert verify_case(make_field(9), 0, Theorem.GALLERY_SUN).status() == "skip"
    assert verify_case(make_field(5), 2, Theorem.GALLERY_WUWANG).status() == "skip"


def test_prime_power_dhalf_symbol_not_judged():
    rec = verify_case(make_field(9), 4, Theorem.DHALF_SYMBOL)
    assert rec.brute_symbol is not None and rec.closed_symbol is None
    assert rec.status() == "skip"


def test_gallery_and_classnum_records():
    assert verify_case(make_field(7), 0, Theorem.GALLERY_SUN).brute_value == 6
    sdp = verify_case(make_field(7), 3, Theorem.GALLERY_SDP)
    assert sdp.brute_value == 0 and sdp.match_value
    cn = verify_case(make_field(23), 0, Theorem.CLASSNUM)
    assert cn.brute_value == cn.closed_value == 3
    assert cn.brute_symbol == cn.closed_symbol == 1


def test_match_presence_invariant():
    report = scan(ScanConfig(q_max=31))
    for r in report.records:
        both_values = r.brute_value is not None and r.closed_value is not None
        both_symbols = r.brute_symbol is not None and r.closed_symbol is not None
        assert (r.match_value is not None) == both_values
        assert (r.match_symbol is not None) == both_symbols


def test_scan_dk_all_match():
    report = scan(ScanConfig(q_max=50, theorems=("DK_VALUE",)))
    assert report.records
    assert report.summary["DK_VALUE"]["fail"] == 0
    assert all(r.match_value for r in report.records)
    assert report.exit_code == 0


def test_scan_thalf_value_known():
    report = scan(ScanConfig(q_max=7, theorems=(Theorem.THALF_VALUE,)))
    assert [(r.q, r.k, r.note) for r in report.records] == [
        (5, 2, KNOWN_DISCREPANCY), (7, 3, KNOWN_DISCREPANCY)]
    assert report.exit_code == 0
    strict = scan(ScanConfig(q_max=7, theorems=(Theorem.THALF_VALUE,), strict=True))
    assert strict.exit_code == 1


def test_records_sorted_and_k_filter():
    cases = enumerate_cases(ScanConfig(q_max=40, k=3))
    assert cases == sorted(cases) and all(k == 3 for _, k, _ in cases)
    report = scan(ScanConfig(q_max=30))
    keys = [r.sort_key for r in report.records]
    assert keys == sorted(keys)


def test_scan_config_validation():
    with pytest.raises(ValueError):
        ScanConfig(q_max=2_000_000)
    with pytest.raises(ValueError):
        ScanConfig(q_max=10, format="xml")
    with pytest.raises(ValueError):
        ScanConfig(q_max=10, theorems=("NOPE",))


def test_csv_format():
    rec = verify_case(make_field(7), 3, Theorem.DK_VALUE)
    text = emit_report([rec], "csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert rows[1] == ["7", "7", "1", "3", "DK_VALUE", "5", "5", "", "", "true", "", ""]
    assert emit_report([], "csv") == ",".join(CSV_COLUMNS) + "\n"


def test_json_round_trip(tmp_path):
    records = scan(ScanConfig(q_max=13)).records
    path = tmp_path / "r.json"
    text = emit_report(records, "json", path)
    assert path.read_text() == text
    assert records_from_json(text) == records
    assert json.loads(text)["summary"]["DK_VALUE"]["pass"] > 0
    empty = json.loads(emit_report([], "json"))
    assert empty == {"records": [], "summary": {}}


def test_csv_round_trip():
    records = scan(ScanConfig(q_max=13)).records
    assert records_from_csv(emit_report(records, "csv")) == records


def test_parallel_matches_serial():
    cfg = dict(q_max=61, theorems=("DK_VALUE", "TK_VALUE", "THALF_VALUE", "GALLERY_SDP"))
    from legmat.harness import _brute
    _brute.cache_clear()
    a = emit_report(scan(ScanConfig(jobs=1, **cfg)).records)
    _brute.cache_clear()
    b = emit_report(scan(ScanConfig(jobs=3, **cfg)).records)
    assert a == b


def test_brute_side_ignores_closed_forms(monkeypatch):
    from legmat import harness
    cfg = ScanConfig(q_max=29, theorems=("DK_VALUE", "TK_VALUE", "TK_SINGULARITY", "THALF_VALUE"))
    honest = scan(cfg).records
    harness._brute.cache_clear()

    def bogus(*args, **kwargs):
        return closed_forms.ClosedFormResult(2, 1, 1, {})

    monkeypatch.setattr(closed_forms, "det_Dk_closed", bogus)
    monkeypatch.setattr(closed_forms, "det_Tk_closed", bogus)
    monkeypatch.setattr(closed_forms, "det_Thalf_closed", bogus)
    monkeypatch.setattr(closed_forms, "l_k", lambda *a: 12345)
    sabotaged = scan(cfg).records
    assert [r.brute_value for r in honest] == [r.brute_value for r in sabotaged]
    assert [r.closed_value for r in honest] != [r.closed_value for r in sabotaged]


def test_report_exit_code():
    ok = VerificationRecord(5, 5, 1, 2, "DK_VALUE", 1, 1)
    bad = VerificationRecord(5, 5, 1, 2, "TK_VALUE", 1, 2)
    assert Report([ok]).exit_code == 0
    assert Report([ok, bad]).exit_code == 1


# -- CLI -----------------------------------------------------------------------------

def test_cli_field(capsys):
    assert main(["field", "--q", "9"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["modulus"] == [1, 0, 1] and out["generator"] == [1, 1]


def test_cli_verify(capsys):
    assert main(["verify", "--q", "7", "--k", "3", "--theorem", "DK_VALUE"]) == 0
    assert json.loads(capsys.readouterr().out)["match_value"] is True


def test_cli_scan_csv(tmp_path, capsys):
    out = tmp_path / "scan.csv"
    code = main(["scan", "--q-max", "7", "--theorems", "THALF_VALUE", "--out", str(out)])
    assert code == 0
    rows = list(csv.DictReader(out.open()))
    assert [r["q"] for r in rows] == ["5", "7"]
    assert main(["scan", "--q-max", "7", "--theorems", "THALF_VALUE", "--strict",
                 "--out", str(out)]) == 1


def test_cli_scan_json_stdout(capsys):
    assert main(["scan", "--q-max", "13", "--theorems", "DK_VALUE,TK_VALUE", "--format", "json",
                 "--jobs", "2", "--k", "all"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert {r["theorem"] for r in payload["records"]} == {"DK_VALUE", "TK_VALUE"}


def test_cli_gallery_and_classnum(capsys):
    assert main(["gallery", "--which", "sun-recip", "--p", "7"]) == 0
    assert json.loads(capsys.readouterr().out)["det"] == 6
    assert main(["gallery", "--which", "wsn", "--q", "5"]) == 0
    assert json.loads(capsys.readouterr().out)["det"] == 3
    assert main(["gallery", "--which", "sdp", "--p", "7", "--d", "3"]) == 0
    assert json.loads(capsys.readouterr().out)["det"] == 0
    assert main(["gallery", "--which", "wu-wang", "--p", "7", "--k", "2"]) == 0
    assert main(["gallery", "--which", "luo-sun", "--p", "5", "--c", "1", "--d", "1"]) == 0
    capsys.readouterr()
    assert main(["classnum", "--p", "23"]) == 0
    assert json.loads(capsys.readouterr().out) == {
        "p": 23, "h_forms": 3, "h_dirichlet": 3, "mordell_ok": True}


@pytest.mark.parametrize("argv", [
    ["field", "--q", "15"],
    ["scan", "--q-max", "5", "--theorems", "BOGUS"],
    ["verify", "--q", "7"],
    ["classnum", "--p", "13"],
    ["gallery", "--which", "inv-squares", "--p", "5"],
    ["scan", "--q-max", "99999999"],
])
def test_cli_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(argv))
    assert exc.value.code == 2
