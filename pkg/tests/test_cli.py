import json

import pytest

from isogr.cli import EXIT_INPUT, EXIT_OK, EXIT_SCOPE, EXIT_TAINT, ScanResult, parse_range, render_table, run, scan
from isogr.bbw import GrassmannianSpace
from isogr.spectral import E1Page, HHReport, e1_page, terms_from_json


def out(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_range():
    assert parse_range("3..5") == [3, 4, 5]
    assert parse_range("4") == [4]


def test_classify_curious(capsys):
    code, text, _ = out(capsys, ["classify", "--family", "B", "--k", "3", "--n", "4"])
    assert code == EXIT_OK and "curious (OGr(3, 9))" in text
    code, _, _ = out(capsys, ["classify", "--family", "B", "--k", "3", "--n", "4", "--strict"])
    assert code == EXIT_SCOPE


def test_hh_example(capsys):
    code, text, _ = out(capsys, ["hh", "--group", "C4", "--k", "3", "--l", "3", "--format", "json"])
    assert code == EXIT_OK
    data = json.loads(text)
    cell = next(c for c in data["cells"] if (c["i"], c["j"]) == (1, 2))
    assert cell["status"] == "exact"
    assert cell["certified"] == [{"mult": 1, "weight_eps": "[1,1,1,1]", "weight_fund": "w4"}]
    assert HHReport.from_json(data).to_json() == data


def test_hh_refuses_curious(capsys):
    code, _, err = out(capsys, ["hh", "--group", "B4", "--k", "3", "--l", "3"])
    assert code == EXIT_SCOPE and "curious" in err


def test_parse_errors(capsys):
    assert out(capsys, ["e1", "--group", "C4"])[0] == EXIT_INPUT
    assert out(capsys, ["bogus"])[0] == EXIT_INPUT
    assert out(capsys, ["branch", "--lam", "[1,2]", "--target", "sp2"])[0] == EXIT_INPUT
    assert out(capsys, ["e1", "--group", "C4", "--family", "B", "--k", "3", "--j", "1"])[0] == EXIT_INPUT


def test_strict_taint(capsys):
    assert out(capsys, ["e1", "--group", "C4", "--k", "3", "--j", "2", "--strict"])[0] == EXIT_TAINT
    assert out(capsys, ["e1", "--group", "C4", "--k", "3", "--j", "2"])[0] == EXIT_OK


def test_e1_table(capsys):
    code, text, _ = out(capsys, ["e1", "--family", "C", "--n", "4", "--k", "3", "--j", "2"])
    rows = [line.split() for line in text.splitlines()[3:]]
    assert [r[:2] for r in rows if r[1] == "1"] == [["0", "1"]]
    assert "w4" in text and "[1,1,1,1]" in text


def test_empty_page_rendering():
    X = GrassmannianSpace("C", 4, 3)
    assert "all cells vanish" in render_table(E1Page(X, 40))


def test_json_and_table_agree(capsys):
    code, text, _ = out(capsys, ["e1", "--group", "C5", "--k", "3", "--j", "3", "--format", "json"])
    data = json.loads(text)
    page = E1Page.from_json(data)
    assert page == e1_page(GrassmannianSpace("C", 5, 3), 3)
    table = render_table(page)
    lines = [l.split(None, 2) for l in table.splitlines()[3:]]
    from_table = sorted((int(q), int(i), t) for q, i, t in lines)
    from_json = sorted(
        (c["q"], c["i"], f"{t['mult']} x {t['weight_eps']} = {t['weight_fund']}") for c in data["cells"] for t in c["terms"]
    )
    assert from_table == from_json


def test_bbw_branch_decompose(capsys):
    code, text, _ = out(capsys, ["bbw", "--group", "C4", "--k", "3", "--beta", "[2]", "--alpha", "[1,1]", "--format", "json"])
    assert json.loads(text)["degree"] == 1
    code, text, _ = out(capsys, ["branch", "--lam", "[1,1]", "--target", "sp2", "--format", "json"])
    assert {t["weight_eps"] for t in json.loads(text)["terms"]} == {"[1,1]", "[0,0]"}
    code, text, _ = out(capsys, ["decompose", "--group", "C4", "--k", "3", "--j", "2", "--format", "json"])
    assert code == EXIT_OK and len(json.loads(text)["summands"]) == 4


def test_scan_example(capsys, tmp_path):
    path = tmp_path / "scan.json"
    code, text, _ = out(capsys, ["scan", "--family", "C", "--k", "3..4", "--n", "5..6", "--lmax", "6", "--out", str(path)])
    assert code == EXIT_OK
    res = ScanResult.from_json(json.loads(path.read_text()))
    assert len(res.points) == 4
    assert all(p.verdict.verdict == "NOT_GLOBAL" and p.verdict.witnesses for p in res.points)


def test_scan_is_deterministic_across_workers():
    a = scan("C", [3, 4], [5, 6], 5, workers=1).dumps()
    b = scan("C", [3, 4], [5, 6], 5, workers=3).dumps()
    assert a == b


def test_scan_lists_every_point_once():
    res = scan("B", [3, 4], [4, 5], 4)
    assert [(p.k, p.n) for p in res.points] == [(3, 4), (4, 4), (3, 5), (4, 5)]
    assert res.points[0].verdict is None and "curious" in res.points[0].reason


def test_tampered_witness_rejected():
    data = scan("C", [3], [5], 4).to_json()
    data["points"][0]["verdict"]["witnesses"][0]["weight_eps"] = "[2,0,0,0,0]"
    with pytest.raises(ValueError):
        ScanResult.from_json(data)
