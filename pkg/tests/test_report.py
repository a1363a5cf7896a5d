import csv
from fractions import Fraction
import io
import json

import pytest

from gorlocus.fields import ModInt
from gorlocus.report import (
    FAIL,
    FINDING,
    PASS,
    Check,
    Report,
    emit,
    finding,
    jsonable,
    tables,
    write,
)


parametrize = pytest.mark.parametrize


def make_report():
    report = Report("suite", "1.0.0", {"field": "Q"})
    report.add(Check("profile A[4,7]", "catalog", [1, 4, 1, 1], [1, 4, 1, 1]))
    report.add(Check("dimensions", "families", 7, 6))
    report.add(finding("alpha", "nets", "1/3", "2", "both readings"))
    report.data["j"] = {"value": Fraction(1728, 5)}
    return report


@parametrize(
    "value, expected",
    [
        (Fraction(1, 2), "1/2"),
        (ModInt(3, 11), "3"),
        ((1, Fraction(2)), [1, "2"]),
        ({1: [Fraction(-1, 3)]}, {"1": ["-1/3"]}),
        (None, None),
    ],
)
def test_jsonable(value, expected):
    assert jsonable(value) == expected


def test_check_status():
    assert Check("a", "t", 1, 1).status == PASS
    assert Check("a", "t", 1, 2).status == FAIL
    assert finding("a", "t", 1, 2, "misprint").status == FINDING


def test_check_invalid_status():
    with pytest.raises(ValueError):
        Check("a", "t", 1, 1, "maybe")


def test_check_from_dict():
    check = Check("a", "t", [1], [1], detail="x")
    assert Check.from_dict(check.to_dict()) == check


def test_report_summary():
    report = make_report()
    assert report.summary() == {PASS: 1, FAIL: 1, FINDING: 1}
    assert report.failed
    assert report.exit_code == 1


def test_report_without_failures():
    report = Report("catalog")
    report.extend([Check("a", "t", 1, 1), finding("b", "t", 1, 2, "d")])
    assert not report.failed
    assert report.exit_code == 0


def test_emit_json():
    data = json.loads(emit(make_report(), "json").decode("utf-8"))
    assert data["command"] == "suite"
    assert data["summary"] == {"pass": 1, "fail": 1, "finding": 1}
    assert data["checks"][0]["observed"] == [1, 4, 1, 1]
    assert data["data"] == {"j": {"value": "1728/5"}}
    assert Report.from_dict(data).checks == make_report().checks


def test_emit_is_deterministic():
    assert emit(make_report()) == emit(make_report())


def test_emit_csv():
    lines = emit(make_report(), "csv").decode("utf-8").splitlines()
    assert lines[0] == "name,topic,status,expected,observed,detail"
    assert lines[2] == "dimensions,families,fail,7,6,"
    assert lines[4:] == ["", "table,value", "j,1728/5"]


def test_emit_csv_h0_table():
    report = Report("tangent", "1.0.0")
    report.data["tangent"] = [
        {"id": "A3[h={0},n=4]".format(h), "h0_proj": 63 if h < 4 else 68}
        for h in range(1, 7)
    ]
    rows = list(csv.reader(io.StringIO(emit(report, "csv").decode("utf-8"))))
    assert rows[2] == ["table", "id", "h0_proj"]
    table = [row for row in rows if row and row[0] == "tangent"]
    assert len(table) == 6
    assert table[0] == ["tangent", "A3[h=1,n=4]", "63"]
    assert table[5] == ["tangent", "A3[h=6,n=4]", "68"]


@parametrize(
    "data, expected",
    [
        ({}, {}),
        ({"degree": 9}, {"degree": [{"value": 9}]}),
        ({"net": {"label": "D"}}, {"net": [{"label": "D"}]}),
        ({"rows": [{"h": 1}, {"h": 2}]}, {"rows": [{"h": 1}, {"h": 2}]}),
        ({"ids": ["A[4,7]"]}, {"ids": [{"value": ["A[4,7]"]}]}),
    ],
)
def test_tables(data, expected):
    assert tables(data) == expected


def test_emit_text():
    text = emit(make_report(), "text").decode("utf-8")
    assert text.startswith("suite (1.0.0)\n")
    assert "[FAIL] families: dimensions: expected 7, observed 6" in text
    assert "    both readings" in text
    assert text.endswith("1 pass, 1 fail, 1 finding\n")


def test_emit_unknown_format():
    with pytest.raises(ValueError):
        emit(make_report(), "xml")


def test_write(tmp_path):
    path = tmp_path / "report.json"
    write(make_report(), str(path))
    assert path.read_bytes() == emit(make_report())
