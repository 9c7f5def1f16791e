import json

import pytest

from hardy_embed.report import SweepReport, format_cell


def test_format_cell():
    assert format_cell(None) == ""
    assert format_cell(3) == "3"
    assert format_cell("inf") == "inf"
    assert format_cell(0.1) == "0.10000000000000001"  # 17 significant digits


def test_row_width_checked():
    with pytest.raises(ValueError):
        SweepReport(columns=("a", "b"), rows=((1,),))


def test_csv_round_trip(tmp_path):
    report = SweepReport(
        columns=("n", "value"),
        rows=((1, 0.5), (2, None)),
        metadata={"seed": 0},
    )
    path = tmp_path / "out.csv"
    report.write_csv(path)
    raw = path.read_bytes()
    assert raw == b"n,value\n1,0.5\n2,\n"
    assert b"\r" not in raw  # LF endings only


def test_json_structure(tmp_path):
    report = SweepReport(columns=("n", "value"), rows=((1, 0.5),), metadata={"seed": 3})
    path = tmp_path / "out.json"
    report.write_json(path)
    payload = json.loads(path.read_text())
    assert payload["metadata"] == {"seed": 3}
    assert payload["rows"] == [{"n": 1, "value": 0.5}]


def test_column_access():
    report = SweepReport(columns=("x", "y"), rows=((1, 2), (3, 4)))
    assert report.column("y") == [2, 4]
    with pytest.raises(ValueError):
        report.column("z")
