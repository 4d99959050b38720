from models.models import CheckResult, VerificationReport
from utils.formatting import Table, render_csv, render_report, render_text


def test_arrow_style():
    table = Table("triangle-pairs", ("pair", "triangle"), (("01", "256"), ("02", "134")), style="arrow")
    assert render_text(table) == "01 → 256\n02 → 134\n"
    assert table.cell(0, 1) == "256"


def test_words_style():
    table = Table("fano-lines", ("a", "b", "c"), ((1, 2, 3), (1, 4, 5)), style="words")
    assert render_text(table) == "1 2 3\n1 4 5\n"


def test_grid_keeps_leading_zeros():
    table = Table("cubes", ("name", "bottom"), (("C1", "0123"),))
    text = render_text(table)
    assert "0123" in text
    assert text.splitlines()[0].split() == ["name", "bottom"]


def test_csv():
    table = Table("x", ("a", "b"), ((1, "+"),))
    assert render_csv(table) == "a,b\n1,+\n"


def test_table_document():
    payload = Table("x", ("a",), ((1,),)).to_dict()
    assert (payload["schema"], payload["kind"]) == (1, "table")
    assert payload["rows"] == [[1]]


def test_report_summary():
    report = VerificationReport("fano", [
        CheckResult("lines", 7, 7, True),
        CheckResult("triangles", 28, 27, False),
    ])
    text = render_report(report)
    assert text.startswith("== fano: 2 checks, 1 failed")
    assert "PASS" in text and "FAIL" in text


def test_check_document_orders_sets():
    result = CheckResult("sizes", {3, 1, 2}, {2, 1, 3}, True, seconds=1.23456)
    assert result.to_dict()["actual"] == [1, 2, 3]
    assert "seconds" not in result.to_dict()
    assert result.to_dict(timings=True)["seconds"] == 1.235
