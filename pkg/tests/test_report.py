import json
from fractions import Fraction

import pytest

from crepant.report import CheckResult, all_passed, render_report, series_comparison
from crepant.series import Caps, Monomial, TruncSeries, VarId

Z = VarId.analytic("z")
CAPS = Caps(order=6, max_winding=4, max_boundary=4, max_degree=6)


def zpow(m, value):
    return TruncSeries(CAPS, {Monomial.build({Z: m}): Fraction(value)}, Z)


def test_series_comparison_flags_mismatch():
    lhs = zpow(0, 1) + zpow(2, 3)
    rhs = zpow(0, 1) + zpow(2, 5)
    results = series_comparison("demo", lhs, rhs)
    assert [r.passed for r in results] == [True, False]
    assert results[1].monomial == "z^2"
    assert results[1].lhs == "3" and results[1].rhs == "5"
    assert not all_passed(results)


def test_series_comparison_min_analytic_skips_constants():
    lhs = zpow(0, 1)
    rhs = zpow(0, 2)
    results = series_comparison("demo", lhs, rhs, min_analytic=1)
    # the constants differ but are excluded; the sentinel row records the run
    assert len(results) == 1 and results[0].passed


def test_series_comparison_prefix_labels():
    w = Monomial.build({VarId.winding("orbifold", 2): 1})
    results = series_comparison("demo", zpow(1, 1), zpow(1, 1), prefix=w)
    assert results[0].monomial == "z*w2"


def test_render_json_shape():
    results = [CheckResult("demo", "z", "1", "1", True)]
    payload = json.loads(render_report(results, "json"))
    assert payload == [
        {"check": "demo", "monomial": "z", "lhs": "1", "rhs": "1", "pass": True}
    ]


def test_render_csv_and_text():
    results = [
        CheckResult("demo", "z", "1", "1", True),
        CheckResult("demo", "z^2", "1", "2", False),
    ]
    csv_text = render_report(results, "csv")
    lines = csv_text.strip().splitlines()
    assert lines[0] == "check,monomial,lhs,rhs,pass"
    assert lines[2].endswith("false")
    text = render_report(results, "text")
    assert "FAIL demo z^2 = 1 != 2" in text
    assert text.strip().endswith("2 comparisons, 1 failed")


def test_render_unknown_format():
    with pytest.raises(ValueError):
        render_report([], "yaml")
