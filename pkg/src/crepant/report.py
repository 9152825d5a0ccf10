"""Check-result records and report rendering shared by verifiers and the CLI.

Every verification in the package reduces to comparing two exact
coefficients.  A :class:`CheckResult` captures one such comparison; lists of
them serialize to JSON, CSV, or an aligned text table.  The JSON shape is a
list of objects ``{check, monomial, lhs, rhs, pass}``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .series import MONOMIAL_ONE, Monomial, TruncSeries

__all__ = ["CheckResult", "all_passed", "series_comparison", "render_report"]


@dataclass(frozen=True)
class CheckResult:
    """One compared coefficient: the check name, the monomial, both values."""

    check: str
    monomial: str
    lhs: str
    rhs: str
    passed: bool

    def to_jsonable(self) -> dict:
        return {
            "check": self.check,
            "monomial": self.monomial,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "pass": self.passed,
        }


def all_passed(results: Iterable[CheckResult]) -> bool:
    return all(r.passed for r in results)


def series_comparison(
    check: str,
    lhs: TruncSeries,
    rhs: TruncSeries,
    *,
    min_analytic: int = 0,
    prefix: Monomial = MONOMIAL_ONE,
) -> list[CheckResult]:
    """Compare two series coefficient by coefficient.

    Monomials whose analytic exponent is below ``min_analytic`` are excluded
    from the comparison; monomials that vanish on both sides are not
    reported.  ``prefix`` is prepended to the reported monomial labels (for
    bookkeeping variables that are implicit in the compared series).  If
    nothing remains to compare, a single trivially-passing record marks that
    the comparison ran.
    """
    results = []
    for mono in sorted(set(lhs.coeffs) | set(rhs.coeffs), key=Monomial.sort_key):
        if mono.analytic_exponent() < min_analytic:
            continue
        a = lhs.coefficient(mono)
        b = rhs.coefficient(mono)
        if not a and not b:
            continue
        results.append(
            CheckResult(check, (prefix * mono).key(), str(a), str(b), a == b)
        )
    if not results:
        results.append(CheckResult(check, prefix.key(), "0", "0", True))
    return results


def render_report(results: Sequence[CheckResult], fmt: str) -> str:
    """Render results as ``json``, ``csv``, or ``text``."""
    if fmt == "json":
        return json.dumps([r.to_jsonable() for r in results], indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["check", "monomial", "lhs", "rhs", "pass"])
        for r in results:
            writer.writerow([r.check, r.monomial, r.lhs, r.rhs, str(r.passed).lower()])
        return buf.getvalue()
    if fmt == "text":
        lines = []
        for r in results:
            verdict = "PASS" if r.passed else "FAIL"
            detail = r.lhs if r.passed else f"{r.lhs} != {r.rhs}"
            lines.append(f"{verdict} {r.check} {r.monomial} = {detail}")
        failed = sum(1 for r in results if not r.passed)
        lines.append(
            f"{len(results)} comparisons, {failed} failed"
            if failed
            else f"{len(results)} comparisons, all passed"
        )
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")
