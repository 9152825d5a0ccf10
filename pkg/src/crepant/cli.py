"""Command-line front end.

Four commands share the exact-arithmetic core:

* ``hodge``: table of the hyperelliptic Hodge integrals by genus, Chern
  degree, and psi powers,
* ``gtable``: the integer coefficient grid of powers of the disk-counting
  series,
* ``potential``: truncated expansion of either chart's open potential,
* ``check``: one named verification suite (or ``all``), reported row by row.

Every number is printed as an exact fraction; nothing is floating point.
Reports are deterministic: the same flags always produce the same bytes
(the gluing suite draws its sample weights from a fixed default seed).
Exit status is 0 when everything passed, 1 when any check failed, and 2 on
a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .checks import CHECK_NAMES, DEFAULT_SEED, run_check
from .hodge import hodge_closed_form
from .potentials import (
    open_potential_orbifold,
    open_potential_resolution,
    partitions,
)
from .report import all_passed, render_report
from .series import Caps, TruncSeries
from .vertexedge import g_power_table

__all__ = ["main"]

FORMATS = ("text", "json", "csv")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crepant",
        description="Exact coefficient tables and verification suites.",
    )
    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--format", choices=FORMATS, default="text", help="report format")
    out.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument("--max-winding", type=_positive, default=4, help="largest winding number")
    caps.add_argument("--max-boundary", type=_positive, default=4, help="most boundary components")
    caps.add_argument("--order", type=_positive, default=12, help="largest analytic power kept")
    caps.add_argument("--degree", type=_positive, default=6, help="largest degree-variable power")
    caps.add_argument("--max-tree-edges", type=_positive, default=4, help="largest tree size")

    sub = parser.add_subparsers(dest="command", required=True)

    hodge = sub.add_parser("hodge", parents=[out], help="Hodge integral table")
    hodge.add_argument("--max-genus", type=_positive, default=5, help="largest genus")

    gtable = sub.add_parser("gtable", parents=[out], help="power-series coefficient grid")
    gtable.add_argument("--n", type=_positive, default=10, help="largest power of the series")
    gtable.add_argument("--upto", type=_non_negative, default=9, help="largest coefficient index")

    potential = sub.add_parser("potential", parents=[out, caps], help="open potential expansion")
    potential.add_argument("chart", choices=("resolution", "orbifold"))

    check = sub.add_parser("check", parents=[out, caps], help="run a verification suite")
    check.add_argument("name", choices=CHECK_NAMES)
    check.add_argument("--max-genus", type=_positive, default=5, help="largest genus (tphi)")
    check.add_argument("--max-d", type=_positive, default=None, help="largest degree (gluing suites)")
    check.add_argument("--max-k", type=_positive, default=4, help="largest framing twist (gluing)")
    check.add_argument("--seed", type=int, default=DEFAULT_SEED, help="weight-sampling seed (gluing)")
    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _hodge_rows(max_genus: int) -> list[tuple[int, int, tuple[int, ...], str]]:
    rows = []
    for g in range(1, max_genus + 1):
        for i in range(1, 6):
            for powers in partitions(i - 1):
                if len(powers) > 2 * g + 2:
                    continue
                rows.append((g, i, powers, str(hodge_closed_form(g, i, powers))))
    return rows


def _run_hodge(args: argparse.Namespace) -> int:
    rows = _hodge_rows(args.max_genus)
    if args.format == "json":
        text = json.dumps(
            [
                {"g": g, "i": i, "powers": list(powers), "value": value}
                for g, i, powers, value in rows
            ],
            indent=2,
        )
    elif args.format == "csv":
        text = _csv_text(
            ("g", "i", "powers", "value"),
            [(str(g), str(i), ",".join(map(str, p)), v) for g, i, p, v in rows],
        )
    else:
        text = "\n".join(
            f"L({g},{i};{','.join(map(str, powers))}) = {value}"
            for g, i, powers, value in rows
        )
    _emit(text, args.out)
    return 0


def _run_gtable(args: argparse.Namespace) -> int:
    table = g_power_table(args.n, args.upto)
    header = ["n"] + [f"x^{k}" for k in range(args.upto + 1)]
    if args.format == "json":
        text = json.dumps(
            [{"n": n, "coefficients": row} for n, row in enumerate(table, start=1)],
            indent=2,
        )
    elif args.format == "csv":
        text = _csv_text(header, [[str(n)] + [str(c) for c in row] for n, row in enumerate(table, 1)])
    else:
        widths = [
            max(len(header[j]), max(len(str(row[j - 1])) for row in table) if j else len(str(len(table))))
            for j in range(args.upto + 2)
        ]
        lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
        for n, row in enumerate(table, start=1):
            cells = [str(n)] + [str(c) for c in row]
            lines.append("  ".join(c.rjust(w) for c, w in zip(cells, widths)))
        text = "\n".join(lines)
    _emit(text, args.out)
    return 0


def _series_text(series: TruncSeries) -> str:
    lines = [f"{mono} = {coeff}" for mono, coeff in series.items()]
    return "\n".join(lines) if lines else "0"


def _run_potential(args: argparse.Namespace) -> int:
    caps = Caps(
        order=args.order + 1,
        max_winding=args.max_winding,
        max_boundary=args.max_boundary,
        max_degree=args.degree,
    )
    if args.chart == "resolution":
        series = open_potential_resolution(args.max_winding, args.max_boundary).to_series(caps)
    else:
        series = open_potential_orbifold(caps)
    if args.format == "json":
        text = json.dumps(series.to_jsonable(), indent=2)
    elif args.format == "csv":
        text = _csv_text(("monomial", "re", "im"), series.to_csv_rows())
    else:
        text = _series_text(series)
    _emit(text, args.out)
    return 0


def _run_check(args: argparse.Namespace) -> int:
    results = run_check(
        args.name,
        max_genus=args.max_genus,
        max_d=args.max_d,
        max_k=args.max_k,
        seed=args.seed,
        max_winding=args.max_winding,
        max_boundary=args.max_boundary,
        order=args.order,
        degree=args.degree,
        max_tree_edges=args.max_tree_edges,
    )
    _emit(render_report(results, args.format), args.out)
    return 0 if all_passed(results) else 1


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    runners = {
        "hodge": _run_hodge,
        "gtable": _run_gtable,
        "potential": _run_potential,
        "check": _run_check,
    }
    return runners[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
