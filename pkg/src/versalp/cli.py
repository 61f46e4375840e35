"""Command line reports for the versal characteristic-p computations.

Subcommands: homology, homotopy, basis, steenrod, thh, taq, equivalences,
hz-compare, collision, verify.  Output formats: table (default), json,
csv; json and csv are byte-deterministic.  Exit status: 0 on success, 1 on
usage errors, 2 when a mathematical verification fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import versal
from .dyer_lashof import enumerate_generators
from .free_algebra import MonomialBasis, enumerate_monomials
from .power_series import TruncatedSeries
from .primes import is_prime
from .steenrod_dual import milnor_generator_degrees

SUBCOMMANDS = (
    "homology",
    "homotopy",
    "basis",
    "steenrod",
    "thh",
    "taq",
    "equivalences",
    "hz-compare",
    "collision",
    "verify",
)


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; this tool reserves 2
    for verification failures, so usage errors exit 1 instead."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="versalp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True
    for name in SUBCOMMANDS:
        sp = sub.add_parser(name)
        if name == "collision":
            sp.add_argument("--prime", type=int, default=2)
        else:
            sp.add_argument("--prime", type=int, required=True)
        sp.add_argument(
            "--max-degree",
            type=int,
            default=None,
            help="truncation degree, default 4(p-1)",
        )
        sp.add_argument("--format", choices=("table", "json", "csv"), default="table")
        sp.add_argument("--output", default=None, help="path, default stdout")
    return parser


def _series_strings(series: TruncatedSeries) -> list[str]:
    return [str(c) for c in series.coefficients]


def _basis_payload(basis: MonomialBasis) -> list[dict]:
    return [
        {"degree": d, "monomials": [m.render() for m in bucket]}
        for d, bucket in enumerate(basis.buckets)
    ]


def _series_table(series: TruncatedSeries) -> list[str]:
    lines = ["degree  coefficient"]
    for d, c in enumerate(series.coefficients):
        lines.append(f"{d:>6}  {c}")
    return lines


def _basis_table(basis: MonomialBasis) -> list[str]:
    lines = ["degree  monomials"]
    for d, bucket in enumerate(basis.buckets):
        cell = ", ".join(m.render() for m in bucket) if bucket else "-"
        lines.append(f"{d:>6}  {cell}")
    return lines


def _csv_text(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _series_csv(series: TruncatedSeries) -> str:
    return _csv_text(
        ("degree", "coefficient"),
        [(d, c) for d, c in enumerate(series.coefficients)],
    )


def _basis_csv(basis: MonomialBasis) -> str:
    rows = []
    for d, bucket in enumerate(basis.buckets):
        for m in bucket:
            rows.append((d, m.render()))
    return _csv_text(("degree", "monomial"), rows)


def _render(report: dict, fmt: str) -> str:
    """``report`` carries the json envelope plus private render hints."""
    if fmt == "json":
        envelope = {k: v for k, v in report.items() if not k.startswith("_")}
        return json.dumps(envelope, indent=2) + "\n"
    if fmt == "csv":
        return report["_csv"]
    return "\n".join(report["_table"]) + "\n"


def _series_report(kind: str, p: int, n: int, series: TruncatedSeries,
                   assumptions: list[str]) -> dict:
    return {
        "prime": p,
        "max_degree": n,
        "kind": kind,
        "series": _series_strings(series),
        "assumptions": assumptions,
        "_table": _series_table(series),
        "_csv": _series_csv(series),
    }


def _scalar_report(kind: str, p: int, n: int, name: str, value: int,
                   assumptions: list[str]) -> dict:
    return {
        "prime": p,
        "max_degree": n,
        "kind": kind,
        "series": [str(value)],
        "assumptions": assumptions,
        "_table": [str(value)],
        "_csv": _csv_text(("name", "value"), [(name, value)]),
    }


def _basis_report(kind: str, p: int, n: int, series: TruncatedSeries,
                  basis: MonomialBasis) -> dict:
    return {
        "prime": p,
        "max_degree": n,
        "kind": kind,
        "series": _series_strings(series),
        "basis": _basis_payload(basis),
        "assumptions": [],
        "_table": _basis_table(basis),
        "_csv": _basis_csv(basis),
    }


def _run_command(command: str, p: int, n: int, fmt: str) -> dict:
    if command == "homology":
        return _series_report("homology", p, n, versal.homology_series(p, n), [])

    if command == "steenrod":
        gens = milnor_generator_degrees(p, n)
        return _basis_report(
            "steenrod", p, n, versal.steenrod_series(p, n), enumerate_monomials(gens, n)
        )

    if command == "basis":
        gens = enumerate_generators(p, 1, n)
        return _basis_report(
            "basis", p, n, versal.homology_series(p, n), enumerate_monomials(gens, n)
        )

    if command == "homotopy":
        report = versal.homotopy_series(p, n)
        out = _series_report(
            "homotopy", p, n, report.homotopy_series, [versal.SPLITTING_ASSUMPTION]
        )
        out["verdicts"] = [
            {"name": "gap", "passed": report.gap_verified},
            {"name": "tensor_identity", "passed": True},
            {"name": "nonnegativity", "passed": True},
        ]
        first = report.first_positive_nonzero_degree
        out["_table"] = out["_table"] + [
            "",
            f"# gap_verified: {str(report.gap_verified).lower()}",
            f"# first_positive_nonzero_degree: {first if first is not None else '-'}",
        ]
        if not report.gap_verified:
            raise versal.VerificationError(
                f"gap check failed for p={p} through degree {n}"
            )
        return out

    if command == "thh":
        return _series_report("thh", p, n, versal.thh_homology_series(p, n), [])

    if command == "taq":
        taq = versal.taq_dimensions(p, n)
        shift = versal.cotangent_series(p, n)
        out = _series_report("taq", p, n, taq, [versal.SPLITTING_ASSUMPTION])
        out["cotangent_series"] = _series_strings(shift)
        out["_table"] = out["_table"] + [
            "",
            "# cotangent_series: " + ",".join(_series_strings(shift)),
        ]
        return out

    if command == "equivalences":
        count = versal.equivalence_count(p)
        return _scalar_report("equivalences", p, n, "equivalence_count", count, [])

    if command == "hz-compare":
        degree = versal.hz_quotient_comparison(p, n)
        return _scalar_report(
            "hz-compare", p, n, "first_difference", degree, [versal.TOR_ASSUMPTION]
        )

    if command == "collision":
        witness = versal.structure_map_collision()
        sources = [m.render() for m in witness.source_monomials]
        basis = enumerate_monomials(enumerate_generators(2, 1, 4), 4)
        table = [f"source  {s}" for s in sources] + [f"image   {witness.image}"]
        rows = [(f"source_{i + 1}", s) for i, s in enumerate(sources)]
        rows.append(("image", witness.image))
        return {
            "prime": 2,
            "max_degree": 4,
            "kind": "collision",
            "series": _series_strings(versal.homology_series(2, 4)),
            "basis": _basis_payload(basis),
            "witness": {"sources": sources, "image": witness.image},
            "assumptions": [],
            "_table": table,
            "_csv": _csv_text(("name", "value"), rows),
        }

    if command == "verify":
        verdicts = versal.verification_battery(p, n)
        table = []
        for v in verdicts:
            status = "PASS" if v.passed else "FAIL"
            line = f"{status}  {v.name}"
            if v.detail:
                line += f"  ({v.detail})"
            table.append(line)
        report = {
            "prime": p,
            "max_degree": n,
            "kind": "verify",
            "series": _series_strings(versal.homology_series(p, n)),
            "verdicts": [
                {"name": v.name, "passed": v.passed, "detail": v.detail}
                for v in verdicts
            ],
            "assumptions": [versal.SPLITTING_ASSUMPTION],
            "_table": table,
            "_csv": _csv_text(
                ("check", "passed"),
                [(v.name, str(v.passed).lower()) for v in verdicts],
            ),
        }
        report["_failed"] = any(not v.passed for v in verdicts)
        return report

    raise AssertionError(f"unhandled command {command}")


def _emit(text: str, path: "str | None") -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def main(argv: "Sequence[str] | None" = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    if not is_prime(args.prime):
        parser.error(f"--prime must be prime, got {args.prime}")
    if args.command == "collision" and args.prime != 2:
        parser.error("collision is a p=2 report")
    if args.max_degree is None:
        n = 4 if args.command == "collision" else 4 * (args.prime - 1)
    else:
        if args.max_degree < 0:
            parser.error(f"--max-degree must be >= 0, got {args.max_degree}")
        n = 4 if args.command == "collision" else args.max_degree
    if args.command == "hz-compare" and n < 2 * args.prime - 2:
        parser.error(
            f"hz-compare needs --max-degree >= {2 * args.prime - 2} at p={args.prime}"
        )

    try:
        report = _run_command(args.command, args.prime, n, args.format)
    except versal.VerificationError as exc:
        print(f"versalp: verification failed: {exc}", file=sys.stderr)
        return 2

    _emit(_render(report, args.format), args.output)
    return 2 if report.get("_failed") else 0


if __name__ == "__main__":
    sys.exit(main())
