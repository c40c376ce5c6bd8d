"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from . import diagrams, ktheory, verify
from . import singularities as sing
from .errors import DomainError, UnknownNameError
from .exactalg import DEFAULT_CYCLOTOMIC_BOUND, IntMat, char_poly, cyclotomic_factorization

GRAM_KINDS = ("that", "divisor", "quiver-k3", "ep")


@dataclass(frozen=True)
class CliConfig:
    output_format: str = "text"
    cyclotomic_bound: int = DEFAULT_CYCLOTOMIC_BOUND
    check_filter: str | None = None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strangedual",
        description="Lattices and K-theory of Arnold's 14 exceptional unimodal singularities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="print the table of 14 singularities")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("show", help="details and lattice invariants for one singularity")
    p.add_argument("name")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run the verification checks")
    p.add_argument("--json", action="store_true")
    p.add_argument("--check", choices=verify.CHECK_IDS)
    p.add_argument("--dmax", type=_positive_int, default=DEFAULT_CYCLOTOMIC_BOUND)

    p = sub.add_parser("gram", help="print a Gram matrix")
    p.add_argument("kind", choices=GRAM_KINDS)
    p.add_argument("triple", type=int, nargs=3, metavar="N")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    return parser


def _fmt_triple(t) -> str:
    return "(" + ",".join(map(str, t)) + ")"


def cmd_list(records: Sequence[sing.SingularityRecord], as_json: bool) -> str:
    if as_json:
        return sing.table_json(records)
    lines = [f"{'name':<5} {'weights':<12} {'h':>3}  {'delta':<9} {'gamma':<9} dual"]
    for r in records:
        lines.append(
            f"{r.name:<5} {_fmt_triple(r.ws.weights):<12} {r.ws.h:>3}  "
            f"{_fmt_triple(r.dolgachev):<9} {_fmt_triple(r.gabrielov):<9} {r.dual}"
        )
    return "\n".join(lines)


def _show_data(rec: sing.SingularityRecord, d_max: int) -> dict:
    cox = ktheory.coxeter_element(ktheory.that_lattice(rec.gabrielov))
    cp = char_poly(cox)
    return {
        **rec.as_dict(),
        "self_dual": rec.dual == rec.name,
        "milnor_number": sing.milnor_number(rec),
        "that_delta": ktheory.invariants_of(ktheory.that_lattice(rec.dolgachev)).as_dict(),
        "that_gamma": ktheory.invariants_of(ktheory.that_lattice(rec.gabrielov)).as_dict(),
        "coxeter": {
            "order": ktheory.matrix_order(cox, 2 * rec.ws.h),
            "char_poly": str(cp),
            "cyclotomic_orders": cyclotomic_factorization(cp, d_max),
        },
    }


def cmd_show(rec: sing.SingularityRecord, as_json: bool, d_max: int) -> str:
    data = _show_data(rec, d_max)
    if as_json:
        return json.dumps(data)
    dual = "self-dual" if data["self_dual"] else f"dual {rec.dual}"
    lines = [
        f"{rec.name}: weights {_fmt_triple(rec.ws.weights)}, h={rec.ws.h}, {dual}",
        f"  delta={_fmt_triple(rec.dolgachev)} gamma={_fmt_triple(rec.gabrielov)} mu={data['milnor_number']}",
    ]
    for key in ("that_delta", "that_gamma"):
        inv = data[key]
        lines.append(
            f"  {key}: rank {inv['rank']}, det {inv['det']}, "
            f"signature {_fmt_triple(inv['signature'])}, invariant factors {inv['invariant_factors']}"
        )
    cox = data["coxeter"]
    lines.append(f"  Coxeter element of T-hat(gamma): order {cox['order']}, "
                 f"cyclotomic orders {cox['cyclotomic_orders']}")
    lines.append(f"  char poly: {cox['char_poly']}")
    return "\n".join(lines)


def cmd_verify(records: Sequence[sing.SingularityRecord], config: CliConfig) -> tuple[str, int]:
    report = verify.run_all(records, config.cyclotomic_bound, config.check_filter)
    if config.output_format == "json":
        text = report.to_json()
    else:
        lines = [f"{r.check_id:<3} {r.subject:<8} {r.status:<7} {r.details}" for r in report.results]
        s = report.summary
        lines.append(f"summary: {s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped")
        text = "\n".join(lines)
    return text, 1 if report.failures else 0


def gram_matrix(kind: str, triple: Sequence[int]) -> IntMat:
    if kind == "that":
        return diagrams.gram_from_marked_graph(diagrams.that_diagram(*triple))
    if kind == "divisor":
        return diagrams.gram_from_marked_graph(diagrams.divisor_graph(*triple))
    if kind == "quiver-k3":
        return ktheory.quiver_k3_gram(triple)
    if kind == "ep":
        vectors, ctx = ktheory.ep_collection(triple)
        return ktheory.pairing_gram(vectors, ctx)
    raise DomainError(f"unknown Gram kind {kind!r}")


def cmd_gram(kind: str, triple: Sequence[int], fmt: str) -> str:
    m = gram_matrix(kind, triple)
    return diagrams.matrix_json(m) if fmt == "json" else diagrams.matrix_csv(m).rstrip("\n")


def main(argv: Sequence[str] | None = None, *, records: Sequence[sing.SingularityRecord] | None = None) -> int:
    """Run one subcommand; ``records`` replaces the built-in table (used for fault injection)."""
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    records = sing.table() if records is None else list(records)
    try:
        if args.command == "list":
            out, code = cmd_list(records, args.json), 0
        elif args.command == "show":
            out, code = cmd_show(sing.lookup(args.name, records), args.json, DEFAULT_CYCLOTOMIC_BOUND), 0
        elif args.command == "verify":
            config = CliConfig("json" if args.json else "text", args.dmax, args.check)
            out, code = cmd_verify(records, config)
        else:
            out, code = cmd_gram(args.kind, args.triple, args.format), 0
    except (UnknownNameError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(out)
    return code


def run() -> None:
    sys.exit(main())
