"""Command-line surface.

Subcommands: construct, count, formula, oracle, verify, classify,
disintegrate, table.  Graph-valued commands read and write graph6 on
stdin/stdout.  Exit codes: 0 success, 1 usage error, 2 verification
failure (a violated invariant), 3 enumeration cap or budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import constructions
from .detect import classify_structure, count_cliques
from .formulas import (
    ParameterError,
    TheoremParams,
    h_value,
    katona_value,
    luo_value,
    predicted_ex,
    predicted_ex_con,
    threshold_case,
    turan_cliques,
)
from .graph6 import graph6_decode, graph6_encode
from .graphs import Graph, GraphError, primitive
from .oracle import (
    BudgetExceeded,
    CapExceeded,
    disintegrate,
    ex_oracle,
    verify_classification,
    verify_theorem,
)
from .reports import report_csv, report_json, write_report

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2
EXIT_CAP = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad flags; remap to the exit contract
    def error(self, message: str):
        raise UsageError(message)


def _parse_range(text: str) -> range:
    """Inclusive 'A..B' range, or a single integer."""
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
    else:
        lo = hi = int(text)
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _read_graph(args) -> Graph:
    text = args.graph6 if args.graph6 else sys.stdin.readline()
    if not text.strip():
        raise UsageError("no graph6 input (use --graph6 or stdin)")
    return graph6_decode(text)


def _require(args, names: list[str]) -> None:
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n for n in missing))


def _cmd_construct(args) -> int:
    fam = args.family
    if fam == "turan":
        _require(args, ["n", "p"])
        g = constructions.turan(args.n, args.p)
    elif fam == "h":
        _require(args, ["n", "m", "k"])
        g = constructions.h_extremal(args.n, args.m, args.k)
    elif fam == "h_minus":
        _require(args, ["n", "m", "k"])
        g = constructions.h_minus(args.n, args.m, args.k)
    elif fam == "double_star":
        _require(args, ["a", "b"])
        g = constructions.double_star(args.a, args.b)
    elif fam == "g1":
        _require(args, ["n", "k"])
        g = constructions.g1(args.n, args.k)
    elif fam == "g2":
        _require(args, ["n1", "n2", "k"])
        g = constructions.g2(args.n1, args.n2, args.k)
    elif fam == "g3":
        _require(args, ["n", "k", "block", "attach"])
        g = constructions.g3(args.n, args.k, graph6_decode(args.block), args.attach)
    elif fam in ("g4", "g5"):
        _require(args, ["n1", "n2"])
        builder = constructions.g4 if fam == "g4" else constructions.g5
        g = builder(args.n1, args.n2)
    elif fam == "turan_union":
        _require(args, ["n", "k", "m"])
        g = constructions.turan_union(args.n, args.k, args.m)
    elif fam in ("complete", "empty", "path", "cycle", "star"):
        _require(args, ["n"])
        g = primitive(fam, args.n)
    else:
        raise UsageError(f"unknown family {fam!r}")
    print(graph6_encode(g))
    return EXIT_OK


def _cmd_count(args) -> int:
    g = _read_graph(args)
    print(count_cliques(g, args.r))
    return EXIT_OK


def _case_line(k: int, m: int, r: int) -> str:
    case = threshold_case(k, m, r)
    num = turan_cliques(k - 1, m - 1, r)  # unreduced rhs over k-1
    return f"{case.tag} lhs={case.lhs} rhs={num}/{k - 1}"


def _cmd_formula(args) -> int:
    if args.case:
        _require(args, ["k", "m", "r"])
        print(_case_line(args.k, args.m, args.r))
        return EXIT_OK
    if args.katona:
        _require(args, ["n", "k", "m"])
        print(katona_value(args.n, args.k, args.m))
        return EXIT_OK
    if args.luo:
        _require(args, ["n", "k", "r"])
        print(luo_value(args.n, args.k, args.r))
        return EXIT_OK
    if args.predicted:
        _require(args, ["n", "k", "m", "r"])
        if args.connected:
            print(predicted_ex_con(args.n, args.k, args.m, args.r))
        else:
            value, exact = predicted_ex(args.n, args.k, args.m, args.r)
            print(f"{value} {'exact' if exact else 'upper_bound'}")
        return EXIT_OK
    _require(args, ["n", "k", "m", "r"])
    print(h_value(args.n, args.m, args.k, args.r))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    if args.k is None and args.m is None:
        raise UsageError("give at least one of --k / --m")
    result = ex_oracle(
        args.n,
        args.k,
        args.m,
        args.r,
        connected=args.connected,
        edge_maximal_only=args.edge_maximal,
        time_budget_s=args.budget,
    )
    print(f"value {result.value}")
    for code in result.extremal:
        print(f"extremal {code}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    _require(args, ["k", "m", "r", "n"])
    params = TheoremParams(args.k, args.m, args.r)
    scope = "connected" if args.connected else args.scope
    rows = verify_theorem(params, _parse_range(args.n), scope, args.budget)
    meta = {"command": " ".join(args.argv)}
    if args.out:
        write_report(rows, args.format, args.out, meta)
    elif args.format == "csv":
        sys.stdout.write(report_csv(rows))
    else:
        sys.stdout.write(report_json(rows, meta))
    if any(row.status == "MISMATCH" for row in rows):
        return EXIT_VERIFICATION
    return EXIT_OK


def _cmd_classify(args) -> int:
    _require(args, ["k", "m"])
    if args.exhaustive:
        report = verify_classification(
            args.k, args.m, _parse_range(args.n), args.budget
        )
        for tag in sorted(report["histogram"]):
            print(f"{tag} {report['histogram'][tag]}")
        print(f"total {report['total']}")
        if not report["ok"]:
            for code in report["unclassified"]:
                print(f"unclassified {code}")
            return EXIT_VERIFICATION
        return EXIT_OK
    g = _read_graph(args)
    outcome = classify_structure(g, args.k, args.m)
    print(outcome.class_tag.value)
    if outcome.class_tag.value == "Unclassified":
        return EXIT_VERIFICATION
    return EXIT_OK


def _cmd_disintegrate(args) -> int:
    g = _read_graph(args)
    trace = disintegrate(g, args.delta, args.preserve_connectivity)
    print("deleted " + " ".join(str(v) for v in trace.deleted))
    print("core " + graph6_encode(trace.core))
    print(f"core_size {trace.core_size}")
    print(f"stuck {'yes' if trace.stuck else 'no'}")
    return EXIT_OK


def _cmd_table(args) -> int:
    _require(args, ["k", "m", "r", "n"])
    lines = ["k,m,r,n,case,h_value,predicted,exact"]
    for k in _parse_range(args.k):
        for m in _parse_range(args.m):
            for r in _parse_range(args.r):
                try:
                    params = TheoremParams(k, m, r)
                except ParameterError:
                    continue
                case = threshold_case(k, m, r)
                for n in _parse_range(args.n):
                    if n < params.delta + 2:
                        continue
                    value = h_value(n, m, k, r)
                    pred, exact = predicted_ex(n, k, m, r)
                    lines.append(
                        f"{k},{m},{r},{n},{case.tag},{value},{pred},"
                        f"{'yes' if exact else 'no'}"
                    )
    out = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="pathclique")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, *flags):
        if "n" in flags:
            p.add_argument("--n", type=int)
        if "k" in flags:
            p.add_argument("--k", type=int)
        if "m" in flags:
            p.add_argument("--m", type=int)
        if "r" in flags:
            p.add_argument("--r", type=int)

    p = sub.add_parser("construct")
    p.add_argument("--family", required=True)
    add_common(p, "n", "k", "m")
    p.add_argument("--p", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--n1", type=int)
    p.add_argument("--n2", type=int)
    p.add_argument("--block")
    p.add_argument("--attach", type=int)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("count")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--graph6")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("formula")
    add_common(p, "n", "k", "m", "r")
    p.add_argument("--case", action="store_true")
    p.add_argument("--katona", action="store_true")
    p.add_argument("--luo", action="store_true")
    p.add_argument("--predicted", action="store_true")
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=_cmd_formula)

    p = sub.add_parser("oracle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    add_common(p, "k", "m")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--edge-maximal", action="store_true")
    p.add_argument("--budget", type=float)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("verify")
    add_common(p, "k", "m", "r")
    p.add_argument("--n")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--scope", choices=["connected", "all"], default="all")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.add_argument("--budget", type=float)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("classify")
    add_common(p, "k", "m")
    p.add_argument("--graph6")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--n", default="0..0")
    p.add_argument("--budget", type=float)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("disintegrate")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--preserve-connectivity", action="store_true")
    p.add_argument("--graph6")
    p.set_defaults(func=_cmd_disintegrate)

    p = sub.add_parser("table")
    p.add_argument("--k", required=True)
    p.add_argument("--m", required=True)
    p.add_argument("--r", required=True)
    p.add_argument("--n", required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_table)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        args.argv = ["pathclique"] + argv
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParameterError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapExceeded, BudgetExceeded) as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
