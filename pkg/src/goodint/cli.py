"""Command-line interface.

Usage:
    goodint classify --a 2 --b 1 --l 3
    goodint classify --a 2 --b 1 --from 1 --to 20 --format csv
    goodint group --factors 2,4 orders
    goodint group --factors 3,5 classes --q 2
    goodint fixedset --q 2 --group 3 --inner E --method all
    goodint hullavg --p 2 --nu 1 --k 1 --group 3 --inner E --verify
    goodint hullscan --p 2 --nu 1 --k 0,1 --max-order 15 --format csv
    goodint verify --suite small

JSON output is an envelope {schema_version, command, inputs, results,
warnings}.  Exact rationals are rendered "num/den" next to a 6-digit decimal.

CSV columns:
    classify   l,class,witness,ord,v2ord
    group      d,count
    hullscan   group,m,p,nu,k,inner,average,decimal,fixed_set_size,lower_bound,upper_bound,is_zero,error

Exit codes: 0 success, 2 usage or domain error, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import abelian, counting, goodness, hull, sweeps
from .abelian import AbelianGroup
from .arith import v2

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3

ENVELOPE_SCHEMA = {
    "type": "object",
    "required": ["schema_version", "command", "inputs", "results", "warnings"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "command": {"type": "string"},
        "inputs": {"type": "object"},
        "results": {},
        "warnings": {"type": "array", "items": {"type": "string"}},
    },
}

CLASSIFY_COLUMNS = ["l", "class", "witness", "ord", "v2ord"]
GROUP_COLUMNS = ["d", "count"]
SCAN_COLUMNS = [
    "group", "m", "p", "nu", "k", "inner", "average", "decimal",
    "fixed_set_size", "lower_bound", "upper_bound", "is_zero", "error",
]


EPILOG = f"""CSV columns:
    classify   {",".join(CLASSIFY_COLUMNS)}
    group      {",".join(GROUP_COLUMNS)}
    hullscan   {",".join(SCAN_COLUMNS)}

exit codes: 0 success, 2 usage or domain error, 3 verification mismatch
"""


class CommandError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def decimal_str(x: Fraction) -> str:
    return f"{float(x):.6g}"


def rational(x: Fraction) -> dict:
    return {"fraction": fraction_str(x), "decimal": decimal_str(x)}


def envelope(command: str, inputs: dict, results, warnings=()) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
        "warnings": list(warnings),
    }


def _emit_json(doc: dict, out) -> None:
    json.dump(doc, out, indent=2)
    out.write("\n")


def _emit_csv(columns: list[str], rows: list[dict], out) -> None:
    writer = csv.DictWriter(out, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({c: _csv_cell(row.get(c)) for c in columns})


def _csv_cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return value


def _parse_group(literal: str) -> AbelianGroup:
    try:
        return AbelianGroup.parse(literal)
    except ValueError as exc:
        raise CommandError(str(exc)) from None


def _verdict_row(l: int, v: goodness.GoodnessVerdict) -> dict:
    return {
        "l": l,
        "class": v.cls.value,
        "witness": v.witness,
        "witness_odd": v.witness_odd,
        "witness_even": v.witness_even,
        "ord": v.order_ratio,
        "v2ord": None if v.order_ratio is None else v2(v.order_ratio),
    }


def cmd_classify(args, out) -> int:
    try:
        goodness.GoodnessQuery(args.a, args.b, 1)
    except ValueError as exc:
        raise CommandError(str(exc)) from None
    if args.l is not None:
        if args.lo is not None or args.hi is not None:
            raise CommandError("use either --l or --from/--to")
        ls = [args.l]
    elif args.lo is not None and args.hi is not None:
        ls = list(range(args.lo, args.hi + 1))
    else:
        raise CommandError("give --l or both --from and --to")
    if not ls or ls[0] < 1:
        raise CommandError("l must be a positive integer")
    rows = [_verdict_row(l, goodness.classify(args.a, args.b, l)) for l in ls]
    if args.format == "csv":
        _emit_csv(CLASSIFY_COLUMNS, rows, out)
        return EXIT_OK
    inputs = {"a": args.a, "b": args.b}
    if args.l is not None:
        inputs["l"] = args.l
        results = rows[0]
    else:
        inputs.update({"from": args.lo, "to": args.hi})
        results = rows
    _emit_json(envelope("classify", inputs, results), out)
    return EXIT_OK


def _class_payload(c: abelian.CycClass) -> dict:
    return {
        "representative": list(c.representative),
        "size": c.size,
        "members": [list(x) for x in c.members],
    }


def cmd_group(args, out) -> int:
    group = _parse_group(args.factors)
    inputs = {"factors": group.literal, "view": args.view}
    if args.view == "orders":
        table = abelian.order_table(group)
        rows = [{"d": d, "count": n} for d, n in table.items()]
        if args.format == "csv":
            _emit_csv(GROUP_COLUMNS, rows, out)
            return EXIT_OK
        results = {
            "order": group.order,
            "exponent": group.exponent,
            "cyclic_orders": list(group.cyclic_orders),
            "orders": {str(d): n for d, n in table.items()},
        }
    else:
        if args.q is None:
            raise CommandError("the classes view needs --q")
        inputs["q"] = args.q
        try:
            euclid = abelian.classify_euclidean(group, args.q)
            hermit = abelian.classify_hermitian(group, args.q)
        except ValueError as exc:
            raise CommandError(str(exc)) from None
        results = {
            "euclidean": {
                "r_I": euclid.r_self,
                "r_II": euclid.r_pair,
                "type_I": [_class_payload(c) for c in euclid.self_paired],
                "type_II_pairs": [[_class_payload(a), _class_payload(b)] for a, b in euclid.pairs],
            },
            "hermitian": {
                "r_I'": hermit.r_self,
                "r_II'": hermit.r_pair,
                "type_I'": [_class_payload(c) for c in hermit.self_paired],
                "type_II'_pairs": [[_class_payload(a), _class_payload(b)] for a, b in hermit.pairs],
            },
        }
    _emit_json(envelope("group", inputs, results), out)
    return EXIT_OK


_FIXED_METHODS = {
    ("E", "direct"): abelian.q_set_direct,
    ("E", "sum"): counting.q_size_sum,
    ("E", "closed"): counting.q_size_closed,
    ("H", "direct"): abelian.r_set_direct,
    ("H", "sum"): counting.r_size_sum,
    ("H", "closed"): counting.r_size_closed,
}


def cmd_fixedset(args, out) -> int:
    group = _parse_group(args.group)
    methods = ["direct", "sum", "closed"] if args.method == "all" else [args.method]
    values = {}
    try:
        for method in methods:
            values[method] = _FIXED_METHODS[args.inner, method](group, args.q)
        bounds = (counting.bounds_q if args.inner == "E" else counting.bounds_r)(group, args.q)
    except ValueError as exc:
        raise CommandError(str(exc)) from None
    agree = len(set(values.values())) == 1
    results = {
        "set": "Q" if args.inner == "E" else "R",
        "values": values,
        "size": next(iter(values.values())) if agree else None,
        "agree": agree,
        "bounds": {"lower": bounds[0], "upper": bounds[1]},
    }
    inputs = {"q": args.q, "group": group.literal, "inner": args.inner, "method": args.method}
    warnings = [] if agree else [f"methods disagree: {values}"]
    _emit_json(envelope("fixedset", inputs, results, warnings), out)
    return EXIT_OK if agree else EXIT_MISMATCH


def summary_payload(s: hull.HullSummary) -> dict:
    return {
        "average": rational(s.average),
        "lower_bound": rational(s.lower_bound),
        "upper_bound": rational(s.upper_bound),
        "is_zero": s.is_zero,
        "m": s.m,
        "pk": s.pk,
        "fixed_set_size": s.fixed_set_size,
        "delta_p": s.delta_p,
        "inner_product": s.inner_product.value,
    }


def cmd_hullavg(args, out) -> int:
    group = _parse_group(args.group)
    try:
        summary = hull.avg_hull(group, args.p, args.nu, args.k, args.inner)
        oracle = hull.avg_hull_bruteforce(group, args.p, args.nu, args.k, args.inner) if args.verify else None
    except ValueError as exc:
        raise CommandError(str(exc)) from None
    results = summary_payload(summary)
    warnings = []
    code = EXIT_OK
    if args.verify:
        results["verified"] = oracle == summary.average
        results["enumeration_average"] = rational(oracle)
        if oracle != summary.average:
            warnings.append("closed form and enumeration disagree")
            code = EXIT_MISMATCH
    inputs = {"p": args.p, "nu": args.nu, "k": args.k, "group": group.literal, "inner": args.inner, "verify": args.verify}
    _emit_json(envelope("hullavg", inputs, results, warnings), out)
    return code


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_hullscan(args, out) -> int:
    if args.groups:
        groups = [_parse_group(lit) for lit in args.groups.split(";")]
    else:
        # only groups the field can carry; explicit lists report bad cells inline
        groups = list(abelian.groups_up_to(args.max_order, args.p))
    inner = ["E", "H"] if args.inner == "both" else [args.inner]
    table = hull.scan_table(groups, [(args.p, args.nu, k) for k in args.k], inner)
    rows = []
    for r in table:
        row = {
            "group": r.group.literal, "m": r.group.order, "p": r.p, "nu": r.nu,
            "k": r.k, "inner": r.inner_product.value, "error": r.error,
        }
        if r.summary is not None:
            s = r.summary
            row.update({
                "average": fraction_str(s.average), "decimal": decimal_str(s.average),
                "fixed_set_size": s.fixed_set_size, "lower_bound": fraction_str(s.lower_bound),
                "upper_bound": fraction_str(s.upper_bound), "is_zero": s.is_zero,
            })
        rows.append(row)
    if args.format == "csv":
        _emit_csv(SCAN_COLUMNS, rows, out)
        return EXIT_OK
    inputs = {
        "p": args.p, "nu": args.nu, "k": args.k, "inner": args.inner,
        "groups": [g.literal for g in groups],
    }
    warnings = [f"{r['group']} k={r['k']} {r['inner']}: {r['error']}" for r in rows if r["error"]]
    _emit_json(envelope("hullscan", inputs, rows, warnings), out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    results = sweeps.run_suite(args.suite)
    for r in results:
        print(r.line(), file=sys.stderr)
    payload = {
        "passed": all(r.passed for r in results),
        "checks": [r.as_dict() for r in results],
    }
    _emit_json(envelope("verify", {"suite": args.suite}, payload), out)
    return EXIT_OK if payload["passed"] else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="goodint",
        description="Good integers, cyclotomic classes and average hull dimensions of abelian codes.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify l as bad / oddly-good / evenly-good / both")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--l", type=int)
    p.add_argument("--from", dest="lo", type=int)
    p.add_argument("--to", dest="hi", type=int)
    p.add_argument("--format", choices=["json", "csv"], default="json", help="csv columns: " + ",".join(CLASSIFY_COLUMNS))
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("group", help="element-order table or cyclotomic classes of a group")
    p.add_argument("--factors", required=True, help='cyclic orders, e.g. "2,4,3"')
    p.add_argument("view", nargs="?", choices=["orders", "classes"], default="orders")
    p.add_argument("--q", type=int, help="multiplier for the classes view")
    p.add_argument("--format", choices=["json", "csv"], default="json", help="csv (orders view): d,count")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("fixedset", help="|Q_q(A)| (E) or |R_{q^2}(A)| (H)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--group", required=True)
    p.add_argument("--inner", choices=["E", "H"], default="E")
    p.add_argument("--method", choices=["direct", "sum", "closed", "all"], default="closed")
    p.set_defaults(func=cmd_fixedset)

    p = sub.add_parser("hullavg", help="average hull dimension of abelian codes in F_q[A x Z_{p^k}]")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--nu", type=int, default=1)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--group", required=True)
    p.add_argument("--inner", choices=["E", "H"], default="E")
    p.add_argument("--verify", action="store_true", help="also average over all codes and require equality")
    p.set_defaults(func=cmd_hullavg)

    p = sub.add_parser("hullscan", help="table of average hull dimensions")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--nu", type=int, default=1)
    p.add_argument("--k", type=_int_list, default=[0])
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--groups", help='";"-separated group literals, e.g. "3;5;2,2"')
    src.add_argument("--max-order", type=int, help="all abelian groups of order up to this, coprime to p")
    p.add_argument("--inner", choices=["E", "H", "both"], default="E")
    p.add_argument("--format", choices=["json", "csv"], default="json", help="csv columns: " + ",".join(SCAN_COLUMNS))
    p.set_defaults(func=cmd_hullscan)

    p = sub.add_parser("verify", help="run the consistency sweeps")
    p.add_argument("--suite", choices=sorted(sweeps.SUITES), default="small")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CommandError as exc:
        print(f"goodint {args.command}: error: {exc}", file=sys.stderr)
        return exc.code


def run(argv=None) -> tuple[int, str]:
    """Run the CLI in-process and capture stdout; handy for tests."""
    buf = io.StringIO()
    try:
        code = main(argv, buf)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
