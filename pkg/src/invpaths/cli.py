"""Command-line interface: counting, enumeration, maps, series, verification.

Every command is deterministic.  Payloads go to stdout, diagnostics to
stderr; the exit code is 0 on success, 1 when a verification fails, and 2
on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bijections, formulas, fpaths, harness, inversions, paths, series
from .errors import InvpathsError
from .inversions import InversionSequence, stats


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _read_input(args) -> str:
    if args.input is not None:
        return args.input
    return sys.stdin.read().strip()


def _cmd_count(args) -> int:
    if args.tau is None:
        value = formulas.count_102_rank(args.n, args.t)
    else:
        value = formulas.count_pair_rank(args.tau, args.n, args.t)
    if not args.oracle:
        _emit({"value": value})
        return 0
    avoid = ["102"] if args.tau is None else ["102", args.tau]
    oracle_value = sum(
        1 for e in inversions.enumerate_is(args.n, avoid) if stats(e).rank == args.t
    )
    _emit(
        {
            "query": {"tau": args.tau, "n": args.n, "t": args.t},
            "value": value,
            "oracle_value": oracle_value,
            "match": value == oracle_value,
        }
    )
    return 0 if value == oracle_value else 1


def _cmd_table(args) -> int:
    rows = []
    if args.tau is None:
        header = ["n"] + [f"t{t}" for t in range(args.n_max)]
        for n in range(1, args.n_max + 1):
            row = [str(n)]
            row += [str(formulas.count_102_rank(n, t)) for t in range(n)]
            row += [""] * (args.n_max - n)
            rows.append(row)
    else:
        width = max(args.n_max - 1, 0)
        header = ["n"] + [f"t{t}" for t in range(width)]
        for n in range(2, args.n_max + 1):
            row = [str(n)]
            row += [str(formulas.count_pair_rank(args.tau, n, t)) for t in range(n - 1)]
            row += [""] * (width - (n - 1))
            rows.append(row)
    if args.format == "json":
        _emit({"header": header, "rows": rows})
    else:
        print(",".join(header))
        for row in rows:
            print(",".join(row))
    return 0


def _cmd_enumerate(args) -> int:
    kind = args.kind
    if kind == "is":
        avoid = [p for p in (args.avoid or "").split(",") if p]
        for e in inversions.enumerate_is(args.n, avoid):
            print(json.dumps(e.to_list(), separators=(",", ":")))
        return 0
    if kind == "lf":
        for q in fpaths.enumerate_lf(args.n):
            print(q.to_json())
        return 0
    enumerator = {
        "uvd": paths.enumerate_uvd,
        "schroeder": paths.enumerate_schroeder,
        "dyck": paths.enumerate_dyck,
    }[kind]
    for p in enumerator(args.n):
        if args.coords:
            print(json.dumps(p.points(), separators=(",", ":")))
        else:
            print(p.word)
    return 0


def _parse_sequence(text: str) -> InversionSequence:
    return InversionSequence(tuple(json.loads(text)))


def _cmd_map(args) -> int:
    raw = _read_input(args)
    verb = args.verb
    if verb == "phi":
        out = bijections.phi(fpaths.LabeledFPath.from_json(raw))
        print(json.dumps(out.to_list(), separators=(",", ":")))
    elif verb == "phi-inv":
        print(bijections.phi_inv(_parse_sequence(raw)).to_json())
    elif verb == "psi":
        out = bijections.psi(fpaths.LabeledFPath.from_json(raw))
        print(json.dumps(out.points(), separators=(",", ":")) if args.coords else out.word)
    elif verb == "psi-inv":
        print(bijections.psi_inv(paths.UvdPath(raw)).to_json())
    elif verb == "m":
        print(paths.schroeder_to_uvd(paths.SchroederPath(raw)).word)
    elif verb == "m-inv":
        print(paths.uvd_to_schroeder(paths.UvdPath(raw)).word)
    elif verb == "sp-to-is":
        out = bijections.schroeder_to_is(paths.SchroederPath(raw))
        print(json.dumps(out.to_list(), separators=(",", ":")))
    elif verb == "is-to-sp":
        print(bijections.is_to_schroeder(_parse_sequence(raw)).word)
    elif verb == "tiling":
        print(bijections.is_to_tiling(_parse_sequence(raw)).word)
    elif verb == "tiling-inv":
        out = bijections.tiling_to_is(raw, args.n)
        print(json.dumps(out.to_list(), separators=(",", ":")))
    else:  # pragma: no cover - argparse restricts choices
        raise AssertionError(verb)
    return 0


def _cmd_series(args) -> int:
    if args.action == "verify":
        report = series.verify_identity(args.id, order=args.order, u_order=args.u_order)
        _emit(
            {
                "identity": report.identity.value,
                "order": report.order,
                "u_order": report.u_order,
                "holds": report.holds,
                "first_mismatch": report.first_mismatch,
            }
        )
        return 0 if report.holds else 1
    builders = {
        "A": series.a_series,
        "D": series.d_series,
        "D0": series.d0_series,
        "E": series.e_series,
        "C": series.catalan_series,
        "A0": series.a0_series,
        "B0": series.b0_series,
        "H0": series.h0_series,
    }
    s = builders[args.id](args.order)
    for n in range(s.order + 1):
        c = s.coeff(n)
        value = c.numerator if c.denominator == 1 else c
        print(f"{n + args.offset} {value}")
    return 0


def _cmd_verify(args) -> int:
    if args.family is None:
        specs = harness.default_specs()
    else:
        options = {}
        if args.tau is not None:
            options["tau"] = args.tau
        if args.id is not None:
            options["tag"] = args.id
        specs = [harness.CheckSpec.make(args.family, args.n_max, **options)]
    report = harness.run_checks(specs)
    for result in report.results:
        line = f"[{result.status.upper():4}] {result.label()}  cells={result.cells}  {result.seconds:.2f}s"
        if result.witness:
            line += f"  witness: {result.witness}"
        print(line, file=sys.stderr)
        for note in result.notes:
            print(f"       note: {note}", file=sys.stderr)
    payload = report.to_json()
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invpaths",
        description="Count, map, and certify 102-avoiding inversion sequences "
        "and their companion lattice paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="evaluate a closed-form count")
    p.add_argument("--tau", choices=formulas.SUPPORTED_PAIR_PATTERNS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="compare with enumeration")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("table", help="emit a count matrix over n and t")
    p.add_argument("--tau", choices=formulas.SUPPORTED_PAIR_PATTERNS)
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("enumerate", help="list combinatorial objects")
    p.add_argument("--kind", choices=["is", "uvd", "schroeder", "dyck", "lf"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--avoid", help="comma-separated patterns (kind=is)")
    p.add_argument("--coords", action="store_true", help="paths as coordinate JSON")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("map", help="apply a bijection to one object")
    p.add_argument(
        "verb",
        choices=[
            "phi",
            "phi-inv",
            "psi",
            "psi-inv",
            "m",
            "m-inv",
            "sp-to-is",
            "is-to-sp",
            "tiling",
            "tiling-inv",
        ],
    )
    p.add_argument("--input", help="object to map (default: read stdin)")
    p.add_argument("--n", type=int, help="sequence length for tiling-inv")
    p.add_argument("--coords", action="store_true")
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("series", help="series identities and coefficients")
    p.add_argument("action", choices=["verify", "coeffs"])
    p.add_argument("--id", required=True)
    p.add_argument("--order", type=int, default=24)
    p.add_argument("--u-order", dest="u_order", type=int, default=6)
    p.add_argument("--offset", type=int, default=0, help="b-file index offset")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("verify", help="run conformance checks")
    p.add_argument("--family", choices=harness.FAMILIES)
    p.add_argument("--tau")
    p.add_argument("--id", help="identity tag for --family identity")
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--json", help="write the JSON report to a file")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvpathsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
