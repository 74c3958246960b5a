"""Command-line interface: ``invseq <command> [options]``.

Exit codes: 0 ok, 1 failed check or finding, 2 usage error, 3 resource limit.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import actions, bijections as bij, codes, poly, stats, verify
from .core import parse_sequence, render_sequence, validate_invseq, validate_perm
from .errors import (
    InternalInvariant,
    InvSeqError,
    MismatchAt,
    NotInvariant,
    NotSymmetric,
    ParseError,
    ResourceLimit,
)
from .patterns import as_spec, class_members, count_members

OK, FINDING, USAGE, LIMIT = 0, 1, 2, 3

# name -> (input kind, function, output kind)
BIJECTIONS = {
    "alpha": ("seq", bij.alpha, "seq"),
    "beta": ("seq", bij.beta, "seq"),
    "psi": ("seq", bij.psi, "seq"),
    "psi-inv": ("seq", bij.psi_inv, "seq"),
    "Gamma": ("seq", bij.Gamma_map, "seq"),
    "gamma": ("seq", bij.gamma_map, "seq"),
    "gamma-inv": ("seq", bij.gamma_inv, "seq"),
    "lehmer": ("perm", codes.lehmer, "seq"),
    "lehmer-inv": ("seq", codes.lehmer_inv, "perm"),
    "bcode": ("perm", codes.b_code, "seq"),
    "bcode-inv": ("seq", codes.b_decode, "perm"),
}


class UsageError(InvSeqError):
    code = "usage_error"


class _Parser(argparse.ArgumentParser):
    json_errors = False

    def error(self, message):
        if self.json_errors:
            print(json.dumps({"error": "usage_error", "message": message}))
            sys.exit(USAGE)
        super().error(message)


def parse_n_range(text: str) -> tuple[int, int]:
    """'5' -> (5, 5); '1..6' -> (1, 6)."""
    parts = text.split("..")
    if len(parts) > 2 or not all(p.strip().isdigit() for p in parts):
        raise ParseError(0, "expected N or A..B", text)
    lo, hi = int(parts[0]), int(parts[-1])
    if lo > hi:
        raise ParseError(0, "empty range", text)
    return lo, hi


def _single_n(text: str) -> int:
    lo, hi = parse_n_range(text)
    if lo != hi:
        raise ParseError(0, "expected a single n", text)
    return lo


# -- rendering ---------------------------------------------------------------


def _dump(obj) -> str:
    return json.dumps(obj)


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _table(rows) -> str:
    widths = [max(len(str(r[k])) for r in rows) for k in range(len(rows[0]))]
    return "\n".join("  ".join(str(c).rjust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def _stats_of(w, kind: str) -> dict:
    if kind == "perm":
        return {"des_set": list(stats.des_set(w)), "asc_set": list(stats.asc_set(w)), "des": stats.des(w)}
    return stats.profile(w).to_dict()


# -- commands ----------------------------------------------------------------


def cmd_count(args) -> int:
    spec = as_spec(args.class_)
    lo, hi = parse_n_range(args.n)
    rows = [(n, count_members(spec, n)) for n in range(lo, hi + 1)]
    if args.format == "json":
        print(_dump({"class": spec.render(), "counts": [{"n": n, "count": c} for n, c in rows]}))
    elif args.format == "csv":
        print(_csv([("n", "count"), *rows]))
    else:
        print(_table([("n", "count"), *rows]))
    return OK


def cmd_enumerate(args) -> int:
    spec = as_spec(args.class_)
    lo, hi = parse_n_range(args.n)
    kind = "perm" if spec.universe == "perm" else "seq"
    members = [w for n in range(lo, hi + 1) for w in class_members(spec, n)]
    if args.format == "json":
        items = []
        for w in members:
            item = {"sequence": list(w)}
            if args.with_stats:
                item["stats"] = _stats_of(w, kind)
            items.append(item)
        print(_dump({"class": spec.render(), "members": items}))
        return OK
    stat_name = "des" if kind == "perm" else "asc"
    stat = stats.des if kind == "perm" else stats.asc
    if args.format == "csv":
        head = ["sequence", stat_name, "dt"] if args.with_stats else ["sequence"]
        rows = [
            [render_sequence(w), stat(w), render_sequence(stats.descent_tops(w))] if args.with_stats else [render_sequence(w)]
            for w in members
        ]
        print(_csv([head, *rows]))
        return OK
    if args.with_stats:
        rows = [("sequence", stat_name, "dt")]
        rows += [(render_sequence(w), stat(w), render_sequence(stats.descent_tops(w))) for w in members]
        print(_table(rows))
    else:
        for w in members:
            print(render_sequence(w))
    return OK


def cmd_map(args) -> int:
    in_kind, fn, out_kind = BIJECTIONS[args.bijection]
    if in_kind == "perm":
        if args.input_perm is None:
            raise UsageError(f"{args.bijection} takes a permutation: use --input-perm")
        x = validate_perm(parse_sequence(args.input_perm))
    else:
        if args.input is None:
            raise UsageError(f"{args.bijection} takes an inversion sequence: use --input")
        x = validate_invseq(parse_sequence(args.input))
    y = fn(x)
    if args.format == "json":
        out = {"bijection": args.bijection, "input": list(x), "output": list(y)}
        if args.with_stats:
            out["inputStats"] = _stats_of(x, in_kind)
            out["outputStats"] = _stats_of(y, out_kind)
        print(_dump(out))
        return OK
    print(render_sequence(y))
    if args.with_stats:
        for label, w, kind in (("input", x, in_kind), ("output", y, out_kind)):
            print(f"{label} stats:")
            for k, v in _stats_of(w, kind).items():
                shown = "-" if v is None else render_sequence(v) if isinstance(v, list) else v
                print(f"  {k.ljust(10)}  {shown}".rstrip())
    return OK


def render_trace(trace, final: tuple) -> str:
    states = [trace.initial] + [bij.replay(trace.initial, trace.steps[: k + 1]) for k in range(len(trace.steps))]
    width = max((len(str(v)) for s in states + [final] for v in s), default=1)

    def cells(s):
        return " ".join(str(v).rjust(width) for v in s)

    notes = [""] + [f"e{s.mover} {s.direction} {s.start}->{s.landing}" for s in trace.steps]
    rows = [("step", "move", "sequence")]
    rows += [(str(k), notes[k], cells(s)) for k, s in enumerate(states)]
    rows.append(("psi", "", cells(final)))
    w0 = max(len(r[0]) for r in rows)
    w1 = max(len(r[1]) for r in rows)
    return "\n".join(f"{a.rjust(w0)}  {b.ljust(w1)}  {c}".rstrip() for a, b, c in rows)


def cmd_trace(args) -> int:
    e = validate_invseq(parse_sequence(args.input))
    b, trace = bij.Gamma(e, traced=True)
    final = bij.psi(b)
    if args.format == "json":
        d = trace.to_dict()
        d["Gamma"] = list(b)
        d["psi"] = list(final)
        print(_dump(d))
    else:
        print(render_trace(trace, final))
    return OK


def cmd_verify(args) -> int:
    names = args.theorem or verify.check_names()
    results = [verify.check(name, args.max_n) for name in names]
    failed = [r for r in results if not r.passed]
    if args.format == "json":
        payload = []
        for r in results:
            d = r.to_dict()
            d.pop("elapsed")  # keeps output byte-identical across runs
            payload.append(d)
        print(_dump({"results": payload, "allPassed": not failed}))
    else:
        rows = [("check", "status", "n", "detail")]
        for r in results:
            detail = r.detail
            if r.counterexample is not None:
                inp, exp, got = r.counterexample
                detail += f"; input {inp}: expected {exp}, got {got}"
            rows.append((r.name, r.status.upper(), f"{r.n_range[0]}..{r.n_range[1]}", detail))
        table = _table([r[:3] for r in rows]).splitlines()
        print("\n".join(f"{line}  {r[3]}".rstrip() for line, r in zip(table, rows)))
        print(f"{len(results) - len(failed)}/{len(results)} passed")
    return FINDING if failed else OK


def _finding(args, payload: dict, text: str) -> int:
    print(_dump(payload) if args.format == "json" else text)
    return FINDING


def cmd_gamma(args) -> int:
    spec = as_spec(args.class_)
    n = _single_n(args.n)
    d = n - 1
    if args.via == "orbits":
        if spec.universe != "perm":
            raise UsageError("--via orbits needs a permutation class (perm:...)")
        try:
            gam = actions.gamma_via_orbits(list(class_members(spec, n)))
        except NotInvariant as exc:
            return _finding(args, {"finding": "not_invariant", **exc.to_dict(), "perm": list(exc.perm),
                                   "letter": exc.a, "image": list(exc.image)},
                            f"not MFS-invariant: {exc}")
        h = poly.dist_poly(spec, n)
    else:
        h = poly.dist_poly(spec, n)
        try:
            gam = poly.gamma_extract(h, d)
        except NotSymmetric:
            return _finding(args, {"finding": "not_symmetric", "class": spec.render(), "n": n, "coefficients": h.to_list()},
                            f"not symmetric at n={n}: coefficients {h.to_list()}")
    out = {
        "class": spec.render(),
        "n": n,
        "via": args.via,
        "gamma": gam,
        "nonnegative": all(g >= 0 for g in gam),
        "symmetric": poly.is_symmetric(h, d),
        "unimodal": poly.is_unimodal(h),
    }
    if args.format == "json":
        print(_dump(out))
    elif args.format == "csv":
        print(_csv([["k", "gamma"], *[[k, g] for k, g in enumerate(gam)]]))
    else:
        print(f"gamma = ({','.join(map(str, gam))})")
        for key in ("nonnegative", "symmetric", "unimodal"):
            print(f"{key}: {'yes' if out[key] else 'no'}")
    return OK if out["nonnegative"] else FINDING


def cmd_poly(args) -> int:
    if args.series:
        top = args.max_n if args.max_n is not None else 10
        if args.series == "cubic":
            res = poly.cubic_residual(top)
            zero = res.is_zero()
            out = {"series": "cubic", "maxN": top, "residual": list(res.coeffs), "zero": zero}
        else:
            try:
                zero = poly.fine_series_check(top)
                out = {"series": "fine", "maxN": top, "coefficients": poly.fine_binomial_coefficients(top), "zero": zero}
            except MismatchAt as exc:
                zero = False
                out = {"series": "fine", "maxN": top, "mismatch": exc.to_dict() | {"n": exc.n, "expected": exc.expected, "got": exc.got}}
        if args.format == "json":
            print(_dump(out))
        else:
            print("\n".join(f"{k}: {v}" for k, v in out.items()))
        return OK if zero else FINDING
    if args.class_ is None or args.n is None:
        raise UsageError("poly needs --class and --n, or --series")
    spec = as_spec(args.class_)
    lo, hi = parse_n_range(args.n)
    rows = []
    for n in range(lo, hi + 1):
        h = poly.dist_poly(spec, n, args.stat)
        rows.append((n, h, poly.is_symmetric(h, max(n - 1, 0)), poly.is_unimodal(h)))
    if args.format == "json":
        print(_dump({"class": spec.render(), "polynomials": [
            {"n": n, "coefficients": h.to_list(), "symmetric": s, "unimodal": u} for n, h, s, u in rows]}))
    elif args.format == "csv":
        print(_csv([["n", "coefficients", "symmetric", "unimodal"],
                    *[[n, " ".join(map(str, h.to_list())), s, u] for n, h, s, u in rows]]))
    else:
        print(_table([("n", "polynomial", "symmetric", "unimodal"),
                      *[(n, str(h), "yes" if s else "no", "yes" if u else "no") for n, h, s, u in rows]]))
    return OK


# -- parser ------------------------------------------------------------------


def build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--json", action="store_const", const="json", dest="format", help="same as --format json")

    p = _Parser(prog="invseq", description="Pattern-avoiding inversion sequences: counts, maps, traces and checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("count", parents=[common], help="class sizes for a range of n")
    s.add_argument("--class", dest="class_", required=True)
    s.add_argument("--n", required=True, help="N or A..B")
    s.set_defaults(fn=cmd_count)

    s = sub.add_parser("enumerate", parents=[common], help="list class members")
    s.add_argument("--class", dest="class_", required=True)
    s.add_argument("--n", required=True)
    s.add_argument("--with-stats", action="store_true")
    s.set_defaults(fn=cmd_enumerate)

    s = sub.add_parser("map", parents=[common], help="apply a bijection or code")
    s.add_argument("--bijection", required=True, choices=list(BIJECTIONS))
    s.add_argument("--input")
    s.add_argument("--input-perm")
    s.add_argument("--with-stats", action="store_true")
    s.set_defaults(fn=cmd_map)

    s = sub.add_parser("trace", parents=[common], help="step-by-step run of Gamma followed by psi")
    s.add_argument("--input", required=True)
    s.set_defaults(fn=cmd_trace)

    s = sub.add_parser("verify", parents=[common], help="run registered checks")
    s.add_argument("--theorem", action="append", help="check name; repeatable (default: all)")
    s.add_argument("--max-n", type=int)
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("gamma", parents=[common], help="gamma-vector of a class polynomial")
    s.add_argument("--class", dest="class_", required=True)
    s.add_argument("--n", required=True)
    s.add_argument("--via", choices=("poly", "orbits"), default="poly")
    s.set_defaults(fn=cmd_gamma)

    s = sub.add_parser("poly", parents=[common], help="distribution polynomials and series checks")
    s.add_argument("--class", dest="class_")
    s.add_argument("--n")
    s.add_argument("--stat", choices=("asc", "des"))
    s.add_argument("--series", choices=("cubic", "fine"))
    s.add_argument("--max-n", type=int)
    s.set_defaults(fn=cmd_poly)
    return p


def _wants_json(argv) -> bool:
    return "--json" in argv or "--format=json" in argv or any(
        a == "--format" and b == "json" for a, b in zip(argv, argv[1:])
    )


def _exit_code(exc: InvSeqError) -> int:
    if isinstance(exc, ResourceLimit):
        return LIMIT
    if isinstance(exc, (InternalInvariant, MismatchAt)):
        return FINDING
    return USAGE


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    as_json = _wants_json(argv)
    _Parser.json_errors = as_json
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except InvSeqError as exc:
        if as_json:
            print(_dump(exc.to_dict()))
        else:
            print(f"invseq: error: {exc}", file=sys.stderr)
        return _exit_code(exc)
    finally:
        _Parser.json_errors = False


if __name__ == "__main__":
    sys.exit(main())
