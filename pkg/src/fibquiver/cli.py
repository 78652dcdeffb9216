"""Command-line surface: exact computations in json, csv or ascii form.

Subcommands: fib, pairs, classify, utable, partition, svec, rvec, verify,
oeis-check. Every subcommand accepts --format {json,csv,ascii}; json and
csv are schema-stable (schema_version 1), ascii is for reading. Data goes
to stdout, diagnostics to stderr; the exit status is 0 exactly when all
requested checks pass.

The brute-force commands respect an oracle cap, overridable per call with
--oracle-cap or globally with the FIBQUIVER_ORACLE_CAP environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import oeis, profiles, reflect, suites
from .errors import (
    BFileParseError,
    NotSymmetric,
    OracleCapExceeded,
    RadiusTooLarge,
    SequenceMismatch,
)
from .fibcore import DimPair, classify_pair, enumerate_pairs, fib_range
from .profiles import class_size, shell_size
from .reflect import ORACLE_CAP

SCHEMA_VERSION = 1
ENV_CAP = "FIBQUIVER_ORACLE_CAP"
FORMATS = ("json", "csv", "ascii")


# ----------------------------------------------------------------------
# payload builders: plain dicts of json-safe values (ints, strings, lists)
# ----------------------------------------------------------------------

def payload_fib(lo: int, hi: int) -> dict:
    values = fib_range(lo, hi)
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "fib_range",
        "from": lo,
        "to": hi,
        "values": [[lo + i, v] for i, v in enumerate(values)],
    }


def _witness_fields(verdict) -> dict:
    if verdict.witness is None:
        return {"t": None, "direction": None, "negated": None}
    w = verdict.witness
    return {"t": w.t, "direction": w.direction, "negated": w.negated}


def payload_classify(x: int, y: int) -> dict:
    verdict = classify_pair(DimPair(x, y))
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "pair_class",
        "x": x,
        "y": y,
        "pair_kind": verdict.kind,
        **_witness_fields(verdict),
    }


def payload_pairs(bound: int) -> dict:
    rows = []
    for pt, verdict in enumerate_pairs(bound):
        rows.append({"x": pt.x, "y": pt.y, "pair_kind": verdict.kind, **_witness_fields(verdict)})
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "pairs",
        "bound": bound,
        "pairs": rows,
    }


def payload_utable(t_max: int) -> dict:
    rows = []
    for row in profiles.u_table(t_max):
        minus, plus = profiles.u_sums(row)
        rows.append(
            {
                "t": row.t,
                "values": [[s, row.value(s)] for s in row.support()],
                "minus": minus,
                "plus": plus,
            }
        )
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "u_table",
        "t_max": t_max,
        "rows": rows,
    }


def payload_partition(t: int) -> dict:
    rep = profiles.partition_report(t)

    def side(terms, target):
        return {
            "target": target,
            "terms": [[x.cls, x.weight, x.value, x.product] for x in terms],
        }

    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "partition_report",
        "t": t,
        "minus": side(rep.terms_minus, rep.target_minus),
        "plus": side(rep.terms_plus, rep.target_plus),
    }


def payload_svec(t: int, cap: int) -> dict:
    vec = reflect.s_vec(t, cap=cap)
    prof = profiles.compress_radial(vec, cap=cap)
    minus, plus = reflect.parity_sums(vec, t)
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "s_vector",
        "t": t,
        "classes": [[d, shell_size(d), prof.values[d]] for d in range(t + 1)],
        "minus": minus,
        "plus": plus,
    }


def payload_rvec(t: int, cap: int) -> dict:
    vec = reflect.r_vec(t, cap=cap)
    classes = profiles.compress_signed_classes(vec, cap=cap)
    radius = vec.support_radius()
    minus, plus = reflect.parity_sums(vec, t)
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "r_vector",
        "t": t,
        "classes": [
            [s, class_size(s), classes.get(s, 0)] for s in range(-radius, radius + 1)
        ],
        "minus": minus,
        "plus": plus,
    }


def payload_verify(result: suites.SuiteResult) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "verify",
        "suite": result.suite,
        "ok": result.ok,
        "checked": result.checked,
        "failures": list(result.failures),
    }


def payload_oeis(result: oeis.CheckResult, fixture: str) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "oeis_check",
        "sequence": result.sequence,
        "fixture": fixture,
        "checked": result.checked,
        "ok": result.ok,
        "warning": result.warning,
    }


# ----------------------------------------------------------------------
# rendering
# ----------------------------------------------------------------------

def emit_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _csv(header: str, rows: list[list]) -> str:
    lines = [header]
    lines.extend(",".join("" if v is None else str(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def emit_csv(payload: dict) -> str:
    kind = payload["kind"]
    if kind == "fib_range":
        return _csv("t,value", payload["values"])
    if kind == "pair_class":
        p = payload
        return _csv(
            "x,y,kind,t,direction,negated",
            [[p["x"], p["y"], p["pair_kind"], p["t"], p["direction"], p["negated"]]],
        )
    if kind == "pairs":
        rows = [
            [r["x"], r["y"], r["pair_kind"], r["t"], r["direction"], r["negated"]]
            for r in payload["pairs"]
        ]
        return _csv("x,y,kind,t,direction,negated", rows)
    if kind == "u_table":
        rows = [[row["t"], s, v] for row in payload["rows"] for s, v in row["values"]]
        return _csv("t,s,value", rows)
    if kind == "partition_report":
        rows = [["minus", *term] for term in payload["minus"]["terms"]]
        rows += [["plus", *term] for term in payload["plus"]["terms"]]
        return _csv("side,s,weight,value,product", rows)
    if kind == "s_vector":
        return _csv("d,size,value", payload["classes"])
    if kind == "r_vector":
        return _csv("s,size,value", payload["classes"])
    if kind == "verify":
        p = payload
        return _csv("suite,checked,ok", [[p["suite"], p["checked"], p["ok"]]])
    if kind == "oeis_check":
        p = payload
        return _csv("sequence,checked,ok", [[p["sequence"], p["checked"], p["ok"]]])
    raise ValueError(f"no csv renderer for {kind!r}")


def _ascii_witness(p: dict) -> str:
    if p["t"] is None:
        return ""
    tail = " (negated)" if p["negated"] else ""
    return f" t={p['t']} {p['direction']}{tail}"


_PLURALS = {"vertex": "vertices", "wave": "waves"}


def _count(n: int, noun: str) -> str:
    return f"{n} {noun}" if n == 1 else f"{n} {_PLURALS[noun]}"


def emit_ascii(payload: dict) -> str:
    kind = payload["kind"]
    if kind == "fib_range":
        return ",".join(str(v) for _, v in payload["values"]) + "\n"
    if kind == "pair_class":
        return f"{payload['pair_kind']}{_ascii_witness(payload)}\n"
    if kind == "pairs":
        lines = [
            f"({r['x']}, {r['y']})  {r['pair_kind']}{_ascii_witness(r)}"
            for r in payload["pairs"]
        ]
        lines.append(f"{len(payload['pairs'])} pairs with |x|,|y| <= {payload['bound']}")
        return "\n".join(lines) + "\n"
    if kind == "u_table":
        rows = payload["rows"]
        lo = min(r["values"][0][0] for r in rows)
        hi = max(r["values"][-1][0] for r in rows)
        cells = {(r["t"], s): str(v) for r in rows for s, v in r["values"]}
        widths = {
            s: max(len(str(s)), max((len(cells.get((r["t"], s), "")) for r in rows), default=1))
            for s in range(lo, hi + 1)
        }
        head = "t\\s | " + " ".join(str(s).rjust(widths[s]) for s in range(lo, hi + 1))
        out = [head, "-" * len(head)]
        for r in rows:
            line = f"{r['t']:>3} | " + " ".join(
                cells.get((r["t"], s), "").rjust(widths[s]) for s in range(lo, hi + 1)
            )
            out.append(line + f"   [{r['minus']}, {r['plus']}]")
        return "\n".join(out) + "\n"
    if kind == "partition_report":
        out = [f"step {payload['t']}"]
        for side in ("minus", "plus"):
            block = payload[side]
            out.append(f"{side} target {block['target']}:")
            for s, w, v, prod in block["terms"]:
                out.append(f"  class {s:>3}: {w} * {v} = {prod}")
            out.append(f"  total = {block['target']}")
        return "\n".join(out) + "\n"
    if kind == "s_vector":
        out = [f"vertex vector after {_count(payload['t'], 'wave')}"]
        for d, size, v in payload["classes"]:
            out.append(f"ring {d} ({_count(size, 'vertex')}): {v}")
        out.append(f"sums: [{payload['minus']}, {payload['plus']}]")
        return "\n".join(out) + "\n"
    if kind == "r_vector":
        out = [f"edge vector after {_count(payload['t'], 'wave')}"]
        by_s = {s: (size, v) for s, size, v in payload["classes"]}
        radius = max(s for s in by_s)
        for d in range(radius + 1):
            size, v = by_s[d]
            line = f"ring {d}: s=+{d}: {v} ({_count(size, 'vertex')})"
            if d > 0 and -d in by_s:
                tsize, tv = by_s[-d]
                line += f" | s=-{d}: {tv} ({_count(tsize, 'vertex')})"
            out.append(line)
        out.append(f"sums: [{payload['minus']}, {payload['plus']}]")
        return "\n".join(out) + "\n"
    if kind == "verify":
        status = "ok" if payload["ok"] else "FAILED"
        out = [f"{payload['suite']}: {status} ({payload['checked']} checks)"]
        out.extend(f"  counterexample: {f}" for f in payload["failures"])
        return "\n".join(out) + "\n"
    if kind == "oeis_check":
        msg = f"{payload['sequence']}: {payload['checked']} values match {payload['fixture']}"
        if payload["warning"]:
            msg += f" [warning: {payload['warning']}]"
        return msg + "\n"
    raise ValueError(f"no ascii renderer for {kind!r}")


def emit(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return emit_json(payload)
    if fmt == "csv":
        return emit_csv(payload)
    if fmt == "ascii":
        return emit_ascii(payload)
    raise ValueError(f"unknown format {fmt!r}")


# ----------------------------------------------------------------------
# command implementations
# ----------------------------------------------------------------------

def _resolve_cap(args) -> int:
    if args.oracle_cap is not None:
        return args.oracle_cap
    env = os.environ.get(ENV_CAP)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{ENV_CAP} must be an integer, got {env!r}") from None
    return ORACLE_CAP


def cmd_fib(args) -> int:
    if args.t is not None:
        lo = hi = args.t
    elif args.start is not None and args.end is not None:
        lo, hi = args.start, args.end
    else:
        raise ValueError("give a single index or both --from and --to")
    if hi < lo:
        raise ValueError(f"empty range: {lo}..{hi}")
    print(emit(payload_fib(lo, hi), args.format), end="")
    return 0


def cmd_pairs(args) -> int:
    print(emit(payload_pairs(args.max), args.format), end="")
    return 0


def cmd_classify(args) -> int:
    print(emit(payload_classify(args.x, args.y), args.format), end="")
    return 0


def cmd_utable(args) -> int:
    print(emit(payload_utable(args.t_max), args.format), end="")
    return 0


def cmd_partition(args) -> int:
    print(emit(payload_partition(args.t), args.format), end="")
    return 0


def cmd_svec(args) -> int:
    print(emit(payload_svec(args.t, _resolve_cap(args)), args.format), end="")
    return 0


def cmd_rvec(args) -> int:
    print(emit(payload_rvec(args.t, _resolve_cap(args)), args.format), end="")
    return 0


def cmd_verify(args) -> int:
    kwargs = {"cap": _resolve_cap(args)}
    if args.t is not None:
        kwargs["t_max"] = args.t
    if args.t_max is not None:
        kwargs["t_max"] = args.t_max
    if args.start is not None:
        kwargs["lo"] = args.start
    if args.end is not None:
        kwargs["hi"] = args.end
    if args.max is not None:
        kwargs["bound"] = args.max
    kwargs["paths"] = args.paths
    kwargs["seed"] = args.seed
    result = suites.SUITES[args.suite](**kwargs)
    print(emit(payload_verify(result), args.format), end="")
    if not result.ok:
        for f in result.failures:
            print(f"verify {result.suite}: {f}", file=sys.stderr)
        return 1
    return 0


def cmd_oeis_check(args) -> int:
    fixture = args.fixture or str(oeis.default_fixture_path(args.sequence))
    result = oeis.run_check(args.sequence, fixture, args.map)
    if result.warning:
        print(f"warning: {result.warning}", file=sys.stderr)
    print(emit(payload_oeis(result, fixture), args.format), end="")
    return 0


# ----------------------------------------------------------------------
# argument parsing
# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="ascii", help="output format")
    common.add_argument(
        "--oracle-cap",
        type=int,
        default=None,
        metavar="N",
        help=f"raise the brute-force step cap (default {ORACLE_CAP}, env {ENV_CAP})",
    )

    parser = argparse.ArgumentParser(
        prog="fibquiver",
        description="Exact Fibonacci vectors on the 3-regular tree: tables, pair classification and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fib", parents=[common], help="Fibonacci numbers over any integer index range")
    p.add_argument("t", nargs="?", type=int, default=None, help="single index")
    p.add_argument("--from", dest="start", type=int, default=None, help="first index")
    p.add_argument("--to", dest="end", type=int, default=None, help="last index")
    p.set_defaults(func=cmd_fib)

    p = sub.add_parser("pairs", parents=[common], help="all Fibonacci pairs in a coordinate box")
    p.add_argument("max", type=int, help="list pairs with |x|, |y| <= max")
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("classify", parents=[common], help="classify one lattice point")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("utable", parents=[common], help="signed-class table rows 0..t_max")
    p.add_argument("t_max", type=int)
    p.set_defaults(func=cmd_utable)

    p = sub.add_parser("partition", parents=[common], help="itemized odd-index partition at one step")
    p.add_argument("t", type=int)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("svec", parents=[common], help="vertex-grown tree vector, by distance rings")
    p.add_argument("t", type=int)
    p.set_defaults(func=cmd_svec)

    p = sub.add_parser("rvec", parents=[common], help="edge-grown tree vector, by signed rings")
    p.add_argument("t", type=int)
    p.set_defaults(func=cmd_rvec)

    p = sub.add_parser("verify", parents=[common], help="run a named identity suite")
    p.add_argument("suite", choices=sorted(suites.SUITES))
    p.add_argument("--t", type=int, default=None, help="largest step to check")
    p.add_argument("--t-max", dest="t_max", type=int, default=None, help="largest table row to check")
    p.add_argument("--from", dest="start", type=int, default=None, help="first index (three-term)")
    p.add_argument("--to", dest="end", type=int, default=None, help="last index (three-term)")
    p.add_argument("--max", type=int, default=None, help="box bound (pairs)")
    p.add_argument("--paths", type=int, default=3, help="path shapes per step (cor42/cor43)")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized path shapes")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oeis-check", parents=[common], help="check a generator against a b-file fixture")
    p.add_argument("sequence", help="sequence id, e.g. A000045")
    p.add_argument("--fixture", default=None, help="b-file path (default: bundled)")
    p.add_argument("--map", default=None, help="generator mapping json (default: bundled)")
    p.set_defaults(func=cmd_oeis_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OracleCapExceeded, RadiusTooLarge) as exc:
        print(
            f"error: {exc}; raise it with --oracle-cap or {ENV_CAP}",
            file=sys.stderr,
        )
        return 2
    except SequenceMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (BFileParseError, NotSymmetric, FileNotFoundError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
