"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 a verification or audit failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path
from typing import Any, Sequence

from . import invariants as inv
from .degeneration import build_complex, classify_vertices, counts, render_ascii
from .factorization import Factorization, degree_audit, verify_product_is_full_twist
from .regeneration import (
    DEFAULT_THREE_POINT_MODE,
    THREE_POINT_MODES,
    audit_modes,
    degenerate_factorization,
    load_six_point_table,
    regenerated_factorization,
)

OUT_DIR_ENV = "HIRZEBRUCH_OUT_DIR"

OK, INVALID, FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_range(text: str) -> list[int]:
    """``"5"``, ``"5:8"`` (inclusive) or ``"1,3,7"``."""
    try:
        if ":" in text:
            lo, hi = (int(x) for x in text.split(":"))
            return list(range(lo, hi + 1))
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None


def _flatten(obj: Any, prefix: str = "") -> list[tuple[str, Any]]:
    if isinstance(obj, dict):
        out = []
        for k, v in obj.items():
            out.extend(_flatten(v, f"{prefix}.{k}" if prefix else str(k)))
        return out
    if isinstance(obj, list) and obj and all(isinstance(x, (dict, list)) for x in obj):
        out = []
        for i, v in enumerate(obj):
            out.extend(_flatten(v, f"{prefix}[{i}]"))
        return out
    return [(prefix, json.dumps(obj) if isinstance(obj, list) else obj)]


def render(payload: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    rows = payload.get("rows")
    buf = io.StringIO()
    if fmt == "csv":
        w = csv.writer(buf, lineterminator="\n")
        if isinstance(rows, list) and rows:
            flat = [dict(_flatten(r)) for r in rows]
            header = list(flat[0])
            w.writerow(header)
            for r in flat:
                w.writerow([r.get(h, "") for h in header])
        else:
            w.writerow(["key", "value"])
            for k, v in _flatten(payload):
                w.writerow([k, v])
        return buf.getvalue()
    text = payload.get("text")
    if text is not None:
        return text if text.endswith("\n") else text + "\n"
    return "".join(f"{k} = {v}\n" for k, v in _flatten(payload))


def _params(args) -> inv.SurfaceParams:
    try:
        return inv.SurfaceParams(args.k, args.a, args.b)
    except (TypeError, ValueError) as e:
        raise UsageError(str(e)) from None


# Subcommands return (payload, exit code).

def cmd_degenerate(args):
    try:
        c = build_complex(args.k, args.a, args.b)
    except ValueError as e:
        raise UsageError(str(e)) from None
    payload = c.to_json()
    planes, lines, verts = counts(c)
    kinds: dict[str, int] = {}
    for x in classify_vertices(c).values():
        kinds[x.kind] = kinds.get(x.kind, 0) + 1
    payload["text"] = (
        f"F_{{{c.k}({c.a},{c.b})}}: planes={planes} lines={lines} vertices={verts}\n"
        + "".join(f"  {k}: {v}\n" for k, v in sorted(kinds.items()))
        + render_ascii(c) + "\n"
    )
    return payload, OK


def cmd_factorize(args):
    try:
        c = build_complex(args.k, args.a, args.b)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.level == "degenerate":
        f = degenerate_factorization(c, seed=args.seed)
        modes = None
    else:
        table = None
        if args.six_point_table:
            try:
                table = load_six_point_table(args.six_point_table)
            except (OSError, ValueError, KeyError) as e:
                raise UsageError(f"six-point table: {e}") from None
        try:
            f = regenerated_factorization(c, args.three_point_mode, table)
        except ValueError as e:
            raise UsageError(str(e)) from None
        modes = [{"mode": r.mode, "residual": r.residual, "passed": r.passed}
                 for r in audit_modes(c)]
    audit = degree_audit(f)
    payload = {"factorization": f.to_json(), "audit": audit.to_json()}
    if modes is not None:
        payload["three_point_modes"] = modes
    payload["text"] = (
        f"{f.label}: {len(f)} factors on {f.strand_count} strands, complete={f.complete}\n"
        f"degree total {audit.total} of {audit.expected}, residual {audit.residual}\n"
    )
    return payload, OK if audit.passed else FAILED


def cmd_verify(args):
    try:
        data = json.loads(Path(args.file).read_text())
        f = Factorization.from_json(data.get("factorization", data))
    except (OSError, ValueError, KeyError, TypeError) as e:
        raise UsageError(f"cannot read factorization: {e}") from None
    audit = degree_audit(f)
    product_ok = None
    if f.complete and audit.passed:
        product_ok = verify_product_is_full_twist(f)
    passed = audit.passed and bool(product_ok)
    payload = {
        "audit": audit.to_json(),
        "product_is_full_twist": product_ok,
        "passed": passed,
        "text": f"audit residual {audit.residual}; product = Delta^2: {product_ok}\n",
    }
    return payload, OK if passed else FAILED


def cmd_chern(args):
    p = _params(args)
    ch = inv.chern_Y(p)
    tau = inv.signature(p)
    payload = {
        "k": p.k, "a": p.a, "b": p.b, "n": p.n,
        "chern": ch.to_json(args.expand_cap),
        "signature": tau.to_json(args.expand_cap),
        "signature_sign": tau.sign,
        "branch": inv.branch_invariants(p).to_json(),
        "pi1": inv.pi1(p).to_json() if p.a >= 1 else None,
    }
    payload["text"] = (
        f"Y_{{{p.k}({p.a},{p.b})}}, n = {p.n}\n"
        f"c1^2 = {ch.c1sq_coeff} * n!\n"
        f"c2   = {ch.c2_coeff} * n!\n"
        f"tau = {tau.coeff} * n!" + (" = 0" if tau.sign == 0 else "") + "\n"
    )
    return payload, OK


def cmd_classify(args):
    p = _params(args)
    try:
        c = inv.classify(p, literal_table=args.literal_table)
    except ValueError as e:
        raise UsageError(str(e)) from None
    payload = c.to_json()
    payload["text"] = "".join(f"{k}: {v}\n" for k, v in c.to_json().items())
    return payload, OK if c.consistent else FAILED


def cmd_pair(args):
    try:
        r = inv.equal_chern_pair(args.s, args.t)
    except ValueError as e:
        raise UsageError(str(e)) from None
    payload = r.to_json()
    payload["text"] = (
        f"Y_{{1({r.s},{2 * r.t})}} and Y_{{0({r.s + r.t},{2 * r.t})}}: "
        f"Chern numbers equal: {r.chern_equal}; pi1 {r.pi1_first} vs {r.pi1_second}\n"
    )
    return payload, OK if r.chern_equal and r.groups_differ else FAILED


def _scan_rows(ks, as_, bs, where):
    try:
        preds = inv.parse_predicates(where)
        hits = inv.scan(ks, as_, bs, preds)
    except ValueError as e:
        raise UsageError(str(e)) from None
    return [{"k": p.k, "a": p.a, "b": p.b} for p in hits]


def cmd_scan(args):
    rows = _scan_rows(parse_range(args.k), parse_range(args.a), parse_range(args.b), args.where)
    text = "".join(f"{r['k']} {r['a']} {r['b']}\n" for r in rows)
    return {"where": args.where, "count": len(rows), "rows": rows, "text": text}, OK


ZERO_SIGNATURE_EXAMPLES = ((0, 7, 4), (1, 5, 4), (2, 3, 4), (3, 1, 4))
POSITIVE_SIGNATURE_EXAMPLES = tuple((1, 3, b) for b in range(5, 9))


def cmd_table(args):
    name = args.name
    rows = []
    if name == "signature-table":
        for k in parse_range(args.k):
            for a in parse_range(args.a):
                for b in parse_range(args.b):
                    try:
                        p = inv.SurfaceParams(k, a, b)
                        sign = inv.signature(p).sign
                        lit = inv.positive_signature_table(k, a, b, literal=True)
                        dft = inv.positive_signature_table(k, a, b)
                    except ValueError as e:
                        raise UsageError(str(e)) from None
                    rows.append({"k": k, "a": a, "b": b, "signature_sign": sign,
                                 "table_literal": lit, "table": dft,
                                 "agrees": (sign > 0) == dft})
        bad = sum(not r["agrees"] for r in rows)
        text = f"{len(rows)} triples, {bad} disagreements\n"
        code = OK if bad == 0 else FAILED
    elif name == "examples":
        for group, triples, want in (("zero", ZERO_SIGNATURE_EXAMPLES, 0), ("positive", POSITIVE_SIGNATURE_EXAMPLES, 1)):
            for t in triples:
                c = inv.classify(t)
                ok = c.simply_connected and c.general_type and c.spin and c.signature_sign == want
                rows.append({"group": group, **c.to_json(), "claim_holds": ok})
        text = "".join(
            f"{r['k']} {r['a']} {r['b']}: sc={r['simply_connected']} gt={r['general_type']} "
            f"spin={r['spin']} tau_sign={r['signature_sign']} claim_holds={r['claim_holds']}\n"
            for r in rows
        )
        code = OK if all(r["claim_holds"] for r in rows) else FAILED
    else:
        for k in parse_range(args.k):
            for a in parse_range(args.a):
                for b in parse_range(args.b):
                    try:
                        bi = inv.branch_invariants(inv.SurfaceParams(k, a, b))
                    except ValueError as e:
                        raise UsageError(str(e)) from None
                    rows.append({"k": k, "a": a, "b": b, **bi.to_json()})
        text = "".join(
            f"{r['k']} {r['a']} {r['b']}: n={r['n']} m={r['m']} mu={r['mu']} phi={r['phi']} d={r['d']}\n"
            for r in rows
        )
        code = OK
    return {"table": name, "rows": rows, "text": text}, code


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default=argparse.SUPPRESS)
    common.add_argument("--output", default=argparse.SUPPRESS,
                        help=f"write here instead of stdout (relative paths go under ${OUT_DIR_ENV})")
    parser = _Parser(prog="hirzebruch", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add = sub.add_parser
    sub.add_parser = lambda *a, **kw: _add(*a, parents=[common], **kw)  # type: ignore[method-assign]

    def kab(p):
        p.add_argument("k", type=int)
        p.add_argument("a", type=int)
        p.add_argument("b", type=int)

    p = sub.add_parser("degenerate", help="degenerated surface: planes, lines, vertices")
    kab(p)
    p.set_defaults(func=cmd_degenerate)

    p = sub.add_parser("factorize", help="braid monodromy factorization and degree audit")
    p.add_argument("--level", choices=("degenerate", "regenerated"), default="degenerate")
    p.add_argument("--three-point-mode", choices=THREE_POINT_MODES, default=DEFAULT_THREE_POINT_MODE)
    p.add_argument("--six-point-table")
    p.add_argument("--seed", type=int, default=0)
    kab(p)
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("verify", help="check a factorization file against Delta^2")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("chern", help="Chern numbers, signature, branch data")
    p.add_argument("--expand-cap", type=int, default=inv.EXPANSION_CAP)
    kab(p)
    p.set_defaults(func=cmd_chern)

    p = sub.add_parser("classify", help="general type, spin, simply connected, signature sign")
    p.add_argument("--literal-table", action="store_true")
    kab(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("pair", help="equal Chern numbers, different fundamental groups")
    p.add_argument("s", type=int)
    p.add_argument("t", type=int)
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("scan", help="search a parameter box")
    p.add_argument("--k", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--where", default="", help="comma list of " + " ".join(sorted(inv.PREDICATES)))
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("table", help="reproduce a reference table")
    p.add_argument("name", choices=("signature-table", "examples", "branch-data"))
    p.add_argument("--k", default="0:6")
    p.add_argument("--a", default="1:12")
    p.add_argument("--b", default="1:12")
    p.set_defaults(func=cmd_table)
    return parser


def _destination(name: str) -> Path:
    path = Path(name)
    base = os.environ.get(OUT_DIR_ENV)
    if base and not path.is_absolute():
        path = Path(base) / path
    return path


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        fmt = getattr(args, "format", "json")
        output = getattr(args, "output", None)
        payload, code = args.func(args)
    except UsageError as e:
        print(f"hirzebruch: error: {e}", file=sys.stderr)
        return INVALID
    if fmt != "text":
        payload = {k: v for k, v in payload.items() if k != "text"}
    out = render(payload, fmt)
    if output:
        dest = _destination(output)
        dest.parent.mkdir(parents=True, exist_ok=True)
        dest.write_text(out)
    else:
        stdout.write(out)
    if code == FAILED:
        print("hirzebruch: verification failed", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())

