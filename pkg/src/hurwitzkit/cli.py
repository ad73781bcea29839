"""Command-line interface.

Exit codes: 0 success, 1 internal error, 2 invalid input, 3 a cap was
exceeded, 4 a hypothesis of the requested computation does not hold.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import kernels
from .classify import DEFAULT_ENUM_CAP, classify_types
from .datum import Datum, branch_signature, datum_from_json, genus, parse_entries, validate
from .errors import HurwitzError, InvalidDatum, ParseError
from .extension import abelian_certificate, centerless_minimum, extension_report
from .hurwitz import parse_word
from .orbits import CANONICALIZERS, DEFAULT_ORBIT_CAP, Mover, enumerate_orbit, movers_by_kind
from .perm import DEFAULT_ORDER_CAP, PermGroup, load_group


def _add_common(p: argparse.ArgumentParser, datum: bool = True):
    p.add_argument("--group", required=True,
                   help="builtin name (S3, S4, A4, Z2, Z3, Z6, V4, ...), JSON file or inline JSON")
    if datum:
        p.add_argument("--datum", required=True,
                       help='comma-separated entries, e.g. "(1 2),(2 3),(2 3),(1 2)", or a datum JSON file')
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP)
    p.add_argument("--orbit-cap", type=int, default=DEFAULT_ORBIT_CAP)
    p.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP)
    p.add_argument("--threads", type=int, default=1,
                   help="accepted for compatibility; the kernels run single-threaded")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitzkit",
        description="Hurwitz orbits of Nielsen tuples and the extension data of their families.")
    parser.add_argument("--version", action="version", version=f"%(prog)s (kernels: {kernels.BACKEND})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a datum and report its genus")
    _add_common(p)

    p = sub.add_parser("genus", help="genus of the cover defined by a datum")
    _add_common(p)

    p = sub.add_parser("orbit", help="orbit of a datum under braid movers")
    _add_common(p)
    p.add_argument("--movers", default="pure",
                   help='"pure" (all A_ij), "full" (all s_i) or comma-separated tokens like "A12,A13"')
    p.add_argument("--canon", choices=CANONICALIZERS, default="exact")

    p = sub.add_parser("classify", help="topological types of n-data")
    _add_common(p, datum=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--no-suborbits", action="store_true",
                   help="skip the pure sub-orbit counts per type")

    p = sub.add_parser("extensions", help="extension indices and eps image of a datum")
    _add_common(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--minimal", action="store_true",
                      help="also compute the centerless minimum (needs Z(G) = 1)")
    mode.add_argument("--abelian-cert", action="store_true",
                      help="also certify the abelian full-base property (needs G abelian)")
    return parser


def _group(args) -> PermGroup:
    G = load_group(args.group)
    G.order_cap = args.order_cap
    return G


def _datum(args, G: PermGroup) -> Datum:
    src = args.datum.strip()
    if src.startswith("{") or (src.endswith(".json") and os.path.exists(src)):
        try:
            if src.startswith("{"):
                doc = json.loads(src)
            else:
                with open(src, encoding="utf-8") as fh:
                    doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad datum JSON: {exc}") from None
        return datum_from_json(doc, G)
    return validate(parse_entries(src, G), G)


def _movers(spec: str, n: int) -> list[Mover]:
    if spec in ("pure", "full"):
        return movers_by_kind(spec, n)
    out = []
    for tok in spec.split(","):
        tok = tok.strip()
        if tok:
            out.append(Mover(tok, parse_word(tok, n)))
    if not out:
        raise ParseError("empty mover list")
    return out


def _emit(doc, fmt: str, table_lines, out):
    if fmt == "json":
        out.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    else:
        for line in table_lines:
            out.write(line + "\n")


def _cmd_check(args, out):
    G = _group(args)
    d = _datum(args, G)
    doc = {"valid": True, "datum": d.to_json(), "n": d.n, "genus": genus(d),
           "signature": str(branch_signature(d))}
    _emit(doc, args.format, [f"valid  n={d.n}  genus={doc['genus']}  signature={doc['signature']}"], out)


def _cmd_genus(args, out):
    G = _group(args)
    d = _datum(args, G)
    g = genus(d)
    _emit({"genus": g}, args.format, [str(g)], out)


def _cmd_orbit(args, out):
    G = _group(args)
    d = _datum(args, G)
    orbit = enumerate_orbit(d, _movers(args.movers, d.n), args.canon, args.orbit_cap)
    doc = orbit.to_json()
    lines = [f"size {orbit.size}  canonicalizer {orbit.canonicalizer}  "
             f"movers {','.join(doc['movers'])}",
             "representative " + ",".join(doc["representative"])]
    _emit(doc, args.format, lines, out)


def _cmd_classify(args, out):
    G = _group(args)
    reports = classify_types(G, args.n, suborbits=not args.no_suborbits,
                             enum_cap=args.enum_cap, orbit_cap=args.orbit_cap)
    doc = {"group": G.name or G.to_json(), "n": args.n, "types": [r.to_json() for r in reports]}
    lines = [f"{'#':>3}  {'size':>8}  {'genus':>5}  {'signature':<24}  representative"]
    for k, r in enumerate(reports, 1):
        lines.append(f"{k:>3}  {r.size:>8}  {r.genus:>5}  {str(r.signature):<24}  "
                     + ",".join(r.representative.cycle_strings()))
    _emit(doc, args.format, lines, out)


def _cmd_extensions(args, out):
    G = _group(args)
    d = _datum(args, G)
    rep = extension_report(d, args.orbit_cap)
    doc = rep.to_json()
    lines = [f"exact index {rep.exact_orbit_index}"
             + ("  (may differ from [H_X:H'] by the central twist)" if rep.exact_index_ambiguous else ""),
             f"inn index   {rep.inn_orbit_index}",
             f"aut index   {rep.aut_orbit_index}",
             f"eps image   order {len(rep.eps_image)}, {rep.eps_image_in_out} class(es) in Out G"]
    if args.minimal:
        m = centerless_minimum(d, args.orbit_cap)
        doc["minimal"] = m.to_json()
        lines.append(f"minimal base degree {m.degree}  certified={m.certified}")
    if args.abelian_cert:
        c = abelian_certificate(d, args.orbit_cap)
        doc["abelian_certificate"] = c.to_json()
        lines.append(f"abelian certificate passed={c.passed} ({', '.join(c.checked)})")
    _emit(doc, args.format, lines, out)


COMMANDS = {
    "check": _cmd_check,
    "genus": _cmd_genus,
    "orbit": _cmd_orbit,
    "classify": _cmd_classify,
    "extensions": _cmd_extensions,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    if getattr(args, "n", None) is not None and args.n < 3:
        err.write("error: --n must be at least 3\n")
        return 2
    try:
        COMMANDS[args.command](args, out)
    except InvalidDatum as exc:
        err.write(f"invalid datum ({exc.condition}): {exc}\n")
        return exc.exit_code
    except HurwitzError as exc:
        err.write(f"error: {exc}\n")
        return exc.exit_code
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
