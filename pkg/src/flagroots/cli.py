"""Command-line front end.

Verbs: roots, paintings, troots, invariants, classify, tables,
isomorphic, chambers, check.  Every invocation is deterministic:
identical arguments produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import (classify_all, classify_group, emit_table,
                       projected_system, verify_paper_claims)
from .invariants import (UnsupportedRank, count_chambers, extended_invariants,
                         invariant_tuple)
from .isomorph import (UndecidedBySearch, b3_plus_v, find_isomorphism,
                       match_classical)
from .painted import (PaintingError, enumerate_paintings, format_isotropy,
                      isotropy_descriptor, parse_painting)
from .rootsys import (CartanType, ClassicalTRootSpec, InvalidCartanType,
                      InvalidClassicalSpec, classical_troot_system,
                      positive_roots)
from .troots import TRootSystem


class CliError(Exception):
    pass


def _write(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _system_from_token(token: str) -> TRootSystem:
    """A painting "E7:1000011", a classical label "C3,2", or "B3+v"."""
    if token == "B3+v":
        return b3_plus_v()
    if ":" in token:
        return projected_system(parse_painting(token))
    try:
        return classical_troot_system(ClassicalTRootSpec.from_label(token))
    except InvalidClassicalSpec as exc:
        raise CliError(str(exc)) from exc


def cmd_roots(args) -> int:
    ct = CartanType.from_label(args.type)
    rs = positive_roots(ct)
    if args.format == "json":
        payload = {
            "type": ct.label,
            "cartan_matrix": [list(r) for r in rs.cartan],
            "count": len(rs.positive_roots),
            "positive_roots": [list(r) for r in rs.positive_roots],
            "lengths": list(rs.lengths),
        }
        _write(json.dumps(payload, indent=1) + "\n", args.out)
        return 0
    lines = [f"{ct.label}: {len(rs.positive_roots)} positive roots"]
    if args.format == "csv":
        lines = ["root,length"]
        lines += [f"{''.join(map(str, r))},{l}"
                  for r, l in zip(rs.positive_roots, rs.lengths)]
    else:
        lines += [f"  {r} {l}" for r, l in zip(rs.positive_roots, rs.lengths)]
    _write("\n".join(lines) + "\n", args.out)
    return 0


def cmd_paintings(args) -> int:
    group = CartanType.from_label(args.group)
    rows = []
    for diagram in enumerate_paintings(group, args.min_b2):
        name = format_isotropy(isotropy_descriptor(diagram))
        rows.append((diagram.label, diagram.b2, name))
    if args.format == "json":
        payload = [{"painting": p, "b2": b, "isotropy": n} for p, b, n in rows]
        _write(json.dumps(payload, indent=1, ensure_ascii=False) + "\n", args.out)
    elif args.format == "csv":
        body = "\n".join(f"{p},{b},{n}" for p, b, n in rows)
        _write("painting,b2,isotropy\n" + body + "\n", args.out)
    else:
        _write("\n".join(f"{p}  b2={b}  {n}" for p, b, n in rows) + "\n", args.out)
    return 0


def _troot_payload(args) -> dict:
    diagram = parse_painting(args.painting)
    omega = projected_system(diagram)
    tup = invariant_tuple(omega)
    ext = extended_invariants(omega, chambers=omega.k <= 3)
    try:
        spec = match_classical(omega, rank_bound=args.rank_bound)
        classical = spec.label if spec else None
    except UndecidedBySearch:
        classical = None
    return {
        "painting": diagram.label,
        "isotropy": format_isotropy(isotropy_descriptor(diagram)),
        "system": json.loads(omega.to_json()),
        "invariants": tup.to_json(),
        "extended": ext.to_json(),
        "classical": classical,
    }


def cmd_troots(args) -> int:
    payload = _troot_payload(args)
    if args.format == "json":
        _write(json.dumps(payload, indent=1, ensure_ascii=False) + "\n", args.out)
        return 0
    t = payload["invariants"]
    lines = [
        f"painting:  {payload['painting']}",
        f"isotropy:  {payload['isotropy']}",
        f"invariants: k={t['k']}, d={t['d']}, c={t['c']}, v={t['v']}, w={t['w']}",
        f"classical: {payload['classical'] or '-'}",
        "vectors (multiplicity):",
    ]
    sysd = payload["system"]
    for vec, m in zip(sysd["vectors"], sysd["mult"]):
        lines.append(f"  {tuple(vec)}  x{m}")
    _write("\n".join(lines) + "\n", args.out)
    return 0


def cmd_invariants(args) -> int:
    omega = _system_from_token(args.system)
    tup = invariant_tuple(omega)
    ext = extended_invariants(omega, chambers=omega.k <= 3)
    payload = {"system": args.system, "invariants": tup.to_json(),
               "extended": ext.to_json()}
    if args.format == "json":
        _write(json.dumps(payload, indent=1, ensure_ascii=False) + "\n", args.out)
    else:
        _write(f"{args.system}: {tup}\n"
               f"  i={ext.i} j={ext.j} a={ext.a} hull_vertices={ext.hull_vertex_count}"
               f" chambers={ext.chamber_count}\n", args.out)
    return 0


def cmd_classify(args) -> int:
    group = CartanType.from_label(args.group)
    records = classify_group(group, args.min_b2)
    if args.format == "json":
        _write(json.dumps([r.to_json() for r in records], indent=1,
                          ensure_ascii=False) + "\n", args.out)
        return 0
    if args.format == "csv":
        lines = ["group,b2,d,c,v,w,isotropy,f,classical"]
        for r in records:
            k, d, c, v, w = r.tuple.key
            lines.append(f"{group.label},{k},{d},{c},{v},{w},"
                         f"{r.isotropy_name},{r.f},{r.classical_match or ''}")
        _write("\n".join(lines) + "\n", args.out)
        return 0
    lines = [f"{group.label}: {len(records)} classes (b2 >= {args.min_b2})"]
    for r in records:
        cm = f"  [{r.classical_match}]" if r.classical_match else ""
        lines.append(f"  {r.tuple}  {r.isotropy_name}  f={r.f}{cm}")
    _write("\n".join(lines) + "\n", args.out)
    return 0


def cmd_tables(args) -> int:
    records = classify_all(args.min_b2)
    _write(emit_table(records, args.format), args.out)
    if args.figures:
        from .figures import render_rank2_classes
        render_rank2_classes(records, args.figures)
    return 0


def cmd_isomorphic(args) -> int:
    a = _system_from_token(args.a)
    b = _system_from_token(args.b)
    try:
        witness = find_isomorphism(a, b, rank_bound=args.rank_bound)
    except UndecidedBySearch as exc:
        _write(json.dumps({"isomorphic": None, "status": "undecided-by-search",
                           "detail": str(exc)}) + "\n", args.out)
        return 2
    if witness is None:
        _write(json.dumps({"isomorphic": False}) + "\n", args.out)
        return 1
    payload = {"isomorphic": True, "witness": witness.to_json()}
    _write(json.dumps(payload, indent=1) + "\n", args.out)
    return 0


def cmd_chambers(args) -> int:
    omega = _system_from_token(args.system)
    count = count_chambers(omega, rank_bound=args.rank_bound)
    _write(json.dumps({"system": args.system, "chambers": count}) + "\n", args.out)
    return 0


def cmd_check(args) -> int:
    report = verify_paper_claims(reference_path=args.golden)
    text = report.to_json() if args.format == "json" else report.to_markdown()
    _write(text, args.out)
    if args.figures:
        from .figures import render_rank2_classes
        render_rank2_classes(classify_all(2), args.figures)
    return 0 if report.ok(strict=args.strict) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagroots",
        description="T-root systems of flag manifolds: enumeration, "
                    "invariants, classification, verification.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, formats=("md", "csv", "json")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", metavar="FILE", default=None)

    p = sub.add_parser("roots", help="positive roots of a simple type")
    p.add_argument("type")
    common(p)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("paintings", help="enumerate painted diagrams")
    p.add_argument("group")
    p.add_argument("--min-b2", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_paintings)

    p = sub.add_parser("troots", help="T-root system of one painting")
    p.add_argument("painting")
    p.add_argument("--rank-bound", type=int, default=4,
                   help="isomorphism search bound for the classical match")
    common(p)
    p.set_defaults(func=cmd_troots)

    p = sub.add_parser("invariants", help="invariants of a painting or family")
    p.add_argument("system", help="painting, classical label, or B3+v")
    common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("classify", help="isomorphism classes of one group")
    p.add_argument("group")
    p.add_argument("--min-b2", type=int, default=2)
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("tables", help="full classification table")
    p.add_argument("--min-b2", type=int, default=2)
    p.add_argument("--figures", metavar="DIR", default=None,
                   help="also render rank-2 class figures into DIR")
    common(p)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("isomorphic", help="search for a linear isomorphism")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--rank-bound", type=int, default=4)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_isomorphic)

    p = sub.add_parser("chambers", help="chamber count of the arrangement")
    p.add_argument("system")
    p.add_argument("--rank-bound", type=int, default=3)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_chambers)

    p = sub.add_parser("check", help="verify the classification claims")
    p.add_argument("--strict", action="store_true",
                   help="treat documented discrepancies as failures")
    p.add_argument("--golden", metavar="FILE", default=None,
                   help="reference table (defaults to the packaged one)")
    p.add_argument("--figures", metavar="DIR", default=None)
    common(p, formats=("md", "json"))
    p.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PaintingError, InvalidCartanType, InvalidClassicalSpec,
            UnsupportedRank, CliError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
