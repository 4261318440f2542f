"""``atlas`` command-line interface.

Exit codes: 0 success, 1 invariant failure, 2 usage/parse error, 3 domain
error (not a root / not embeddable), 4 Table 1 diff, 5 internal verification
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import __version__, atlas, checks, lines, weyl
from .config import parse_config
from .errors import InternalError, LabelError, NotARoot, NotEmbeddable
from .lattice import enumerate_roots, hyperplane_class, pair, vector

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_DOMAIN, EXIT_DIFF, EXIT_INTERNAL = range(6)

ORDER_NOTE = (
    "roots: lexicographic on (e0..e6); lines: E_1..E_6, F_ij lexicographic, G_1..G_6; "
    "root indices refer to the root order"
)


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


def parse_root(text: str) -> tuple[int, ...]:
    """Seven comma-separated integers, optionally wrapped in quotes."""
    s = text.strip().strip("'\"").strip()
    parts = s.split(",")
    if len(parts) != 7:
        raise UsageError(f"expected 7 comma-separated integers, got {text!r}")
    try:
        return vector(int(p.strip()) for p in parts)
    except ValueError:
        raise UsageError(f"non-integer coordinate in {text!r}") from None


def document(kind: str, payload) -> dict:
    return {
        "kind": kind,
        "meta": {"tool": "cubic-atlas", "version": __version__, "order": ORDER_NOTE},
        "payload": payload,
    }


def dump_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _csv(header: Sequence[str], rows) -> str:
    lines_ = [",".join(header)] + [",".join(str(x) for x in r) for r in rows]
    return "\n".join(lines_) + "\n"


def _md(header: Sequence[str], rows) -> str:
    out = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    out += ["| " + " | ".join(str(x) for x in r) + " |" for r in rows]
    return "\n".join(out) + "\n"


def _table(fmt: str, kind: str, payload, header, rows) -> str:
    if fmt == "json":
        return dump_json(document(kind, payload))
    if fmt == "csv":
        return _csv(header, rows)
    return _md(header, rows)


COORDS = [f"e{i}" for i in range(7)]


# -- commands ----------------------------------------------------------------


def cmd_roots(args) -> tuple[str, int]:
    roots = [list(r) for r in enumerate_roots()]
    return _table(args.format, "roots", roots, ["index"] + COORDS,
                  [[i] + r for i, r in enumerate(roots)]), EXIT_OK


def cmd_lines(args) -> tuple[str, int]:
    ls = lines.enumerate_lines()
    payload = [{"label": L.label, "class": list(L.cls)} for L in ls]
    return _table(args.format, "lines", payload, ["label"] + COORDS,
                  [[L.label] + list(L.cls) for L in ls]), EXIT_OK


def cmd_incidence(args) -> tuple[str, int]:
    ls = lines.enumerate_lines()
    A = [list(r) for r in lines.incidence_matrix()]
    payload = {"labels": [L.label for L in ls], "matrix": A}
    return _table(args.format, "incidence", payload, ["label"] + [L.label for L in ls],
                  [[L.label] + r for L, r in zip(ls, A)]), EXIT_OK


def cmd_decompose(args) -> tuple[str, int]:
    v = parse_root(args.root)
    try:
        pairs = lines.decompose_root(v)
    except NotARoot:
        raise DomainError(
            f"NotARoot: {v} has pair(v,v)={pair(v, v)} (need -2) and "
            f"pair(v,h)={pair(v, hyperplane_class())} (need 0)"
        ) from None
    payload = {"root": list(v), "pairs": [[a.label, b.label] for a, b in pairs]}
    return _table(args.format, "decompose", payload, ["L1", "L2"],
                  [[a.label, b.label] for a, b in pairs]), EXIT_OK


def _split_roots(values: Sequence[str]) -> list[tuple[int, ...]]:
    out = []
    for val in values:
        for chunk in val.split(";"):
            if chunk.strip():
                out.append(parse_root(chunk))
    return out


def cmd_orbits(args) -> tuple[str, int]:
    if (args.config is None) == (not args.roots):
        raise UsageError("give exactly one of --config or --roots")
    try:
        if args.config is not None:
            cfg = parse_config(args.config)
            gens = weyl.realize(cfg)
        else:
            gens = _split_roots(args.roots)
            cfg = None
        rep = atlas.orbit_report(gens)
    except LabelError as exc:
        raise UsageError(str(exc)) from None
    except NotEmbeddable as exc:
        raise DomainError(f"NotEmbeddable: {exc}") from None
    except NotARoot as exc:
        raise DomainError(f"NotARoot: {exc}") from None
    payload = {
        "config": str(cfg if cfg is not None else rep.config),
        "count": rep.count,
        "block_sizes": [len(b) for b in rep.blocks],
        "blocks": [list(b) for b in rep.blocks],
        "inside": rep.inside,
        "outside": rep.outside,
        "realization": [list(r) for r in rep.realization],
    }
    rows = [[k, len(b), " ".join(str(i) for i in b)] for k, b in enumerate(rep.blocks)]
    return _table(args.format, "orbits", payload, ["block", "size", "roots"], rows), EXIT_OK


def cmd_table1(args) -> tuple[str, int]:
    rows = atlas.table1()
    payload = {"rows": [r.to_json() for r in rows]}
    code = EXIT_OK
    if args.diff:
        diff = atlas.table1_diff(rows)
        payload["diff"] = [{"config": c, "published": p, "computed": n} for c, p, n in diff]
        if diff:
            code = EXIT_DIFF
    header = ["R_e", "Type", "#"]
    table = [[str(r.config), r.bruce_wall_type, r.count] for r in rows]
    return _table(args.format, "table1", payload, header, table), code


def cmd_eckardt(args) -> tuple[str, int]:
    found = atlas.eckardt_search()
    rep = found[0] if found else None
    try:
        model = atlas.eckardt_line_model()
        transcript = list(model.transcript)
        induced = model.induced
        ok = (
            induced.order == 3
            and not induced.fixed_points()
            and induced in set(found)
            and len(model.orbit_blocks) == 24
        )
    except InternalError as exc:
        transcript = [f"{type(exc).__name__}: {exc}"]
        induced, ok = None, False
    blocks = weyl.orbit_partition([rep.perm]) if rep else []
    ok = ok and rep is not None and all(len(b) == 3 for b in blocks) and len(blocks) == 24
    payload = {
        "free_order3_count": len(found),
        "representative": rep.cycle_notation() if rep else None,
        "orbit_blocks": [list(b) for b in blocks],
        "line_model": {
            "transcript": transcript,
            "induced": induced.cycle_notation() if induced else None,
            "induced_order": induced.order if induced else None,
            "induced_in_search": bool(induced is not None and induced in set(found)),
        },
        "verified": ok,
    }
    rows = [[k, " ".join(str(i) for i in b)] for k, b in enumerate(blocks)]
    return _table(args.format, "eckardt", payload, ["block", "roots"], rows), (
        EXIT_OK if ok else EXIT_INTERNAL
    )


def cmd_check(args) -> tuple[str, int]:
    results = checks.run_checks()
    passed = all(r.passed for r in results)
    first = next((r for r in results if not r.passed), None)
    payload = {
        "passed": passed,
        "results": [r.to_json() for r in results],
        "first_failure": first.to_json() if first else None,
    }
    rows = [[r.name, "pass" if r.passed else "FAIL", r.counterexample or ""] for r in results]
    return _table(args.format, "check-report", payload, ["check", "status", "counterexample"],
                  rows), (EXIT_OK if passed else EXIT_CHECK)


COMMANDS = {
    "roots": cmd_roots,
    "lines": cmd_lines,
    "incidence": cmd_incidence,
    "decompose": cmd_decompose,
    "orbits": cmd_orbits,
    "table1": cmd_table1,
    "eckardt": cmd_eckardt,
    "check": cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="atlas", description="Root system, lines and monodromy orbits of cubic surfaces"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "md"], default="json")
    common.add_argument("--out", type=Path, help="write output here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("roots", parents=[common], help="the 72 roots")
    sub.add_parser("lines", parents=[common], help="the 27 line classes")
    sub.add_parser("incidence", parents=[common], help="27x27 incidence matrix")
    p = sub.add_parser("decompose", parents=[common], help="skew-line decompositions of a root")
    p.add_argument("root", help="7 comma-separated integers, e.g. 2,-1,-1,-1,-1,-1,-1")
    p = sub.add_parser("orbits", parents=[common], help="W(R_e)-orbits on the roots")
    p.add_argument("--config", help='ADE label such as "2A1+A2"')
    p.add_argument("--roots", action="append", default=[],
                   help="generating root (repeatable, or ';'-separated)")
    p = sub.add_parser("table1", parents=[common], help="orbit counts for all 21 configurations")
    p.add_argument("--diff", action="store_true", help="compare with the published values")
    sub.add_parser("eckardt", parents=[common], help="free Z/3 actions and the line model")
    sub.add_parser("check", parents=[common], help="run the invariant suite")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"atlas: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"atlas: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except InternalError as exc:
        print(f"atlas: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.out is not None:
        args.out.write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
