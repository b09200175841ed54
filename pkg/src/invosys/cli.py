"""Command-line front end.

Exit codes: 0 success or property holds; 1 property fails (witness printed);
2 usage error; 3 unresolved within the given radius.  Words on the command
line use the relator grammar, e.g. "abc" (single-char generators), "s1 s2"
or "(s1 s2)^3"; quote expressions containing spaces, parentheses or '^'.
The environment variable INVO_MAX_VERTICES overrides the vertex budget.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import catalog as catalog_mod
from . import companion as companion_mod
from . import cycles as cycles_mod
from . import weakorder
from .engine import DEFAULT_MAX_VERTICES, build_ball
from .errors import InvoError, OutOfRadius, ParseError
from .presentation import (
    classify_rank3,
    has_sign_character,
    is_two_recognizable,
    parse_presentation,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_UNRESOLVED = 3


def _max_vertices():
    raw = os.environ.get("INVO_MAX_VERTICES", "").strip()
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ParseError(f"INVO_MAX_VERTICES must be an integer, got {raw!r}")
    return DEFAULT_MAX_VERTICES


def _add_input_args(sub):
    g = sub.add_mutually_exclusive_group(required=True)
    g.add_argument("--file", help="path to a presentation in the DSL")
    g.add_argument("--inline", help="presentation DSL given inline")
    g.add_argument("--catalog", help="catalog name, e.g. honeycomb or rank3,iii,3,2")


def _load_presentation(args):
    if args.file:
        with open(args.file, "r", encoding="utf-8") as fh:
            return parse_presentation(fh.read())
    if args.inline:
        return parse_presentation(args.inline)
    parts = args.catalog.split(",")
    return catalog_mod.get(parts[0], *parts[1:]).presentation


def _build(args, p, radius=None, workspace=None):
    r = args.radius if radius is None else radius
    return build_ball(p, r, workspace_radius=workspace, max_vertices=_max_vertices())


def _emit(text, args):
    out = getattr(args, "output", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="invo", description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="word-level property checks")
    _add_input_args(s)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--eis", action="store_true", help="sign character existence")
    g.add_argument("--two-rec", action="store_true", help="2-recognizability")
    g.add_argument("--classify", action="store_true", help="rank-3 classification")

    s = sub.add_parser("ball", help="build a certified ball and export it")
    _add_input_args(s)
    s.add_argument("-r", "--radius", type=int, required=True)
    s.add_argument("--workspace", type=int, default=None)
    s.add_argument("--format", choices=("json", "dot", "png"), default="json")
    s.add_argument("-o", "--output", default=None)

    s = sub.add_parser("order", help="weak-order queries on a ball")
    _add_input_args(s)
    s.add_argument("-r", "--radius", type=int, required=True)
    s.add_argument("--workspace", type=int, default=None)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--meet", nargs=2, metavar=("W1", "W2"))
    g.add_argument("--join", nargs=2, metavar=("W1", "W2"))
    g.add_argument("--audit", type=int, metavar="L")
    g.add_argument("--descents", metavar="W")

    s = sub.add_parser("cycles", help="irreducible cycles and derived structures")
    _add_input_args(s)
    s.add_argument("-r", "--radius", type=int, required=True)
    s.add_argument("--workspace", type=int, default=None)
    s.add_argument("--max-len", type=int, default=None)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--extract", action="store_true")
    g.add_argument("--companion", action="store_true")
    g.add_argument("--coxeter-type", action="store_true")
    g.add_argument("--is-coxeter", action="store_true")
    s.add_argument("--format", choices=("text", "json", "dot"), default="text")
    s.add_argument("-o", "--output", default=None)

    s = sub.add_parser("compare", help="quasi-Coxeter test against the companion")
    _add_input_args(s)
    s.add_argument("-r", "--radius", type=int, required=True)
    s.add_argument("--workspace", type=int, default=None)
    s.add_argument("-o", "--output", default=None)

    s = sub.add_parser("growth", help="sphere sizes as CSV, optionally plotted")
    _add_input_args(s)
    s.add_argument("-r", "--radius", type=int, required=True)
    s.add_argument("--workspace", type=int, default=None)
    s.add_argument("--vs-companion", action="store_true")
    s.add_argument("--plot", metavar="FILE.png", default=None)
    s.add_argument("-o", "--output", default=None)

    s = sub.add_parser("voracious", help="voracious language membership")
    _add_input_args(s)
    s.add_argument("-r", "--radius", type=int, required=True)
    s.add_argument("--workspace", type=int, default=None)
    s.add_argument("--word", required=True)

    s = sub.add_parser("catalog", help="list catalog entries or show one")
    s.add_argument("name", nargs="?", default=None)

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0

    try:
        return _dispatch(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OutOfRadius as exc:
        print(f"unresolved within radius: {exc}", file=sys.stderr)
        return EXIT_UNRESOLVED
    except InvoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


def _dispatch(args) -> int:
    if args.command == "catalog":
        return _cmd_catalog(args)
    p = _load_presentation(args)
    return {
        "check": _cmd_check,
        "ball": _cmd_ball,
        "order": _cmd_order,
        "cycles": _cmd_cycles,
        "compare": _cmd_compare,
        "growth": _cmd_growth,
        "voracious": _cmd_voracious,
    }[args.command](args, p)


def _cmd_catalog(args) -> int:
    if args.name is None:
        for n in catalog_mod.names():
            print(n)
        return EXIT_OK
    parts = args.name.split(",")
    entry = catalog_mod.get(parts[0], *parts[1:])
    print(f"# {entry.name}: {entry.note}")
    sys.stdout.write(entry.presentation.serialize())
    return EXIT_OK


def _cmd_check(args, p) -> int:
    if args.eis:
        ok = has_sign_character(p)
        print(f"sign character: {'yes' if ok else 'no'}")
        return EXIT_OK if ok else EXIT_FAIL
    if args.two_rec:
        res = is_two_recognizable(p)
        if res:
            print("2-recognizable: yes")
            return EXIT_OK
        wit = ", ".join(p.word_to_str(w) for w in res.witness)
        print(f"2-recognizable: no (condition {res.condition}: {res.detail}; witness {wit})")
        return EXIT_FAIL
    cls = classify_rank3(p)
    if cls.family == "not-two-recognizable":
        v = cls.violation
        wit = ", ".join(p.word_to_str(w) for w in v.witness)
        print(f"NotTwoRecognizable (condition {v.condition}; witness {wit})")
        return EXIT_FAIL
    params = ", ".join("inf" if x == math.inf else str(x) for x in cls.params)
    names = "mnl"[: len(cls.params)]
    pretty = " ".join(f"{n}={v}" for n, v in zip(names, params.split(", ")))
    print(f"Type{cls.family} {pretty}")
    print(f"relabeling: {cls.relabeling}")
    return EXIT_OK


def _cmd_ball(args, p) -> int:
    b = _build(args, p, workspace=args.workspace)
    if args.format == "json":
        _emit(json.dumps(b.to_json_dict(), indent=2) + "\n", args)
    elif args.format == "dot":
        _emit(weakorder.to_dot(weakorder.orient(b), max_level=args.radius), args)
    else:
        from . import plotting

        out = args.output or "ball.png"
        plotting.hasse_figure(weakorder.orient(b), out, max_level=args.radius)
        print(f"wrote {out}")
    return EXIT_OK


def _cmd_order(args, p) -> int:
    b = _build(args, p, workspace=args.workspace)
    h = weakorder.orient(b)

    def vertex(text):
        w = p.word_from_str(text)
        v = b.eval_word(w)
        if v is None or b.lengths[v] > h.usable:
            raise OutOfRadius(f"word {text!r} leaves the usable region")
        return v

    if args.meet:
        m = weakorder.meet(h, tuple(vertex(t) for t in args.meet))
        if isinstance(m, weakorder.NoMeet):
            wit = ", ".join(p.word_to_str(b.norms[v]) for v in m.antichain)
            print(f"NoMeet (maximal common lower bounds: {wit})")
            return EXIT_FAIL
        print(p.word_to_str(b.norms[m]))
        return EXIT_OK
    if args.join:
        j = weakorder.join(h, tuple(vertex(t) for t in args.join))
        if isinstance(j, weakorder.UnknownWithinRadius):
            print(f"UnknownWithinRadius({j.radius})")
            return EXIT_UNRESOLVED
        if isinstance(j, weakorder.Unbounded):
            print("Unbounded")
            return EXIT_FAIL
        if isinstance(j, weakorder.NoJoin):
            wit = ", ".join(p.word_to_str(b.norms[v]) for v in j.minimal_upper_bounds)
            print(f"NoJoin (minimal upper bounds: {wit})")
            return EXIT_FAIL
        print(p.word_to_str(b.norms[j]))
        return EXIT_OK
    if args.audit is not None:
        res = weakorder.audit_semilattice(h, args.audit)
        if res.ok:
            print(f"pass at level {args.audit}")
            return EXIT_OK
        u, v = res.witness
        print(
            f"fail at level {args.audit}: no meet for "
            f"({p.word_to_str(b.norms[u])}, {p.word_to_str(b.norms[v])})"
        )
        return EXIT_FAIL
    d_left, d_right = weakorder.descents(h, vertex(args.descents))
    print("D_L:", " ".join(sorted(p.generators[s] for s in d_left)) or "-")
    print("D_R:", " ".join(sorted(p.generators[s] for s in d_right)) or "-")
    return EXIT_OK


def _cmd_cycles(args, p) -> int:
    b = _build(args, p, workspace=args.workspace)
    if args.extract:
        q = cycles_mod.extract_presentation(b, args.max_len)
        _emit(q.serialize(), args)
        return EXIT_OK
    if args.companion or args.coxeter_type:
        g = (
            cycles_mod.companion_graph(b, args.max_len and args.max_len // 2)
            if args.companion
            else cycles_mod.coxeter_type(b, args.radius)
        )
        if args.format == "dot":
            _emit(g.to_dot(), args)
        else:
            _emit(json.dumps(g.to_json_dict(), indent=2) + "\n", args)
        return EXIT_OK
    if args.is_coxeter:
        v = cycles_mod.is_coxeter(b, args.radius)
        print(f"{v.verdict}: {v.reason}")
        return {"yes": EXIT_OK, "no": EXIT_FAIL, "unresolved": EXIT_UNRESOLVED}[v.verdict]
    found = cycles_mod.irreducible_cycles_at(b, args.max_len)
    print(f"{len(found)} irreducible cycles at the identity")
    for c in sorted(found, key=lambda c: (c.length, c.vertices)):
        print(f"  length {c.length}  word {p.word_to_str(c.nu)}")
    return EXIT_OK


def _cmd_compare(args, p) -> int:
    b = _build(args, p, workspace=args.workspace)
    comp = cycles_mod.companion_graph(b)
    if not comp.is_resolved():
        print(
            "companion graph unresolved: " + json.dumps(comp.to_json_dict()),
            file=sys.stderr,
        )
        return EXIT_UNRESOLVED
    cp = companion_mod.companion_presentation(comp)
    bc = build_ball(cp, args.radius + 1, max_vertices=_max_vertices())
    hw, hc = weakorder.orient(b), weakorder.orient(bc)
    res = companion_mod.quasi_coxeter_test(hw, hc, args.radius)
    if res.ok:
        pairs = sorted(
            [p.word_to_str(b.norms[u]), cp.word_to_str(bc.norms[v])]
            for u, v in res.mapping.items()
        )
        _emit(json.dumps({"isomorphic_to_radius": args.radius, "map": pairs}, indent=2) + "\n", args)
        return EXIT_OK
    print(f"not isomorphic: first failure at radius {res.failed_at}")
    return EXIT_FAIL


def _cmd_growth(args, p) -> int:
    b = _build(args, p, workspace=args.workspace)
    coeffs = companion_mod.growth_coefficients(b, args.radius)
    series = {"count": coeffs}
    if args.vs_companion:
        series = {"system": coeffs}
        comp = cycles_mod.companion_graph(b)
        if not comp.is_resolved():
            print("companion graph unresolved; widen the ball", file=sys.stderr)
            return EXIT_UNRESOLVED
        cp = companion_mod.companion_presentation(comp)
        bc = build_ball(cp, args.radius, max_vertices=_max_vertices())
        series["companion"] = companion_mod.growth_coefficients(bc, args.radius)
    lines = ["radius," + ",".join(series)]
    for r in range(args.radius + 1):
        lines.append(f"{r}," + ",".join(str(series[k][r]) for k in series))
    _emit("\n".join(lines) + "\n", args)
    if args.plot:
        from . import plotting

        plotting.growth_figure(series, args.plot)
        print(f"wrote {args.plot}", file=sys.stderr)
    return EXIT_OK


def _cmd_voracious(args, p) -> int:
    if not companion_mod.is_coxeter_presentation(p):
        print(
            "error: the voracious machinery needs a Coxeter presentation "
            "(every relator an alternating two-letter power); for a "
            "quasi-Coxeter system transport walls via the library API",
            file=sys.stderr,
        )
        return EXIT_USAGE
    b = _build(args, p, workspace=args.workspace)
    wallset = companion_mod.walls(b, b.usable_radius if b.closed else (b.radius - 1) // 2)
    sep = companion_mod.WallSeparation(b, wallset)
    word = p.word_from_str(args.word)
    member = companion_mod.voracious_member(b, sep, word)
    g = b.eval_word(word)
    chain = []
    v = g
    while v != 0:
        v = companion_mod.voracious_projection(b, sep, v)
        chain.append(p.word_to_str(b.norms[v]))
    print(f"element: {p.word_to_str(b.norms[g])}")
    print(f"projection chain: {' <- '.join(chain) if chain else '-'}")
    print(f"member: {'yes' if member else 'no'}")
    return EXIT_OK if member else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
