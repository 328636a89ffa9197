"""Command-line front end.

Exit codes: 0 success (or object valid), 1 validation failure, 2 parse
error, 3 precondition violation.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import analysis, constructions, crossed, gset, weyl
from .finite import FinGroup, PreconditionError, check_unitarity
from .formats import ParseError, dump_object, load_object, parse_category, parse_group

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(f"usage: {message}")


def _read(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _emit(args, out, rows, header=None):
    """Print records one per line; tsv mode joins fields with tabs."""
    if args.format == "tsv":
        if header:
            out.write("\t".join(header) + "\n")
        for row in rows:
            out.write("\t".join(str(x) for x in row) + "\n")
    else:
        for row in rows:
            out.write(" ".join(str(x) for x in row) + "\n")


def _write_object(args, out, X):
    text = dump_object(X)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        out.write(f"wrote {args.output}\n")
    else:
        out.write(text)


def _group_of_category(C) -> FinGroup:
    if not C.is_one_object() or C.dagger is None or not check_unitarity(C).holds:
        raise PreconditionError(f"--twist needs a one-object groupoid with dagger = inverse; {C.name} is not")
    k = C.size
    mul = tuple(tuple(C.comp[a, b] for b in range(k)) for a in range(k))
    return FinGroup(C.name, C.morphisms, mul)


def cmd_bar(args, out):
    G = parse_group(_read(args.group))
    _write_object(args, out, constructions.bar_construction(G, args.family, args.max_dim))
    return EXIT_OK


def cmd_nerve(args, out):
    family = weyl.Family.parse(args.family)
    if args.group:
        G = parse_group(_read(args.group))
        C = None
    else:
        C = parse_category(_read(args.category))
        G = _group_of_category(C) if args.twist is not None else None
    if args.twist is not None or (args.twisted and C is None):
        z = args.twist if args.twist is not None else G.names[G.identity]
        if z not in G.names:
            raise PreconditionError(f"twist element {z!r} is not an element of {G.name}")
        X = constructions.twisted_bar(family, G, z, args.max_dim)
    elif C is None:
        X = constructions.bar_construction(G, family, args.max_dim)
    elif args.twisted:
        X = constructions.twisted_categorical_nerve(family, C, args.max_dim)
    elif family is weyl.Family.TRIVIAL:
        X = constructions.classical_nerve(C, args.max_dim)
    elif family is weyl.Family.CYCLIC:
        X = constructions.cyclic_nerve(C, args.max_dim)
    elif family is weyl.Family.DIHEDRAL:
        X = constructions.dihedral_nerve(C, args.max_dim)
    elif family is weyl.Family.REFLEXIVE:
        X = gset.restrict(constructions.dihedral_nerve(C, args.max_dim), family)
    else:
        X = constructions.one_object_nerve(C, family, args.max_dim)
    _write_object(args, out, X)
    return EXIT_OK


def cmd_verify(args, out):
    X = load_object(_read(args.object))
    report = gset.validate_truncation(X)
    if report.ok:
        _emit(args, out, [("valid", X.family.value, X.N, report.checked)],
              ["status", "family", "N", "checks"])
        return EXIT_OK
    rows = [("invalid", f.level, f.relation, ",".join(f.element) or "-", f.count) for f in report.failures]
    _emit(args, out, rows, ["status", "level", "relation", "element", "count"])
    return EXIT_INVALID


def cmd_orbits(args, out):
    X = load_object(_read(args.object))
    if not 0 <= args.dim <= X.N:
        raise PreconditionError(f"--dim {args.dim} outside 0..{X.N}")
    orbits = gset.orbit_set(X, args.dim)
    rows = [(k, len(o), " ".join("(" + ",".join(X.levels[args.dim][x]) + ")" for x in o))
            for k, o in enumerate(orbits)]
    _emit(args, out, rows, ["orbit", "size", "members"])
    try:
        burnside = analysis.burnside_count(X, args.dim)
    except ValueError:
        burnside = "n/a"
    _emit(args, out, [("count", len(orbits), "burnside", burnside)])
    return EXIT_OK


def cmd_homology(args, out):
    X = load_object(_read(args.object))
    if X.N < args.max_deg + 1:
        raise PreconditionError(f"--max-deg {args.max_deg} needs an object built to dimension {args.max_deg + 1}")
    groups = analysis.homology(X, args.max_deg)
    if args.format == "tsv":
        rows = [(k, h.free_rank, ",".join(map(str, h.torsion)) or "-") for k, h in enumerate(groups)]
        _emit(args, out, rows, ["degree", "free_rank", "torsion"])
    else:
        _emit(args, out, [(f"H{k}", str(h)) for k, h in enumerate(groups)])
    return EXIT_OK


def cmd_hom_count(args, out):
    if args.m < 0 or args.n < 0:
        raise PreconditionError("--m and --n must be non-negative")
    count = len(crossed.enumerate_hom(args.family, args.m, args.n))
    _emit(args, out, [(count,)], ["count"])
    return EXIT_OK


def cmd_group_order(args, out):
    if args.n < 0:
        raise PreconditionError("--n must be non-negative")
    _emit(args, out, [(weyl.closure_order(args.family, args.n),)], ["order"])
    return EXIT_OK


def cmd_decompose(args, out):
    family = weyl.Family.parse(args.family)
    word = tuple(args.word.split())
    for name in word:
        if name not in weyl.generator_names(family, args.n):
            raise PreconditionError(f"{name!r} is not a {family.value} generator at degree {args.n}")
    g = weyl.evaluate(word, args.n)
    kind, i = ("face", args.then_face) if args.then_face is not None else ("degeneracy", args.then_degeneracy)
    if i is None:
        raise PreconditionError("give --then-face or --then-degeneracy")
    if not 0 <= i <= args.n or (kind == "face" and args.n < 1):
        raise PreconditionError(f"index {i} out of range for degree {args.n}")
    j, h = crossed.derive_operator_exchange(g, kind, i)
    op = "d" if kind == "face" else "s"
    g_word = " ".join(weyl.generator_word(family, g)) or "id"
    h_word = " ".join(weyl.generator_word(family, h)) or "id"
    rows = [
        ("element", g_word, _perm_text(g)),
        ("exchange", f"{op}{i}", g_word, h_word, f"{op}{j}"),
        ("image", h_word, _perm_text(h)),
    ]
    _emit(args, out, rows)
    return EXIT_OK


def _perm_text(g) -> str:
    return " ".join(f"{'+' if s > 0 else '-'}{p}" for p, s in zip(g.perm, g.signs))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="crossnerve", description="Crossed simplicial group nerves and bar constructions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("text", "tsv"), default="text")
    families = [f.value for f in weyl.Family]

    s = sub.add_parser("bar", parents=[fmt], help="bar construction of a group")
    s.add_argument("--group", required=True)
    s.add_argument("--family", required=True, choices=families)
    s.add_argument("--max-dim", type=int, required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_bar)

    s = sub.add_parser("nerve", parents=[fmt], help="nerve of a category (or group)")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--category")
    src.add_argument("--group")
    s.add_argument("--family", required=True, choices=families)
    s.add_argument("--max-dim", type=int, default=3)
    s.add_argument("--twisted", action="store_true")
    s.add_argument("--twist")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_nerve)

    s = sub.add_parser("verify", parents=[fmt], help="validate a built object file")
    s.add_argument("object")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("orbits", parents=[fmt], help="orbits of the group action at one level")
    s.add_argument("object")
    s.add_argument("--dim", type=int, required=True)
    s.set_defaults(func=cmd_orbits)

    s = sub.add_parser("homology", parents=[fmt], help="integral homology of the underlying simplicial set")
    s.add_argument("object")
    s.add_argument("--max-deg", type=int, required=True)
    s.set_defaults(func=cmd_homology)

    s = sub.add_parser("hom-count", parents=[fmt], help="size of Hom([m], [n])")
    s.add_argument("--family", required=True, choices=families)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_hom_count)

    s = sub.add_parser("group-order", parents=[fmt], help="order of the family's group at degree n")
    s.add_argument("--family", required=True, choices=families)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_group_order)

    s = sub.add_parser("decompose", parents=[fmt], help="move a group element past a face or degeneracy")
    s.add_argument("--family", required=True, choices=families)
    s.add_argument("--n", type=int, required=True, help="degree the word acts on")
    s.add_argument("--word", required=True, help='generator word, e.g. "tau omega"')
    which = s.add_mutually_exclusive_group(required=True)
    which.add_argument("--then-face", type=int)
    which.add_argument("--then-degeneracy", type=int)
    s.set_defaults(func=cmd_decompose)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "max_dim", 0) is not None and getattr(args, "max_dim", 0) < 0:
            raise PreconditionError("--max-dim must be non-negative")
        return args.func(args, out)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except PreconditionError as exc:
        err.write(f"precondition violated: {exc}\n")
        return EXIT_PRECONDITION


def entry():  # pragma: no cover
    sys.exit(main())
