"""Line-oriented text formats for groups, categories and built objects.

Group file::

    group C2
    elements e a
    mul e a
    mul a e

Row ``g``, column ``h`` of the ``mul`` lines is ``g*h`` (g then h).

Category file::

    category walk
    objects x y
    mor f x y
    id x 1x
    comp f g h        # f then g equals h
    dagger f g

Built objects are written by :func:`dump_object` and read back by
:func:`load_object`. ``#`` starts a comment in every format.
"""
from __future__ import annotations

import numpy as np

from .finite import DaggerCategory, FinGroup, validate_dagger, validate_category, validate_group
from .gset import TruncatedCrossedSet
from .weyl import Family


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line, self.col = line, col
        where = "" if line is None else f"line {line}" + ("" if col is None else f", col {col}") + ": "
        super().__init__(where + message)


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            yield number, body, body.split()


def _col(body: str, token: str) -> int:
    return body.find(token) + 1


def _check_name(name, number, body):
    if "," in name:
        raise ParseError(f"name {name!r} may not contain ','", number, _col(body, name))


def parse_group(text: str) -> FinGroup:
    name, names, rows = None, None, []
    for number, body, tok in _lines(text):
        key = tok[0]
        if key == "group":
            if len(tok) != 2:
                raise ParseError("expected 'group <name>'", number, 1)
            name = tok[1]
        elif key == "elements":
            names = tok[1:]
            for x in names:
                _check_name(x, number, body)
            dup = {x for x in names if names.count(x) > 1}
            if dup:
                raise ParseError(f"duplicate element {sorted(dup)[0]!r}", number, _col(body, sorted(dup)[0]))
        elif key == "mul":
            if names is None:
                raise ParseError("'mul' before 'elements'", number, 1)
            if len(tok) - 1 != len(names):
                raise ParseError(f"row has {len(tok) - 1} entries, expected {len(names)}", number, 1)
            row = []
            for x in tok[1:]:
                if x not in names:
                    raise ParseError(f"unknown element {x!r}", number, _col(body, x))
                row.append(names.index(x))
            rows.append(tuple(row))
        else:
            raise ParseError(f"unknown keyword {key!r}", number, _col(body, key))
    if name is None or names is None:
        raise ParseError("missing 'group' or 'elements' line")
    if len(rows) != len(names):
        raise ParseError(f"{len(rows)} mul rows for {len(names)} elements")
    G = FinGroup(name, tuple(names), tuple(rows))
    report = validate_group(G)
    if not report.ok:
        raise ParseError(f"not a group: {report.failures[0]}")
    return G


def parse_category(text: str) -> DaggerCategory:
    name, objects = None, None
    mors, src, tgt = [], [], []
    ids, comp, dagger = {}, {}, {}

    def mor(x, number, body):
        if x not in mors:
            raise ParseError(f"unknown morphism {x!r}", number, _col(body, x))
        return mors.index(x)

    for number, body, tok in _lines(text):
        key, args = tok[0], tok[1:]
        arity = {"category": 1, "mor": 3, "id": 2, "comp": 3, "dagger": 2}
        if key in arity and len(args) != arity[key]:
            raise ParseError(f"'{key}' takes {arity[key]} argument(s)", number, 1)
        if key == "category":
            name = args[0]
        elif key == "objects":
            objects = args
            if len(set(objects)) != len(objects):
                raise ParseError("duplicate object", number, 1)
        elif key == "mor":
            if objects is None:
                raise ParseError("'mor' before 'objects'", number, 1)
            f, a, b = args
            _check_name(f, number, body)
            if f in mors:
                raise ParseError(f"duplicate morphism {f!r}", number, _col(body, f))
            for x in (a, b):
                if x not in objects:
                    raise ParseError(f"unknown object {x!r}", number, _col(body, x))
            mors.append(f)
            src.append(objects.index(a))
            tgt.append(objects.index(b))
        elif key == "id":
            x, f = args
            if objects is None or x not in objects:
                raise ParseError(f"unknown object {x!r}", number, _col(body, x))
            ids[objects.index(x)] = mor(f, number, body)
        elif key == "comp":
            f, g, h = (mor(x, number, body) for x in args)
            if (f, g) in comp:
                raise ParseError(f"composite {args[0]};{args[1]} given twice", number, 1)
            comp[f, g] = h
        elif key == "dagger":
            f, g = (mor(x, number, body) for x in args)
            dagger[f] = g
        else:
            raise ParseError(f"unknown keyword {key!r}", number, _col(body, key))
    if name is None or objects is None:
        raise ParseError("missing 'category' or 'objects' line")
    missing = [x for i, x in enumerate(objects) if i not in ids]
    if missing:
        raise ParseError(f"no identity for object {missing[0]!r}")
    if dagger and len(dagger) != len(mors):
        lacking = next(m for i, m in enumerate(mors) if i not in dagger)
        raise ParseError(f"dagger not given for {lacking!r}")
    C = DaggerCategory(
        name=name, objects=tuple(objects), morphisms=tuple(mors), src=tuple(src), tgt=tuple(tgt),
        ids=tuple(ids[i] for i in range(len(objects))), comp=comp,
        dagger=tuple(dagger[i] for i in range(len(mors))) if dagger else None,
    )
    report = validate_dagger(C) if dagger else validate_category(C)
    if not report.ok:
        raise ParseError(f"not a {'dagger ' if dagger else ''}category: {report.failures[0]}")
    return C


def group_to_text(G: FinGroup) -> str:
    lines = [f"group {G.name}", "elements " + " ".join(G.names)]
    lines += ["mul " + " ".join(G.names[x] for x in row) for row in G.mul]
    return "\n".join(lines) + "\n"


def category_to_text(C: DaggerCategory) -> str:
    lines = [f"category {C.name}", "objects " + " ".join(C.objects)]
    lines += [f"mor {m} {C.objects[C.src[i]]} {C.objects[C.tgt[i]]}" for i, m in enumerate(C.morphisms)]
    lines += [f"id {x} {C.morphisms[C.ids[i]]}" for i, x in enumerate(C.objects)]
    M = C.morphisms
    lines += [f"comp {M[f]} {M[g]} {M[h]}" for (f, g), h in sorted(C.comp.items())]
    if C.dagger is not None:
        lines += [f"dagger {M[f]} {M[g]}" for f, g in enumerate(C.dagger)]
    return "\n".join(lines) + "\n"


# built objects -----------------------------------------------------------------

def dump_object(X: TruncatedCrossedSet) -> str:
    out = [f"crossed-set {X.family.value} {X.N}", f"name {X.name or '-'}"]
    for n, level in enumerate(X.levels):
        out.append(f"level {n} {len(level)}")
        out += ["x " + (",".join(lab) if lab else "-") for lab in level]
    for (n, i), arr in sorted(X.faces.items()):
        out.append(f"face {n} {i} " + " ".join(map(str, arr.tolist())))
    for (n, i), arr in sorted(X.degens.items()):
        out.append(f"degen {n} {i} " + " ".join(map(str, arr.tolist())))
    for (n, g), arr in sorted(X.actions.items()):
        out.append(f"act {n} {g} " + " ".join(map(str, arr.tolist())))
    out.append("end")
    return "\n".join(out) + "\n"


def load_object(text: str) -> TruncatedCrossedSet:
    family, N, name = None, None, ""
    levels: list[list[tuple[str, ...]]] = []
    expected = []
    faces, degens, actions = {}, {}, {}
    ended = False

    def ints(tok, number, k):
        try:
            return np.array([int(v) for v in tok[k:]], dtype=np.int64)
        except ValueError as exc:
            raise ParseError(f"bad index ({exc})", number) from None

    def num(x, number):
        try:
            return int(x)
        except ValueError:
            raise ParseError(f"expected an integer, got {x!r}", number) from None

    for number, body, tok in _lines(text):
        key = tok[0]
        if ended:
            raise ParseError("content after 'end'", number, 1)
        if key == "crossed-set":
            if len(tok) != 3:
                raise ParseError("expected 'crossed-set <family> <N>'", number, 1)
            try:
                family = Family.parse(tok[1])
            except ValueError as exc:
                raise ParseError(str(exc), number, _col(body, tok[1])) from None
            N = num(tok[2], number)
        elif family is None:
            raise ParseError("file must start with 'crossed-set'", number, 1)
        elif key == "name":
            name = "" if tok[1:] == ["-"] else " ".join(tok[1:])
        elif key == "level":
            n, count = num(tok[1], number), num(tok[2], number)
            if n != len(levels):
                raise ParseError(f"level {n} out of order", number, 1)
            levels.append([])
            expected.append(count)
        elif key == "x":
            if not levels or len(levels[-1]) >= expected[-1]:
                raise ParseError("simplex outside a level block", number, 1)
            levels[-1].append(() if tok[1:] == ["-"] else tuple(tok[1].split(",")))
        elif key in ("face", "degen"):
            n, i = num(tok[1], number), num(tok[2], number)
            (faces if key == "face" else degens)[n, i] = ints(tok, number, 3)
        elif key == "act":
            actions[num(tok[1], number), tok[2]] = ints(tok, number, 3)
        elif key == "end":
            ended = True
        else:
            raise ParseError(f"unknown keyword {key!r}", number, _col(body, key))
    if not ended:
        raise ParseError("missing 'end' (truncated file?)")
    if N is None or len(levels) != N + 1:
        raise ParseError(f"expected {N + 1 if N is not None else '?'} levels, found {len(levels)}")
    for n, (level, count) in enumerate(zip(levels, expected)):
        if len(level) != count:
            raise ParseError(f"level {n} lists {len(level)} simplices, header says {count}")
    return TruncatedCrossedSet(family, levels, faces, degens, actions, name)
