"""Finite groups and finite (dagger) categories given by tables.

Composition is stored diagrammatically: ``comp[(f, g)]`` is "f then g".
Group multiplication ``mul[a][b]`` is read the same way, so a group viewed
as a one-object category composes exactly like its multiplication table.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field


class PreconditionError(ValueError):
    """Input violates a documented precondition (e.g. a non-central twist)."""


@dataclass
class Report:
    """Outcome of a validator: ``ok`` iff ``failures`` is empty."""

    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class FinGroup:
    """Group on elements ``0..k-1`` with printable ``names``."""

    name: str
    names: tuple[str, ...]
    mul: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.names)

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def identity(self) -> int:
        for e in self.elements:
            if all(self.mul[e][g] == g == self.mul[g][e] for g in self.elements):
                return e
        raise ValueError(f"{self.name} has no identity")

    @property
    def inv(self) -> tuple[int, ...]:
        e = self.identity
        out = []
        for g in self.elements:
            out.append(next(h for h in self.elements if self.mul[g][h] == e))
        return tuple(out)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"{name!r} is not an element of {self.name}") from None

    def product(self, elems) -> int:
        acc = self.identity
        for g in elems:
            acc = self.mul[acc][g]
        return acc


def validate_group(G: FinGroup) -> Report:
    rep = Report()
    k = G.order
    if len(G.mul) != k or any(len(row) != k for row in G.mul):
        rep.failures.append("multiplication table is not square")
        return rep
    if any(not 0 <= x < k for row in G.mul for x in row):
        rep.failures.append("table entry outside the element set")
        return rep
    for a, b, c in itertools.product(range(k), repeat=3):
        if G.mul[G.mul[a][b]][c] != G.mul[a][G.mul[b][c]]:
            rep.failures.append(f"associativity fails at ({G.names[a]}, {G.names[b]}, {G.names[c]})")
            return rep
    try:
        e = G.identity
    except ValueError as exc:
        rep.failures.append(str(exc))
        return rep
    for g in range(k):
        if not any(G.mul[g][h] == e == G.mul[h][g] for h in range(k)):
            rep.failures.append(f"{G.names[g]} has no inverse")
    return rep


def center(G: FinGroup) -> list[int]:
    return [z for z in G.elements if all(G.mul[z][g] == G.mul[g][z] for g in G.elements)]


def element_order(G: FinGroup, z: int) -> int:
    e, x, k = G.identity, z, 1
    while x != e:
        x, k = G.mul[x][z], k + 1
    return k


# standard groups -------------------------------------------------------------

def cyclic_group(k: int) -> FinGroup:
    return FinGroup(f"C{k}", tuple(str(i) for i in range(k)),
                    tuple(tuple((a + b) % k for b in range(k)) for a in range(k)))


def symmetric_group(k: int) -> FinGroup:
    """``S_k`` as permutations of ``1..k``; ``a*b`` applies ``a`` then ``b``."""
    perms = sorted(itertools.permutations(range(k)))
    names = tuple(_cycle_name(p) for p in perms)
    index = {p: i for i, p in enumerate(perms)}
    mul = tuple(tuple(index[tuple(b[a[x]] for x in range(k))] for b in perms) for a in perms)
    return FinGroup(f"S{k}", names, mul)


def _cycle_name(p) -> str:
    seen, cycles = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = p[x]
        cycles.append("(" + "".join(cyc) + ")")
    return "".join(cycles) or "e"


def quaternion_group() -> FinGroup:
    names = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
    # unit quaternions as (sign, axis) with axis in 1, i, j, k
    basis = {"1": (1, "1"), "i": (1, "i"), "j": (1, "j"), "k": (1, "k")}
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }

    def split(name):
        return (-1, name[1:]) if name.startswith("-") else basis[name]

    def join(sign, axis):
        return axis if sign > 0 else "-" + axis

    mul = []
    for a in names:
        sa, xa = split(a)
        row = []
        for b in names:
            sb, xb = split(b)
            s, x = table[xa, xb]
            row.append(names.index(join(sa * sb * s, x)))
        mul.append(tuple(row))
    return FinGroup("Q8", names, tuple(mul))


# categories ------------------------------------------------------------------

@dataclass(frozen=True)
class DaggerCategory:
    """Finite category; ``dagger`` may be ``None`` for a plain category.

    Morphisms are ``0..k-1``; ``comp`` maps composable pairs ``(f, g)``
    (``tgt(f) == src(g)``) to "f then g".
    """

    name: str
    objects: tuple[str, ...]
    morphisms: tuple[str, ...]
    src: tuple[int, ...]
    tgt: tuple[int, ...]
    ids: tuple[int, ...]
    comp: dict
    dagger: tuple[int, ...] | None = None

    @property
    def size(self) -> int:
        return len(self.morphisms)

    def out_of(self, obj: int) -> list[int]:
        return [f for f in range(self.size) if self.src[f] == obj]

    def compose_path(self, arrows) -> int:
        arrows = list(arrows)
        acc = arrows[0]
        for f in arrows[1:]:
            acc = self.comp[acc, f]
        return acc

    def is_one_object(self) -> bool:
        return len(self.objects) == 1


def validate_category(C: DaggerCategory) -> Report:
    rep = Report()
    k = C.size
    for f in range(k):
        for g in range(k):
            composable = C.tgt[f] == C.src[g]
            if composable != ((f, g) in C.comp):
                what = "missing" if composable else "defined on a non-composable pair"
                rep.failures.append(f"composite {C.morphisms[f]};{C.morphisms[g]} {what}")
    if not rep.ok:
        return rep
    for (f, g), h in C.comp.items():
        if C.src[h] != C.src[f] or C.tgt[h] != C.tgt[g]:
            rep.failures.append(f"{C.morphisms[f]};{C.morphisms[g]} has wrong endpoints")
    for x, i in enumerate(C.ids):
        if C.src[i] != x or C.tgt[i] != x:
            rep.failures.append(f"identity of {C.objects[x]} is not an endomorphism of it")
            continue
        for f in range(k):
            if C.src[f] == x and C.comp[i, f] != f:
                rep.failures.append(f"left unit fails for {C.morphisms[f]}")
            if C.tgt[f] == x and C.comp[f, i] != f:
                rep.failures.append(f"right unit fails for {C.morphisms[f]}")
    for (f, g), fg in C.comp.items():
        for h in range(k):
            if C.src[h] == C.tgt[g] and C.comp[fg, h] != C.comp[f, C.comp[g, h]]:
                rep.failures.append(
                    f"associativity fails at ({C.morphisms[f]}, {C.morphisms[g]}, {C.morphisms[h]})")
    return rep


def validate_dagger(C: DaggerCategory) -> Report:
    rep = validate_category(C)
    if not rep.ok:
        return rep
    if C.dagger is None:
        rep.failures.append("no dagger given")
        return rep
    d = C.dagger
    for f in range(C.size):
        if C.src[d[f]] != C.tgt[f] or C.tgt[d[f]] != C.src[f]:
            rep.failures.append(f"dagger of {C.morphisms[f]} has wrong endpoints")
        if d[d[f]] != f:
            rep.failures.append(f"dagger is not involutive at {C.morphisms[f]}")
    for i in C.ids:
        if d[i] != i:
            rep.failures.append(f"dagger moves identity {C.morphisms[i]}")
    if not rep.ok:
        return rep
    for (f, g), fg in C.comp.items():
        if d[fg] != C.comp[d[g], d[f]]:
            rep.failures.append(f"dagger does not reverse {C.morphisms[f]};{C.morphisms[g]}")
    return rep


@dataclass
class UnitarityFlag:
    witnesses: list[int]

    @property
    def holds(self) -> bool:
        return not self.witnesses

    def __bool__(self):
        return self.holds


def check_unitarity(C: DaggerCategory) -> UnitarityFlag:
    """Strict unitarity: ``f`` then ``f†`` is the identity on ``src(f)``."""
    bad = [f for f in range(C.size) if C.comp[f, C.dagger[f]] != C.ids[C.src[f]]]
    return UnitarityFlag(bad)


def groupoid_from_group(G: FinGroup) -> DaggerCategory:
    k = G.order
    comp = {(a, b): G.mul[a][b] for a in range(k) for b in range(k)}
    return DaggerCategory(
        name=f"B{G.name}", objects=("*",), morphisms=G.names,
        src=(0,) * k, tgt=(0,) * k, ids=(G.identity,), comp=comp, dagger=G.inv,
    )


def indiscrete_groupoid(G: FinGroup, objects=("x", "y")) -> DaggerCategory:
    """Objects ``objects``; ``Hom(a, b) = G`` for all pairs, composing by ``mul``.

    Morphism ``(a, b, g)`` then ``(b, c, h)`` is ``(a, c, g*h)``. Dagger is inverse
    with endpoints swapped.
    """
    objs = tuple(objects)
    mors = [(a, b, g) for a in range(len(objs)) for b in range(len(objs)) for g in G.elements]
    index = {m: i for i, m in enumerate(mors)}
    names = tuple(f"{objs[a]}{objs[b]}:{G.names[g]}" for a, b, g in mors)
    comp = {}
    for (a, b, g), i in index.items():
        for (b2, c, h), j in index.items():
            if b2 == b:
                comp[i, j] = index[a, c, G.mul[g][h]]
    inv = G.inv
    dagger = tuple(index[b, a, inv[g]] for a, b, g in mors)
    e = G.identity
    return DaggerCategory(
        name=f"I{len(objs)}{G.name}", objects=objs, morphisms=names,
        src=tuple(a for a, _, _ in mors), tgt=tuple(b for _, b, _ in mors),
        ids=tuple(index[x, x, e] for x in range(len(objs))), comp=comp, dagger=dagger,
    )


def monoid_category(name: str, names, mul, dagger=None) -> DaggerCategory:
    """One-object category from a monoid table (``mul[a][b]`` = a then b)."""
    k = len(names)
    e = next(i for i in range(k) if all(mul[i][g] == g == mul[g][i] for g in range(k)))
    comp = {(a, b): mul[a][b] for a in range(k) for b in range(k)}
    return DaggerCategory(
        name=name, objects=("*",), morphisms=tuple(names), src=(0,) * k, tgt=(0,) * k,
        ids=(e,), comp=comp, dagger=None if dagger is None else tuple(dagger),
    )
