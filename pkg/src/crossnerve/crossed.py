"""Morphism calculus of the categories ΔG for the seven simple families.

A morphism ``[m] -> [n]`` is stored in canonical form ``i(phi) ∘ g`` with
``phi`` monotone and ``g`` an automorphism of ``[m]``. The only nontrivial
ingredient is moving an automorphism past a monotone map,
``g ∘ i(phi) = i(psi) ∘ h``, which :func:`act_on_monotone` computes by
sorting the image of ``phi`` and reading fibers forwards or backwards
according to the sign they land on.
"""
from __future__ import annotations

from dataclasses import dataclass

from .simplex import (
    MonotoneMap,
    all_monotone,
    compose_monotone,
    degeneracy,
    face,
    identity_map,
)
from .weyl import Family, SignedPerm, closure, compose, identity, member


def act_on_monotone(g: SignedPerm, phi: MonotoneMap) -> tuple[MonotoneMap, SignedPerm]:
    n = g.degree
    if phi.target != n:
        raise ValueError(f"map into [{phi.target}] cannot follow an automorphism of [{n}]")
    moved = [g.perm[v] for v in phi.values]
    psi = MonotoneMap(phi.source, n, tuple(sorted(moved)))
    first = {}
    for pos, v in enumerate(psi.values):
        first.setdefault(v, pos)
    fibers: dict[int, list[int]] = {}
    for j, v in enumerate(moved):
        fibers.setdefault(v, []).append(j)
    perm = [0] * (phi.source + 1)
    for v, js in fibers.items():
        if g.signs[phi.values[js[0]]] < 0:
            js = js[::-1]
        for offset, j in enumerate(js):
            perm[j] = first[v] + offset
    signs = tuple(g.signs[v] for v in phi.values)
    return psi, SignedPerm(tuple(perm), signs)


@dataclass(frozen=True, order=True)
class CrossedMorphism:
    family: Family
    mono: MonotoneMap
    grp: SignedPerm

    def __post_init__(self):
        if self.grp.degree != self.mono.source:
            raise ValueError("group part must act on the source of the monotone part")
        if not member(self.family, self.grp):
            raise ValueError(f"{self.grp!r} is not in the {self.family.value} group")

    @property
    def source(self) -> int:
        return self.mono.source

    @property
    def target(self) -> int:
        return self.mono.target


def monotone_morphism(family: Family, phi: MonotoneMap) -> CrossedMorphism:
    return CrossedMorphism(Family.parse(family), phi, identity(phi.source))


def automorphism(family: Family, g: SignedPerm) -> CrossedMorphism:
    return CrossedMorphism(Family.parse(family), identity_map(g.degree), g)


def compose_crossed(u2: CrossedMorphism, u1: CrossedMorphism) -> CrossedMorphism:
    """``u2 ∘ u1`` rewritten to canonical form."""
    if u1.family is not u2.family:
        raise ValueError("cannot compose morphisms of different families")
    if u1.target != u2.source:
        raise ValueError(f"[{u1.source}]->[{u1.target}] does not compose with [{u2.source}]->[{u2.target}]")
    psi, h = act_on_monotone(u2.grp, u1.mono)
    return CrossedMorphism(u1.family, compose_monotone(u2.mono, psi), compose(h, u1.grp))


def enumerate_hom(family: "Family | str", m: int, n: int) -> list[CrossedMorphism]:
    family = Family.parse(family)
    group = closure(family, m)
    return [CrossedMorphism(family, phi, g) for phi in all_monotone(m, n) for g in group]


def derive_operator_exchange(g: SignedPerm, kind: str, i: int) -> tuple[int, SignedPerm]:
    """Return ``(j, h)`` with ``g ∘ δ_i = δ_j ∘ h`` (or the same with codegeneracies).

    On a ΔG-set this reads ``d_i ∘ act_g = act_h ∘ d_j`` (resp. ``s_i``).
    """
    n = g.degree
    if kind == "face":
        phi = face(i, n)
    elif kind == "degeneracy":
        phi = degeneracy(i, n)
    else:
        raise ValueError(f"kind must be 'face' or 'degeneracy', not {kind!r}")
    psi, h = act_on_monotone(g, phi)
    if kind == "face":
        (j,) = set(range(n + 1)) - set(psi.values)
    else:
        j = next(k for k in range(n + 1) if psi.values.count(k) == 2)
    return j, h
