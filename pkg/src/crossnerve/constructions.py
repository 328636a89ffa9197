"""Bar constructions and categorical nerves as truncated ΔG-sets.

Loop-style objects (bar constructions, cyclic/dihedral/one-object nerves)
have ``n + 1`` arrows in degree ``n``::

    x0 -a0-> x1 -a1-> ... -> xn -an-> x0

with ``d_i`` composing ``a_i`` with ``a_{i+1}`` for ``i < n`` and ``d_n``
composing ``a_n`` with ``a_0`` into the first slot. Twisted objects are
classical nerves (``n`` arrows in degree ``n``) with a cyclic operator that
closes the chain up.
"""
from __future__ import annotations

import itertools

import numpy as np

from .finite import (
    DaggerCategory,
    FinGroup,
    PreconditionError,
    center,
    check_unitarity,
    element_order,
    groupoid_from_group,
    validate_category,
    validate_dagger,
    validate_group,
)
from .gset import TruncatedCrossedSet
from .weyl import Family, generator_names


def _assemble(family, name, levels, face, degen, acts, label) -> TruncatedCrossedSet:
    """Turn per-simplex rules into index tables. ``levels[n]`` must be sorted."""
    index = [{x: k for k, x in enumerate(level)} for level in levels]
    N = len(levels) - 1

    def table(n_src, n_dst, rule):
        dst = index[n_dst]
        return np.fromiter((dst[rule(x)] for x in levels[n_src]), dtype=np.int64,
                           count=len(levels[n_src]))

    faces = {(n, i): table(n, n - 1, lambda x, n=n, i=i: face(n, i, x))
             for n in range(1, N + 1) for i in range(n + 1)}
    degens = {(n, i): table(n, n + 1, lambda x, n=n, i=i: degen(n, i, x))
              for n in range(N) for i in range(n + 1)}
    actions = {(n, g): table(n, n, lambda x, n=n, g=g: acts[g](n, x))
               for n in range(N + 1) for g in generator_names(family, n)}
    labels = [[label(n, x) for x in level] for n, level in enumerate(levels)]
    return TruncatedCrossedSet(family, labels, faces, degens, actions, name)


def _require(report, what):
    if not report.ok:
        raise PreconditionError(f"{what}: {report.failures[0]}")


# loop-style ------------------------------------------------------------------

def _loops(C: DaggerCategory, length: int) -> list[tuple[int, ...]]:
    out = []

    def extend(path):
        if len(path) == length:
            if C.tgt[path[-1]] == C.src[path[0]]:
                out.append(tuple(path))
            return
        for f in C.out_of(C.tgt[path[-1]]):
            extend(path + [f])

    for f in range(C.size):
        extend([f])
    return sorted(out)


def _loop_object(C: DaggerCategory, family: Family, N: int, extra_acts, name) -> TruncatedCrossedSet:
    comp = C.comp

    def face(n, i, a):
        if i < n:
            return a[:i] + (comp[a[i], a[i + 1]],) + a[i + 2:]
        return (comp[a[n], a[0]],) + a[1:n]

    def degen(n, i, a):
        return a[:i + 1] + (C.ids[C.tgt[a[i]]],) + a[i + 1:]

    acts = {"tau": lambda n, a: a[-1:] + a[:-1]}
    acts.update(extra_acts)
    levels = [_loops(C, n + 1) for n in range(N + 1)]
    return _assemble(family, name, levels, face, degen, acts,
                     lambda n, a: tuple(C.morphisms[f] for f in a))


def _dagger_acts(dag, anchored=True):
    def omega(n, a):
        if anchored:
            # reversal anchored at the first arrow: (a0†, an†, ..., a1†)
            return (dag[a[0]],) + tuple(dag[f] for f in reversed(a[1:]))
        # plain reversal; normalizes the sigma swaps as the reflexosymmetric group requires
        return tuple(dag[f] for f in reversed(a))

    def kappa(n, a):
        return (dag[a[0]],) + a[1:]

    def sigma(i):
        def act(n, a):
            return a[:i - 1] + (dag[a[i]], dag[a[i - 1]]) + a[i + 1:]
        return act

    return omega, kappa, sigma


def _sigma_acts(N, sigma):
    return {f"sigma{i}": sigma(i) for i in range(1, N + 1)}


def bar_construction(G: FinGroup, family, N: int) -> TruncatedCrossedSet:
    """``G^{n+1}`` in degree ``n`` with the family's generator actions.

    tau rotates ``(g0..gn) -> (gn, g0, ..., g_{n-1})``; sigma_i swaps
    ``g_{i-1}`` and ``g_i``; kappa inverts ``g0``. For the reflexive and
    dihedral families omega is the inverse reversal anchored at ``g0``,
    ``(g0^-1, gn^-1, ..., g1^-1)``, which is what ``d_i omega = omega d_{n-i}``
    forces with these faces; the reflexosymmetric family uses the plain
    reversal ``(gn^-1, ..., g0^-1)`` so that omega normalizes the sigmas.

    Only the trivial, cyclic, reflexive and dihedral structures satisfy the
    crossed face/degeneracy exchange laws; the sigma and kappa actions
    respect the group presentations but not the faces (see
    :func:`~crossnerve.gset.validate_truncation`).
    """
    family = Family.parse(family)
    _require(validate_group(G), f"{G.name} is not a group")
    inv = G.inv
    omega_, kappa_, _ = _dagger_acts(inv, anchored=family is not Family.REFLEXOSYMMETRIC)

    def sigma(i):
        return lambda n, a: a[:i - 1] + (a[i], a[i - 1]) + a[i + 1:]

    acts = {"omega": omega_, "kappa": kappa_, **_sigma_acts(N, sigma)}
    C = groupoid_from_group(G)
    X = _loop_object(C, family, N, acts, f"bar({G.name},{family.value})")
    X.levels = [[tuple(G.names[g] for g in _tup(G, lab)) for lab in level] for level in X.levels]
    return X


def _tup(G, labels):
    return tuple(G.index(x) for x in labels)


def cyclic_nerve(C: DaggerCategory, N: int) -> TruncatedCrossedSet:
    _require(validate_category(C), f"{C.name} is not a category")
    return _loop_object(C, Family.CYCLIC, N, {}, f"cyclic_nerve({C.name})")


def dihedral_nerve(C: DaggerCategory, N: int) -> TruncatedCrossedSet:
    _require(validate_dagger(C), f"{C.name} is not a dagger category")
    omega_, _, _ = _dagger_acts(C.dagger)
    return _loop_object(C, Family.DIHEDRAL, N, {"omega": omega_}, f"dihedral_nerve({C.name})")


def one_object_nerve(M: DaggerCategory, family, N: int) -> TruncatedCrossedSet:
    """Symmetric, reflexosymmetric or Weyl nerve of a one-object dagger category.

    sigma_i replaces ``(a_{i-1}, a_i)`` by ``(a_i†, a_{i-1}†)``; kappa daggers
    ``a0``; omega (reflexosymmetric) is the plain dagger reversal.
    """
    family = Family.parse(family)
    if family not in (Family.SYMMETRIC, Family.REFLEXOSYMMETRIC, Family.WEYL):
        raise PreconditionError(f"one-object nerves exist for symmetric/reflexosymmetric/weyl, not {family.value}")
    if not M.is_one_object():
        raise PreconditionError(f"{M.name} has {len(M.objects)} objects; exactly one is required")
    _require(validate_dagger(M), f"{M.name} is not a dagger category")
    omega_, kappa_, sigma = _dagger_acts(M.dagger, anchored=False)
    acts = {"omega": omega_, "kappa": kappa_, **_sigma_acts(N, sigma)}
    return _loop_object(M, family, N, acts, f"{family.value}_nerve({M.name})")


# classical and twisted nerves ---------------------------------------------------

def _chains(C: DaggerCategory, n: int):
    """Chains of ``n`` composable arrows as ``(start_object, arrows)``."""
    if n == 0:
        return [(x, ()) for x in range(len(C.objects))]
    out = []

    def extend(path):
        if len(path) == n:
            out.append((C.src[path[0]], tuple(path)))
            return
        for f in C.out_of(C.tgt[path[-1]]):
            extend(path + [f])

    for f in range(C.size):
        extend([f])
    return sorted(out, key=lambda c: c[1])


def _nerve_object(C: DaggerCategory, family: Family, N: int, acts, name) -> TruncatedCrossedSet:
    comp, ids, tgt = C.comp, C.ids, C.tgt

    def vertex(c, k):
        x, a = c
        return x if k == 0 else tgt[a[k - 1]]

    def face(n, i, c):
        x, a = c
        if n == 1:
            return (vertex(c, 1 - i), ())
        if i == 0:
            return (tgt[a[0]], a[1:])
        if i == n:
            return (x, a[:-1])
        return (x, a[:i - 1] + (comp[a[i - 1], a[i]],) + a[i + 1:])

    def degen(n, i, c):
        x, a = c
        return (x, a[:i] + (ids[vertex(c, i)],) + a[i:])

    def label(n, c):
        x, a = c
        return (C.objects[x],) if n == 0 else tuple(C.morphisms[f] for f in a)

    levels = [_chains(C, n) for n in range(N + 1)]
    return _assemble(family, name, levels, face, degen, acts, label)


def classical_nerve(C: DaggerCategory, N: int) -> TruncatedCrossedSet:
    _require(validate_category(C), f"{C.name} is not a category")
    return _nerve_object(C, Family.TRIVIAL, N, {}, f"nerve({C.name})")


def _twisted_acts(C: DaggerCategory, close):
    """tau/omega on chains; ``close(a)`` is the arrow ``x_n -> x_0`` closing ``a``."""
    dag, tgt = C.dagger, C.tgt

    def tau(n, c):
        if n == 0:
            return c
        a = c[1]
        return (tgt[a[-1]], (close(a),) + a[:-1])

    def omega(n, c):
        if n == 0:
            return c
        a = c[1]
        return (tgt[a[-1]], tuple(dag[f] for f in reversed(a)))

    return {"tau": tau, "omega": omega}


def twisted_categorical_nerve(family, C: DaggerCategory, N: int) -> TruncatedCrossedSet:
    """Classical nerve with ``tau(a1..an) = ((a1;...;an)†, a1, ..., a_{n-1})``.

    The dihedral version adds ``omega(a1..an) = (an†, ..., a1†)``. Requires a
    dagger category whose morphisms are all strictly unitary.
    """
    family = Family.parse(family)
    if family not in (Family.CYCLIC, Family.DIHEDRAL):
        raise PreconditionError(f"twisted nerves are cyclic or dihedral, not {family.value}")
    _require(validate_dagger(C), f"{C.name} is not a dagger category")
    flag = check_unitarity(C)
    if not flag.holds:
        bad = ", ".join(C.morphisms[f] for f in flag.witnesses)
        raise PreconditionError(f"{C.name} has non-unitary morphisms: {bad}")
    acts = _twisted_acts(C, lambda a: C.dagger[C.compose_path(a)])
    return _nerve_object(C, family, N, acts, f"twisted_{family.value}_nerve({C.name})")


def twisted_bar(family, G: FinGroup, z, N: int, *, check: bool = True) -> TruncatedCrossedSet:
    """z-twisted nerve of ``G``: ``tau(g1..gn) = (z (g1...gn)^-1, g1, ..., g_{n-1})``.

    The dihedral version uses ``omega(g1..gn) = (gn^-1, ..., g1^-1)`` and needs
    ``z^2 = 1``. ``z`` may be an element index or name. ``check=False``
    skips the centrality/order preconditions (for negative tests).
    """
    family = Family.parse(family)
    if family not in (Family.CYCLIC, Family.DIHEDRAL):
        raise PreconditionError(f"twisted nerves are cyclic or dihedral, not {family.value}")
    _require(validate_group(G), f"{G.name} is not a group")
    if isinstance(z, str):
        z = G.index(z)
    if check:
        if z not in center(G):
            raise PreconditionError(f"twist element {G.names[z]} is not central in {G.name}")
        if family is Family.DIHEDRAL and element_order(G, z) > 2:
            raise PreconditionError(
                f"twist element {G.names[z]} has order {element_order(G, z)}; dihedral needs order <= 2")
    C = groupoid_from_group(G)
    inv, mul = G.inv, G.mul
    acts = _twisted_acts(C, lambda a: mul[z][inv[G.product(a)]])
    X = _nerve_object(C, family, N, acts, f"twisted_bar({G.name},{G.names[z]},{family.value})")
    return X


def nerve_levels_equal(X: TruncatedCrossedSet, Y: TruncatedCrossedSet) -> bool:
    """Same labels, faces and degeneracies (actions ignored)."""
    return (
        X.levels == Y.levels
        and X.faces.keys() == Y.faces.keys()
        and all(np.array_equal(X.faces[k], Y.faces[k]) for k in X.faces)
        and X.degens.keys() == Y.degens.keys()
        and all(np.array_equal(X.degens[k], Y.degens[k]) for k in X.degens)
    )
