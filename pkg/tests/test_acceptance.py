"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run ``python tests/test_acceptance.py`` for the summary alone; under pytest
the lines are also repeated in the terminal summary.
"""
import io
import itertools
import os
import sys
import time
from math import comb
from pathlib import Path

import numpy as np
import pytest

from crossnerve.analysis import HomologyGroup, burnside_count, homology
from crossnerve.cli import main
from crossnerve.constructions import (
    bar_construction, classical_nerve, twisted_bar, twisted_categorical_nerve,
)
from crossnerve.crossed import compose_crossed, enumerate_hom
from crossnerve.finite import (
    PreconditionError, cyclic_group, groupoid_from_group, indiscrete_groupoid,
    monoid_category, quaternion_group, symmetric_group,
)
from crossnerve.gset import orbit_set, underlying_simplicial, validate_truncation
from crossnerve.weyl import Family, closure_order, evaluate, relations

sys.path.insert(0, str(Path(__file__).parent))
from oracles import abelianization_factors, brute_nerve  # noqa: E402

C1, C2, C3, C4 = (cyclic_group(k) for k in (1, 2, 3, 4))
S3, Q8 = symmetric_group(3), quaternion_group()
GROUPS = [C2, C3, C4, S3, Q8]
RESULTS = {}


def record(number, ok, detail, seconds):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({seconds:.1f}s) {detail}"
    RESULTS[number] = line
    print(line)
    return ok


def order_formula(family, n):
    k = n + 1
    f = 1
    for j in range(2, k + 1):
        f *= j
    return {Family.TRIVIAL: 1, Family.CYCLIC: k, Family.REFLEXIVE: 2, Family.DIHEDRAL: 2 * k,
            Family.SYMMETRIC: f, Family.REFLEXOSYMMETRIC: 2 * f, Family.WEYL: 2 ** k * f}[family]


# 1 -----------------------------------------------------------------------------

def criterion_1():
    bad = []
    for family in Family:
        for n in range(5):
            bad += [f"{family.value} n={n} {label}" for label, word in relations(family, n)
                    if not evaluate(word, n).is_identity()]
            if closure_order(family, n) != order_formula(family, n):
                bad.append(f"{family.value} n={n} order {closure_order(family, n)}")
    return not bad, "all relations trivial, all orders match" if not bad else "; ".join(bad[:5])


# 2 -----------------------------------------------------------------------------

def quoted_operator_relations(X):
    """The cyclic and dihedral relations checked directly on the tables."""
    d, s, N = X.faces, X.degens, X.N
    bad = []

    def act(n, word):
        return X.act_word(n, word)

    if "tau" in {g for _, g in X.actions}:
        for n in range(1, N + 1):
            if not np.array_equal(d[n, 0][act(n, ["tau"])], d[n, n]):
                bad.append(f"d0 tau = d{n}")
            for i in range(1, n + 1):
                if not np.array_equal(d[n, i][act(n, ["tau"])], act(n - 1, ["tau"])[d[n, i - 1]]):
                    bad.append(f"d{i} tau = tau d{i - 1} at {n}")
        for n in range(N):
            if not np.array_equal(s[n, 0][act(n, ["tau"])], act(n + 1, ["tau", "tau"])[s[n, n]]):
                bad.append(f"s0 tau = tau^2 s{n}")
            for i in range(1, n + 1):
                if not np.array_equal(s[n, i][act(n, ["tau"])], act(n + 1, ["tau"])[s[n, i - 1]]):
                    bad.append(f"s{i} tau = tau s{i - 1} at {n}")
    if "omega" in {g for _, g in X.actions}:
        for n in range(N + 1):
            for i in range(n + 1):
                if n >= 1 and not np.array_equal(d[n, i][act(n, ["omega"])], act(n - 1, ["omega"])[d[n, n - i]]):
                    bad.append(f"d{i} omega = omega d{n - i}")
                if n < N and not np.array_equal(s[n, i][act(n, ["omega"])], act(n + 1, ["omega"])[s[n, n - i]]):
                    bad.append(f"s{i} omega = omega s{n - i}")
    return bad


def bar_instances():
    for G in GROUPS:
        for family in Family:
            yield G, family, (3 if family is Family.WEYL else 4)


def criterion_2():
    failing = []
    total = 0
    for G, family, N in bar_instances():
        total += 1
        X = bar_construction(G, family, N)
        rep = validate_truncation(X)
        quoted = quoted_operator_relations(X)
        if not rep.ok or quoted:
            kinds = sorted({f.relation.split(" = ")[0].split()[-1] for f in rep.failures})
            failing.append(f"{G.name}/{family.value} ({len(rep.failures)} failing relations, generators {','.join(kinds)})")
    if failing:
        return False, f"{len(failing)}/{total} bars invalid: " + "; ".join(failing)
    return True, f"{total} bars valid"


# 3 -----------------------------------------------------------------------------

def composition_table(family, top=2):
    homs = [u for a in range(top + 1) for b in range(top + 1) for u in enumerate_hom(family, a, b)]
    index = {u: k for k, u in enumerate(homs)}
    table = np.full((len(homs), len(homs)), -1, dtype=np.int64)
    for k2, u2 in enumerate(homs):
        for k1, u1 in enumerate(homs):
            if u1.target == u2.source:
                table[k2, k1] = index[compose_crossed(u2, u1)]
    return homs, table


def associative(homs, table):
    src = np.array([u.source for u in homs])
    tgt = np.array([u.target for u in homs])
    for b in range(len(homs)):
        a = np.flatnonzero(tgt == src[b])
        c = np.flatnonzero(src == tgt[b])
        if not np.array_equal(table[table[c, b][:, None], a[None, :]],
                              table[c[:, None], table[b, a][None, :]]):
            return False
    return True


def criterion_3():
    bad = []
    triples = 0
    for family in Family:
        for m, n in itertools.product(range(4), repeat=2):
            got = len(enumerate_hom(family, m, n))
            if got != comb(n + m + 1, m + 1) * closure_order(family, m):
                bad.append(f"{family.value} Hom([{m}],[{n}]) = {got}")
        homs, table = composition_table(family)
        if not associative(homs, table):
            bad.append(f"{family.value} not associative")
        triples += sum(int((table[:, k] >= 0).sum()) * int((table[k] >= 0).sum()) for k in range(len(homs)))
    return not bad, f"counts match, {triples} composable triples associative" if not bad else "; ".join(bad)


# 4 -----------------------------------------------------------------------------

def cli_exit(argv):
    cwd = os.getcwd()
    os.chdir(Path(__file__).parent / "data")
    try:
        return main(argv, out=io.StringIO(), err=io.StringIO())
    finally:
        os.chdir(cwd)


def criterion_4():
    bad = []
    for G, z in [(Q8, "-1"), (C4, "2")]:
        zi = G.index(z)
        for family in (Family.CYCLIC, Family.DIHEDRAL):
            X = twisted_bar(family, G, z, 4)
            if not validate_truncation(X).ok:
                bad.append(f"{G.name},{z},{family.value} invalid")
            for n in range(1, 5):
                ident = np.arange(X.size(n))
                power = X.act_word(n, ["tau"] * (n + 1))
                if not np.array_equal(power, ident):
                    bad.append(f"tau^{n + 1} != id on {G.name}")
                # (z g1 z^-1, ..., z gn z^-1) is the input again
                conj = [X.levels[n].index(tuple(G.names[G.mul[G.mul[zi][G.index(g)]][G.inv[zi]]] for g in lab))
                        for lab in X.levels[n]]
                if not np.array_equal(power, conj):
                    bad.append(f"tau^{n + 1} differs from conjugation by z on {G.name}")
                if family is Family.DIHEDRAL:
                    square = X.act_word(n, ["omega", "tau"] * 2)
                    z2 = G.mul[zi][zi]
                    shifted = [X.levels[n].index((G.names[G.mul[z2][G.index(lab[0])]],) + lab[1:])
                               for lab in X.levels[n]]
                    if not (np.array_equal(square, ident) and np.array_equal(square, shifted)):
                        bad.append(f"(tau omega)^2 wrong on {G.name} n={n}")
    try:
        twisted_bar(Family.CYCLIC, S3, "(12)", 3)
        bad.append("S3 with (12) accepted")
    except PreconditionError:
        pass
    code = cli_exit(["nerve", "--category", "S3.cat", "--family", "cyclic", "--twisted", "--twist", "(12)"])
    if code != 3:
        bad.append(f"CLI exit {code} for (12)")
    return not bad, "Q8/-1 and C4/2 accepted and valid, S3/(12) refused with exit 3" if not bad else "; ".join(bad)


# 5 -----------------------------------------------------------------------------

def acceptance_categories():
    cats = [groupoid_from_group(G) for G in GROUPS]
    cats += [indiscrete_groupoid(C2), indiscrete_groupoid(C3), indiscrete_groupoid(C1, ("x", "y", "z"))]
    assert all(len(C.objects) <= 3 and C.size <= 12 for C in cats)
    return cats


def criterion_5():
    bad = []
    for C in acceptance_categories():
        for family in (Family.CYCLIC, Family.DIHEDRAL):
            X = twisted_categorical_nerve(family, C, 4)
            for n in range(5):
                if not np.array_equal(X.act_word(n, ["tau"] * (n + 1)), np.arange(X.size(n))):
                    bad.append(f"{C.name} tau^{n + 1}")
            if not validate_truncation(X).ok:
                bad.append(f"{C.name}/{family.value} invalid")
    M = monoid_category("M2", ("1", "p"), ((0, 1), (1, 1)), dagger=(0, 1))
    try:
        twisted_categorical_nerve(Family.CYCLIC, M, 2)
        bad.append("non-unitary monoid accepted")
    except PreconditionError:
        pass
    n = len(acceptance_categories())
    return not bad, f"{n} groupoids valid, non-unitary monoid blocked" if not bad else "; ".join(bad)


# 6 -----------------------------------------------------------------------------

def criterion_6():
    bad = []
    N = 3
    for C in acceptance_categories():
        U = underlying_simplicial(twisted_categorical_nerve(Family.CYCLIC, C, N))
        K = classical_nerve(C, N)
        labels, faces, degens = brute_nerve(C, N)
        same = (
            U == K
            and U.levels == labels
            and all(U.faces[k].tolist() == v for k, v in faces.items())
            and all(U.degens[k].tolist() == v for k, v in degens.items())
            and U.faces.keys() == faces.keys() and U.degens.keys() == degens.keys()
        )
        if not same:
            bad.append(C.name)
    return not bad, "all categories table-identical to the brute-force nerve" if not bad else "differs: " + ", ".join(bad)


# 7 -----------------------------------------------------------------------------

def criterion_7():
    bad = []
    H = homology(twisted_bar(Family.CYCLIC, C2, "0", 4), 3)
    want = [HomologyGroup(1, ()), HomologyGroup(0, (2,)), HomologyGroup(0, ()), HomologyGroup(0, (2,))]
    if H != want:
        bad.append("BC2: " + "; ".join(map(str, H)))
    for G in (C3, C4, S3):
        h1 = homology(twisted_bar(Family.CYCLIC, G, G.identity, 2), 1)[1]
        if h1 != HomologyGroup(0, abelianization_factors(G)):
            bad.append(f"H1({G.name}) = {h1}")
    h0 = homology(bar_construction(C2, Family.CYCLIC, 2), 0)[0]
    if h0.free_rank != 2:
        bad.append(f"H0 cyclic bar C2 rank {h0.free_rank}")
    return not bad, "BC2 = (Z; Z/2; 0; Z/2), H1 = abelianization, H0 rank 2" if not bad else "; ".join(bad)


# 8 -----------------------------------------------------------------------------

def constructed_objects():
    for G, family, N in bar_instances():
        yield bar_construction(G, family, min(N, 3))
    for C in acceptance_categories():
        for family in (Family.CYCLIC, Family.DIHEDRAL):
            yield twisted_categorical_nerve(family, C, 3)
    for G, z in [(Q8, "-1"), (C4, "2"), (C2, "1")]:
        for family in (Family.CYCLIC, Family.DIHEDRAL):
            yield twisted_bar(family, G, z, 3)


def criterion_8():
    bad = []
    checked = 0
    for X in constructed_objects():
        for n in range(X.N + 1):
            if X.size(n) <= 512:
                checked += 1
                k, b = len(orbit_set(X, n)), burnside_count(X, n)
                if k != b:
                    bad.append(f"{X.name} n={n}: {k} orbits, Burnside {b}")
    X = bar_construction(C2, Family.CYCLIC, 2)
    necklaces = [len(orbit_set(X, 1)), len(orbit_set(X, 2))]
    if necklaces != [3, 4]:
        bad.append(f"necklaces {necklaces}")
    return not bad, f"{checked} levels agree, necklaces 3 and 4" if not bad else "; ".join(bad[:5])


# 9 -----------------------------------------------------------------------------

def criterion_9():
    import test_cli

    bad = []
    cwd = os.getcwd()
    os.chdir(test_cli.DATA)
    try:
        import tempfile

        with tempfile.TemporaryDirectory() as tmp:
            objects = test_cli.build_objects(Path(tmp))
            for case, (argv, code) in sorted(test_cli.CASES.items()):
                argv = test_cli.resolve(argv, objects)
                first = test_cli.run(argv)
                if first != test_cli.run(argv):
                    bad.append(f"{case} not deterministic")
                if first[0] != code:
                    bad.append(f"{case} exit {first[0]} != {code}")
                if test_cli.transcript(*first) != (test_cli.GOLDEN / f"{case}.txt").read_text():
                    bad.append(f"{case} differs from golden")
    finally:
        os.chdir(cwd)
    codes = {code for _, code in test_cli.CASES.values()}
    if codes != {0, 1, 2, 3}:
        bad.append(f"exit codes exercised: {sorted(codes)}")
    n = len(test_cli.CASES)
    return not bad, f"{n} golden cases match, reruns identical, exit codes 0/1/2/3 covered" if not bad else "; ".join(bad)


CRITERIA = {
    1: (criterion_1, 10), 2: (criterion_2, 60), 3: (criterion_3, None), 4: (criterion_4, None),
    5: (criterion_5, None), 6: (criterion_6, None), 7: (criterion_7, 30), 8: (criterion_8, None),
    9: (criterion_9, None),
}


def run_criterion(number):
    check, limit = CRITERIA[number]
    start = time.perf_counter()
    ok, detail = check()
    seconds = time.perf_counter() - start
    if limit is not None and seconds > limit:
        ok, detail = False, f"{detail}; took {seconds:.1f}s, limit {limit}s"
    return record(number, ok, detail, seconds), RESULTS[number]


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, line = run_criterion(number)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(k)[0] for k in sorted(CRITERIA)]
    sys.exit(0 if all(results) else 1)
