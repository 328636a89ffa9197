"""Integral homology of underlying simplicial sets and orbit counting."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .gset import TruncatedCrossedSet
from .weyl import closure


@dataclass(frozen=True)
class HomologyGroup:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def smith_normal_form(M) -> list[int]:
    """Nonzero invariant factors ``d1 | d2 | ...`` of an integer matrix.

    Exact Python integers throughout; ``M`` may be any nested sequence or
    integer array.
    """
    A = [[int(x) for x in row] for row in M]
    if not A or not A[0]:
        return []
    m, n = len(A), len(A[0])
    factors = []
    t = 0
    while t < min(m, n):
        pivot = _smallest(A, t, m, n)
        if pivot is None:
            break
        i, j = pivot
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    ri, rt = A[i], A[t]
                    for k in range(t, n):
                        if rt[k]:
                            ri[k] -= q * rt[k]
                    if ri[t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    for i in range(t, m):
                        if A[i][t]:
                            A[i][j] -= q * A[i][t]
                    if A[t][j]:
                        done = False
            if not done:
                i, j = _smallest_cross(A, t, m, n)
                A[t], A[i] = A[i], A[t]
                for row in A:
                    row[t], row[j] = row[j], row[t]
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % p), None)
            if bad is None:
                break
            rt, ri = A[t], A[bad[0]]
            for k in range(t, n):
                rt[k] += ri[k]
        factors.append(abs(A[t][t]))
        t += 1
    return factors


def _smallest(A, t, m, n):
    best = None
    for i in range(t, m):
        for j in range(t, n):
            v = A[i][j]
            if v and (best is None or abs(v) < best[0]):
                best = (abs(v), i, j)
                if best[0] == 1:
                    return i, j
    return None if best is None else best[1:]


def _smallest_cross(A, t, m, n):
    cands = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
    cands += [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
    _, i, j = min(cands)
    return i, j


def nondegenerate(X: TruncatedCrossedSet, n: int) -> list[int]:
    if n == 0:
        return list(range(X.size(0)))
    hit = np.zeros(X.size(n), dtype=bool)
    for i in range(n):
        hit[X.degens[n - 1, i]] = True
    return [int(x) for x in np.flatnonzero(~hit)]


def boundary_matrix(X: TruncatedCrossedSet, n: int, basis=None) -> list[list[int]]:
    """Normalized boundary ``C_n -> C_{n-1}`` (rows: (n-1)-simplices)."""
    if basis is None:
        basis = {k: nondegenerate(X, k) for k in (n - 1, n)}
    rows = {x: r for r, x in enumerate(basis[n - 1])}
    M = [[0] * len(basis[n]) for _ in rows]
    for c, x in enumerate(basis[n]):
        for i in range(n + 1):
            y = int(X.faces[n, i][x])
            if y in rows:
                M[rows[y]][c] += -1 if i % 2 else 1
    return M


def homology(X: TruncatedCrossedSet, k_max: int) -> list[HomologyGroup]:
    """``H_0..H_{k_max}`` of the underlying simplicial set, integer coefficients."""
    if X.N < k_max + 1:
        raise ValueError(f"need truncation level >= {k_max + 1}, have {X.N}")
    basis = {k: nondegenerate(X, k) for k in range(k_max + 2)}
    ranks = {0: 0}
    torsion = {}
    for k in range(1, k_max + 2):
        factors = smith_normal_form(boundary_matrix(X, k, basis)) if basis[k] and basis[k - 1] else []
        ranks[k] = len(factors)
        torsion[k] = tuple(d for d in factors if d > 1)
    return [
        HomologyGroup(len(basis[k]) - ranks[k] - ranks[k + 1], torsion[k + 1])
        for k in range(k_max + 1)
    ]


def burnside_count(X: TruncatedCrossedSet, n: int) -> int:
    """Orbit count on ``X_n`` as the average number of fixed points."""
    if not 0 <= n <= X.N:
        raise ValueError(f"level {n} outside 0..{X.N}")
    group = closure(X.family, n)
    ident = np.arange(X.size(n))
    total = sum(int(np.count_nonzero(X.act(n, g) == ident)) for g in group)
    count = Fraction(total, len(group))
    if count.denominator != 1:
        raise ValueError(f"fixed-point average {count} is not an integer; actions do not form a group action")
    return int(count)
