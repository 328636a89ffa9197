"""Truncated ΔG-sets stored as index tables, and their validator."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .crossed import derive_operator_exchange
from .weyl import Family, generator_any, generator_names, generator_word, relations


@dataclass(eq=False)
class TruncatedCrossedSet:
    """Levels ``X_0..X_N`` with faces, degeneracies and generator actions.

    ``levels[n]`` lists simplex labels (tuples of names). Maps are integer
    arrays indexed by position in the level: ``faces[n, i]`` is
    ``d_i: X_n -> X_{n-1}``, ``degens[n, i]`` is ``s_i: X_n -> X_{n+1}``,
    ``actions[n, name]`` is the action of a generator on ``X_n``.
    """

    family: Family
    levels: list[list[tuple[str, ...]]]
    faces: dict[tuple[int, int], np.ndarray]
    degens: dict[tuple[int, int], np.ndarray]
    actions: dict[tuple[int, str], np.ndarray] = field(default_factory=dict)
    name: str = ""

    @property
    def N(self) -> int:
        return len(self.levels) - 1

    def size(self, n: int) -> int:
        return len(self.levels[n])

    def act_word(self, n: int, word) -> np.ndarray:
        """Action of the group element spelled by ``word``; letters apply left to right."""
        out = np.arange(self.size(n))
        for name in word:
            out = self.actions[n, name][out]
        return out

    def act(self, n: int, g) -> np.ndarray:
        return self.act_word(n, generator_word(self.family, g))

    def __eq__(self, other):
        if not isinstance(other, TruncatedCrossedSet):
            return NotImplemented
        return (
            self.family is other.family
            and self.levels == other.levels
            and _same_maps(self.faces, other.faces)
            and _same_maps(self.degens, other.degens)
            and _same_maps(self.actions, other.actions)
        )


def _same_maps(a: dict, b: dict) -> bool:
    return a.keys() == b.keys() and all(np.array_equal(a[k], b[k]) for k in a)


@dataclass(frozen=True)
class Failure:
    level: int
    relation: str
    element: tuple[str, ...]
    count: int = 1

    def __str__(self):
        el = ",".join(self.element)
        return f"level {self.level}: {self.relation} fails at ({el}) [{self.count} element(s)]"


@dataclass
class ValidationReport:
    failures: list[Failure] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok

    def relations_failed(self) -> set[str]:
        return {f.relation for f in self.failures}


def _compare(report, X, level, relation, lhs, rhs):
    report.checked += 1
    bad = np.flatnonzero(lhs != rhs)
    if bad.size:
        report.failures.append(Failure(level, relation, X.levels[level][bad[0]], int(bad.size)))


def _check_tables(X: TruncatedCrossedSet, report: ValidationReport) -> bool:
    expected = {}
    for n in range(1, X.N + 1):
        for i in range(n + 1):
            expected[("face", n, i)] = (X.faces.get((n, i)), n, n - 1)
    for n in range(X.N):
        for i in range(n + 1):
            expected[("degeneracy", n, i)] = (X.degens.get((n, i)), n, n + 1)
    for n in range(X.N + 1):
        for g in generator_names(X.family, n):
            expected[("act " + g, n, 0)] = (X.actions.get((n, g)), n, n)
    ok = True
    for (kind, n, i), (arr, src, dst) in expected.items():
        label = kind if kind.startswith("act") else f"{kind} {i}"
        if arr is None or arr.shape != (X.size(src),) or (
            arr.size and (arr.min() < 0 or arr.max() >= X.size(dst))
        ):
            report.failures.append(Failure(n, f"{label} is not a total map", (), 0))
            ok = False
    return ok


def validate_truncation(X: TruncatedCrossedSet) -> ValidationReport:
    """Check simplicial identities, presentation relations and crossed exchange laws.

    For each generator ``g`` at level ``n`` the exchange ``d_i ∘ act_g = act_h ∘ d_j``
    (and its degeneracy analogue) is tested with ``(j, h)`` derived from the
    signed-permutation model. Degeneracy exchanges that would need level
    ``N + 1`` are skipped and listed in ``report.skipped``.
    """
    report = ValidationReport()
    if not _check_tables(X, report):
        return report
    d, s = X.faces, X.degens
    N = X.N
    # simplicial identities
    for n in range(2, N + 1):
        for j in range(n + 1):
            for i in range(j):
                _compare(report, X, n, f"d{i} d{j} = d{j - 1} d{i}",
                         d[n - 1, i][d[n, j]], d[n - 1, j - 1][d[n, i]])
    for n in range(N):
        for j in range(n + 1):
            up = s[n, j]
            for i in range(n + 2):
                lhs = d[n + 1, i][up]
                if i < j:
                    rhs, rel = s[n - 1, j - 1][d[n, i]], f"d{i} s{j} = s{j - 1} d{i}"
                elif i in (j, j + 1):
                    rhs, rel = np.arange(X.size(n)), f"d{i} s{j} = id"
                else:
                    rhs, rel = s[n - 1, j][d[n, i - 1]], f"d{i} s{j} = s{j} d{i - 1}"
                _compare(report, X, n, rel, lhs, rhs)
    for n in range(N - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                _compare(report, X, n, f"s{i} s{j} = s{j + 1} s{i}",
                         s[n + 1, i][s[n, j]], s[n + 1, j + 1][s[n, i]])
    # presentation relations
    for n in range(N + 1):
        ident = np.arange(X.size(n))
        for label, word in relations(X.family, n):
            _compare(report, X, n, label, X.act_word(n, word), ident)
    # crossed exchange laws
    for n in range(N + 1):
        for name in generator_names(X.family, n):
            g = generator_any(name, n)
            act = X.actions[n, name]
            if n >= 1:
                for i in range(n + 1):
                    j, h = derive_operator_exchange(g, "face", i)
                    rhs = _act_or_none(X, n - 1, h)
                    rel = f"d{i} {name} = [{_word(X, h)}] d{j}"
                    if rhs is None:
                        report.failures.append(Failure(n, rel + " (h outside family)", (), 0))
                        continue
                    _compare(report, X, n, rel, d[n, i][act], rhs[d[n, j]])
            for i in range(n + 1):
                j, h = derive_operator_exchange(g, "degeneracy", i)
                rel = f"s{i} {name} = [{_word(X, h)}] s{j}"
                if n + 1 > N:
                    report.skipped.append(f"level {n}: {rel} (needs level {n + 1})")
                    continue
                rhs = _act_or_none(X, n + 1, h)
                if rhs is None:
                    report.failures.append(Failure(n, rel + " (h outside family)", (), 0))
                    continue
                _compare(report, X, n, rel, s[n, i][act], rhs[s[n, j]])
    return report


def _act_or_none(X, n, h):
    try:
        return X.act(n, h)
    except ValueError:
        return None


def _word(X, h) -> str:
    try:
        return " ".join(generator_word(X.family, h)) or "id"
    except ValueError:
        return repr(h)


def underlying_simplicial(X: TruncatedCrossedSet) -> TruncatedCrossedSet:
    return TruncatedCrossedSet(
        Family.TRIVIAL, [list(level) for level in X.levels],
        {k: v.copy() for k, v in X.faces.items()},
        {k: v.copy() for k, v in X.degens.items()},
        {}, X.name,
    )


def restrict(X: TruncatedCrossedSet, family: "Family | str") -> TruncatedCrossedSet:
    """Keep only the actions of ``family``'s generators (which must be among X's)."""
    family = Family.parse(family)
    actions = {}
    for n in range(X.N + 1):
        for name in generator_names(family, n):
            if (n, name) not in X.actions:
                raise ValueError(f"{X.family.value} object has no {name} action")
            actions[n, name] = X.actions[n, name].copy()
    return TruncatedCrossedSet(
        family, [list(level) for level in X.levels],
        {k: v.copy() for k, v in X.faces.items()},
        {k: v.copy() for k, v in X.degens.items()},
        actions, X.name,
    )


def orbit_set(X: TruncatedCrossedSet, n: int) -> list[list[int]]:
    """Orbits of ``X_n`` under the generator actions, ordered by least element."""
    if not 0 <= n <= X.N:
        raise ValueError(f"level {n} outside 0..{X.N}")
    size = X.size(n)
    rows, cols = [np.arange(size)], [np.arange(size)]
    for name in generator_names(X.family, n):
        rows.append(np.arange(size))
        cols.append(X.actions[n, name])
    r, c = np.concatenate(rows), np.concatenate(cols)
    graph = coo_matrix((np.ones(r.size, dtype=np.int8), (r, c)), shape=(size, size))
    _, labels = connected_components(graph, directed=True, connection="weak")
    orbits: dict[int, list[int]] = {}
    for x, lab in enumerate(labels):
        orbits.setdefault(lab, []).append(x)
    return sorted(orbits.values(), key=lambda o: o[0])
