"""Monotone maps ``[m] -> [n]`` of the simplex category."""
from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class MonotoneMap:
    source: int
    target: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.source + 1:
            raise ValueError(f"need {self.source + 1} values, got {len(self.values)}")
        if any(not 0 <= v <= self.target for v in self.values):
            raise ValueError(f"values {self.values} leave [0, {self.target}]")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise ValueError(f"values {self.values} are not weakly increasing")

    def __call__(self, j: int) -> int:
        return self.values[j]

    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    def is_surjective(self) -> bool:
        return set(self.values) == set(range(self.target + 1))


def identity_map(n: int) -> MonotoneMap:
    return MonotoneMap(n, n, tuple(range(n + 1)))


def face(i: int, n: int) -> MonotoneMap:
    """Coface ``[n-1] -> [n]`` missing ``i``."""
    if n < 1 or not 0 <= i <= n:
        raise ValueError(f"face index {i} out of range for degree {n}")
    return MonotoneMap(n - 1, n, tuple(j if j < i else j + 1 for j in range(n)))


def degeneracy(i: int, n: int) -> MonotoneMap:
    """Codegeneracy ``[n+1] -> [n]`` hitting ``i`` twice."""
    if not 0 <= i <= n:
        raise ValueError(f"degeneracy index {i} out of range for degree {n}")
    return MonotoneMap(n + 1, n, tuple(j if j <= i else j - 1 for j in range(n + 2)))


def compose_monotone(b: MonotoneMap, a: MonotoneMap) -> MonotoneMap:
    """``b ∘ a``."""
    if a.target != b.source:
        raise ValueError(f"cannot compose [{a.source}]->[{a.target}] with [{b.source}]->[{b.target}]")
    return MonotoneMap(a.source, b.target, tuple(b.values[v] for v in a.values))


def epi_mono_factor(phi: MonotoneMap) -> tuple[MonotoneMap, MonotoneMap]:
    image = sorted(set(phi.values))
    k = len(image) - 1
    rank = {v: r for r, v in enumerate(image)}
    epi = MonotoneMap(phi.source, k, tuple(rank[v] for v in phi.values))
    mono = MonotoneMap(k, phi.target, tuple(image))
    return epi, mono


def all_monotone(m: int, n: int) -> list[MonotoneMap]:
    """Every monotone map ``[m] -> [n]`` in lexicographic order."""
    return [
        MonotoneMap(m, n, values)
        for values in itertools.combinations_with_replacement(range(n + 1), m + 1)
    ]
