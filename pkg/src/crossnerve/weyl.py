"""Signed permutations and the seven simple families inside the hyperoctahedral group.

Every automorphism group used in this package is realized as a subgroup of
``W_{n+1}``: bijections of ``{0..n}`` carrying a sign at each position.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import lru_cache, reduce


class Family(enum.Enum):
    TRIVIAL = "trivial"
    CYCLIC = "cyclic"
    SYMMETRIC = "symmetric"
    REFLEXIVE = "reflexive"
    DIHEDRAL = "dihedral"
    REFLEXOSYMMETRIC = "reflexosymmetric"
    WEYL = "weyl"

    @classmethod
    def parse(cls, name: "str | Family") -> "Family":
        if isinstance(name, Family):
            return name
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ValueError(f"unknown family {name!r}") from None


@dataclass(frozen=True, order=True)
class SignedPerm:
    """Element of ``W_{n+1}``: ``perm[i]`` is the image of ``i``, ``signs[i]`` is +1 or -1."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.perm) != len(self.signs) or not self.perm:
            raise ValueError("perm and signs must have equal, positive length")
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"{self.perm} is not a bijection of 0..{len(self.perm) - 1}")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    @property
    def degree(self) -> int:
        return len(self.perm) - 1

    def is_identity(self) -> bool:
        return self == identity(self.degree)

    def __repr__(self):
        s = "".join("+" if x > 0 else "-" for x in self.signs)
        return f"SignedPerm({self.perm}, {s})"


def identity(n: int) -> SignedPerm:
    return SignedPerm(tuple(range(n + 1)), (1,) * (n + 1))


def compose(a: SignedPerm, b: SignedPerm) -> SignedPerm:
    """``a ∘ b``: apply ``b`` first. Signs follow the wreath-product rule."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    perm = tuple(a.perm[j] for j in b.perm)
    signs = tuple(b.signs[i] * a.signs[b.perm[i]] for i in range(len(b.perm)))
    return SignedPerm(perm, signs)


def inverse(g: SignedPerm) -> SignedPerm:
    size = len(g.perm)
    perm = [0] * size
    signs = [1] * size
    for i, j in enumerate(g.perm):
        perm[j] = i
        signs[j] = g.signs[i]
    return SignedPerm(tuple(perm), tuple(signs))


def evaluate(word, n: int) -> SignedPerm:
    """Compose a generator word left to right (``w1 ∘ w2 ∘ ...``) at degree ``n``."""
    return reduce(compose, (generator_any(name, n) for name in word), identity(n))


# generators -----------------------------------------------------------------

def tau(n: int) -> SignedPerm:
    return SignedPerm(tuple((i - 1) % (n + 1) for i in range(n + 1)), (1,) * (n + 1))


def omega(n: int) -> SignedPerm:
    return SignedPerm(tuple(n - i for i in range(n + 1)), (-1,) * (n + 1))


def sigma(i: int, n: int) -> SignedPerm:
    if not 1 <= i <= n:
        raise ValueError(f"sigma{i} needs 1 <= i <= n (n={n})")
    perm = list(range(n + 1))
    perm[i - 1], perm[i] = i, i - 1
    return SignedPerm(tuple(perm), (1,) * (n + 1))


def kappa(n: int) -> SignedPerm:
    return SignedPerm(tuple(range(n + 1)), (-1,) + (1,) * n)


def generator_names(family: "Family | str", n: int) -> tuple[str, ...]:
    """Generator names of ``family`` at degree ``n``, in the fixed tie-break order."""
    family = Family.parse(family)
    sigmas = tuple(f"sigma{i}" for i in range(1, n + 1))
    return {
        Family.TRIVIAL: (),
        Family.CYCLIC: ("tau",),
        Family.SYMMETRIC: sigmas,
        Family.REFLEXIVE: ("omega",),
        Family.DIHEDRAL: ("tau", "omega"),
        Family.REFLEXOSYMMETRIC: ("omega",) + sigmas,
        Family.WEYL: sigmas + ("kappa",),
    }[family]


def generator_any(name: str, n: int) -> SignedPerm:
    if name == "tau":
        return tau(n)
    if name == "omega":
        return omega(n)
    if name == "kappa":
        return kappa(n)
    if name.startswith("sigma") and name[5:].isdigit():
        return sigma(int(name[5:]), n)
    raise ValueError(f"unknown generator {name!r}")


def generator(family: "Family | str", name: str, n: int) -> SignedPerm:
    family = Family.parse(family)
    if name not in generator_names(family, n):
        raise ValueError(f"{family.value} has no generator {name!r} at degree {n}")
    return generator_any(name, n)


def relations(family: "Family | str", n: int) -> list[tuple[str, tuple[str, ...]]]:
    """Defining relations ``(label, word)`` of the family's presentation at degree ``n``.

    Each word evaluates to the identity. For the reflexosymmetric family the
    reversal ``omega`` normalizes rather than centralizes the sigmas, so the
    relation recorded is ``omega sigma_i omega = sigma_{n+1-i}``. For Weyl the
    relation ``(sigma_i kappa)^2`` is only imposed for ``i >= 2``.
    """
    family = Family.parse(family)
    rels: list[tuple[str, tuple[str, ...]]] = []
    s = [f"sigma{i}" for i in range(n + 1)]  # s[0] unused

    def symmetric_part():
        for i in range(1, n + 1):
            rels.append((f"{s[i]}^2", (s[i], s[i])))
        for i in range(1, n + 1):
            for j in range(i + 2, n + 1):
                rels.append((f"({s[i]} {s[j]})^2", (s[i], s[j]) * 2))
        for i in range(1, n):
            rels.append((f"({s[i]} {s[i + 1]})^3", (s[i], s[i + 1]) * 3))

    if family in (Family.CYCLIC, Family.DIHEDRAL):
        rels.append((f"tau^{n + 1}", ("tau",) * (n + 1)))
    if family in (Family.REFLEXIVE, Family.DIHEDRAL, Family.REFLEXOSYMMETRIC):
        rels.append(("omega^2", ("omega", "omega")))
    if family is Family.DIHEDRAL:
        rels.append(("(tau omega)^2", ("tau", "omega") * 2))
    if family in (Family.SYMMETRIC, Family.REFLEXOSYMMETRIC, Family.WEYL):
        symmetric_part()
    if family is Family.REFLEXOSYMMETRIC:
        for i in range(1, n + 1):
            j = n + 1 - i
            rels.append((f"omega {s[i]} omega {s[j]}", ("omega", s[i], "omega", s[j])))
    if family is Family.WEYL:
        rels.append(("kappa^2", ("kappa", "kappa")))
        if n >= 1:
            rels.append(("(sigma1 kappa)^4", ("sigma1", "kappa") * 4))
        for i in range(2, n + 1):
            rels.append((f"({s[i]} kappa)^2", (s[i], "kappa") * 2))
    return rels


# membership and closure -------------------------------------------------------

def member(family: "Family | str", g: SignedPerm) -> bool:
    family = Family.parse(family)
    n = g.degree
    if family is Family.TRIVIAL:
        return g.is_identity()
    if family is Family.WEYL:
        return True
    if family is Family.SYMMETRIC:
        return all(s == 1 for s in g.signs)
    if family is Family.REFLEXOSYMMETRIC:
        return len(set(g.signs)) == 1
    if family is Family.REFLEXIVE:
        return g.is_identity() or g == omega(n)
    rotations = _rotations(n)
    if family is Family.CYCLIC:
        return g in rotations
    # dihedral
    w = omega(n)
    return g in rotations or any(g == compose(w, r) for r in rotations)


@lru_cache(maxsize=None)
def _rotations(n: int) -> frozenset:
    out, x = set(), identity(n)
    for _ in range(n + 1):
        out.add(x)
        x = compose(x, tau(n))
    return frozenset(out)


@lru_cache(maxsize=None)
def _cayley(family: Family, n: int) -> dict:
    """Breadth-first spanning tree: element -> shortest generator word."""
    gens = [(name, generator_any(name, n)) for name in generator_names(family, n)]
    start = identity(n)
    words = {start: ()}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for name, s in gens:
            h = compose(g, s)
            if h not in words:
                words[h] = words[g] + (name,)
                queue.append(h)
    return words


def closure(family: "Family | str", n: int) -> list[SignedPerm]:
    """All elements of the family's group at degree ``n``, sorted lexicographically."""
    return sorted(_cayley(Family.parse(family), n))


def closure_order(family: "Family | str", n: int) -> int:
    if n < 0:
        raise ValueError("degree must be non-negative")
    return len(_cayley(Family.parse(family), n))


def generator_word(family: "Family | str", g: SignedPerm) -> tuple[str, ...]:
    """Shortest word (BFS, fixed generator order) whose left-to-right composite is ``g``."""
    family = Family.parse(family)
    try:
        return _cayley(family, g.degree)[g]
    except KeyError:
        raise ValueError(f"{g!r} is not in the {family.value} group") from None
