"""Root data for the simple Lie types and the classical T-root vector families.

Roots are integer coefficient vectors over the simple roots, Bourbaki
node numbering throughout (E8: chain 1-3-4-5-6-7-8 with node 2 attached
to node 4; F4: 1-2=>3-4 with nodes 1,2 long; G2: node 1 short).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from ._linalg import Vec, dot, vec_neg

_ADMISSIBLE = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

EXCEPTIONAL_LABELS = ("E6", "E7", "E8", "F4", "G2")


class InvalidCartanType(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        check = _ADMISSIBLE.get(self.family)
        if check is None or not check(self.rank):
            raise InvalidCartanType(f"inadmissible Cartan type {self.family}{self.rank}")

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def from_label(cls, text: str) -> "CartanType":
        m = re.fullmatch(r"([A-G])(\d+)", text.strip())
        if not m:
            raise InvalidCartanType(f"cannot parse Cartan type {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self) -> str:
        return self.label


def _chain_edges(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(1, n)]


def _single_edges(ct: CartanType) -> list[tuple[int, int]]:
    """Unordered edges of the Dynkin graph (1-based nodes)."""
    f, n = ct.family, ct.rank
    if f in ("A", "B", "C", "F"):
        return _chain_edges(n)
    if f == "G":
        return [(1, 2)]
    if f == "D":
        return _chain_edges(n - 1) + [(n - 2, n)]
    # E types: chain on 1,3,4,...,n with node 2 attached to node 4
    chain = [1] + list(range(3, n + 1))
    return [(a, b) for a, b in zip(chain, chain[1:])] + [(2, 4)]


@lru_cache(maxsize=None)
def simple_root_norms(ct: CartanType) -> tuple[int, ...]:
    """Doubled squared lengths 2(alpha_i, alpha_i) of the simple roots."""
    f, n = ct.family, ct.rank
    if f == "B":
        return (4,) * (n - 1) + (2,)
    if f == "C":
        return (4,) * (n - 1) + (8,)
    if f == "F":
        return (4, 4, 2, 2)
    if f == "G":
        return (4, 12)
    return (4,) * n


@lru_cache(maxsize=None)
def cartan_matrix(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with a[i][j] = 2(alpha_i, alpha_j)/(alpha_j, alpha_j)."""
    n = ct.rank
    norms = simple_root_norms(ct)
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    for u, v in _single_edges(ct):
        i, j = u - 1, v - 1
        # 2(alpha_i, alpha_j) = -max of the doubled norms / 2 for adjacent nodes
        pair2 = -max(norms[i], norms[j]) // 2
        a[i][j] = 2 * pair2 // norms[j]
        a[j][i] = 2 * pair2 // norms[i]
    return tuple(tuple(row) for row in a)


@lru_cache(maxsize=None)
def gram_matrix_doubled(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    """Symmetric integer matrix 2(alpha_i, alpha_j), from the symmetrizer."""
    a = cartan_matrix(ct)
    norms = simple_root_norms(ct)
    n = ct.rank
    g = tuple(tuple(a[i][j] * norms[j] // 2 for j in range(n)) for i in range(n))
    for i in range(n):
        for j in range(n):
            assert g[i][j] == g[j][i]
    return g


@dataclass(frozen=True)
class RootSystem:
    type: CartanType
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Vec, ...]
    lengths: tuple[str, ...]

    @property
    def rank(self) -> int:
        return self.type.rank

    def all_roots(self) -> list[Vec]:
        return list(self.positive_roots) + [vec_neg(r) for r in self.positive_roots]

    def root_norm_doubled(self, root: Vec) -> int:
        g = gram_matrix_doubled(self.type)
        return dot(root, [dot(row, root) for row in g])


def _pairing_column(cartan, beta: Vec, i: int) -> int:
    """<beta, alpha_i^vee> in coefficient coordinates."""
    return sum(b * cartan[j][i] for j, b in enumerate(beta))


@lru_cache(maxsize=None)
def positive_roots(ct: CartanType) -> RootSystem:
    """All positive roots by root-string closure from the simple roots.

    beta + alpha_i is appended iff p - <beta, alpha_i^vee> > 0 where p is
    the length of the alpha_i-string already built below beta.  Output is
    graded by height, then lexicographic.
    """
    n = ct.rank
    cartan = cartan_matrix(ct)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    known: set[Vec] = set(simple)
    layer = list(simple)
    while layer:
        new: set[Vec] = set()
        for beta in layer:
            for i in range(n):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        p += 1
                    else:
                        break
                if p - _pairing_column(cartan, beta, i) > 0:
                    up = list(beta)
                    up[i] += 1
                    up_t = tuple(up)
                    if up_t not in known:
                        new.add(up_t)
        known |= new
        layer = sorted(new)
    ordered = sorted(known, key=lambda r: (sum(r), r))
    g = gram_matrix_doubled(ct)
    norms = [dot(r, [dot(row, r) for row in g]) for r in ordered]
    top = max(norms)
    lengths = tuple("long" if v == top else "short" for v in norms)
    return RootSystem(ct, cartan, tuple(ordered), lengths)


_CLASSICAL_LABEL = re.compile(r"(BC|[ABCD])(\d+)(?:,(\d+))?")


class InvalidClassicalSpec(ValueError):
    pass


@dataclass(frozen=True)
class ClassicalTRootSpec:
    """One of the classical T-root vector families A/B/C/D/BC and truncations.

    `removed` counts deleted opposite pairs of longest vectors; the text
    label uses the complementary index, so "C3,2" is C3 minus one pair.
    """

    family: str
    n: int
    removed: int = 0

    def __post_init__(self):
        if self.family not in ("A", "B", "C", "D", "BC"):
            raise InvalidClassicalSpec(f"unknown family {self.family!r}")
        if self.n < 1 or (self.family == "D" and self.n < 3):
            raise InvalidClassicalSpec(f"rank {self.n} too small for {self.family}")
        if self.removed:
            if self.family not in ("C", "BC"):
                raise InvalidClassicalSpec(f"{self.family}-family has no truncations")
            if not (0 < self.removed < self.n):
                raise InvalidClassicalSpec(
                    f"cannot remove {self.removed} long pairs from {self.family}{self.n}")

    @property
    def label(self) -> str:
        if self.removed:
            return f"{self.family}{self.n},{self.n - self.removed}"
        return f"{self.family}{self.n}"

    @classmethod
    def from_label(cls, text: str) -> "ClassicalTRootSpec":
        m = _CLASSICAL_LABEL.fullmatch(text.strip())
        if not m:
            raise InvalidClassicalSpec(f"cannot parse classical label {text!r}")
        family, n = m.group(1), int(m.group(2))
        removed = 0
        if m.group(3) is not None:
            j = int(m.group(3))
            if not 0 < j <= n:
                raise InvalidClassicalSpec(f"bad truncation index in {text!r}")
            removed = n - j
        return cls(family, n, removed)

    def __str__(self) -> str:
        return self.label


def _basis_vec(n: int, i: int) -> list[int]:
    v = [0] * n
    v[i] = 1
    return v


def classical_vectors(spec: ClassicalTRootSpec) -> tuple[int, list[Vec]]:
    """Positive vectors of the family over its own simple basis, so the
    positive half is exactly the nonnegative orthant.

    B/BC use the basis e_i - e_{i+1}, e_n; C uses e_i - e_{i+1}, 2e_n;
    D uses e_i - e_{i+1}, e_{n-1} + e_n.  Truncations drop the pairs
    +-2e_i with the largest indices i.
    """
    f, n = spec.family, spec.n
    if f == "A":
        pos = [tuple(int(i <= t < j) for t in range(n))
               for i in range(n) for j in range(i + 1, n + 1)]
        return n, pos

    def interval(i, j, fill=1):  # 1 on [i, j)
        return [fill if i <= t < j else 0 for t in range(n)]

    pos: list[Vec] = []
    if f == "D":
        def two_e(j):
            v = [0] * n
            if j == n - 1:
                v[n - 2] -= 1
                v[n - 1] += 1
            else:
                for t in range(j, n - 2):
                    v[t] += 2
                v[n - 2] += 1
                v[n - 1] += 1
            return v

        for i in range(n):
            for j in range(i + 1, n):
                diff = interval(i, j)
                pos.append(tuple(diff))
                pos.append(tuple(x + y for x, y in zip(diff, two_e(j))))
        return n, pos

    if f == "C":
        def two_e(j):
            v = interval(j, n - 1, 2)
            v[n - 1] += 1
            return v
    else:  # B, BC bases end in the short e_n
        def two_e(j):
            return interval(j, n, 2)

    for i in range(n):
        for j in range(i + 1, n):
            diff = interval(i, j)
            pos.append(tuple(diff))
            pos.append(tuple(x + y for x, y in zip(diff, two_e(j))))
    if f in ("B", "BC"):
        pos += [tuple(interval(i, n)) for i in range(n)]
    if f in ("C", "BC"):
        kept = n - spec.removed
        pos += [tuple(two_e(i)) for i in range(kept)]
    return n, pos


def classical_troot_system(spec: ClassicalTRootSpec):
    """The family as an abstract T-root system (all multiplicities 1)."""
    from .troots import TRootSystem

    n, pos = classical_vectors(spec)
    vectors = sorted(pos) + sorted(vec_neg(v) for v in pos)
    gram = _classical_gram(spec)
    return TRootSystem.from_vectors(n, vectors, gram=gram)


def _classical_gram(spec: ClassicalTRootSpec) -> tuple[tuple[int, ...], ...]:
    """Doubled Gram matrix of the simple basis used by classical_vectors."""
    f, n = spec.family, spec.n
    if f == "A":
        return gram_matrix_doubled(CartanType("A", n))
    if f == "D":
        return gram_matrix_doubled(CartanType("D", n))
    if f == "C" and n >= 2:
        return gram_matrix_doubled(CartanType("C", n))
    if f == "B" and n >= 2:
        return gram_matrix_doubled(CartanType("B", n))
    # BC_n and the rank-1 cases share the B-shaped basis e_i - e_{i+1}, e_n
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 4 if i < n - 1 else 2
        if i + 1 < n:
            g[i][i + 1] = g[i + 1][i] = -2
    return tuple(tuple(row) for row in g)
