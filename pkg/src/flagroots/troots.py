"""T-root systems: projection of a root system through a painted diagram.

A T-root is the restriction of a root's coefficient vector to the
painted coordinates; a root contributes iff some painted coefficient is
nonzero.  The sublattice spanned by the unpainted simple roots is
exactly the kernel of that restriction, so the coordinate restriction
realizes the quotient projection (tested as such).
"""

from __future__ import annotations

import json
from fractions import Fraction

from ._linalg import Vec, clear_denominators, invert, vec_gcd, vec_neg
from .painted import PaintedDiagram
from .rootsys import RootSystem, gram_matrix_doubled


class TRootError(ValueError):
    pass


class NotPositivelyGenerated(TRootError):
    """The coordinate cone does not split the system into +-halves."""


class TRootSystem:
    """Finite symmetric set of nonzero integer vectors with multiplicities.

    `gram` is an optional integer positive-definite form used purely as a
    geometric hint (hull certificates); no result depends on it.
    """

    __slots__ = ("k", "vectors", "_mult", "gram", "_vector_set", "_positive")

    def __init__(self, k: int, vectors: tuple[Vec, ...], mult: dict[Vec, int],
                 gram: tuple[tuple[int, ...], ...] | None = None):
        self.k = k
        self.vectors = vectors
        self._mult = mult
        self.gram = gram
        self._vector_set = frozenset(vectors)
        self._positive: tuple[Vec, ...] | None = None
        self._validate()

    @classmethod
    def from_vectors(cls, k: int, vectors, mult: dict[Vec, int] | None = None,
                     gram=None) -> "TRootSystem":
        vecs = sorted({tuple(v) for v in vectors})
        if mult is None:
            mult = {v: 1 for v in vecs}
        return cls(k, tuple(vecs), dict(mult), gram)

    def _validate(self):
        if len(self.vectors) % 2:
            raise TRootError("vector count must be even")
        for v in self.vectors:
            if len(v) != self.k:
                raise TRootError(f"vector {v} has wrong dimension")
            if not any(v):
                raise TRootError("zero vector is not a T-root")
            neg = vec_neg(v)
            if neg not in self._vector_set:
                raise TRootError(f"system not symmetric: missing {neg}")
            if self._mult.get(v, 0) < 1:
                raise TRootError(f"missing multiplicity for {v}")
            if self._mult[v] != self._mult[neg]:
                raise TRootError(f"multiplicity not symmetric at {v}")

    @property
    def d(self) -> int:
        return len(self.vectors) // 2

    def __contains__(self, v) -> bool:
        return tuple(v) in self._vector_set

    def __eq__(self, other) -> bool:
        return (isinstance(other, TRootSystem) and self.k == other.k
                and self.vectors == other.vectors and self._mult == other._mult)

    def __hash__(self):
        return hash((self.k, self.vectors))

    def __repr__(self):
        return f"TRootSystem(k={self.k}, d={self.d})"

    def multiplicity(self, v) -> int:
        v = tuple(v)
        if v not in self._vector_set:
            raise TRootError(f"{v} is not a T-root of this system")
        return self._mult[v]

    @property
    def multiplicities(self) -> dict[Vec, int]:
        return dict(self._mult)

    def to_json(self) -> str:
        return json.dumps({
            "rank": self.k,
            "vectors": [list(v) for v in self.vectors],
            "mult": [self._mult[v] for v in self.vectors],
        })

    @classmethod
    def from_json(cls, text: str) -> "TRootSystem":
        data = json.loads(text)
        vecs = [tuple(v) for v in data["vectors"]]
        mult = dict(zip(vecs, data["mult"]))
        return cls(data["rank"], tuple(sorted(vecs)),
                   {v: mult[v] for v in sorted(vecs)})


def project(system: RootSystem, diagram: PaintedDiagram) -> TRootSystem:
    """T-root system of a painted diagram, with fiber multiplicities."""
    if diagram.group != system.type:
        raise TRootError(
            f"painting is for {diagram.group.label}, roots are {system.type.label}")
    painted = [i for i, bit in enumerate(diagram.paint) if bit]
    fibers: dict[Vec, int] = {}
    for root in system.positive_roots:
        omega = tuple(root[i] for i in painted)
        if any(omega):
            fibers[omega] = fibers.get(omega, 0) + 1
    mult: dict[Vec, int] = {}
    for v, c in fibers.items():
        mult[v] = c
        mult[vec_neg(v)] = c
    vectors = tuple(sorted(mult))
    gram = _projected_gram(system, painted)
    return TRootSystem(len(painted), vectors, mult, gram)


def _projected_gram(system: RootSystem, painted: list[int]):
    """Integer form of the orthogonal projection onto the painted span
    (Schur complement of the unpainted block of the ambient Gram)."""
    g = gram_matrix_doubled(system.type)
    unpainted = [i for i in range(system.rank) if i not in painted]
    b = [[Fraction(g[i][j]) for j in painted] for i in painted]
    if not unpainted:
        return clear_denominators(b)
    c = [[Fraction(g[i][j]) for j in unpainted] for i in painted]
    d = [[Fraction(g[i][j]) for j in unpainted] for i in unpainted]
    dinv = invert(d)
    k, u = len(painted), len(unpainted)
    m = [[b[r][s] - sum(c[r][a] * dinv[a][t] * c[s][t]
                        for a in range(u) for t in range(u))
          for s in range(k)] for r in range(k)]
    return clear_denominators(m)


def positive_part(omega: TRootSystem) -> list[Vec]:
    """The half of the system in the closed nonnegative coordinate cone."""
    if omega._positive is not None:
        return list(omega._positive)
    pos = []
    for v in omega.vectors:
        if all(x >= 0 for x in v):
            pos.append(v)
        elif not all(x <= 0 for x in v):
            raise NotPositivelyGenerated(
                f"system not positively generated in this basis: {v}")
    if 2 * len(pos) != len(omega.vectors):
        raise NotPositivelyGenerated("positive half has the wrong size")
    omega._positive = tuple(pos)
    return pos


def g_of(v: Vec, omega: TRootSystem | None = None) -> int:
    """Largest integer dividing the vector; with a containing system,
    cross-checked against max{k : v/k in the system}."""
    g = vec_gcd(v)
    if g == 0:
        raise TRootError("zero vector has no scale index")
    if omega is not None:
        by_def = 1
        for k in range(g, 1, -1):
            if g % k == 0 and tuple(x // k for x in v) in omega:
                by_def = k
                break
        if by_def != g:
            raise TRootError(
                f"gcd {g} of {v} disagrees with definitional index {by_def}")
    return g


def module_dimension(omega: TRootSystem, v: Vec) -> int:
    """Dimension of the isotropy submodule attached to a T-root (fiber size)."""
    return omega.multiplicity(v)


def scaled(omega: TRootSystem, s: int) -> TRootSystem:
    """The system s*Omega (for tests and scale-invariance checks)."""
    if s == 0:
        raise TRootError("scale must be nonzero")
    mult = {tuple(s * x for x in v): m for v, m in omega._mult.items()}
    return TRootSystem(omega.k, tuple(sorted(mult)), mult, omega.gram)
