"""Subsystem predicates, irreducibility, exact isomorphism testing, and
matching against the classical vector families.

Isomorphism is linear: Omega = A Omega' for an invertible rational A.
The search anchors on hull vertices (extreme points map to extreme
points), prunes by scale index and sum-profile labels, and verifies the
full bijection exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from ._linalg import (IntSpan, Subspace, Vec, invert, mat_mul, mat_vec,
                      rank_of, vec_gcd, vec_neg)
from .invariants import hull_vertices, rank2_area_invariant
from .rootsys import ClassicalTRootSpec, RootSystem, classical_troot_system
from .troots import TRootSystem


class UndecidedBySearch(Exception):
    """Rank exceeds the witness-search bound and invariants do not settle it."""


@dataclass(frozen=True)
class SubsystemView:
    parent: TRootSystem
    members: frozenset[Vec]

    def __post_init__(self):
        if not self.members:
            raise ValueError("subsystem must be nonempty")
        if not self.members <= set(self.parent.vectors):
            raise ValueError("members must belong to the parent system")

    @property
    def rank(self) -> int:
        return rank_of(self.members, self.parent.k)


def is_closed_symmetric(sigma: SubsystemView) -> bool:
    mem = sigma.members
    for a in mem:
        if vec_neg(a) not in mem:
            return False
    for a in mem:
        for b in mem:
            s = tuple(x + y for x, y in zip(a, b))
            if any(s) and s in sigma.parent and s not in mem:
                return False
    return True


def is_complete(sigma: SubsystemView) -> bool:
    span = IntSpan(sigma.parent.k)
    for v in sigma.members:
        span.add(v)
    for v in sigma.parent.vectors:
        if span.contains(v) and v not in sigma.members:
            return False
    return True


def _component_count(vectors, dim: int) -> tuple[int, int]:
    """(number of matroid components, rank) of a vector configuration.

    A basis is extracted greedily; each remaining vector ties together the
    basis elements appearing in its (unique) expansion, which generates
    the finest decomposition into transversal complete parts.
    """
    vecs = [v for v in vectors if any(v)]
    if not vecs:
        return 0, 0
    span = IntSpan(dim)
    basis: list[Vec] = []
    rest: list[Vec] = []
    for v in vecs:
        if span.add(v):
            basis.append(v)
        else:
            rest.append(v)
    r = len(basis)
    gram = [[sum(x * y for x, y in zip(a, b)) for b in basis] for a in basis]
    inv = invert(gram)
    parent = list(range(r))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj

    for v in rest:
        rhs = [sum(x * y for x, y in zip(b, v)) for b in basis]
        coords = mat_vec(inv, rhs)
        support = [i for i, c in enumerate(coords) if c]
        for i in support[1:]:
            union(support[0], i)
    comps = {find(i) for i in range(r)}
    return len(comps), r


def is_irreducible(omega: TRootSystem) -> bool:
    """True iff the system is not a union of two complete subsystems with
    transversal spans, and spans the full ambient space."""
    comps, rank = _component_count(omega.vectors, omega.k)
    return comps == 1 and rank == omega.k


def _members_irreducible(members, dim: int, need_rank: int) -> bool:
    comps, rank = _component_count(members, dim)
    return comps == 1 and rank == need_rank


# --- complete subsystems (flats of the line configuration) ---------------

class _LineConfig:
    def __init__(self, omega: TRootSystem):
        self.omega = omega
        self.k = omega.k
        by_rep: dict[Vec, list[Vec]] = {}
        for v in omega.vectors:
            g = vec_gcd(v)
            p = tuple(x // g for x in v)
            rep = p if p > vec_neg(p) else vec_neg(p)
            by_rep.setdefault(rep, []).append(v)
        self.reps = sorted(by_rep)
        self.members = [tuple(sorted(by_rep[r])) for r in self.reps]
        self._closures: dict[tuple, frozenset[int]] = {}
        self._irreducible: dict[frozenset[int], bool] = {}

    def _span(self, line_idxs) -> IntSpan:
        span = IntSpan(self.k)
        for i in line_idxs:
            span.add(self.reps[i])
        return span

    def closure(self, line_idxs) -> frozenset[int]:
        span = self._span(line_idxs)
        if span.rank == self.k:
            return frozenset(range(len(self.reps)))
        key = span.key()
        hit = self._closures.get(key)
        if hit is not None:
            return hit
        flat = frozenset(i for i, rep in enumerate(self.reps)
                         if span.contains(rep))
        self._closures[key] = flat
        return flat

    def flat_irreducible(self, flat: frozenset[int], rank: int) -> bool:
        hit = self._irreducible.get(flat)
        if hit is None:
            hit = _members_irreducible(self.flat_members(flat), self.k, rank)
            self._irreducible[flat] = hit
        return hit

    def flat_members(self, flat) -> frozenset[Vec]:
        out = []
        for i in flat:
            out.extend(self.members[i])
        return frozenset(out)

    def flats_of_rank(self, r: int) -> list[frozenset[int]]:
        level = {frozenset([i]) for i in range(len(self.reps))}
        rank_now = 1
        while rank_now < r:
            nxt = set()
            for flat in level:
                for i in range(len(self.reps)):
                    if i in flat:
                        continue
                    closed = self.closure(flat | {i})
                    if rank_of([self.reps[j] for j in closed], self.k) == rank_now + 1:
                        nxt.add(closed)
            level = nxt
            rank_now += 1
        return sorted(level, key=sorted)


def complete_subsystems(omega: TRootSystem, r: int) -> list[SubsystemView]:
    """All complete subsystems of rank exactly r (spans of r-element
    subsets, deduplicated; degenerate lower-rank spans excluded)."""
    if not 1 <= r <= omega.k:
        raise ValueError(f"rank {r} out of range for k={omega.k}")
    config = _LineConfig(omega)
    views = [SubsystemView(omega, config.flat_members(f))
             for f in config.flats_of_rank(r)]
    return sorted(views, key=lambda v: sorted(v.members))


def plane_subsystems(omega: TRootSystem) -> list[frozenset[Vec]]:
    """Member sets of all rank-2 complete subsystems, via 2x2-minor keys
    (fast enough to scan the full classification corpus)."""
    config = _LineConfig(omega)
    reps = config.reps
    k = omega.k
    planes: dict[tuple, set[int]] = {}
    for (i, a), (j, b) in combinations(enumerate(reps), 2):
        minors = [a[s] * b[t] - a[t] * b[s] for s in range(k) for t in range(s + 1, k)]
        g = vec_gcd(minors)
        if g == 0:
            continue  # proportional reps cannot occur; guard regardless
        minors = [m // g for m in minors]
        first = next(m for m in minors if m)
        if first < 0:
            minors = [-m for m in minors]
        planes.setdefault(tuple(minors), set()).update((i, j))
    return sorted((config.flat_members(frozenset(s)) for s in planes.values()),
                  key=sorted)


def has_extension_property(omega: TRootSystem, max_subsystem_rank: int | None = None) -> bool:
    """Brute-force check that every complete irreducible subsystem of rank
    r < k sits inside a complete irreducible subsystem of rank r+1.

    Flats are enumerated level by level; the witness search per flat
    stops at the first irreducible one-step extension.  The optional
    bound caps the subsystem rank enumerated (full check when None).
    """
    k = omega.k
    if k <= 1:
        return True
    config = _LineConfig(omega)
    n = len(config.reps)
    top = min(k - 1, max_subsystem_rank if max_subsystem_rank else k - 1)
    level: set[frozenset[int]] = {config.closure({i}) for i in range(n)}
    rank_now = 1
    omega_set = set(omega.vectors)

    def interacting_first(flat):
        """Candidate lines ordered so that lines summing with a flat member
        back into the system come first (they connect the extension)."""
        members = config.flat_members(flat)
        good, rest = [], []
        for j in range(n):
            if j in flat:
                continue
            rep = config.reps[j]
            if any(tuple(a + b for a, b in zip(rep, m)) in omega_set
                   for m in members):
                good.append(j)
            else:
                rest.append(j)
        return good + rest

    while rank_now <= top:
        build_next = rank_now < top
        next_level: set[frozenset[int]] = set()
        for flat in sorted(level, key=sorted):
            if build_next:
                for i in range(n):
                    if i not in flat:
                        next_level.add(config.closure(flat | {i}))
            if not config.flat_irreducible(flat, rank_now):
                continue
            found = False
            for i in interacting_first(flat):
                closed = config.closure(flat | {i})
                if config.flat_irreducible(closed, rank_now + 1):
                    found = True
                    break
            if not found:
                return False
        level = next_level
        rank_now += 1
    return True


# --- isomorphism ----------------------------------------------------------

@dataclass(frozen=True)
class IsomorphismWitness:
    matrix: tuple[tuple[Fraction, ...], ...]
    pairing: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {
            "matrix": [[f"{x.numerator}/{x.denominator}" for x in row]
                       for row in self.matrix],
            "pairing": [list(p) for p in self.pairing],
        }


def _g_within(v: Vec, omega: TRootSystem) -> int:
    """max{k : v/k in the system}; the basis-independent scale index."""
    g = vec_gcd(v)
    for k in range(g, 1, -1):
        if g % k == 0 and tuple(x // k for x in v) in omega:
            return k
    return 1


def _sum_profile(v: Vec, omega: TRootSystem) -> int:
    return sum(1 for x in omega.vectors
               if tuple(a + b for a, b in zip(v, x)) in omega)


def _fingerprint(omega: TRootSystem):
    verts = hull_vertices(omega)
    ratios = []
    for n in (2, 3, 4, 5, 6):
        hits = sum(1 for v in omega.vectors
                   if tuple(n * x for x in v) in omega)
        ratios.append(hits // 2)
    fp = (
        omega.k,
        omega.d,
        tuple(sorted(_g_within(v, omega) for v in omega.vectors)),
        len(verts) // 2,
        tuple(sorted(_g_within(v, omega) for v in verts)),
        tuple(ratios),
        tuple(sorted(_sum_profile(v, omega) for v in omega.vectors)),
    )
    if omega.k == 2:
        fp = fp + (rank2_area_invariant(omega),)
    return fp


def _vertex_labels(omega: TRootSystem, verts):
    return {v: (_g_within(v, omega), _sum_profile(v, omega)) for v in verts}


def find_isomorphism(a: TRootSystem, b: TRootSystem,
                     rank_bound: int = 4) -> IsomorphismWitness | None:
    """Witness with A*(vectors of a) = vectors of b, or None.

    Raises UndecidedBySearch when the rank exceeds the search bound and
    the invariant fingerprints agree (so 'no' cannot be concluded).
    """
    if a.k != b.k:
        return None
    if _fingerprint(a) != _fingerprint(b):
        return None
    if a.k > rank_bound:
        raise UndecidedBySearch(f"rank {a.k} exceeds search bound {rank_bound}")
    k = a.k
    averts = sorted(hull_vertices(a))
    bverts = sorted(hull_vertices(b))
    alabels = _vertex_labels(a, averts)
    blabels = _vertex_labels(b, bverts)

    pivot: list[Vec] = []
    span = Subspace(k)
    for v in averts:
        if span.add(v):
            pivot.append(v)
        if len(pivot) == k:
            break
    if len(pivot) < k:
        return None  # degenerate hull; cannot happen for spanning systems

    t_cols = tuple(zip(*pivot))  # pivot vectors as columns
    t_inv = invert(t_cols)
    b_set = set(b.vectors)

    def try_tuple(images: list[Vec]) -> IsomorphismWitness | None:
        u_cols = tuple(zip(*images))
        mat = mat_mul(u_cols, t_inv)
        if invert(mat) is None:
            return None
        mapped = {}
        for v in a.vectors:
            img = mat_vec(mat, v)
            if any(x.denominator != 1 for x in img):
                return None
            img_t = tuple(int(x) for x in img)
            if img_t not in b_set:
                return None
            mapped[v] = img_t
        if len(set(mapped.values())) != len(b_set):
            return None
        b_index = {v: i for i, v in enumerate(b.vectors)}
        pairing = tuple((i, b_index[mapped[v]]) for i, v in enumerate(a.vectors))
        return IsomorphismWitness(tuple(tuple(Fraction(x) for x in row) for row in mat),
                                  pairing)

    def search(pos: int, chosen: list[Vec], span_b: Subspace):
        if pos == k:
            return try_tuple(chosen)
        want = alabels[pivot[pos]]
        for u in bverts:
            if u in chosen or blabels[u] != want:
                continue
            sp = span_b.copy()
            if not sp.add(u):
                continue
            found = search(pos + 1, chosen + [u], sp)
            if found is not None:
                return found
        return None

    return search(0, [], Subspace(k))


def b3_plus_v() -> TRootSystem:
    """The rank-3 system B3 with the extra opposite pair +-(sum of the
    three short positive roots), in B3 simple-basis coordinates."""
    base = classical_troot_system(ClassicalTRootSpec("B", 3))
    apex = (1, 2, 3)
    vectors = sorted(set(base.vectors) | {apex, vec_neg(apex)})
    return TRootSystem.from_vectors(3, vectors, gram=base.gram)


def classical_candidates(k: int, d: int) -> list[ClassicalTRootSpec]:
    """Classical families of rank k and positive count d, canonical order."""
    out = []
    if d == k * (k + 1) // 2:
        out.append(ClassicalTRootSpec("A", k))
    if k >= 3 and d == k * (k - 1):
        out.append(ClassicalTRootSpec("D", k))
    if d == k * k:
        out.append(ClassicalTRootSpec("B", k))
        if k >= 2:
            out.append(ClassicalTRootSpec("C", k))
    for removed in range(1, k):
        if d == k * k - removed:
            out.append(ClassicalTRootSpec("C", k, removed))
    if d == k * k + k:
        out.append(ClassicalTRootSpec("BC", k))
    for removed in range(1, k):
        if d == k * k + k - removed:
            out.append(ClassicalTRootSpec("BC", k, removed))
    return out


def match_classical(omega: TRootSystem, rank_bound: int = 4) -> ClassicalTRootSpec | None:
    """First classical family isomorphic to the system, or None."""
    undecided = []
    for spec in classical_candidates(omega.k, omega.d):
        gen = classical_troot_system(spec)
        try:
            if find_isomorphism(omega, gen, rank_bound) is not None:
                return spec
        except UndecidedBySearch:
            undecided.append(spec)
    if undecided:
        raise UndecidedBySearch(
            f"candidates {[s.label for s in undecided]} not settled by invariants")
    return None


def screen_exceptional(k: int, d: int, v: int, i2: int) -> bool | None:
    """Fast classifier: can a rank>=3 system match a classical family,
    judged from (k, d, v, i(2)) alone?

    d > k^2+k leaves no classical candidate; in [k^2+1, k^2+k] the only
    candidate is a truncated BC whose i(2) equals d-k^2; in {k^2-1, k^2}
    the B/C/truncated-C candidates all have hull vertices strictly inside
    the positive half (v < d).  Returns True for certainly-exceptional,
    False when a classical slot fits, None when no case applies.
    """
    if k < 3:
        raise ValueError("screen applies to rank >= 3")
    if d > k * k + k:
        return True
    if k * k + 1 <= d <= k * k + k:
        return i2 != d - k * k
    if k * k - 1 <= d <= k * k:
        return v == d
    return None


def divisible_coefficient_counts(system: RootSystem, modulus: int = 3,
                                 min_count: int = 3) -> dict[str, int]:
    """Counts of positive roots under three readings of the coefficient
    filter "at least `min_count` coefficients divisible by `modulus`,
    the first of them positive"."""
    zeros_included = 0
    some_positive = 0
    positive_only = 0
    for root in system.positive_roots:
        divisible = [c for c in root if c % modulus == 0]
        if len(divisible) >= min_count:
            zeros_included += 1
            if any(c > 0 for c in divisible):
                some_positive += 1
        if sum(1 for c in root if c and c % modulus == 0) >= min_count:
            positive_only += 1
    return {
        "zeros_included": zeros_included,
        "some_positive": some_positive,
        "positive_only": positive_only,
    }
