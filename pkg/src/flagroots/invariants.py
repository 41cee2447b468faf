"""Numeric invariants of T-root systems.

The classification key is (k, d, c, v, w): d counts the positive half,
c multiplies the scale indices over it, v counts the positive vectors
surviving the doubling criterion (no 2w - g stays in the system), and w
multiplies the scale indices over those.  Hull vertices are computed
independently by exact convex-position certificates so the doubling
criterion can be checked against real geometry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ._linalg import (Vec, lattice_covolume, mat_vec, shoelace_double_area,
                      sort_counterclockwise, vec_gcd, vec_neg)
from ._simplex import convex_combination, solve_feasibility
from .troots import TRootSystem, g_of, positive_part


class UnsupportedRank(ValueError):
    pass


class BadPrimes(ArithmeticError):
    """Finite-field chamber counts did not interpolate consistently."""


@dataclass(frozen=True)
class InvariantTuple:
    k: int
    d: int
    c: int
    v: int
    w: int

    def __post_init__(self):
        if not (self.d >= self.v >= 1):
            raise ValueError(f"need d >= v >= 1, got {self}")
        if self.w < 1 or self.c % self.w:
            raise ValueError(f"w must divide c, got {self}")

    @property
    def key(self) -> tuple[int, int, int, int, int]:
        return (self.k, self.d, self.c, self.v, self.w)

    def __str__(self) -> str:
        return f"k={self.k}, d={self.d}, c={self.c}, v={self.v}, w={self.w}"

    def to_json(self) -> dict:
        return {"k": self.k, "d": self.d, "c": self.c, "v": self.v, "w": self.w}


@dataclass(frozen=True)
class ExtendedInvariants:
    i: dict[int, int]
    j: dict[int, int]
    a: Fraction | None
    hull_vertex_count: int
    chamber_count: int | None = None

    def to_json(self) -> dict:
        return {
            "i": {str(n): c for n, c in sorted(self.i.items())},
            "j": {str(n): c for n, c in sorted(self.j.items())},
            "a": None if self.a is None else f"{self.a.numerator}/{self.a.denominator}",
            "hull_vertex_count": self.hull_vertex_count,
            "chamber_count": self.chamber_count,
        }


@lru_cache(maxsize=None)
def _doubling_vertex_positives_cached(omega: TRootSystem) -> tuple[Vec, ...]:
    return tuple(_doubling_vertex_positives(omega))


def doubling_vertex_positives(omega: TRootSystem) -> list[Vec]:
    """Positive vectors w with 2w - g outside the positive half for every
    g != w in the system or zero (the tabulated vertex criterion)."""
    return list(_doubling_vertex_positives_cached(omega))


def _doubling_vertex_positives(omega: TRootSystem) -> list[Vec]:
    pos = positive_part(omega)
    posset = set(pos)
    out = []
    for w in pos:
        dbl = tuple(2 * x for x in w)
        if dbl in posset:
            continue  # g = 0 witness
        if any(tuple(2 * a - b for a, b in zip(w, g)) in posset
               for g in omega.vectors if g != w):
            continue
        out.append(w)
    return out


@lru_cache(maxsize=None)
def doubling_vertices(omega: TRootSystem) -> frozenset[Vec]:
    """Symmetric variant: 2w - g stays outside the whole system."""
    out = set()
    for w in omega.vectors:
        dbl = tuple(2 * x for x in w)
        if dbl in omega:
            continue
        if any(tuple(2 * a - b for a, b in zip(w, g)) in omega
               for g in omega.vectors if g != w):
            continue
        out.add(w)
    return frozenset(out)


def invariant_tuple(omega: TRootSystem) -> InvariantTuple:
    pos = positive_part(omega)
    c = 1
    for w in pos:
        c *= vec_gcd(w)
    verts = doubling_vertex_positives(omega)
    w_val = 1
    for w in verts:
        w_val *= vec_gcd(w)
    return InvariantTuple(omega.k, len(pos), c, len(verts), w_val)


# --- exact hull vertices -------------------------------------------------

def _midpoint_witness(v: Vec, omega: TRootSystem) -> bool:
    """True iff v = (g + (2v-g))/2 for members g, 2v-g of the system minus v
    (or v = (2v)/2 via the centre), i.e. v is certifiably not a vertex."""
    if tuple(2 * x for x in v) in omega:
        return True
    for g in omega.vectors:
        if g != v and tuple(2 * a - b for a, b in zip(v, g)) in omega:
            return True
    return False


def _separated_exactly(v: Vec, h, points) -> bool:
    """Exact check that h exposes v strictly above every other point."""
    arr = np.asarray(points, dtype=np.int64)
    hv = np.asarray(h, dtype=np.int64)
    bound = (np.abs(arr).max(initial=0) + 1) * (np.abs(hv).max(initial=0) + 1) * len(h)
    if bound < 2**62:
        vals = arr @ hv
        target = sum(a * b for a, b in zip(v, h))
        better = vals >= target
        idx = np.nonzero(better)[0]
        return len(idx) == 1 and tuple(points[idx[0]]) == v
    target = sum(a * b for a, b in zip(v, h))
    hits = [p for p in points if sum(a * b for a, b in zip(p, h)) >= target]
    return hits == [v]


@lru_cache(maxsize=None)
def hull_vertices(omega: TRootSystem) -> frozenset[Vec]:
    """Exact vertex set of the convex hull of the system.

    Non-vertices carry an explicit convex-combination certificate (a
    midpoint witness, or a feasible point of the membership LP); vertices
    carry an exact separating functional (the attached quadratic form as
    a first guess, the Farkas certificate of the membership LP as the
    deciding fallback).  Floats never decide anything.
    """
    pts = list(omega.vectors)
    verts: set[Vec] = set()
    for v in pts:
        if vec_neg(v) in verts:
            verts.add(v)
            continue
        if v < vec_neg(v):
            continue  # handled via its mirror
        if _midpoint_witness(v, omega):
            continue
        h = mat_vec(omega.gram, v) if omega.gram is not None else v
        if _separated_exactly(v, h, pts):
            verts.add(v)
            continue
        others = [p for p in pts if p != v]
        if convex_combination(others, v) is None:
            verts.add(v)
    return frozenset(verts | {vec_neg(v) for v in verts})


def proportionality_profile(omega: TRootSystem) -> tuple[dict[int, int], dict[int, int]]:
    """Counts i(n) of positive w with n*w positive, and j(n) with n*w in
    the positive doubling-vertex set, for n = 2, 3 and any n with hits."""
    pos = positive_part(omega)
    posset = set(pos)
    vset = set(doubling_vertex_positives(omega))
    max_g = max((vec_gcd(w) for w in pos), default=1)
    i_map: dict[int, int] = {}
    j_map: dict[int, int] = {}
    for n in range(2, max(max_g, 3) + 1):
        i_n = sum(1 for w in pos if tuple(n * x for x in w) in posset)
        j_n = sum(1 for w in pos if tuple(n * x for x in w) in vset)
        if n in (2, 3) or i_n or j_n:
            i_map[n] = i_n
            j_map[n] = j_n
    return i_map, j_map


def rank2_area_invariant(omega: TRootSystem) -> Fraction:
    """Twice the hull area over the covolume of the generated lattice."""
    if omega.k != 2:
        raise UnsupportedRank("area invariant is defined for rank 2 only")
    verts = sort_counterclockwise(hull_vertices(omega))
    double_area = shoelace_double_area(verts)
    covol = lattice_covolume(omega.vectors, 2)
    return Fraction(double_area, covol)


def extended_invariants(omega: TRootSystem, chambers: bool = False) -> ExtendedInvariants:
    i_map, j_map = proportionality_profile(omega)
    a = rank2_area_invariant(omega) if omega.k == 2 else None
    count = count_chambers(omega) if chambers and omega.k <= 3 else None
    return ExtendedInvariants(i_map, j_map, a, len(hull_vertices(omega)), count)


# --- chamber counting ----------------------------------------------------

_PRIME_POOLS = [
    (101, 103, 107, 109, 113, 127),
    (211, 223, 227, 229, 233, 239),
]


def distinct_lines(omega: TRootSystem) -> list[Vec]:
    """Primitive normals of the distinct hyperplanes w-perp."""
    seen = set()
    for w in positive_part(omega):
        g = vec_gcd(w)
        seen.add(tuple(x // g for x in w))
    return sorted(seen)


def _points_off_hyperplanes(lines, p: int, k: int) -> int:
    axes = []
    for i in range(k):
        shape = [1] * k
        shape[i] = p
        axes.append(np.arange(p, dtype=np.int64).reshape(shape))
    ok = np.ones((p,) * k, dtype=bool)
    for w in lines:
        acc = sum((w[i] % p) * axes[i] for i in range(k) if w[i] % p)
        ok &= (acc % p) != 0
    return int(ok.sum())


def _interpolate_at(xs, ys, x0) -> Fraction:
    val = Fraction(0)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        term = Fraction(yi)
        for j, xj in enumerate(xs):
            if j != i:
                term *= Fraction(x0 - xj, xi - xj)
        val += term
    return val


@lru_cache(maxsize=None)
def count_chambers(omega: TRootSystem, rank_bound: int = 3) -> int:
    """Number of chambers of the arrangement of hyperplanes w-perp.

    Counts points of F_p^k off all hyperplanes at k+1 primes, interpolates
    the characteristic polynomial, and applies the (-1)^k chi(-1) region
    count; an extra prime cross-checks the interpolation, escalating to a
    larger prime pool on mismatch.
    """
    k = omega.k
    if k > rank_bound:
        raise UnsupportedRank(f"chamber counting limited to rank {rank_bound}")
    lines = distinct_lines(omega)
    if k == 1:
        return 2
    for pool in _PRIME_POOLS:
        primes = pool[:k + 2]
        counts = [_points_off_hyperplanes(lines, p, k) for p in primes]
        fit_x, fit_y = primes[:k + 1], counts[:k + 1]
        check = _interpolate_at(fit_x, fit_y, primes[k + 1])
        if check == counts[k + 1]:
            regions = _interpolate_at(fit_x, fit_y, -1)
            if regions.denominator != 1:
                continue
            return abs(int(regions))
    raise BadPrimes("chamber counts did not interpolate to a polynomial")


@lru_cache(maxsize=None)
def chambers_by_sign_vectors(omega: TRootSystem, max_lines: int = 14) -> int:
    """Independent chamber count: number of realizable strict sign vectors.

    Deterministic sample points certify most realizable vectors by direct
    evaluation; the remaining candidates are settled by an exact
    feasibility LP.  Sign vectors come in opposite pairs, so only half the
    masks are examined.
    """
    lines = distinct_lines(omega)
    m = len(lines)
    if m > max_lines:
        raise UnsupportedRank(f"sign-vector oracle limited to {max_lines} lines")
    k = omega.k
    arr = np.asarray(lines, dtype=np.int64)
    rng = np.random.default_rng(20240801)
    realizable: set[int] = set()
    for _ in range(6):
        pts = rng.integers(-10**6, 10**6, size=(512, k))
        vals = pts @ arr.T
        good = (vals != 0).all(axis=1)
        for row in vals[good]:
            mask = 0
            for i, val in enumerate(row):
                if val > 0:
                    mask |= 1 << i
            realizable.add(mask)
    count = 0
    for mask in range(1 << (m - 1)):  # fix the sign of the last line
        pair = (mask in realizable) or (mask ^ ((1 << m) - 1) in realizable)
        if not pair:
            rows = []
            for i, line in enumerate(lines):
                s = 1 if (mask >> i) & 1 else -1
                # s*(l . x) >= 1 with x = u - w and a slack per row
                row = [s * c for c in line] + [-s * c for c in line] + [0] * m
                row[2 * k + i] = -1
                rows.append(row)
            x, _ = solve_feasibility(rows, [1] * m)
            pair = x is not None
        if pair:
            count += 2
    return count
