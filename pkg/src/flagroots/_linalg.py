"""Exact integer/rational linear algebra helpers.

Everything here works on small dense matrices (dimension <= 8, a few
hundred rows) and never touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from math import gcd

Vec = tuple[int, ...]


def vec_gcd(v: Vec) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def vec_neg(v: Vec) -> Vec:
    return tuple(-x for x in v)


def vec_scale(v: Vec, s: int) -> Vec:
    return tuple(s * x for x in v)


def vec_sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def mat_vec(m, v):
    return tuple(dot(row, v) for row in m)


def mat_mul(a, b):
    bt = list(zip(*b))
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def transpose(m):
    return tuple(zip(*m))


class Subspace:
    """Incremental rational row-echelon span with exact membership tests."""

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    def copy(self) -> "Subspace":
        other = Subspace.__new__(Subspace)
        other.dim = self.dim
        other.rows = [row.copy() for row in self.rows]
        other.pivots = self.pivots.copy()
        return other

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, v) -> list[Fraction]:
        w = [Fraction(x) for x in v]
        for row, p in zip(self.rows, self.pivots):
            if w[p]:
                c = w[p]
                for j in range(p, self.dim):
                    w[j] -= c * row[j]
        return w

    def contains(self, v) -> bool:
        return not any(self._reduce(v))

    def add(self, v) -> bool:
        """Add a vector; return True if the rank grew."""
        w = self._reduce(v)
        for p in range(self.dim):
            if w[p]:
                inv = 1 / w[p]
                w = [x * inv for x in w]
                self.rows.append(w)
                self.pivots.append(p)
                order = sorted(range(len(self.pivots)), key=self.pivots.__getitem__)
                self.rows = [self.rows[i] for i in order]
                self.pivots = [self.pivots[i] for i in order]
                return True
        return False


class IntSpan:
    """Integer row-reduced span: primitive RREF rows, canonical for the
    subspace, with fraction-free membership tests."""

    __slots__ = ("dim", "rows", "pivots")

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: list[tuple[int, ...]] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, v) -> list[int]:
        w = list(v)
        big = 1 << 48
        for row, p in zip(self.rows, self.pivots):
            if w[p]:
                a, b = row[p], w[p]
                w = [a * x - b * y for x, y in zip(w, row)]
                if any(x > big or x < -big for x in w):
                    g = 0
                    for x in w:
                        g = gcd(g, x)
                    if g > 1:
                        w = [x // g for x in w]
        return w

    def contains(self, v) -> bool:
        return not any(self._reduce(v))

    def add(self, v) -> bool:
        w = self._reduce(v)
        pivot = next((p for p in range(self.dim) if w[p]), None)
        if pivot is None:
            return False
        g = 0
        for x in w:
            g = gcd(g, x)
        if g > 1:
            w = [x // g for x in w]
        if w[pivot] < 0:
            w = [-x for x in w]
        new = tuple(w)
        updated = []
        for row, p in zip(self.rows, self.pivots):
            if row[pivot]:
                a, b = new[pivot], row[pivot]
                row = [a * x - b * y for x, y in zip(row, new)]
                g = 0
                for x in row:
                    g = gcd(g, x)
                if g > 1:
                    row = [x // g for x in row]
                if row[p] < 0:
                    row = [-x for x in row]
                row = tuple(row)
            updated.append(row)
        updated.append(new)
        pivots = self.pivots + [pivot]
        order = sorted(range(len(pivots)), key=pivots.__getitem__)
        self.rows = [updated[i] for i in order]
        self.pivots = [pivots[i] for i in order]
        return True

    def key(self) -> tuple:
        return tuple(self.rows)


def rank_of(vectors, dim: int) -> int:
    sp = IntSpan(dim)
    for v in vectors:
        sp.add(v)
    return sp.rank


def invert(a):
    """Exact inverse of a square rational matrix; None if singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                c = m[r][col]
                m[r] = [x - c * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def clear_denominators(m) -> tuple[tuple[int, ...], ...]:
    """Scale a rational matrix by the lcm of denominators to an integer one."""
    lcm = 1
    for row in m:
        for x in row:
            d = Fraction(x).denominator
            lcm = lcm * d // gcd(lcm, d)
    return tuple(tuple(int(Fraction(x) * lcm) for x in row) for row in m)


def lattice_covolume(vectors, dim: int) -> int:
    """Covolume of the integer lattice generated by the vectors.

    Row-style Hermite reduction with extended gcd steps; the product of
    the pivots is the index in Z^dim, requiring full rank.
    """
    basis: list[list[int]] = []
    pivots: list[int] = []
    for v0 in vectors:
        vec = list(v0)
        j = 0
        while j < dim:
            if not vec[j]:
                j += 1
                continue
            if j in pivots:
                p = pivots.index(j)
                row = basis[p]
                a, b = row[j], vec[j]
                if b % a == 0:
                    q = b // a
                    vec = [x - q * y for x, y in zip(vec, row)]
                else:
                    x, y, g = _xgcd(a, b)
                    ag, mbg = a // g, -(b // g)
                    new_row = [x * r + y * w for r, w in zip(row, vec)]
                    vec = [mbg * r + ag * w for r, w in zip(row, vec)]
                    basis[p] = new_row
                j += 1
            else:
                basis.append(vec)
                pivots.append(j)
                break
    if len(basis) != dim:
        raise ValueError("lattice does not have full rank")
    cov = 1
    for row, p in zip(basis, pivots):
        cov *= abs(row[p])
    return cov


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, next_x = 1, 0
    y, next_y = 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
    return x, y, a


def _angular_cmp(a: Vec, b: Vec) -> int:
    def half(v):
        return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1

    ha, hb = half(a), half(b)
    if ha != hb:
        return ha - hb
    cross = a[0] * b[1] - a[1] * b[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def sort_counterclockwise(points) -> list[Vec]:
    """Exact angular sort of planar integer points, starting on the +x axis."""
    return sorted(points, key=cmp_to_key(_angular_cmp))


def shoelace_double_area(ordered) -> int:
    """Twice the area of a polygon with integer vertices in cyclic order."""
    total = 0
    n = len(ordered)
    for i in range(n):
        x1, y1 = ordered[i]
        x2, y2 = ordered[(i + 1) % n]
        total += x1 * y2 - x2 * y1
    return abs(total)
