"""Independent oracles used by the tests.

These deliberately avoid the library's own algorithms: roots come from a
reflection-orbit closure, hull vertices from exhaustive small convex
combinations, areas from explicit coordinates.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from flagroots.rootsys import CartanType, cartan_matrix


def weyl_orbit_roots(ct: CartanType) -> set[tuple[int, ...]]:
    """All roots as the orbit of the simple roots under simple reflections
    acting on coefficient vectors."""
    n = ct.rank
    cartan = cartan_matrix(ct)

    def reflect(beta, i):
        pairing = sum(b * cartan[j][i] for j, b in enumerate(beta))
        out = list(beta)
        out[i] -= pairing
        return tuple(out)

    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    orbit = set(simple) | {tuple(-x for x in s) for s in simple}
    frontier = list(orbit)
    while frontier:
        new = []
        for beta in frontier:
            for i in range(n):
                img = reflect(beta, i)
                if img not in orbit:
                    orbit.add(img)
                    new.append(img)
        frontier = new
    return orbit


def classical_positive_count(family: str, n: int, removed: int = 0) -> int:
    if family == "A":
        return n * (n + 1) // 2
    if family == "B":
        return n * n
    if family == "C":
        return n * n - removed
    if family == "D":
        return n * (n - 1)
    if family == "BC":
        return n * n + n - removed
    raise ValueError(family)


def _solves_convex(subset, target) -> bool:
    """Exact test: target is a convex combination of the subset.

    Integer Gauss-Jordan on the homogenized system; only affinely
    independent subsets can certify (Caratheodory supplies one whenever
    any convex combination exists), so underdetermined subsets report
    False.
    """
    m = len(subset)
    k = len(target)
    mat = [[subset[j][i] for j in range(m)] + [target[i]] for i in range(k)]
    mat.append([1] * (m + 1))
    pivots = []
    r = 0
    for col in range(m):
        piv = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        lead = mat[r]
        a = lead[col]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                b = mat[i][col]
                mat[i] = [a * x - b * y for x, y in zip(mat[i], lead)]
        pivots.append(col)
        r += 1
    if r < m:
        return False
    for i in range(r, len(mat)):
        if mat[i][m]:
            return False  # inconsistent
    for row_idx, col in enumerate(pivots):
        if Fraction(mat[row_idx][m], mat[row_idx][col]) < 0:
            return False
    return True


def brute_force_hull_vertices(points) -> set[tuple[int, ...]]:
    """Vertices of conv(points) by exhausting small support sets
    (Caratheodory: dimension+1 points suffice).  Exponential; use on
    small inputs only."""
    pts = [tuple(p) for p in points]
    k = len(pts[0])
    verts = set()
    for p in pts:
        others = [q for q in pts if q != p]
        inside = False
        for size in range(1, k + 2):
            for subset in combinations(others, size):
                if _solves_convex(subset, p):
                    inside = True
                    break
            if inside:
                break
        if not inside:
            verts.add(p)
    return verts
