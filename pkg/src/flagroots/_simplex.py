"""Exact phase-1 simplex over the rationals, with verified certificates.

Solves the feasibility problem  A x = b, x >= 0  in Fraction arithmetic
(Bland's rule, so no cycling).  On success the feasible point is
re-checked; on failure a Farkas certificate y with y^T A <= 0 and
y^T b > 0 is extracted and re-checked, so callers never rely on the
pivoting logic itself being bug-free.
"""

from __future__ import annotations

from fractions import Fraction

Zero = Fraction(0)
One = Fraction(1)


def solve_feasibility(a_rows, b):
    """Return (x, None) with A x = b, x >= 0, or (None, farkas_y)."""
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    tab = []
    rhs = []
    for i in range(m):
        row = [Fraction(v) for v in a_rows[i]]
        bi = Fraction(b[i])
        if bi < 0:
            row = [-v for v in row]
            bi = -bi
        row.extend(One if j == i else Zero for j in range(m))
        tab.append(row)
        rhs.append(bi)
    # Phase-1 objective: minimise the sum of artificials.  Reduced-cost row
    # starts as -(sum of constraint rows) on original columns.
    obj = [Zero] * (n + m)
    for j in range(n):
        obj[j] = -sum(tab[i][j] for i in range(m))
    obj_val = -sum(rhs)
    basis = [n + i for i in range(m)]

    while True:
        enter = next((j for j in range(n + m) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = rhs[i] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            raise ArithmeticError("phase-1 objective unbounded; cannot happen")
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        rhs[leave] /= piv
        for i in range(m):
            if i != leave and tab[i][enter]:
                c = tab[i][enter]
                tab[i] = [v - c * w for v, w in zip(tab[i], tab[leave])]
                rhs[i] -= c * rhs[leave]
        if obj[enter]:
            c = obj[enter]
            obj = [v - c * w for v, w in zip(obj, tab[leave])]
            obj_val -= c * rhs[leave]
        basis[leave] = enter

    if obj_val == 0:
        x = [Zero] * n
        for i, var in enumerate(basis):
            if var < n:
                x[var] = rhs[i]
        for i in range(m):
            got = sum(Fraction(a_rows[i][j]) * x[j] for j in range(n))
            if got != Fraction(b[i]):
                raise ArithmeticError("simplex produced an invalid feasible point")
        if any(v < 0 for v in x):
            raise ArithmeticError("simplex produced a negative component")
        return x, None

    # Infeasible: the phase-1 duals live in the artificial columns of the
    # reduced-cost row (cost of artificial i is 1 and its column is e_i, so
    # y_i = 1 - obj[n+i], modulo the sign flips applied to rows with
    # negative b).
    y = []
    for i in range(m):
        yi = One - obj[n + i]
        if Fraction(b[i]) < 0:
            yi = -yi
        y.append(yi)
    lhs = [sum(y[i] * Fraction(a_rows[i][j]) for i in range(m)) for j in range(n)]
    if any(v > 0 for v in lhs) or sum(y[i] * Fraction(b[i]) for i in range(m)) <= 0:
        raise ArithmeticError("simplex produced an invalid Farkas certificate")
    return None, y


def convex_combination(points, target):
    """Coefficients expressing target as a convex combination, else None."""
    if not points:
        return None
    k = len(target)
    a_rows = [[Fraction(p[i]) for p in points] for i in range(k)]
    a_rows.append([One] * len(points))
    b = [Fraction(t) for t in target] + [One]
    x, _ = solve_feasibility(a_rows, b)
    return x


def separating_functional(points, target):
    """(h, h0) with h·p + h0 <= 0 < h·target + h0 for all points, else None."""
    if not points:
        return [One for _ in target], Zero
    k = len(target)
    a_rows = [[Fraction(p[i]) for p in points] for i in range(k)]
    a_rows.append([One] * len(points))
    b = [Fraction(t) for t in target] + [One]
    _, y = solve_feasibility(a_rows, b)
    if y is None:
        return None
    return y[:k], y[k]
