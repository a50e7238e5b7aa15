"""Exact linear algebra over the rationals (list-of-list Fraction matrices)."""

from __future__ import annotations

from fractions import Fraction


def _clone(m):
    return [[Fraction(x) for x in row] for row in m]


def rref(m):
    """Reduced row echelon form; returns (rref matrix, pivot column list)."""
    a = _clone(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m):
    if not m:
        return 0
    _, pivots = rref(m)
    return len(pivots)


def nullspace(m):
    """Basis of the right kernel of m (list of Fraction vectors)."""
    if not m:
        return []
    cols = len(m[0])
    a, pivots = rref(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][fc]
        basis.append(v)
    return basis


def solve(m, b):
    """One exact solution of m x = b, or None if inconsistent."""
    if not m:
        return [] if all(x == 0 for x in b) else None
    aug = [row[:] + [bb] for row, bb in zip(_clone(m), b)]
    a, pivots = rref(aug)
    cols = len(m[0])
    if cols in pivots:
        return None  # pivot in the augmented column: inconsistent
    x = [Fraction(0)] * cols
    for r, pc in enumerate(pivots):
        x[pc] = a[r][cols]
    return x
