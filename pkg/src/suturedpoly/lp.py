"""Exact linear-programming primitives (phase-1 simplex over Fractions).

Desk-scale only: the systems coming from hull, facet and cone reductions
have at most a few dozen variables.  Bland's rule guarantees termination.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .linalg import RationalLike, rational


def feasible_nonneg(
    rows: Sequence[Sequence[RationalLike]], rhs: Sequence[RationalLike]
) -> list[Fraction] | None:
    """Some x >= 0 with ``rows @ x = rhs``, or None when infeasible."""
    A = [[rational(x) for x in row] for row in rows]
    b = [rational(x) for x in rhs]
    m = len(A)
    if m == 0:
        return []
    n = len(A[0])
    for i in range(m):
        if b[i] < 0:
            A[i] = [-x for x in A[i]]
            b[i] = -b[i]

    # Tableau [A | I | b]; artificial variables n..n+m-1 start basic.
    tab = [A[i] + [Fraction(int(i == j)) for j in range(m)] + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    total = n + m
    # Reduced costs for the phase-1 objective (minimise sum of artificials).
    cost = [Fraction(0)] * (total + 1)
    for i in range(m):
        for j in range(total + 1):
            cost[j] -= tab[i][j]
    for j in range(n, total):
        cost[j] += Fraction(1)

    while True:
        enter = next((j for j in range(total) if cost[j] < 0), None)
        if enter is None:
            break
        pivot_row = None
        best: Fraction | None = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][total] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[pivot_row]):
                    best = ratio
                    pivot_row = i
        if pivot_row is None:
            # Unbounded phase-1 objective cannot happen (bounded below by 0);
            # defensive exit.
            return None
        piv = tab[pivot_row][enter]
        tab[pivot_row] = [x / piv for x in tab[pivot_row]]
        for i in range(m):
            if i != pivot_row and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[pivot_row])]
        if cost[enter] != 0:
            f = cost[enter]
            cost = [x - f * y for x, y in zip(cost, tab[pivot_row])]
        basis[pivot_row] = enter

    objective = -cost[total]
    if objective != 0:
        return None
    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = tab[i][total]
    return x


def in_convex_hull(
    point: Sequence[RationalLike], others: Sequence[Sequence[RationalLike]]
) -> bool:
    """Is ``point`` a convex combination of ``others``?  Exact."""
    if not others:
        return False
    d = len(point)
    rows = [[rational(p[i]) for p in others] for i in range(d)]
    rows.append([Fraction(1)] * len(others))
    rhs = [rational(c) for c in point] + [Fraction(1)]
    return feasible_nonneg(rows, rhs) is not None


def in_cone_hull(
    target: Sequence[RationalLike], generators: Sequence[Sequence[RationalLike]]
) -> bool:
    """Is ``target`` a nonnegative combination of ``generators``?  Exact."""
    tgt = [rational(c) for c in target]
    if all(c == 0 for c in tgt):
        return True
    if not generators:
        return False
    d = len(tgt)
    rows = [[rational(g[i]) for g in generators] for i in range(d)]
    return feasible_nonneg(rows, tgt) is not None
