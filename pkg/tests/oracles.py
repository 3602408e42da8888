"""Independent brute-force oracles used to freeze expected values.

Deliberately written against the raw data representations (coordinate
tuples, exponent dicts) with algorithms different from the library's:

* extreme points via exhaustive Caratheodory basis enumeration,
* Fox derivatives via the closed prefix-sum formula,
* determinants via the Leibniz permutation sum.

Nothing here imports the geometry or Fox modules.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations


# ---------------------------------------------------------------------------
# Integer determinants (cofactor expansion; matrices are <= 5x5 here)
# ---------------------------------------------------------------------------


def int_det(m):
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = m[0][j] * int_det(minor)
        total += term if j % 2 == 0 else -term
    return total


# ---------------------------------------------------------------------------
# Convex position: q in conv(points)?
# ---------------------------------------------------------------------------


def _rank_fraction(rows):
    mat = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        r += 1
        rank += 1
        if r == len(mat):
            break
    return rank


def _in_hull_fullrank_int(q, pts, d):
    """Integer Cramer route: every basis is a (d+1)-subset of the columns."""
    cols = [tuple(p) + (1,) for p in pts]
    b = tuple(q) + (1,)
    m = len(cols)
    for subset in combinations(range(m), d + 1):
        mat = [[cols[j][i] for j in subset] for i in range(d + 1)]
        det = int_det(mat)
        if det == 0:
            continue
        ok = True
        for pos in range(d + 1):
            num = int_det(
                [
                    [b[i] if j == pos else mat[i][j] for j in range(d + 1)]
                    for i in range(d + 1)
                ]
            )
            if num * det < 0:
                ok = False
                break
        if ok:
            return True
    return False


def _in_hull_general(q, pts, d):
    """Fraction fallback for rank-deficient configurations."""
    cols = [tuple(Fraction(x) for x in p) + (Fraction(1),) for p in pts]
    b = tuple(Fraction(x) for x in q) + (Fraction(1),)
    full = [[cols[j][i] for j in range(len(cols))] for i in range(d + 1)]
    r = _rank_fraction(full)
    for subset in combinations(range(len(cols)), r):
        sub = [[cols[j][i] for j in subset] for i in range(d + 1)]
        if _rank_fraction(sub) != r:
            continue
        aug = [row + [b[i]] for i, row in enumerate(sub)]
        # unique nonneg solution of sub @ lam = b?
        lam = _solve_exact(sub, [b[i] for i in range(d + 1)])
        if lam is not None and all(x >= 0 for x in lam):
            return True
    return False


def _solve_exact(rows, rhs):
    mat = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    for row in mat[r:]:
        if row[ncols] != 0:
            return None
    if len(pivots) != ncols:
        return None  # not unique; caller enumerates other bases
    sol = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        sol[col] = mat[i][ncols]
    return sol


def in_hull(q, pts):
    """Exhaustive basis enumeration: q a convex combination of pts?"""
    if not pts:
        return False
    d = len(q)
    all_int = all(isinstance(x, int) for p in pts for x in p) and all(
        isinstance(x, int) for x in q
    )
    if all_int:
        full = [[p[i] for p in pts] for i in range(d)]
        full.append([1] * len(pts))
        if _rank_fraction(full) == d + 1:
            return _in_hull_fullrank_int(q, pts, d)
    return _in_hull_general(q, pts, d)


def extreme_points(points):
    """The extreme points of a finite set: p extreme iff p not in conv(rest)."""
    dedup = sorted(set(tuple(p) for p in points))
    out = []
    for i, q in enumerate(dedup):
        rest = dedup[:i] + dedup[i + 1 :]
        if not in_hull(q, rest):
            out.append(q)
    return set(out)


# ---------------------------------------------------------------------------
# Fox calculus via the closed prefix formula
# ---------------------------------------------------------------------------


def _dict_add(p, q):
    out = dict(p)
    for k, v in q.items():
        nv = out.get(k, 0) + v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def _dict_mul(p, q):
    out = {}
    for ka, va in p.items():
        for kb, vb in q.items():
            k = tuple(a + b for a, b in zip(ka, kb))
            nv = out.get(k, 0) + va * vb
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
    return out


def fox_derivative_closed(word, gen, images):
    """d(word)/d(gen) in Z[Z^b] by the prefix formula.

    word: sequence of (generator index, +1/-1); images: per-generator tuples.

    Positive occurrences of gen at position k contribute +t^(ab of the
    length-(k-1) prefix); negative occurrences contribute -t^(ab of the
    length-k prefix).
    """
    b = len(images[0]) if images else 0
    result: dict[tuple, int] = {}
    for k in range(len(word)):
        g, s = word[k]
        if g != gen:
            continue
        upto = k if s > 0 else k + 1
        prefix = [0] * b
        for gg, ss in word[:upto]:
            for i in range(b):
                prefix[i] += ss * images[gg][i]
        key = tuple(prefix)
        result = _dict_add(result, {key: s})
    return result


def leibniz_det(matrix):
    """Determinant of a square matrix of exponent-dict polynomials."""
    n = len(matrix)
    if n == 0:
        return {(): 1}
    b = None
    for row in matrix:
        for entry in row:
            for k in entry:
                b = len(k)
                break
            if b is not None:
                break
        if b is not None:
            break
    if b is None:
        b = 0
    total: dict[tuple, int] = {}
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = {tuple([0] * b): sign}
        for i in range(n):
            term = _dict_mul(term, matrix[i][perm[i]])
        total = _dict_add(total, term)
    return total


def normalise_poly(terms):
    """Shift exponents to the nonnegative orthant touching zero; make the
    lexicographically-first coefficient positive."""
    if not terms:
        return {}
    nv = len(next(iter(terms)))
    mins = [min(k[i] for k in terms) for i in range(nv)]
    shifted = {tuple(k[i] - mins[i] for i in range(nv)): v for k, v in terms.items()}
    first = min(shifted)
    if shifted[first] < 0:
        shifted = {k: -v for k, v in shifted.items()}
    return shifted
