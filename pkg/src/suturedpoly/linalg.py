"""Exact rational linear algebra over ``fractions.Fraction``.

Vectors (homology side, pairing arguments on the right) and covectors
(cohomology side, pairing arguments on the left) are kept as distinct
types on purpose: the two ambient spaces of the duality are different
spaces, and the only operation allowed to cross them is :func:`pairing`.

All values are immutable and hashable; arithmetic never rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Sequence, TypeVar

from .errors import DimensionMismatch, DomainError, ParseError

Rational = Fraction

RationalLike = Fraction | int | str

T = TypeVar("T", bound="_CoordTuple")


def rational(value: RationalLike) -> Fraction:
    """Parse a rational from an int, Fraction, or a ``p/q`` / ``p`` literal."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational literal: {value!r}") from exc
    raise ParseError(f"cannot interpret {value!r} as a rational")


def format_rational(q: Fraction) -> str:
    """Render as ``p`` for integers, ``p/q`` otherwise (the shared file grammar)."""
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class _CoordTuple:
    """Shared implementation of exact coordinate tuples."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable[RationalLike]):
        object.__setattr__(self, "coords", tuple(rational(c) for c in coords))
        if not self.coords:
            raise DomainError("coordinate tuples must have positive dimension")

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __add__(self: T, other: T) -> T:
        self._check_same(other)
        return type(self)(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self: T, other: T) -> T:
        self._check_same(other)
        return type(self)(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self: T) -> T:
        return type(self)(-a for a in self.coords)

    def scale(self: T, factor: RationalLike) -> T:
        f = rational(factor)
        return type(self)(f * a for a in self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def _check_same(self, other: "_CoordTuple") -> None:
        if type(self) is not type(other):
            raise DomainError(
                f"cannot combine {type(self).__name__} with {type(other).__name__}"
            )
        if self.dim != other.dim:
            raise DimensionMismatch(
                f"dimension mismatch: {self.dim} vs {other.dim}"
            )

    def sort_key(self) -> tuple[Fraction, ...]:
        return self.coords

    def __str__(self) -> str:
        return "(" + ", ".join(format_rational(c) for c in self.coords) + ")"

    @classmethod
    def zero(cls: type[T], dim: int) -> T:
        return cls([Fraction(0)] * dim)


class Vector(_CoordTuple):
    """Element of the homology-side space (directions, cone rays)."""


class Covector(_CoordTuple):
    """Element of the cohomology-side space (polytope points, lattice classes)."""


def dual_point_type(cls: type[_CoordTuple]) -> type[_CoordTuple]:
    """The coordinate type of the dual space."""
    return Covector if cls is Vector else Vector


def pairing(c: Covector, a: Vector) -> Fraction:
    """Evaluation pairing between the cohomology and homology sides.

    The one sanctioned crossing between :class:`Covector` and :class:`Vector`.
    """
    if not isinstance(c, Covector) or not isinstance(a, Vector):
        raise DomainError("pairing takes a Covector on the left and a Vector on the right")
    if c.dim != a.dim:
        raise DimensionMismatch(f"dimension mismatch: {c.dim} vs {a.dim}")
    return sum((x * y for x, y in zip(c.coords, a.coords)), Fraction(0))


def pair_any(functional: _CoordTuple, point: _CoordTuple) -> Fraction:
    """Pairing with the two sides supplied in either order (internal helper)."""
    if isinstance(functional, Covector):
        return pairing(functional, point)  # type: ignore[arg-type]
    return pairing(point, functional)  # type: ignore[arg-type]


# ---------------------------------------------------------------------------
# Raw row operations.  These work on mutable lists of Fractions and back the
# public Matrix type as well as the geometry modules.
# ---------------------------------------------------------------------------


def _row_echelon(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rref, pivot column indices)."""
    mat = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def rank_of_rows(rows: Sequence[Sequence[RationalLike]]) -> int:
    raw = [[rational(x) for x in row] for row in rows]
    if not raw:
        return 0
    _, pivots = _row_echelon(raw)
    return len(pivots)


def solve_linear(
    rows: Sequence[Sequence[RationalLike]], rhs: Sequence[RationalLike]
) -> list[Fraction] | None:
    """One exact solution of ``rows @ x = rhs`` or None when inconsistent.

    Under-determined systems return the canonical solution with all free
    variables pinned to zero, so output is reproducible.
    """
    raw = [[rational(x) for x in row] for row in rows]
    b = [rational(x) for x in rhs]
    if len(raw) != len(b):
        raise DimensionMismatch("row count does not match right-hand side length")
    if not raw:
        return []
    ncols = len(raw[0])
    aug = [row + [bi] for row, bi in zip(raw, b)]
    rref, pivots = _row_echelon(aug)
    for i, row in enumerate(rref):
        if all(x == 0 for x in row[:ncols]) and row[ncols] != 0:
            return None
    solution = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        if col == ncols:
            return None
        solution[col] = rref[r][ncols]
    return solution


def kernel_basis(rows: Sequence[Sequence[RationalLike]], dim: int) -> list[list[Fraction]]:
    """Basis of the right kernel of the row matrix, in ambient dimension ``dim``."""
    raw = [[rational(x) for x in row] for row in rows]
    if not raw:
        return [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    rref, pivots = _row_echelon(raw)
    free_cols = [c for c in range(dim) if c not in pivots]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * dim
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -rref[r][fc]
        basis.append(vec)
    return basis


def primitive_coords(coords: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a nonzero rational tuple to coprime integers, preserving direction."""
    if all(c == 0 for c in coords):
        raise DomainError("the zero tuple has no primitive form")
    denom_lcm = 1
    for c in coords:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in coords]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return tuple(v // g for v in ints)


def primitive(point: T) -> T:
    """Primitive integer representative of a nonzero direction, same type."""
    return type(point)(primitive_coords(point.coords))


def canonical_sign(coords: tuple[int, ...]) -> tuple[int, ...]:
    """Flip sign so the first nonzero entry is positive (used where no
    outward orientation pins the sign, e.g. lineality basis directions)."""
    for v in coords:
        if v != 0:
            return coords if v > 0 else tuple(-x for x in coords)
    return coords


@dataclass(frozen=True)
class Matrix:
    """Exact rational matrix with Vector rows."""

    rows: tuple[Vector, ...]
    col_count: int

    def __init__(self, rows: Iterable[Vector | Sequence[RationalLike]], col_count: int | None = None):
        converted = tuple(
            row if isinstance(row, Vector) else Vector(row) for row in rows
        )
        if converted:
            width = converted[0].dim
            if any(r.dim != width for r in converted):
                raise DimensionMismatch("all matrix rows must share a column count")
            if col_count is not None and col_count != width:
                raise DimensionMismatch("declared col_count disagrees with rows")
            col_count = width
        elif col_count is None:
            col_count = 0
        object.__setattr__(self, "rows", converted)
        object.__setattr__(self, "col_count", col_count)

    @property
    def row_count(self) -> int:
        return len(self.rows)

    def rank(self) -> int:
        return rank_of_rows([r.coords for r in self.rows])

    def transpose(self) -> "Matrix":
        if not self.rows:
            return Matrix([], col_count=0)
        cols = [
            Vector([row[j] for row in self.rows]) for j in range(self.col_count)
        ]
        return Matrix(cols)

    def solve(self, b: Vector) -> Vector | None:
        """Exact solution of ``self @ x = b``; None when inconsistent."""
        if self.row_count != b.dim:
            raise DimensionMismatch(
                f"matrix has {self.row_count} rows but rhs has dimension {b.dim}"
            )
        sol = solve_linear([r.coords for r in self.rows], b.coords)
        return None if sol is None else Vector(sol)

    def apply(self, x: Vector) -> Vector:
        if x.dim != self.col_count:
            raise DimensionMismatch("vector dimension does not match column count")
        return Vector(
            [sum((r[j] * x[j] for j in range(self.col_count)), Fraction(0)) for r in self.rows]
        )


def rank(m: Matrix) -> int:
    """Rank over the rationals via exact Gaussian elimination."""
    return m.rank()


def solve(m: Matrix, b: Vector) -> Vector | None:
    return m.solve(b)
