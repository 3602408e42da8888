"""Free-group words, Fox derivatives, and Alexander-type polynomials.

Derivatives are abelianized as they are computed: the running prefix of
the word is tracked as a lattice vector, so values land directly in the
group ring of Z^b and no noncommutative group ring is needed.  The
product rule d(uv) = du + u . dv with d(x)/dx = 1 and d(x^-1)/dx = -x^-1
is applied left to right.

Two determinant pipelines feed the polytope machinery:

* :func:`alexander_polynomial`, the deficiency-one presentation route,
  with every column deletion computed and compared after normalization.
  For abelianizations of rank two or more, distinct column deletions
  provably differ by non-unit factors (t^ab(x_j) - 1), so this route is
  only valid for knot-style rank-one abelianizations and fails loudly
  otherwise.
* :func:`jacobian_determinant`, the square Fox Jacobian of a free-group
  map (images of n generators as words in n generators), the form the
  surface-complement pipeline actually uses.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, ParseError
from .linalg import Covector
from .polytope import LabeledSupport, Polytope, SupportRank, convex_hull

Letter = tuple[int, int]  # (generator index, +1 or -1)


def _free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for gen, sign in letters:
        if sign not in (1, -1):
            raise DomainError(f"letter sign must be +1 or -1, got {sign}")
        if gen < 0:
            raise DomainError(f"generator index must be non-negative, got {gen}")
        if out and out[-1][0] == gen and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((gen, sign))
    return tuple(out)


@dataclass(frozen=True)
class FreeWord:
    """Freely reduced word in a free group (canonicalized on construction)."""

    letters: tuple[Letter, ...]

    def __init__(self, letters: Iterable[Letter]):
        object.__setattr__(self, "letters", _free_reduce(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord([(g, -s) for g, s in reversed(self.letters)])

    def cyclically_reduced(self) -> "FreeWord":
        ls = list(self.letters)
        while len(ls) >= 2 and ls[0][0] == ls[-1][0] and ls[0][1] == -ls[-1][1]:
            ls = ls[1:-1]
        return FreeWord(ls)

    def max_generator(self) -> int:
        return max((g for g, _ in self.letters), default=-1)

    _TOKEN = re.compile(r"^x(\d+)(\^-1)?$")

    @classmethod
    def parse(cls, text: str) -> "FreeWord":
        """Parse whitespace-separated tokens ``x1``, ``x2^-1`` (1-based)."""
        letters = []
        for token in text.split():
            m = cls._TOKEN.match(token)
            if not m:
                raise ParseError(f"bad word token {token!r} (expected x<k> or x<k>^-1)")
            index = int(m.group(1))
            if index < 1:
                raise ParseError(f"generator indices are 1-based, got {token!r}")
            letters.append((index - 1, -1 if m.group(2) else 1))
        return cls(letters)

    def __str__(self) -> str:
        return " ".join(
            f"x{g + 1}" + ("" if s > 0 else "^-1") for g, s in self.letters
        )


@dataclass(frozen=True)
class GroupPresentation:
    """Finitely presented group; relators are freely and cyclically reduced."""

    generator_count: int
    relators: tuple[FreeWord, ...]

    def __init__(self, generator_count: int, relators: Iterable[FreeWord]):
        if generator_count < 1:
            raise DomainError("a presentation needs at least one generator")
        reduced = tuple(r.cyclically_reduced() for r in relators)
        for r in reduced:
            if r.max_generator() >= generator_count:
                raise DomainError(
                    f"relator {r} uses a generator beyond the declared count"
                )
        object.__setattr__(self, "generator_count", generator_count)
        object.__setattr__(self, "relators", reduced)

    def deficiency(self) -> int:
        return self.generator_count - len(self.relators)


@dataclass(frozen=True)
class AbelianizationMap:
    """Generator images in Z^b; relators must map to zero to be admissible."""

    images: tuple[tuple[int, ...], ...]

    def __init__(self, images: Iterable[Sequence[int]]):
        imgs = tuple(tuple(int(x) for x in row) for row in images)
        if not imgs:
            raise DomainError("abelianization needs at least one generator image")
        b = len(imgs[0])
        if b < 1 or any(len(row) != b for row in imgs):
            raise DomainError("all abelianization images must share a positive rank")
        object.__setattr__(self, "images", imgs)

    @property
    def lattice_rank(self) -> int:
        return len(self.images[0])

    @property
    def generator_count(self) -> int:
        return len(self.images)

    def word_image(self, w: FreeWord) -> tuple[int, ...]:
        out = [0] * self.lattice_rank
        for gen, sign in w.letters:
            if gen >= self.generator_count:
                raise DomainError(f"word uses generator x{gen + 1} beyond the map")
            for i, x in enumerate(self.images[gen]):
                out[i] += sign * x
        return tuple(out)

    def validate(self, presentation: GroupPresentation) -> None:
        if presentation.generator_count != self.generator_count:
            raise DomainError(
                "abelianization covers "
                f"{self.generator_count} generators, presentation has "
                f"{presentation.generator_count}"
            )
        for r in presentation.relators:
            image = self.word_image(r)
            if any(x != 0 for x in image):
                raise DomainError(
                    f"relator {r} does not abelianize to zero (image {list(image)})"
                )


Exponent = tuple[int, ...]


@dataclass(frozen=True)
class LaurentPolynomial:
    """Integer-coefficient Laurent polynomial over Z^nvars, sparse terms."""

    terms: Mapping[Exponent, int]
    nvars: int

    def __init__(self, terms: Mapping[Exponent, int], nvars: int):
        cleaned = {}
        for exp, coef in terms.items():
            key = tuple(int(x) for x in exp)
            if len(key) != nvars:
                raise DomainError(f"exponent {key} does not have {nvars} entries")
            if coef:
                cleaned[key] = int(coef)
        object.__setattr__(self, "terms", cleaned)
        object.__setattr__(self, "nvars", nvars)

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPolynomial":
        return cls({}, nvars)

    @classmethod
    def monomial(cls, exp: Sequence[int], coef: int = 1, nvars: int | None = None) -> "LaurentPolynomial":
        exp = tuple(int(x) for x in exp)
        return cls({exp: coef}, len(exp) if nvars is None else nvars)

    @classmethod
    def one(cls, nvars: int) -> "LaurentPolynomial":
        return cls({(0,) * nvars: 1}, nvars)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "LaurentPolynomial") -> None:
        if self.nvars != other.nvars:
            raise DomainError("polynomials live over different lattice ranks")

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        self._check(other)
        out = dict(self.terms)
        for exp, coef in other.terms.items():
            out[exp] = out.get(exp, 0) + coef
        return LaurentPolynomial(out, self.nvars)

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self.terms.items()}, self.nvars)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        self._check(other)
        out: dict[Exponent, int] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                out[key] = out.get(key, 0) + ca * cb
        return LaurentPolynomial(out, self.nvars)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self.terms.items())

    def substitute_inverse(self) -> "LaurentPolynomial":
        """Replace every variable t_i by its inverse."""
        return LaurentPolynomial(
            {tuple(-x for x in e): c for e, c in self.terms.items()}, self.nvars
        )

    def normalized(self) -> "LaurentPolynomial":
        """Shift so every coordinate's minimum exponent is zero; then flip
        the overall sign if the lexicographically-first coefficient is
        negative.  Canonical representative modulo unit monomials."""
        if not self.terms:
            return self
        mins = [min(e[i] for e in self.terms) for i in range(self.nvars)]
        shifted = {
            tuple(x - m for x, m in zip(e, mins)): c for e, c in self.terms.items()
        }
        if shifted[min(shifted)] < 0:
            shifted = {e: -c for e, c in shifted.items()}
        return LaurentPolynomial(shifted, self.nvars)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, coef in self.sorted_terms():
            mono = "·".join(
                f"t{i + 1}^{x}" for i, x in enumerate(exp) if x != 0
            )
            parts.append(f"{coef:+d}" + (f"·{mono}" if mono else ""))
        return " ".join(parts)


def fox_derivative(w: FreeWord, gen: int, ab: AbelianizationMap) -> LaurentPolynomial:
    """Abelianized Fox derivative of ``w`` with respect to generator ``gen``.

    Left-to-right product rule, consuming the prefix abelianization as it
    goes: a positive occurrence contributes +t^(prefix), a negative one
    contributes -t^(prefix after the letter).
    """
    if gen < 0 or gen >= ab.generator_count:
        raise DomainError(f"generator index {gen} out of range")
    b = ab.lattice_rank
    prefix = [0] * b
    terms: dict[Exponent, int] = {}

    def bump(key: Exponent, delta: int) -> None:
        val = terms.get(key, 0) + delta
        if val:
            terms[key] = val
        else:
            terms.pop(key, None)

    for g, sign in w.letters:
        if g >= ab.generator_count:
            raise DomainError(f"word uses generator x{g + 1} beyond the map")
        if sign > 0:
            if g == gen:
                bump(tuple(prefix), 1)
            for i, x in enumerate(ab.images[g]):
                prefix[i] += x
        else:
            for i, x in enumerate(ab.images[g]):
                prefix[i] -= x
            if g == gen:
                bump(tuple(prefix), -1)
    return LaurentPolynomial(terms, b)


def fox_matrix(words: Sequence[FreeWord], ab: AbelianizationMap) -> list[list[LaurentPolynomial]]:
    """Matrix of abelianized Fox derivatives, one row per word."""
    return [
        [fox_derivative(w, g, ab) for g in range(ab.generator_count)] for w in words
    ]


def alexander_matrix(
    presentation: GroupPresentation, ab: AbelianizationMap
) -> list[list[LaurentPolynomial]]:
    """Fox derivative matrix of the relators (entry (i, j) = d r_i / d x_j)."""
    ab.validate(presentation)
    return fox_matrix(presentation.relators, ab)


def determinant(matrix: Sequence[Sequence[LaurentPolynomial]]) -> LaurentPolynomial:
    """Cofactor-expansion determinant; empty matrix has determinant one."""
    n = len(matrix)
    if n == 0:
        raise DomainError("determinant needs a declared variable count for 0x0; use one()")
    if any(len(row) != n for row in matrix):
        raise DomainError("determinant needs a square matrix")
    nvars = matrix[0][0].nvars
    if n == 1:
        return matrix[0][0]
    total = LaurentPolynomial.zero(nvars)
    for j in range(n):
        entry = matrix[0][j]
        if entry.is_zero():
            continue
        minor = [
            [row[k] for k in range(n) if k != j] for row in matrix[1:]
        ]
        term = entry * determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def alexander_polynomial(
    presentation: GroupPresentation, ab: AbelianizationMap
) -> LaurentPolynomial:
    """Deficiency-one determinant invariant, canonically normalized.

    Every column deletion is computed; their normalized values must agree,
    otherwise the presentation/abelianization pair is rejected with both
    values in the error payload.
    """
    ab.validate(presentation)
    if presentation.deficiency() != 1:
        raise DomainError(
            "the determinant route needs a deficiency-one presentation "
            f"(got {presentation.generator_count} generators, "
            f"{len(presentation.relators)} relators)"
        )
    n = presentation.generator_count
    b = ab.lattice_rank
    matrix = alexander_matrix(presentation, ab)
    results = []
    for deleted in range(n):
        sub = [[row[j] for j in range(n) if j != deleted] for row in matrix]
        if len(sub) == 0 or len(sub[0]) == 0:
            det = LaurentPolynomial.one(b)
        else:
            det = determinant(sub)
        results.append(det.normalized())
    first = results[0]
    for deleted, value in enumerate(results[1:], start=1):
        if value != first:
            raise DomainError(
                "column deletions disagree after normalization; the "
                "presentation or abelianization is invalid for this route",
                column_0=str(first),
                **{f"column_{deleted}": str(value)},
            )
    return first


def jacobian_determinant(
    images: Sequence[FreeWord], ab: AbelianizationMap
) -> LaurentPolynomial:
    """Determinant of the square Fox Jacobian of a free-group map.

    ``images`` are the images of n generators under a map into the free
    group on ``ab``'s generators; the count must match the generator count
    so the Jacobian is square.  No normalization is applied.
    """
    if len(images) != ab.generator_count:
        raise DomainError(
            f"need exactly {ab.generator_count} image words for a square "
            f"Jacobian, got {len(images)}"
        )
    return determinant(fox_matrix(images, ab))


def newton_polytope(f: LaurentPolynomial) -> Polytope:
    """Convex hull of the exponent vectors carrying nonzero coefficients."""
    if f.is_zero():
        raise DomainError("the zero polynomial has no Newton polytope")
    points = [Covector([Fraction(x) for x in exp]) for exp in f.terms]
    return convex_hull(points)


def labeled_support(f: LaurentPolynomial, lspace: bool) -> LabeledSupport:
    """Support points labeled by coefficient magnitude.

    Under the rank-one hypothesis (``lspace=True``) a coefficient of
    absolute value one is marked as exactly Z; magnitudes other than one
    contradict the hypothesis and set the warning flag.
    """
    if f.is_zero():
        raise DomainError("the zero polynomial has empty support")
    entries = {}
    warning = False
    for exp, coef in f.terms.items():
        magnitude = abs(coef)
        if lspace and magnitude != 1:
            warning = True
        entries[Covector([Fraction(x) for x in exp])] = SupportRank(
            rank=magnitude, is_exactly_z=lspace and magnitude == 1
        )
    return LabeledSupport(entries, hypothesis_warning=warning)


# ---------------------------------------------------------------------------
# Text format for presentations / free-group maps:
#   line 1: "generators: n"
#   line 2: "abelianization: b"
#   next n lines: one lattice vector of b integers per generator
#   remaining lines: one word per line in x<k> / x<k>^-1 tokens
# '#' starts a comment line.
# ---------------------------------------------------------------------------


def parse_presentation_text(text: str) -> tuple[int, AbelianizationMap, list[FreeWord]]:
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]
    if len(lines) < 2:
        raise ParseError("presentation file needs generator and abelianization headers")
    m = re.match(r"^generators:\s*(\d+)$", lines[0])
    if not m:
        raise ParseError(f"first line must be 'generators: n', got {lines[0]!r}")
    n = int(m.group(1))
    if n < 1:
        raise ParseError("generator count must be positive")
    m = re.match(r"^abelianization:\s*(\d+)$", lines[1])
    if not m:
        raise ParseError(f"second line must be 'abelianization: b', got {lines[1]!r}")
    b = int(m.group(1))
    if b < 1:
        raise ParseError("abelianization rank must be positive")
    if len(lines) < 2 + n:
        raise ParseError(f"expected {n} abelianization vectors")
    images = []
    for line in lines[2 : 2 + n]:
        parts = line.replace(",", " ").split()
        if len(parts) != b:
            raise ParseError(f"abelianization vector {line!r} must have {b} integers")
        try:
            images.append([int(x) for x in parts])
        except ValueError as exc:
            raise ParseError(f"bad abelianization vector {line!r}") from exc
    words = [FreeWord.parse(line) for line in lines[2 + n :]]
    for w in words:
        if w.max_generator() >= n:
            raise ParseError(f"word {w} uses a generator beyond the declared count")
    return n, AbelianizationMap(images), words


def parse_presentation_file(text: str) -> tuple[GroupPresentation, AbelianizationMap]:
    """Parse and validate the relator reading of a presentation file."""
    n, ab, words = parse_presentation_text(text)
    presentation = GroupPresentation(n, words)
    ab.validate(presentation)
    return presentation, ab


def polynomial_to_json(f: LaurentPolynomial) -> dict:
    return {
        "terms": [
            {"exp": list(exp), "coef": coef} for exp, coef in f.sorted_terms()
        ]
    }


def polynomial_from_json(doc: dict, nvars: int | None = None) -> LaurentPolynomial:
    if not isinstance(doc, dict) or "terms" not in doc:
        raise ParseError("polynomial document needs a 'terms' key")
    terms: dict[Exponent, int] = {}
    width = nvars
    for item in doc["terms"]:
        exp = tuple(int(x) for x in item["exp"])
        if width is None:
            width = len(exp)
        if len(exp) != width:
            raise ParseError("inconsistent exponent lengths")
        terms[exp] = terms.get(exp, 0) + int(item["coef"])
    if width is None:
        raise ParseError("cannot infer variable count of an empty polynomial")
    return LaurentPolynomial(terms, width)
