"""Indices, binary words, and the harmonic (quasi-shuffle) and shuffle products.

Word convention: an index (k_1,...,k_r) maps to the word
x^(k_r - 1) y  x^(k_{r-1} - 1) y ... x^(k_1 - 1) y, so the exponent on the
largest summation variable sits leftmost and divergence (k_r = 1) shows up as
a leading 'y'.  A word is convergent when it starts with 'x' and ends with 'y'.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DomainError


@dataclass(frozen=True, order=True)
class Index:
    """A composition (k_1,...,k_r) of positive integers; () is the algebra unit."""

    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for k in parts:
            if not isinstance(k, int) or k < 1:
                raise DomainError(f"index parts must be positive integers, got {k!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Index":
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise DomainError(f"cannot parse index from {text!r}") from exc

    @property
    def depth(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def is_empty(self) -> bool:
        return not self.parts

    @property
    def is_admissible(self) -> bool:
        """Nonempty with final entry at least 2 (the nested series converges)."""
        return bool(self.parts) and self.parts[-1] >= 2

    @property
    def trailing_ones(self) -> int:
        n = 0
        for k in reversed(self.parts):
            if k != 1:
                break
            n += 1
        return n

    def __str__(self) -> str:
        return ",".join(str(k) for k in self.parts)


def all_ones(r: int) -> Index:
    return Index((1,) * r)


class BinaryWord(str):
    """A word over the alphabet {x, y}; plain str with a validated constructor."""

    def __new__(cls, letters: str = ""):
        if any(ch not in "xy" for ch in letters):
            raise DomainError(f"binary words use letters 'x' and 'y' only, got {letters!r}")
        return super().__new__(cls, letters)

    @property
    def is_convergent(self) -> bool:
        return bool(self) and self.startswith("x") and self.endswith("y")

    @property
    def weight(self) -> int:
        return len(self)

    @property
    def depth(self) -> int:
        return self.count("y")


class Combination:
    """Finitely supported map from basis terms to exact rationals.

    Zero coefficients are pruned; equality is coefficientwise.  Supports +, -,
    and scalar multiplication by int/Fraction.  Subclasses fix the basis type.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        clean = {}
        if terms:
            for t, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[t] = c
        self.terms = clean

    @classmethod
    def of(cls, term, coeff=1):
        return cls({term: Fraction(coeff)})

    @classmethod
    def zero(cls):
        return cls()

    def items(self):
        return self.terms.items()

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator:
        return iter(sorted(self.terms))

    def __add__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out.get(t, 0) + c
        return type(self)(out)

    def __sub__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out.get(t, 0) - c
        return type(self)(out)

    def __neg__(self):
        return type(self)({t: -c for t, c in self.terms.items()})

    def __mul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return type(self)({t: c * scalar for t, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return type(self)({t: c / scalar for t, c in self.terms.items()})
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, type(self)):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for t in sorted(self.terms):
            c = self.terms[t]
            bits.append(f"{c}*{t!r}" if c != 1 else f"{t!r}")
        return " + ".join(bits)

    def to_json(self) -> list[dict]:
        """Stable JSON form: [{term, coefficient}] with "p/q" coefficient strings."""
        return [
            {"term": str(t), "coefficient": str(self.terms[t])} for t in sorted(self.terms)
        ]


class IndexCombination(Combination):
    """Rational linear combination of indices; carrier of the harmonic algebra."""


class WordCombination(Combination):
    """Rational linear combination of binary words; carrier of the shuffle algebra."""


@lru_cache(maxsize=None)
def _stuffle_basis(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Quasi-shuffle of two bare compositions, with integer multiplicities.

    The two rightmost entries either interleave or merge into their sum, which
    is exactly how the product of two nested sums splits over the position of
    the largest summation variable.
    """
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    out: dict[tuple[int, ...], int] = {}
    for sub, last in (
        (_stuffle_basis(a[:-1], b), a[-1]),
        (_stuffle_basis(a, b[:-1]), b[-1]),
        (_stuffle_basis(a[:-1], b[:-1]), a[-1] + b[-1]),
    ):
        for t, c in sub:
            key = t + (last,)
            out[key] = out.get(key, 0) + c
    return tuple(sorted(out.items()))


def harmonic_product(u, v) -> IndexCombination:
    """Bilinear harmonic (stuffle) product; arguments may be Index or IndexCombination."""
    u = IndexCombination.of(u) if isinstance(u, Index) else u
    v = IndexCombination.of(v) if isinstance(v, Index) else v
    out: dict[Index, Fraction] = {}
    for ti, ci in u.items():
        for tj, cj in v.items():
            for parts, mult in _stuffle_basis(ti.parts, tj.parts):
                key = Index(parts)
                out[key] = out.get(key, 0) + ci * cj * mult
    return IndexCombination(out)


@lru_cache(maxsize=None)
def _shuffle_basis(u: str, v: str) -> tuple[tuple[str, int], ...]:
    """All interleavings of two words, with multiplicities."""
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    out: dict[str, int] = {}
    for w, c in _shuffle_basis(u[1:], v):
        key = u[0] + w
        out[key] = out.get(key, 0) + c
    for w, c in _shuffle_basis(u, v[1:]):
        key = v[0] + w
        out[key] = out.get(key, 0) + c
    return tuple(sorted(out.items()))


def shuffle_product(w1, w2) -> WordCombination:
    """Bilinear shuffle product; arguments may be BinaryWord or WordCombination."""
    w1 = WordCombination.of(w1) if isinstance(w1, str) else w1
    w2 = WordCombination.of(w2) if isinstance(w2, str) else w2
    out: dict[BinaryWord, Fraction] = {}
    for ti, ci in w1.items():
        for tj, cj in w2.items():
            for w, mult in _shuffle_basis(str(ti), str(tj)):
                key = BinaryWord(w)
                out[key] = out.get(key, 0) + ci * cj * mult
    return WordCombination(out)


def index_to_word(index: Index) -> BinaryWord:
    """Encode an index as a word, largest-variable exponent leftmost."""
    return BinaryWord("".join("x" * (k - 1) + "y" for k in reversed(index.parts)))


def word_to_index(word: str) -> Index:
    """Inverse of :func:`index_to_word`; the word must be empty or end in 'y'."""
    if any(ch not in "xy" for ch in word):
        raise DomainError(f"binary words use letters 'x' and 'y' only, got {word!r}")
    if word and not word.endswith("y"):
        raise DomainError(f"word {word!r} does not end in 'y'; it encodes no index")
    parts_rev: list[int] = []
    run = 0
    for ch in word:
        if ch == "x":
            run += 1
        else:
            parts_rev.append(run + 1)
            run = 0
    return Index(reversed(parts_rev))


def contractions(index: Index) -> list[Index]:
    """The 2^(r-1) indices obtained by summing adjacent parts across chosen positions.

    Each of the r-1 weak inequalities in the star-value summation splits into
    strict or equal; 'equal' merges the neighbouring exponents.  The first
    entry is the index itself (all-strict choice).
    """
    if index.is_empty:
        raise DomainError("contractions of the empty index are undefined")
    parts = index.parts
    r = len(parts)
    out: list[Index] = []
    for mask in range(1 << (r - 1)):
        merged: list[int] = [parts[0]]
        for i in range(1, r):
            if mask >> (i - 1) & 1:
                merged[-1] += parts[i]
            else:
                merged.append(parts[i])
        out.append(Index(merged))
    return out
