"""Formal rational combinations of products of zeta symbols.

Monomials are multisets of admissible indices, multiplied freely: no linear
relation among multiple zeta values is ever applied here, so two combinations
are equal only when they match symbol-by-symbol.  Numeric evaluation (in
`numerics`) is the common ground on which genuinely different symbol
combinations get compared.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import DomainError
from .indices import Index

# A monomial is a sorted tuple of admissible indices; () is the unit.
ZetaMonomial = tuple[Index, ...]


def monomial(indices: Iterable[Index]) -> ZetaMonomial:
    out = tuple(sorted(indices, key=lambda ix: ix.parts))
    for ix in out:
        if not ix.is_admissible:
            raise DomainError(f"symbol for non-admissible index ({ix}) is not a value")
    return out


def format_monomial(mono: ZetaMonomial) -> str:
    if not mono:
        return "1"
    return "·".join(f"ζ({ix})" for ix in mono)


class SymbolCombination:
    """Element of the free commutative Q-algebra on admissible zeta symbols."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[ZetaMonomial, Fraction] | None = None):
        clean: dict[ZetaMonomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    clean[mono] = coeff
        self.terms = clean

    @classmethod
    def zero(cls) -> "SymbolCombination":
        return cls()

    @classmethod
    def one(cls) -> "SymbolCombination":
        return cls({(): Fraction(1)})

    @classmethod
    def scalar(cls, value) -> "SymbolCombination":
        return cls({(): Fraction(value)})

    @classmethod
    def single(cls, index: Index, coeff=1) -> "SymbolCombination":
        return cls({monomial([index]): Fraction(coeff)})

    @property
    def is_scalar(self) -> bool:
        return all(m == () for m in self.terms)

    def scalar_part(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def indices(self) -> set[Index]:
        """Every index symbol occurring in some monomial."""
        return {ix for mono in self.terms for ix in mono}

    def items(self):
        return self.terms.items()

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, SymbolCombination):
            return other
        if isinstance(other, (int, Fraction)):
            return SymbolCombination.scalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return SymbolCombination(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) - c
        return SymbolCombination(out)

    def __rsub__(self, other):
        return -(self - other)

    def __neg__(self):
        return SymbolCombination({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymbolCombination({m: c * other for m, c in self.terms.items()})
        if isinstance(other, SymbolCombination):
            out: dict[ZetaMonomial, Fraction] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    key = tuple(sorted(m1 + m2, key=lambda ix: ix.parts))
                    out[key] = out.get(key, 0) + c1 * c2
            return SymbolCombination(out)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return SymbolCombination({m: c / scalar for m, c in self.terms.items()})
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: tuple(ix.parts for ix in kv[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits: list[str] = []
        for mono, coeff in self._sorted_terms():
            body = format_monomial(mono)
            if body == "1":
                frag = str(coeff)
            elif coeff == 1:
                frag = body
            elif coeff == -1:
                frag = f"-{body}"
            else:
                frag = f"{coeff}·{body}"
            if bits and not frag.startswith("-"):
                bits.append(f"+ {frag}")
            elif bits:
                bits.append(f"- {frag[1:]}")
            else:
                bits.append(frag)
        return " ".join(bits)

    __repr__ = __str__

    def to_json(self) -> list[dict]:
        """Stable JSON form: list of {term, coefficient} with "p/q" coefficients."""
        return [
            {"term": [str(ix) for ix in mono], "coefficient": str(coeff)}
            for mono, coeff in self._sorted_terms()
        ]


def symbolic_zeta(m: int) -> SymbolCombination:
    """Single-zeta provider over the symbol ring, for building series like A(t)."""
    if m < 2:
        raise DomainError(f"single zeta symbol needs m >= 2, got {m}")
    return SymbolCombination.single(Index([m]))


def e_poly(k: int):
    """The depth-one building block: zeta(k) as a constant for k > 1, and T for k = 1.

    Returned as a TPoly over SymbolCombination.
    """
    from .series import TPoly  # deferred: series stays free of symbol imports

    if k < 1:
        raise DomainError(f"e(k;T) needs a positive integer, got {k}")
    if k == 1:
        return TPoly([SymbolCombination.zero(), SymbolCombination.one()])
    return TPoly([SymbolCombination.single(Index([k]))])
