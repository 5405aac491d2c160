"""Regularization of divergent indices into polynomials in T.

The divergent depth-one sum plays the role of T: each map below is the
algebra homomorphism (for its product) that fixes convergent values and sends
that generator to T.  Divergent inputs are peeled off recursively; the
recursion bottoms out at admissible indices, which stay symbols.  The degree
in T always equals the number of trailing 1-entries of the index.
"""

from __future__ import annotations

from .errors import CapacityError, DomainError
from .indices import Index, _shuffle_basis, _stuffle_basis, contractions, index_to_word, word_to_index
from .series import TPoly, TruncSeries, a_series, rho_bar_star
from .symbols import SymbolCombination, symbolic_zeta

_HARM_CACHE: dict[tuple[int, ...], TPoly] = {}
_SHUFFLE_CACHE: dict[str, TPoly] = {}
_STAR_SH_CACHE: dict[tuple[int, ...], TPoly] = {}
_A_SYMBOLIC_CACHE: dict[int, TruncSeries] = {}


def reg_harm(index: Index) -> TPoly:
    """Harmonic-regularized polynomial of an index (admissible ones stay constants)."""
    key = index.parts
    cached = _HARM_CACHE.get(key)
    if cached is not None:
        return cached

    if index.is_empty:
        poly = TPoly([SymbolCombination.one()])
    elif index.is_admissible:
        poly = TPoly([SymbolCombination.single(index)])
    else:
        # index = (base, 1) with n trailing ones; multiply base by the divergent
        # generator and solve for the index's own coefficient, which is n.
        n = index.trailing_ones
        base = key[:-1]
        poly = reg_harm(Index(base)).times_T()
        for parts, mult in _stuffle_basis((1,), base):
            if parts == key:
                continue
            poly = poly - mult * reg_harm(Index(parts))
        poly = poly / n

    _HARM_CACHE[key] = poly
    return poly


def reg_harm_star(index: Index) -> TPoly:
    """Star-harmonic regularized polynomial: sum of reg_harm over all contractions."""
    if index.is_empty:
        raise DomainError("the star polynomial of the empty index is undefined")
    acc = TPoly()
    for contracted in contractions(index):
        acc = acc + reg_harm(contracted)
    return acc


def _reg_shuffle_word(word: str) -> TPoly:
    cached = _SHUFFLE_CACHE.get(word)
    if cached is not None:
        return cached

    if not word:
        poly = TPoly([SymbolCombination.one()])
    elif word.startswith("x"):
        poly = TPoly([SymbolCombination.single(word_to_index(word))])
    else:
        n = len(word) - len(word.lstrip("y"))
        rest = word[1:]
        poly = _reg_shuffle_word(rest).times_T()
        for w, mult in _shuffle_basis("y", rest):
            if w == word:
                continue
            poly = poly - mult * _reg_shuffle_word(w)
        poly = poly / n

    _SHUFFLE_CACHE[word] = poly
    return poly


def reg_shuffle(index: Index) -> TPoly:
    """Shuffle-regularized polynomial, computed on the word side."""
    if index.is_empty:
        return TPoly([SymbolCombination.one()])
    return _reg_shuffle_word(str(index_to_word(index)))


def symbolic_a_series(order: int) -> TruncSeries:
    """A(t) = exp(sum_{m>=2} (-1)^m zeta(m) t^m / m) over the symbol ring."""
    cached = _A_SYMBOLIC_CACHE.get(order)
    if cached is None:
        cached = a_series(order, symbolic_zeta, SymbolCombination.one())
        _A_SYMBOLIC_CACHE[order] = cached
    return cached


def reg_star_shuffle(index: Index, series_order: int | None = None) -> TPoly:
    """Star-shuffle regularized polynomial, realized through the star
    regularization theorem: push the star-harmonic polynomial through the
    A(-t)^(-1) conversion map.

    The series order defaults to the polynomial degree; an explicit lower
    order is a capacity error rather than a silent truncation.
    """
    cached = _STAR_SH_CACHE.get(index.parts)
    if cached is not None and series_order is None:
        return cached
    star_harm = reg_harm_star(index)
    needed = max(star_harm.degree, 0)
    if series_order is not None and series_order < needed:
        raise CapacityError(
            f"series order {series_order} is below the required degree {needed} for ({index})"
        )
    order = needed if series_order is None else series_order
    poly = rho_bar_star(star_harm, symbolic_a_series(order))
    if series_order is None:
        _STAR_SH_CACHE[index.parts] = poly
    return poly


def reg_poly(index: Index, flavor: str, series_order: int | None = None) -> TPoly:
    """Dispatch by flavor: harm | star-harm | sh | star-sh."""
    if flavor == "harm":
        return reg_harm(index)
    if flavor == "star-harm":
        return reg_harm_star(index)
    if flavor == "sh":
        return reg_shuffle(index)
    if flavor == "star-sh":
        return reg_star_shuffle(index, series_order)
    raise DomainError(f"unknown regularization flavor {flavor!r}")
