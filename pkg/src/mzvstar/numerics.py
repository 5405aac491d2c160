"""Multiprecision evaluation of nested zeta sums with rigorous error bounds.

Values are computed by truncating the nested series at a cap N, reusing inner
partial sums (one O(N) pass per depth level), and then correcting the tail of
the outermost variable.  The correction works by expanding the single-variable
tail sums with Euler-Maclaurin and peeling inner variables recursively, so it
needs no logarithmic asymptotics even when inner exponents equal 1.  Every
returned value carries an error bound that dominates the neglected remainders
plus a generous rounding allowance.
"""

from __future__ import annotations

import json
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import gmpy2

from .errors import AccuracyError, DomainError
from .indices import Index, contractions
from .series import TPoly, TruncSeries, a_series
from .symbols import SymbolCombination

_BERNOULLI = {
    2: Fraction(1, 6),
    4: Fraction(-1, 30),
    6: Fraction(1, 42),
    8: Fraction(-1, 30),
    10: Fraction(5, 66),
    12: Fraction(-691, 2730),
    14: Fraction(7, 6),
}
MAX_TAIL_ORDER = 6

# zeta(k) <= zeta(2) for k >= 2; used only inside upper bounds.
_ZETA2_UPPER = 1.645


@dataclass(frozen=True)
class PrecisionConfig:
    """Working precision, truncation cap, tail order, and target tolerance.

    `max_trunc` caps the automatic cap-escalation that kicks in when a
    certified bound misses the tolerance; it defaults to sixteen times the
    cap.
    """

    prec_bits: int = 128
    trunc: int = 100_000
    tail_order: int = 2
    tolerance: float = 1e-9
    max_trunc: int | None = None

    def __post_init__(self):
        if self.prec_bits < 24:
            raise DomainError("prec_bits must be at least 24")
        if self.trunc < 100:
            raise DomainError("trunc must be at least 100")
        if not 1 <= self.tail_order <= MAX_TAIL_ORDER:
            raise DomainError(f"tail_order must be in 1..{MAX_TAIL_ORDER}")
        if self.tolerance <= 0:
            raise DomainError("tolerance must be positive")
        if self.max_trunc is None:
            object.__setattr__(self, "max_trunc", self.trunc * 16)
        if self.max_trunc < self.trunc:
            raise DomainError("max_trunc must be at least trunc")

    def cache_key(self) -> tuple[int, int, int]:
        """Configuration facets that determine the computed values bit-for-bit."""
        return (self.prec_bits, self.trunc, self.tail_order)

    def stronger(self) -> "PrecisionConfig":
        """A strictly stronger configuration, for error-bound honesty checks."""
        return PrecisionConfig(
            prec_bits=self.prec_bits * 2,
            trunc=self.trunc * 4,
            tail_order=self.tail_order,
            tolerance=self.tolerance,
            max_trunc=max(self.max_trunc, self.trunc * 16),
        )

    def to_dict(self) -> dict:
        return {
            "prec_bits": self.prec_bits,
            "trunc": self.trunc,
            "tail_order": self.tail_order,
            "tolerance": self.tolerance,
            "max_trunc": self.max_trunc,
        }


@dataclass(frozen=True)
class BoundedValue:
    """A multiprecision value together with an absolute error bound."""

    value: object
    bound: float

    def __str__(self) -> str:
        return f"{self.value} ± {self.bound:.3e}"


@dataclass(frozen=True)
class NumericPoly:
    """Polynomial in T over multiprecision reals, with per-coefficient bounds."""

    values: tuple
    bounds: tuple[float, ...]

    @property
    def degree(self) -> int:
        return len(self.values) - 1

    def value(self, n: int):
        return self.values[n] if 0 <= n < len(self.values) else 0

    def bound(self, n: int) -> float:
        return self.bounds[n] if 0 <= n < len(self.bounds) else 0.0


def _rising(e: int, m: int) -> int:
    out = 1
    for i in range(m):
        out *= e + i
    return out


def _neg_power(n: int, e: float) -> float:
    """Safe float upper estimate of n^(-e) (never underflows to 0)."""
    ln = -e * math.log(n)
    if ln < -690.0:
        return 1e-300
    return math.exp(ln) * (1.0 + 1e-9)


def _digits_for(prec_bits: int) -> int:
    return int(prec_bits * 0.30103) + 4


class ZetaEvaluator:
    """Evaluator for single zetas, multiple zetas, and star values, with a cache.

    Stateless apart from the cache and per-exponent power tables; safe for
    concurrent use (values for equal keys are deterministic, so last writer
    wins without disagreement).
    """

    def __init__(self, config: PrecisionConfig | None = None):
        self.config = config or PrecisionConfig()
        self._cache: dict[tuple[int, ...], BoundedValue] = {}
        self._powers: dict[tuple[int, int], list] = {}
        self._lock = threading.Lock()

    # -- context helpers ---------------------------------------------------

    def _ctx(self):
        return gmpy2.context(precision=self.config.prec_bits)

    def _mpfr(self, x):
        with self._ctx():
            if isinstance(x, Fraction):
                return gmpy2.mpfr(x.numerator) / x.denominator
            return gmpy2.mpfr(x)

    def format_value(self, x) -> str:
        return f"{x:.{_digits_for(self.config.prec_bits)}g}"

    # -- power tables --------------------------------------------------------

    def _power_array(self, k: int, n: int) -> list:
        key = (k, n)
        arr = self._powers.get(key)
        if arr is not None:
            return arr
        with self._ctx():
            arr = [gmpy2.mpfr(0)] * (n + 1)
            for m in range(1, n + 1):
                arr[m] = gmpy2.mpfr(m) ** (-k)
        with self._lock:
            self._powers.setdefault(key, arr)
        return self._powers[key]

    # -- Euler-Maclaurin single-variable tails -------------------------------

    def _em_terms(self, e: int) -> list[tuple[Fraction, int]]:
        """T(e,u) = sum_{m>u} m^-e  ~  sum of coeff * u^-exponent over these pairs."""
        p = self.config.tail_order
        terms = [(Fraction(1, e - 1), e - 1), (Fraction(-1, 2), e)]
        for i in range(1, p + 1):
            coeff = _BERNOULLI[2 * i] * _rising(e, 2 * i - 1) / math.factorial(2 * i)
            terms.append((coeff, e + 2 * i - 1))
        return terms

    def _em_remainder_coeff(self, e: int) -> float:
        """|remainder of the expansion above| <= this * u^-(e + 2*tail_order + 1)."""
        p = self.config.tail_order
        coeff = _BERNOULLI[2 * (p + 1)] * _rising(e, 2 * p + 1) / math.factorial(2 * p + 2)
        return 2.0 * abs(float(coeff))

    def _em_tail(self, e: int, n: int):
        """Value and bound for sum_{m>n} m^-e (needs e >= 2)."""
        value = gmpy2.mpfr(0)
        base = gmpy2.mpfr(n)
        for coeff, exponent in self._em_terms(e):
            value += self._mpfr(coeff) * base ** (-exponent)
        bound = self._em_remainder_coeff(e) * _neg_power(n, e + 2 * self.config.tail_order + 1)
        return value, bound

    def _polylog_tail_bound(self, e: int, s: int, n: int) -> float:
        """Upper bound for sum_{u>n} u^-e (1+ln u)^s, via the closed-form integral."""
        a = 1.0 + math.log(n)
        total = 0.0
        for j in range(s + 1):
            total += math.comb(s, j) * a ** (s - j) * math.factorial(j) / (e - 1) ** (j + 1)
        return _neg_power(n, e - 1) * total * (1.0 + 1e-9)

    # -- nested tail correction ----------------------------------------------

    def _tail(self, parts: tuple[int, ...], pvals: list, n: int):
        """Value and bound for the outer tail sum_{m>n} m^-k_r P_{r-1}(m-1).

        Recursively reduces G(j, e) = sum_{u>n} u^-e P_j(u-1) to Euler-Maclaurin
        tails: each step splits P_j at the cap and re-expands, raising the
        exponent while stepping the depth down.
        """
        p = self.config.tail_order
        memo: dict[tuple[int, int], tuple] = {}

        def g(j: int, e: int):
            key = (j, e)
            hit = memo.get(key)
            if hit is not None:
                return hit
            if j == 0:
                out = self._em_tail(e, n)
                memo[key] = out
                return out
            t_val, t_bnd = self._em_tail(e, n)
            value = pvals[j] * t_val
            bound = abs(float(pvals[j])) * t_bnd
            kj = parts[j - 1]
            for coeff, exponent in self._em_terms(e):
                gv, gb = g(j - 1, exponent + kj)
                value += self._mpfr(coeff) * gv
                bound += abs(float(coeff)) * gb
            ones = sum(1 for x in parts[: j - 1] if x == 1)
            larger = (j - 1) - ones
            inner_bound = _ZETA2_UPPER ** larger
            bound += (
                self._em_remainder_coeff(e)
                * inner_bound
                * self._polylog_tail_bound(kj + e + 2 * p + 1, ones, n)
            )
            memo[key] = (value, bound)
            return value, bound

        return g(len(parts) - 1, parts[-1])

    # -- nested series evaluation ----------------------------------------------

    def _evaluate(self, parts: tuple[int, ...], n: int):
        r = len(parts)
        with self._ctx():
            one = gmpy2.mpfr(1)
            zero = gmpy2.mpfr(0)
            pvals = [one]  # pvals[j] = P_j(n); P_0 is the empty product
            arr: list = []
            for level, k in enumerate(parts, start=1):
                pw = self._power_array(k, n)
                acc = zero
                if level == 1:
                    if r == 1:
                        for m in range(1, n + 1):
                            acc += pw[m]
                    else:
                        arr = [zero] * (n + 1)
                        for m in range(1, n + 1):
                            acc += pw[m]
                            arr[m] = acc
                elif level < r:
                    prev = arr[0]
                    for m in range(1, n + 1):
                        nxt = arr[m]
                        acc += pw[m] * prev
                        arr[m] = acc
                        prev = nxt
                else:
                    prev = arr[0]
                    for m in range(1, n + 1):
                        nxt = arr[m]
                        acc += pw[m] * prev
                        prev = nxt
                pvals.append(acc)
            tail_val, tail_bnd = self._tail(parts, pvals, n)
            value = pvals[r] + tail_val
            peak = max(1.0, max(abs(float(v)) for v in pvals))
            slop = 8.0 * n * r * peak * 2.0 ** (-self.config.prec_bits)
            return value, tail_bnd + slop

    # -- public evaluation API ---------------------------------------------

    def mzv(self, index: Index) -> BoundedValue:
        """Nested strict-inequality sum for an admissible index."""
        if not isinstance(index, Index):
            index = Index(index)
        if not index.is_admissible:
            raise DomainError(
                f"non-admissible index ({index}): the nested series diverges (final entry must exceed 1)"
            )
        key = index.parts
        with self._lock:
            hit = self._cache.get(key)
        if hit is not None and hit.bound <= self.config.tolerance:
            return hit
        n = self.config.trunc
        while True:
            value, bound = self._evaluate(key, n)
            if bound <= self.config.tolerance:
                break
            if n >= self.config.max_trunc:
                raise AccuracyError(
                    f"certified bound {bound:.3e} for ζ({index}) misses tolerance "
                    f"{self.config.tolerance:.3e} even at the truncation ceiling {n}; "
                    "raise max_trunc, lower tolerance, or raise tail_order"
                )
            n = min(n * 4, self.config.max_trunc)
        out = BoundedValue(value, bound)
        with self._lock:
            self._cache[key] = out
        return out

    def zeta_single(self, m: int) -> BoundedValue:
        if not isinstance(m, int) or m < 2:
            raise DomainError(f"zeta(m) needs an integer m >= 2, got {m!r}")
        return self.mzv(Index([m]))

    def mzsv(self, index: Index) -> BoundedValue:
        """Weak-inequality (star) sum: expands over contractions of the index."""
        if not isinstance(index, Index):
            index = Index(index)
        if index.is_empty or index.parts[-1] < 2:
            raise DomainError(
                f"star value of ({index}) diverges: the final entry must exceed 1"
            )
        with self._ctx():
            total = gmpy2.mpfr(0)
            bound = 0.0
            for contracted in contractions(index):
                bv = self.mzv(contracted)
                total = total + bv.value
                bound += bv.bound
        return BoundedValue(total, bound * (1.0 + 1e-12) + 2.0 ** (-self.config.prec_bits + 4))

    def evaluate_symbols(self, combo: SymbolCombination):
        """Numeric value and bound of a symbol combination."""
        with self._ctx():
            total = gmpy2.mpfr(0)
            bound = 0.0
            for mono, q in combo.items():
                prod = gmpy2.mpfr(q.numerator) / q.denominator
                pb = 0.0
                for ix in mono:
                    bv = self.mzv(ix)
                    pb = (
                        abs(float(prod)) * bv.bound
                        + abs(float(bv.value)) * pb
                        + pb * bv.bound
                    )
                    prod = prod * bv.value
                total += prod
                bound += pb
            bound += (len(combo.terms) + 1) * max(1.0, abs(float(total))) * 2.0 ** (
                -self.config.prec_bits + 4
            )
            return total, bound

    def evaluate_poly(self, poly: TPoly) -> NumericPoly:
        """Numeric image of a symbol polynomial, coefficient by coefficient."""
        values = []
        bounds = []
        for c in poly.coeffs:
            if isinstance(c, (int, Fraction)):
                c = SymbolCombination.scalar(c)
            v, b = self.evaluate_symbols(c)
            values.append(v)
            bounds.append(b)
        return NumericPoly(tuple(values), tuple(bounds))

    def a_series_numeric(self, order: int) -> TruncSeries:
        """A(t) with multiprecision coefficients (for the numeric operator route)."""
        with self._ctx():
            one = gmpy2.mpfr(1)
            return a_series(order, lambda m: self.zeta_single(m).value, one)

    # -- cache management ------------------------------------------------------

    def cache_size(self) -> int:
        with self._lock:
            return len(self._cache)

    def clear_cache(self) -> None:
        with self._lock:
            self._cache.clear()
            self._powers.clear()

    def save_cache(self, path: str | Path) -> int:
        digits = _digits_for(self.config.prec_bits)
        with self._lock:
            payload = {
                "config": list(self.config.cache_key()),
                "values": {
                    str(Index(parts)): {"value": f"{bv.value:.{digits}g}", "bound": bv.bound}
                    for parts, bv in sorted(self._cache.items())
                },
            }
        Path(path).write_text(json.dumps(payload, sort_keys=True, indent=1))
        return len(payload["values"])

    def load_cache(self, path: str | Path) -> int:
        payload = json.loads(Path(path).read_text())
        if tuple(payload.get("config", ())) != self.config.cache_key():
            raise DomainError(
                "cache file was produced under a different precision configuration"
            )
        loaded = 0
        with self._ctx():
            for text, entry in payload["values"].items():
                parts = Index.parse(text).parts
                bv = BoundedValue(gmpy2.mpfr(entry["value"]), float(entry["bound"]))
                with self._lock:
                    self._cache[parts] = bv
                loaded += 1
        return loaded


_EVALUATORS: dict[tuple, ZetaEvaluator] = {}
_EVALUATORS_LOCK = threading.Lock()


def shared_evaluator(config: PrecisionConfig | None = None) -> ZetaEvaluator:
    """Process-wide evaluator registry, one per configuration."""
    config = config or PrecisionConfig()
    key = (config.cache_key(), config.tolerance, config.max_trunc)
    with _EVALUATORS_LOCK:
        ev = _EVALUATORS.get(key)
        if ev is None:
            ev = ZetaEvaluator(config)
            _EVALUATORS[key] = ev
        return ev


def zeta_single(m: int, config: PrecisionConfig | None = None) -> BoundedValue:
    return shared_evaluator(config).zeta_single(m)


def mzv(index, config: PrecisionConfig | None = None) -> BoundedValue:
    return shared_evaluator(config).mzv(index)


def mzsv(index, config: PrecisionConfig | None = None) -> BoundedValue:
    return shared_evaluator(config).mzsv(index)
