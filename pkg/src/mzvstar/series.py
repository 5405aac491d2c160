"""Truncated power series in t and polynomials in T over a generic coefficient ring.

The same series/operator code runs over exact rationals, symbol combinations,
and multiprecision reals; coefficients only need +, -, *, multiplication by
int/Fraction, division by int, and truthiness (zero test).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Sequence

from .errors import CapacityError, DomainError


class TPoly:
    """Polynomial in the regularization variable T; trailing zeros are pruned."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, c) -> "TPoly":
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def coeff(self, n: int):
        """n-th coefficient, or int 0 beyond the degree."""
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _padded(self, n: int) -> list:
        return list(self.coeffs) + [0] * (n - len(self.coeffs))

    def __add__(self, other):
        if not isinstance(other, TPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return TPoly([_add(x, y) for x, y in zip(self._padded(n), other._padded(n))])

    def __sub__(self, other):
        if not isinstance(other, TPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return TPoly([_sub(x, y) for x, y in zip(self._padded(n), other._padded(n))])

    def __neg__(self):
        return TPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, TPoly):
            if not self.coeffs or not other.coeffs:
                return TPoly()
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if not b:
                        continue
                    out[i + j] = _add(out[i + j], a * b)
            return TPoly(out)
        if isinstance(other, (int, Fraction)):
            return TPoly([c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            inv = Fraction(1, 1) / scalar
            return TPoly([c * inv for c in self.coeffs])
        return NotImplemented

    def times_T(self, n: int = 1) -> "TPoly":
        """Multiply by T^n."""
        if not self.coeffs:
            return TPoly()
        return TPoly([0] * n + list(self.coeffs))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return all(_eq(x, y) for x, y in zip(self._padded(n), other._padded(n)))

    def __hash__(self):
        return hash(self.coeffs)

    def format(self, coeff_str: Callable[[object], str] = str, var: str = "T") -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for n in range(self.degree, -1, -1):
            c = self.coeff(n)
            if isinstance(c, int) and c == 0:
                continue
            if not c:
                continue
            body = coeff_str(c)
            if n == 0:
                bits.append(f"({body})")
            elif n == 1:
                bits.append(f"({body})·{var}")
            else:
                bits.append(f"({body})·{var}^{n}")
        return " + ".join(bits) if bits else "0"

    def __repr__(self) -> str:
        return self.format()


def _add(x, y):
    if isinstance(y, int) and y == 0:
        return x
    if isinstance(x, int) and x == 0:
        return y
    return x + y


def _sub(x, y):
    if isinstance(y, int) and y == 0:
        return x
    if isinstance(x, int) and x == 0:
        return -y
    return x - y


def _eq(x, y) -> bool:
    if isinstance(y, int) and y == 0:
        return not x
    if isinstance(x, int) and x == 0:
        return not y
    return x == y


class TruncSeries:
    """Power series in t, exact modulo t^(order+1)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence):
        if order < 0:
            raise DomainError("series order must be nonnegative")
        coeffs = list(coeffs)
        if len(coeffs) != order + 1:
            raise DomainError(f"need {order + 1} coefficients for order {order}, got {len(coeffs)}")
        self.order = order
        self.coeffs = tuple(coeffs)

    def coeff(self, m: int):
        if m > self.order:
            raise CapacityError(f"series truncated at order {self.order}; coefficient {m} unavailable")
        return self.coeffs[m]

    def _match(self, other: "TruncSeries") -> None:
        if self.order != other.order:
            raise DomainError("series orders differ")

    def __add__(self, other):
        self._match(other)
        return TruncSeries(self.order, [_add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._match(other)
        return TruncSeries(self.order, [_sub(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._match(other)
        n = self.order
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(0, n - i + 1):
                b = other.coeffs[j]
                if not b:
                    continue
                out[i + j] = _add(out[i + j], a * b)
        return TruncSeries(n, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and all(_eq(a, b) for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def negate_variable(self) -> "TruncSeries":
        """t -> -t."""
        return TruncSeries(self.order, [c if m % 2 == 0 else -c for m, c in enumerate(self.coeffs)])

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse; the constant term must be invertible."""
        c0 = self.coeffs[0]
        if _eq(c0, 1):
            inv0 = c0
        else:
            try:
                inv0 = 1 / c0
            except TypeError as exc:
                raise DomainError("series constant term is not invertible") from exc
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = 0
            for j in range(1, n + 1):
                cj = self.coeffs[j]
                if not cj:
                    continue
                acc = _add(acc, cj * out[n - j])
            out.append(inv0 * 0 if isinstance(acc, int) else -(inv0 * acc))
        return TruncSeries(self.order, out)

    def exp(self, one) -> "TruncSeries":
        """Exponential of a series with zero constant term; `one` is the ring unit."""
        if self.coeffs[0]:
            raise DomainError("exp needs a zero constant term")
        out = [one]
        for n in range(1, self.order + 1):
            acc = 0
            for j in range(1, n + 1):
                fj = self.coeffs[j]
                if not fj:
                    continue
                acc = _add(acc, (fj * j) * out[n - j])
            out.append(one * 0 if isinstance(acc, int) else acc / n)
        return TruncSeries(self.order, out)

    def log(self) -> "TruncSeries":
        """Logarithm of a series with constant term 1."""
        if not _eq(self.coeffs[0], 1):
            raise DomainError("log needs constant term 1")
        zero_like = self.coeffs[0] * 0
        out = [zero_like]
        for n in range(1, self.order + 1):
            acc = 0
            for j in range(1, n):
                hj = out[j]
                if not hj:
                    continue
                fk = self.coeffs[n - j]
                if not fk:
                    continue
                acc = _add(acc, (hj * j) * fk)
            correction = acc / n if not isinstance(acc, int) else zero_like
            out.append(_sub(self.coeffs[n], correction))
        return TruncSeries(self.order, out)


def a_series(order: int, zeta_values: Callable[[int], object], one) -> TruncSeries:
    """The series exp(sum_{m>=2} (-1)^m zeta(m) t^m / m), truncated at `order`.

    `zeta_values(m)` supplies the single zeta values in the target ring and
    `one` is that ring's unit.  The constant term is 1 and the linear term 0.
    """
    zero = one * 0
    coeffs = [zero] * (order + 1)
    for m in range(2, order + 1):
        zm = zeta_values(m)
        coeffs[m] = (zm if m % 2 == 0 else -zm) / m
    return TruncSeries(order, coeffs).exp(one)


def _apply_kernel(p: TPoly, s: TruncSeries) -> TPoly:
    """Image of p under the T-linear map sending exp(Tt) to s(t)·exp(Tt).

    Acting coefficientwise in t, T^n maps to n! · sum_{m+j=n} s_m T^j / j!.
    """
    if p.degree < 0:
        return TPoly()
    if s.order < p.degree:
        raise CapacityError(
            f"series order {s.order} is below the polynomial degree {p.degree}; "
            "rebuild the series with a higher order"
        )
    out: list = [0] * (p.degree + 1)
    for n, pn in enumerate(p.coeffs):
        if not pn:
            continue
        for j in range(n + 1):
            m = n - j
            sm = s.coeffs[m]
            if not sm:
                continue
            out[j] = _add(out[j], (pn * sm) * Fraction(math.factorial(n), math.factorial(j)))
    return TPoly(out)


def rho(p: TPoly, a: TruncSeries) -> TPoly:
    """Harmonic-to-shuffle conversion map: kernel A(t)·exp(Tt)."""
    return _apply_kernel(p, a)


def rho_bar_star(p: TPoly, a: TruncSeries) -> TPoly:
    """Star harmonic-to-shuffle conversion map: kernel A(-t)^(-1)·exp(Tt)."""
    return _apply_kernel(p, a.negate_variable().inverse())


def rho_bar_star_inverse(p: TPoly, a: TruncSeries) -> TPoly:
    """Inverse of :func:`rho_bar_star`: kernel A(-t)·exp(Tt)."""
    return _apply_kernel(p, a.negate_variable())
