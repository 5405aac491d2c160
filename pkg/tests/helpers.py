"""Shared oracles and comparison helpers, independent of the code they check."""

from fractions import Fraction

import gmpy2


def mp_diff(a, b) -> float:
    """|a - b| computed at high precision, as a float."""
    with gmpy2.context(precision=320):
        return float(abs(gmpy2.mpfr(a) - gmpy2.mpfr(b)))


def truncated_nested_sum(parts, cap) -> Fraction:
    """Exact rational nested sum over 0 < m_1 < ... < m_r <= cap."""
    partial = [Fraction(1)] * (cap + 1)
    for k in parts:
        acc = Fraction(0)
        nxt = [Fraction(0)] * (cap + 1)
        for m in range(1, cap + 1):
            acc += partial[m - 1] / Fraction(m) ** k
            nxt[m] = acc
        partial = nxt
    return partial[cap]


def brute_force_mzv(parts, cap):
    """Float nested sum with a crude tail bound, by direct summation only."""
    import math

    partial = [1.0] * (cap + 1)
    for k in parts:
        acc = 0.0
        nxt = [0.0] * (cap + 1)
        for m in range(1, cap + 1):
            acc += partial[m - 1] / m**k
            nxt[m] = acc
        partial = nxt
    ones = sum(1 for k in parts[:-1] if k == 1)
    bound = (
        2.0 * (1.0 + math.log(cap)) ** ones * cap ** (1 - parts[-1]) / (parts[-1] - 1)
    )
    return partial[cap], bound


def rising_factorial_coeffs(r) -> list[Fraction]:
    """Coefficients of x(x+1)...(x+r-1), constant term first; exact expansion."""
    coeffs = [Fraction(0), Fraction(1)]  # x
    for shift in range(1, r):
        # multiply by (x + shift)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += c * shift
            nxt[i + 1] += c
        coeffs = nxt
    return coeffs
