"""Sawtooth function and Dedekind sums, exactly."""

from __future__ import annotations

from fractions import Fraction
from math import floor, gcd
from operator import mul

HALF = Fraction(1, 2)


def sawtooth(x) -> Fraction:
    """``((x))``: ``x - floor(x) - 1/2`` off the integers, ``0`` on them."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - floor(x) - HALF


def _check(h: int, k: int) -> None:
    if k < 1:
        raise ValueError(f"Dedekind sum needs k >= 1, got k={k}")
    if gcd(h, k) != 1:
        raise ValueError(f"Dedekind sum needs gcd(h, k) = 1, got ({h}, {k})")


def dedekind_sum(h: int, k: int) -> Fraction:
    """``s(h, k) = sum_{i=1}^{k} ((h*i/k)) ((i/k))`` term by term.

    For ``0 < i < k`` neither ``i/k`` nor ``h*i/k`` is an integer, so
    ``((x/k)) = (2*(x mod k) - k) / (2k)``; the ``i = k`` term vanishes.
    The sum runs over these integer numerators and divides once.
    """
    _check(h, k)
    saw_hi = [2 * (h * i % k) - k for i in range(1, k)]
    saw_i = range(2 - k, k, 2)
    return Fraction(sum(map(mul, saw_hi, saw_i)), 4 * k * k)


def dedekind_sum_fast(h: int, k: int) -> Fraction:
    """Dedekind sum in O(log k) steps.

    Alternates the reduction ``s(h, k) = s(h mod k, k)`` with the reciprocity
    law ``s(h, k) + s(k, h) = -1/4 + (h/k + 1/(h*k) + k/h) / 12`` until the
    modulus reaches 1, where the sum vanishes.
    """
    _check(h, k)
    # accumulate num/den with plain integers and reduce once at the end
    num, den = 0, 1
    sign = 1
    h %= k
    while k > 1:
        # 0 < h < k, gcd(h, k) = 1; term = (h^2 + k^2 + 1 - 3hk) / (12hk)
        d = 12 * h * k
        num = num * d + sign * (h * h + k * k + 1 - 3 * h * k) * den
        den *= d
        sign = -sign
        h, k = k % h, h
    return Fraction(num, den)


def cone_lhs_closed_form(V: int, a: int) -> Fraction:
    """``(V-1)(V-2)/V + 12 s(a, V)``, the weighted interior-point sum of a cone."""
    if V < 1:
        raise ValueError(f"cone volume must be positive, got {V}")
    if gcd(a, V) != 1:
        raise ValueError(f"cone residue {a} is not a unit modulo {V}")
    return Fraction((V - 1) * (V - 2), V) + 12 * dedekind_sum_fast(a, V)
