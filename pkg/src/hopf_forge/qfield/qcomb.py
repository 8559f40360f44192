"""Quantum integers, factorials and binomials."""
from __future__ import annotations

from functools import lru_cache

from .scalars import GENERIC, CyclotomicField, Field, Scalar


def _qdiff(field: Field) -> Scalar:
    return field.q - field.q_pow(-1)


@lru_cache(maxsize=None)
def _q_int_generic(n: int) -> Scalar:
    return (GENERIC.q_pow(n) - GENERIC.q_pow(-n)) / _qdiff(GENERIC)


def q_int(n: int, field: Field = GENERIC) -> Scalar:
    """[n]_q = (q^n - q^-n)/(q - q^-1)."""
    if field is GENERIC:
        return _q_int_generic(n)
    return (field.q_pow(n) - field.q_pow(-n)) / _qdiff(field)


def q_factorial(n: int, field: Field = GENERIC) -> Scalar:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    out = field.one
    for k in range(1, n + 1):
        out = out * q_int(k, field)
    return out


@lru_cache(maxsize=None)
def _q_binomial_generic(n: int, j: int) -> Scalar:
    return q_factorial(n) / (q_factorial(j) * q_factorial(n - j))


def q_binomial(n: int, j: int, field: Field = GENERIC) -> Scalar:
    """Gaussian binomial [n choose j]_q for n >= j >= 0.

    The value is a Laurent polynomial in q, so in root-of-unity mode it is
    computed generically and then specialised at q = zeta_l; this is valid
    even when [n]! itself vanishes at the root of unity.
    """
    if j < 0 or n < 0:
        raise ValueError("q_binomial needs n >= j >= 0")
    if j > n:
        raise ValueError("q_binomial needs j <= n; use q_binomial_a for the shifted extension")
    value = _q_binomial_generic(n, j)
    if field is GENERIC:
        return value
    return field.specialize(value)


def q_bracket_a(a: Scalar, n: int) -> Scalar:
    """[a; n]_q = (a q^n - a^-1 q^-n)/(q - q^-1)."""
    if a.is_zero():
        raise ValueError("q_bracket_a needs an invertible a")
    f = a.field
    return (a * f.q_pow(n) - a.inverse() * f.q_pow(-n)) / _qdiff(f)


def q_factorial_a(a: Scalar, n: int) -> Scalar:
    """[a; n]_q! = [a; n][a; n-1]...[a; 1], with [a; 0]! = 1."""
    if n < 0:
        raise ValueError("q_factorial_a needs n >= 0")
    out = a.field.one
    for k in range(1, n + 1):
        out = out * q_bracket_a(a, k)
    return out


def q_binomial_a(a: Scalar, n: int, j: int, shift: int | None = None) -> Scalar:
    """[a; n choose j]_q.

    For n >= j this is [a;n]!/([j]![a;n-j]!).  For n < j the value is
    defined through the shift [a q^(-j-s); n+j+s choose j] with n+s >= 0;
    ``shift`` selects s (default: the smallest admissible one).
    """
    if a.is_zero():
        raise ValueError("q_binomial_a needs an invertible a")
    if j < 0:
        raise ValueError("q_binomial_a needs j >= 0")
    f = a.field
    if j == 0:
        return f.one
    if n >= j:
        # [a;n]!/[a;n-j]! telescopes, so no [a;k] is ever divided by
        out = f.one
        for k in range(n - j + 1, n + 1):
            out = out * q_bracket_a(a, k)
        return out / q_factorial(j, f)
    s = max(0, -n) if shift is None else shift
    if n + s < 0:
        raise ValueError("shift too small: need n + s >= 0")
    return q_binomial_a(a * f.q_pow(-j - s), n + j + s, j)


def q_binomial_a_product(a: Scalar, n: int, j: int) -> Scalar:
    """prod_{k=0}^{j-1} [a; n-k] / [j]!, valid for every integer n."""
    f = a.field
    out = f.one
    for k in range(j):
        out = out * q_bracket_a(a, n - k)
    return out / q_factorial(j, f)


def zeta_sqrt(z: Scalar, l: int | None = None) -> Scalar:
    """The square root zeta^(k(l+1)/2) of z = zeta^k, for odd l."""
    f = z.field
    if not isinstance(f, CyclotomicField):
        raise ValueError("zeta_sqrt needs root-of-unity mode")
    if l is not None and l != f.l:
        raise ValueError(f"scalar lives in Q(zeta_{f.l}), not Q(zeta_{l})")
    if f.l % 2 == 0:
        raise ValueError("zeta_sqrt needs odd l")
    k = f.power_index(z)
    if k is None:
        raise ValueError(f"{z} is not an l-th root of unity")
    return f.q_pow(k * (f.l + 1) // 2)
