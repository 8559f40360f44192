"""Square roots inside the coefficient field.

For Q(zeta_l) we first try the cheap decomposition a = zeta^k * c^2 with c
rational, and otherwise decide whether X^2 - a has a root by Trager's
norm method: shift X -> X - s*zeta until the norm of X^2 - a down to Q[X]
is squarefree, factor that norm over Q, and pull each factor back.
"""
from __future__ import annotations

from fractions import Fraction

from flint import fmpq, fmpq_poly
from flint.utils.flint_exceptions import DomainError

from .scalars import GENERIC, CyclotomicField, CyclotomicNumber, RationalFunction, Scalar


def _rational_sqrt(c: Fraction) -> Fraction | None:
    if c < 0:
        return None
    from math import isqrt

    n, d = c.numerator, c.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _interpolate(points: list[tuple[fmpq, fmpq]]) -> fmpq_poly:
    x = fmpq_poly([0, 1])
    total = fmpq_poly([])
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        basis = fmpq_poly([1])
        denom = fmpq(1)
        for j, (xj, _) in enumerate(points):
            if j != i:
                basis = basis * (x - xj)
                denom = denom * (xi - xj)
        total = total + basis * (yi / denom)
    return total


def _norm_of_shifted(field: CyclotomicField, a: CyclotomicNumber, s: int) -> fmpq_poly:
    """Norm_{K/Q} of (X - s*zeta)^2 - a as a polynomial in Q[X]."""
    d = field.degree
    zeta = field.q
    pts = []
    for k in range(2 * d + 1):
        x0 = field(k)
        val = (x0 - zeta * s) * (x0 - zeta * s) - a
        pts.append((fmpq(k), field.phi.resultant(val.poly) if val else fmpq(0)))
    return _interpolate(pts)


def _eval_mod_quadratic(field: CyclotomicField, h: fmpq_poly, shift, a):
    """h(X + shift) reduced modulo X^2 - a, returned as (coeff of X, constant)."""
    zero = field.zero
    hi, lo = zero, zero
    for c in reversed(h.coeffs()):
        # (hi X + lo)(X + shift) = hi X^2 + (hi shift + lo) X + lo shift
        hi, lo = hi * shift + lo, lo * shift + hi * a + field(c)
    return hi, lo


def cyclotomic_sqrt(a: CyclotomicNumber) -> CyclotomicNumber | None:
    """Some b with b*b == a, or None when a is not a square in the field."""
    field = a.field
    if a.is_zero():
        return a
    for k in range(field.l):
        c = (a * field.q_pow(-k)).rational_value()
        if c is not None:
            r = _rational_sqrt(c)
            if r is not None and k % 2 == 0:
                return field.q_pow(k // 2) * field(r)
            if r is not None and field.l % 2 == 1:
                return field.q_pow(k * (field.l + 1) // 2) * field(r)
    s = 0
    while True:
        norm = _norm_of_shifted(field, a, s)
        if norm.gcd(norm.derivative()).degree() == 0:
            break
        s += 1
    shift = field.q * s
    for h, _mult in norm.factor()[1]:
        hi, lo = _eval_mod_quadratic(field, h, shift, a)
        if hi:
            root = -lo / hi
            if root * root == a:
                return root
    return None


def generic_sqrt(a: RationalFunction) -> RationalFunction | None:
    if a.is_zero():
        return a
    try:
        num = a.num.sqrt()
        den = a.den.sqrt()
    except DomainError:
        return None
    return GENERIC.from_polys(num, den)


def field_sqrt(a: Scalar) -> Scalar | None:
    if isinstance(a, CyclotomicNumber):
        return cyclotomic_sqrt(a)
    return generic_sqrt(a)
