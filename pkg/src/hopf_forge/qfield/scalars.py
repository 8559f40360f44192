"""Exact coefficient fields.

Two kinds of field are supported:

* ``GenericField`` -- rational functions in an indeterminate ``q`` over Q.
  A scalar is stored as a pair of polynomials ``num/den`` in ``q`` with
  ``gcd(num, den) = 1`` and ``den`` monic.  Negative powers of ``q`` are
  cleared into the denominator, so the representation is unique.
* ``CyclotomicField(l)`` -- Q(zeta_l) = Q[x]/Phi_l(x), where ``q`` is
  specialised to the primitive root ``zeta_l = x``.  A scalar is a
  polynomial of degree < deg Phi_l.

Polynomial arithmetic is delegated to python-flint's ``fmpq_poly``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from flint import fmpq, fmpq_poly

_X = fmpq_poly([0, 1])
_ONE_POLY = fmpq_poly([1])
_ZERO_POLY = fmpq_poly([])


class FieldMismatch(ValueError):
    pass


def _to_fmpq(value) -> fmpq:
    if isinstance(value, fmpq):
        return value
    if isinstance(value, int):
        return fmpq(value)
    if isinstance(value, Fraction):
        return fmpq(value.numerator, value.denominator)
    raise TypeError(f"cannot convert {value!r} to a rational")


def _frac(c: fmpq) -> Fraction:
    return Fraction(int(c.p), int(c.q))


def _poly_key(p: fmpq_poly) -> tuple:
    return tuple((int(c.p), int(c.q)) for c in p.coeffs())


def _lead(p: fmpq_poly) -> fmpq:
    return p[p.degree()]


class Field:
    """Common interface of the two coefficient fields."""

    kind = ""
    l: int | None = None

    def __call__(self, value) -> "Scalar":
        if isinstance(value, Scalar):
            if value.field is not self:
                raise FieldMismatch(f"scalar from {value.field} used in {self}")
            return value
        return self.from_rational(_to_fmpq(value))

    @property
    def zero(self) -> "Scalar":
        return self._zero

    @property
    def one(self) -> "Scalar":
        return self._one

    @property
    def q(self) -> "Scalar":
        return self.q_pow(1)

    def is_root_mode(self) -> bool:
        return self.kind == "RootOfUnity"

    def from_rational(self, c: fmpq) -> "Scalar":
        raise NotImplementedError

    def q_pow(self, n: int) -> "Scalar":
        raise NotImplementedError

    def from_laurent(self, coeffs: dict[int, object]) -> "Scalar":
        """Build sum c_e q^e from a mapping exponent -> rational."""
        total = self.zero
        for e, c in coeffs.items():
            if c:
                total = total + self.q_pow(e) * self(c)
        return total


class Scalar:
    """Element of a ``Field``; immutable."""

    __slots__ = ()
    field: Field

    # subclasses implement _add, _sub, _mul, _neg, inverse, is_zero, _key

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field:
                raise FieldMismatch(f"cannot combine scalars of {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction, fmpq)):
            return self.field.from_rational(_to_fmpq(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._add(o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._sub(o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o._sub(self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._mul(o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._mul(o.inverse())

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o._mul(self.inverse())

    def __neg__(self):
        return self._neg()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return other.field is self.field and self._eq(other)
        if isinstance(other, (int, Fraction, fmpq)):
            return self._eq(self.field.from_rational(_to_fmpq(other)))
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.field.kind, self.field.l, self._key()))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        from .render import render_scalar

        return f"Scalar({render_scalar(self)})"

    def __str__(self):
        from .render import render_scalar

        return render_scalar(self)


# ---------------------------------------------------------------------------
# Generic mode: Q(q)


class RationalFunction(Scalar):
    __slots__ = ("num", "den")
    field: "GenericField"

    def __init__(self, num: fmpq_poly, den: fmpq_poly):
        # callers must pass canonical data; use _canon otherwise
        self.num = num
        self.den = den

    @property
    def field(self):
        return GENERIC

    def is_zero(self):
        return self.num.degree() < 0

    def _key(self):
        return (_poly_key(self.num), _poly_key(self.den))

    def _eq(self, o):
        return self.num == o.num and self.den == o.den

    def _add(self, o):
        if self.num.degree() < 0:
            return o
        if o.num.degree() < 0:
            return self
        if self.den == o.den:
            return _canon(self.num + o.num, self.den)
        return _canon(self.num * o.den + o.num * self.den, self.den * o.den)

    def _sub(self, o):
        if o.num.degree() < 0:
            return self
        if self.den == o.den:
            return _canon(self.num - o.num, self.den)
        return _canon(self.num * o.den - o.num * self.den, self.den * o.den)

    def _mul(self, o):
        if self.num.degree() < 0 or o.num.degree() < 0:
            return GENERIC.zero
        if self.den.degree() == 0 and o.den.degree() == 0:
            return RationalFunction(self.num * o.num, _ONE_POLY)
        return _canon(self.num * o.num, self.den * o.den)

    def _neg(self):
        return RationalFunction(-self.num, self.den)

    def inverse(self):
        if self.num.degree() < 0:
            raise ZeroDivisionError("inverse of zero")
        return _canon(self.den, self.num)

    def laurent_terms(self) -> dict[int, Fraction] | None:
        """Return {exponent: coeff} if this is a Laurent polynomial, else None."""
        d = self.den.degree()
        # den is monic; it is a monomial iff all lower coefficients vanish
        if any(self.den[i] != 0 for i in range(d)):
            return None
        return {i - d: _frac(c) for i, c in enumerate(self.num.coeffs()) if c != 0}


def _canon(num: fmpq_poly, den: fmpq_poly) -> RationalFunction:
    if num.degree() < 0:
        return GENERIC._zero
    if den.degree() < 0:
        raise ZeroDivisionError("zero denominator")
    if den.degree() > 0:
        g = num.gcd(den)
        if g.degree() > 0:
            num = num // g
            den = den // g
    lc = _lead(den)
    if lc != 1:
        num = num / lc
        den = den / lc
    return RationalFunction(num, den)


class GenericField(Field):
    kind = "Generic"
    l = None

    def __init__(self):
        self._zero = RationalFunction(_ZERO_POLY, _ONE_POLY)
        self._one = RationalFunction(_ONE_POLY, _ONE_POLY)
        self._qpow: dict[int, RationalFunction] = {}

    def __repr__(self):
        return "GenericField()"

    def from_rational(self, c: fmpq) -> RationalFunction:
        if c == 0:
            return self._zero
        return RationalFunction(fmpq_poly([c]), _ONE_POLY)

    def q_pow(self, n: int) -> RationalFunction:
        v = self._qpow.get(n)
        if v is None:
            if n >= 0:
                v = RationalFunction(_X ** n, _ONE_POLY)
            else:
                v = RationalFunction(_ONE_POLY, _X ** (-n))
            self._qpow[n] = v
        return v

    def from_polys(self, num: fmpq_poly, den: fmpq_poly) -> RationalFunction:
        return _canon(num, den)


GENERIC = GenericField()


# ---------------------------------------------------------------------------
# Root-of-unity mode: Q(zeta_l)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> fmpq_poly:
    """Phi_n by dividing x^n - 1 by Phi_d for every proper divisor d of n."""
    if n < 1:
        raise ValueError("n must be positive")
    p = _X ** n - 1
    for d in range(1, n):
        if n % d == 0:
            quo, rem = divmod(p, cyclotomic_polynomial(d))
            assert rem.degree() < 0
            p = quo
    return p


class CyclotomicNumber(Scalar):
    __slots__ = ("field", "poly")

    def __init__(self, field: "CyclotomicField", poly: fmpq_poly):
        self.field = field
        self.poly = poly

    def is_zero(self):
        return self.poly.degree() < 0

    def _key(self):
        return _poly_key(self.poly)

    def _eq(self, o):
        return self.poly == o.poly

    def _add(self, o):
        return CyclotomicNumber(self.field, self.poly + o.poly)

    def _sub(self, o):
        return CyclotomicNumber(self.field, self.poly - o.poly)

    def _mul(self, o):
        p = self.poly * o.poly
        if p.degree() >= self.field.degree:
            p = p % self.field.phi
        return CyclotomicNumber(self.field, p)

    def _neg(self):
        return CyclotomicNumber(self.field, -self.poly)

    def inverse(self):
        if self.poly.degree() < 0:
            raise ZeroDivisionError("inverse of zero")
        if self.poly.degree() == 0:
            return CyclotomicNumber(self.field, fmpq_poly([1 / self.poly[0]]))
        g, s, _t = self.poly.xgcd(self.field.phi)
        # Phi is irreducible so g is a nonzero constant
        return CyclotomicNumber(self.field, (s / g[0]) % self.field.phi)

    def vector(self) -> list[Fraction]:
        """Coefficients in the basis zeta^0, ..., zeta^(deg Phi - 1)."""
        out = [Fraction(0)] * self.field.degree
        for i, c in enumerate(self.poly.coeffs()):
            out[i] = _frac(c)
        return out

    def rational_value(self) -> Fraction | None:
        if self.poly.degree() <= 0:
            return _frac(self.poly[0]) if self.poly.degree() == 0 else Fraction(0)
        return None


class CyclotomicField(Field):
    kind = "RootOfUnity"

    def __init__(self, l: int):
        if l < 3:
            raise ValueError("root-of-unity mode requires l >= 3 (q must differ from +-1)")
        self.l = l
        self.phi = cyclotomic_polynomial(l)
        self.degree = self.phi.degree()
        self._zero = CyclotomicNumber(self, _ZERO_POLY)
        self._one = CyclotomicNumber(self, _ONE_POLY)
        self._qpow = [CyclotomicNumber(self, (_X ** k) % self.phi) for k in range(l)]

    def __repr__(self):
        return f"CyclotomicField({self.l})"

    def __reduce__(self):
        return (cyclotomic_field, (self.l,))

    def from_rational(self, c: fmpq) -> CyclotomicNumber:
        if c == 0:
            return self._zero
        return CyclotomicNumber(self, fmpq_poly([c]))

    def q_pow(self, n: int) -> CyclotomicNumber:
        return self._qpow[n % self.l]

    def from_poly(self, p: fmpq_poly) -> CyclotomicNumber:
        return CyclotomicNumber(self, p % self.phi)

    def from_vector(self, coeffs) -> CyclotomicNumber:
        return self.from_poly(fmpq_poly([_to_fmpq(c) for c in coeffs]))

    def specialize(self, s: RationalFunction) -> CyclotomicNumber:
        """Image of a generic scalar under q -> zeta_l (its denominator must not vanish)."""
        den = s.den % self.phi
        if den.degree() < 0:
            raise ZeroDivisionError(f"denominator vanishes at q = zeta_{self.l}")
        return CyclotomicNumber(self, s.num % self.phi) / CyclotomicNumber(self, den)

    def power_index(self, z: CyclotomicNumber) -> int | None:
        """k with zeta^k == z, or None if z is not an l-th root of unity."""
        for k, w in enumerate(self._qpow):
            if w == z:
                return k
        return None


@lru_cache(maxsize=None)
def cyclotomic_field(l: int) -> CyclotomicField:
    return CyclotomicField(l)


def field_for(l: int | None) -> Field:
    """``None`` selects the generic field, an integer selects Q(zeta_l)."""
    return GENERIC if l is None else cyclotomic_field(l)
