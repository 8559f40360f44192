"""Text and JSON forms of scalars."""
from __future__ import annotations

from fractions import Fraction

from flint import fmpq, fmpq_poly

from .scalars import (
    GENERIC,
    CyclotomicNumber,
    RationalFunction,
    Scalar,
    _frac,
    cyclotomic_field,
)


def _monomial(c: Fraction, e: int) -> str:
    if e == 0:
        return str(c)
    power = "q" if e == 1 else f"q^{e}"
    if c == 1:
        return power
    return f"{c}*{power}"


def render_laurent(terms: dict[int, Fraction]) -> str:
    """Render sum c_e q^e, highest exponent first."""
    if not terms:
        return "0"
    out = ""
    for e in sorted(terms, reverse=True):
        c = terms[e]
        if not out:
            out = ("-" + _monomial(-c, e)) if c < 0 else _monomial(c, e)
        elif c < 0:
            out += " - " + _monomial(-c, e)
        else:
            out += " + " + _monomial(c, e)
    return out


def _poly_terms(p: fmpq_poly, shift: int = 0) -> dict[int, Fraction]:
    return {i + shift: _frac(c) for i, c in enumerate(p.coeffs()) if c != 0}


def render_scalar(s: Scalar) -> str:
    if isinstance(s, CyclotomicNumber):
        return render_laurent(_poly_terms(s.poly))
    terms = s.laurent_terms()
    if terms is not None:
        return render_laurent(terms)
    num = render_laurent(_poly_terms(s.num))
    den = render_laurent(_poly_terms(s.den))
    if " " in num:
        num = f"({num})"
    return f"{num}/({den})"


def is_compound(text: str) -> bool:
    """True when a rendered scalar needs parentheses inside a product."""
    return " " in text or "/" in text


def _rat_str(c: Fraction) -> str:
    return str(c)


def scalar_to_json(s: Scalar):
    if isinstance(s, RationalFunction):
        return {
            "num": [[e, _rat_str(c)] for e, c in sorted(_poly_terms(s.num).items())],
            "den": [[e, _rat_str(c)] for e, c in sorted(_poly_terms(s.den).items())],
        }
    return {"l": s.field.l, "zeta": [_rat_str(c) for c in s.vector()]}


def _pairs_to_poly(pairs) -> fmpq_poly:
    coeffs: dict[int, Fraction] = {}
    for e, c in pairs:
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"bad exponent {e!r}")
        coeffs[e] = coeffs.get(e, Fraction(0)) + Fraction(c)
    if not coeffs:
        return fmpq_poly([])
    out = [fmpq(0)] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = fmpq(c.numerator, c.denominator)
    return fmpq_poly(out)


def scalar_from_json(data) -> Scalar:
    if not isinstance(data, dict):
        raise ValueError("scalar JSON must be an object")
    if "l" in data:
        field = cyclotomic_field(int(data["l"]))
        vec = data.get("zeta")
        if not isinstance(vec, list) or len(vec) != field.degree:
            raise ValueError(f"zeta vector must have length {field.degree}")
        return field.from_vector([Fraction(c) for c in vec])
    if "num" in data and "den" in data:
        return GENERIC.from_polys(_pairs_to_poly(data["num"]), _pairs_to_poly(data["den"]))
    raise ValueError("unrecognised scalar JSON")
