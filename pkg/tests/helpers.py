"""Independent oracles used by the tests (sympy for field arithmetic)."""
from __future__ import annotations

import sympy as sp

from hopf_forge.qfield import CyclotomicNumber, RationalFunction

Q = sp.Symbol("q")


def poly_to_sympy(p) -> sp.Expr:
    return sum((sp.Rational(int(c.p), int(c.q)) * Q**i for i, c in enumerate(p.coeffs())), sp.Integer(0))


def to_sympy(s) -> sp.Expr:
    """A scalar as a sympy expression in q (for cyclotomic scalars, a polynomial in q = zeta)."""
    if isinstance(s, RationalFunction):
        return poly_to_sympy(s.num) / poly_to_sympy(s.den)
    if isinstance(s, CyclotomicNumber):
        return poly_to_sympy(s.poly)
    raise TypeError(type(s))


def sym_equal(a: sp.Expr, b: sp.Expr) -> bool:
    return sp.simplify(sp.cancel(sp.together(a - b))) == 0


def sym_cyclo_equal(a: sp.Expr, b: sp.Expr, l: int) -> bool:
    """a == b in Q[q]/Phi_l(q), for a, b possibly rational in q."""
    phi = sp.cyclotomic_poly(l, Q)
    num, den = sp.fraction(sp.together(a - b))
    num = sp.rem(sp.Poly(sp.expand(num), Q), sp.Poly(phi, Q))
    return num.is_zero


def sym_qint(n: int) -> sp.Expr:
    return (Q**n - Q**-n) / (Q - 1 / Q)


def sym_qfac(n: int) -> sp.Expr:
    out = sp.Integer(1)
    for k in range(1, n + 1):
        out *= sym_qint(k)
    return out


def sym_qbinom(n: int, j: int) -> sp.Expr:
    return sp.cancel(sym_qfac(n) / (sym_qfac(j) * sym_qfac(n - j)))


def report(name: str, ok: bool, detail: str = ""):
    """One pass/fail line for the acceptance suite."""
    line = f"[{'PASS' if ok else 'FAIL'}] {name}"
    if detail:
        line += f" -- {detail}"
    print(line)
