"""Coproduct, counit and antipode.

On generators:

    Delta(E_i) = K_i (x) E_i + E_i (x) 1      S(E_i) = -K_i^-1 E_i
    Delta(F_i) = 1 (x) F_i + F_i (x) K_i^-1   S(F_i) = -F_i K_i
    Delta(K)   = K (x) K                      S(K)   = K^-1

In ``Dphi`` the K_i in the F formulas is replaced by Kt_i.  Both maps are
extended to PBW monomials (anti)multiplicatively, splitting off the first
letter of the monomial, and memoised per algebra.
"""
from __future__ import annotations

from ..pbw import ONE_MONO, Algebra, Element, normal_form
from ..qfield import Scalar
from .tensor import TensorElement

_DELTA: dict = {}
_ANTIPODE: dict = {}


def _k_letter(alg: Algebra, i: int, inverse: bool) -> str:
    base = f"Kt{i}" if alg.has_tilde else f"K{i}"
    return base + "^-1" if inverse else base


def _split_first(m) -> tuple[str | None, tuple]:
    """(first letter, remaining monomial); the K block counts as one letter 'K'."""
    if m[0]:
        return "F1", (m[0] - 1,) + m[1:]
    if m[1]:
        return "F12", (0, m[1] - 1) + m[2:]
    if m[2]:
        return "F2", (0, 0, m[2] - 1) + m[3:]
    if any(m[3:7]):
        return "K", (0, 0, 0, 0, 0, 0, 0) + m[7:]
    if m[7]:
        return "E1", m[:7] + (m[7] - 1, m[8], m[9])
    if m[8]:
        return "E12", m[:8] + (m[8] - 1, m[9])
    if m[9]:
        return "E2", m[:9] + (m[9] - 1,)
    return None, m


def _letter_delta(alg: Algebra, letter: str, kpart=None) -> TensorElement:
    one = alg.one()
    g = alg.gen
    pure = TensorElement.pure
    if letter == "K":
        el = alg.monomial(kpart)
        return pure(el, el)
    if letter in ("E1", "E2"):
        i = letter[1]
        return pure(g(f"K{i}"), g(letter)) + pure(g(letter), one)
    if letter in ("F1", "F2"):
        i = int(letter[1])
        return pure(one, g(letter)) + pure(g(letter), g(_k_letter(alg, i, True)))
    q = alg.field.q
    if letter == "E12":
        d1, d2 = delta_mono(alg, _gen_mono(alg, "E1")), delta_mono(alg, _gen_mono(alg, "E2"))
        return d1 * d2 - (d2 * d1).scale(q.inverse())
    if letter == "F12":
        d1, d2 = delta_mono(alg, _gen_mono(alg, "F1")), delta_mono(alg, _gen_mono(alg, "F2"))
        return d2 * d1 - (d1 * d2).scale(q)
    raise ValueError(letter)


def _gen_mono(alg: Algebra, letter: str):
    (m,) = alg.gen(letter).terms
    return m


def delta_mono(alg: Algebra, m) -> TensorElement:
    key = (alg, m)
    hit = _DELTA.get(key)
    if hit is not None:
        return hit
    letter, rest = _split_first(m)
    if letter is None:
        out = TensorElement((alg, alg), {(ONE_MONO, ONE_MONO): alg.field.one})
    elif letter == "K":
        kpart = m[:7] + (0, 0, 0)
        out = _letter_delta(alg, "K", kpart)
        if any(rest):
            out = out * delta_mono(alg, rest)
    else:
        out = _letter_delta(alg, letter)
        if any(rest):
            out = out * delta_mono(alg, rest)
    _DELTA[key] = out
    return out


def comultiply(x: Element) -> TensorElement:
    alg = x.algebra
    acc: dict = {}
    for m, c in x.terms.items():
        for k, c2 in delta_mono(alg, m).terms.items():
            v = acc.get(k)
            acc[k] = c * c2 if v is None else v + c * c2
    return TensorElement((alg, alg), acc)


def counit_mono(m) -> int:
    return 1 if not (m[0] or m[1] or m[2] or m[7] or m[8] or m[9]) else 0


def counit(x: Element) -> Scalar:
    total = x.field.zero
    for m, c in x.terms.items():
        if counit_mono(m):
            total = total + c
    return total


def _letter_antipode(alg: Algebra, letter: str, kpart=None) -> Element:
    q = alg.field.q
    if letter == "K":
        inv = tuple(-e for e in kpart[:7]) + (0, 0, 0)
        return Element(alg, {alg.reduce_mono(inv): alg.field.one})
    if letter in ("E1", "E2"):
        i = letter[1]
        return normal_form([f"K{i}^-1", letter], alg, -1)
    if letter in ("F1", "F2"):
        i = int(letter[1])
        return normal_form([letter, _k_letter(alg, i, False)], alg, -1)
    if letter == "E12":
        s1, s2 = antipode_mono(alg, _gen_mono(alg, "E1")), antipode_mono(alg, _gen_mono(alg, "E2"))
        return s2 * s1 - (s1 * s2).scale(q.inverse())
    if letter == "F12":
        s1, s2 = antipode_mono(alg, _gen_mono(alg, "F1")), antipode_mono(alg, _gen_mono(alg, "F2"))
        return s1 * s2 - (s2 * s1).scale(q)
    raise ValueError(letter)


def antipode_mono(alg: Algebra, m) -> Element:
    key = (alg, m)
    hit = _ANTIPODE.get(key)
    if hit is not None:
        return hit
    letter, rest = _split_first(m)
    if letter is None:
        out = alg.one()
    else:
        head = _letter_antipode(alg, letter, m[:7] + (0, 0, 0) if letter == "K" else None)
        out = antipode_mono(alg, rest) * head if any(rest) else head
    _ANTIPODE[key] = out
    return out


def antipode(x: Element) -> Element:
    alg = x.algebra
    acc: dict = {}
    for m, c in x.terms.items():
        for m2, c2 in antipode_mono(alg, m).terms.items():
            v = acc.get(m2)
            acc[m2] = c * c2 if v is None else v + c * c2
    return Element(alg, acc)


# -- operations on tensor legs -----------------------------------------------


def delta_on_leg(t: TensorElement, i: int) -> TensorElement:
    """Apply Delta to the i-th leg (arity grows by one)."""
    alg = t.algebras[i]
    algs = t.algebras[:i] + (alg, alg) + t.algebras[i + 1:]
    acc: dict = {}
    for k, c in t.terms.items():
        for (a, b), c2 in delta_mono(alg, k[i]).terms.items():
            key = k[:i] + (a, b) + k[i + 1:]
            v = acc.get(key)
            acc[key] = c * c2 if v is None else v + c * c2
    return TensorElement(algs, acc)


def counit_on_leg(t: TensorElement, i: int):
    """Apply the counit to the i-th leg; returns an Element when one leg remains."""
    algs = t.algebras[:i] + t.algebras[i + 1:]
    acc: dict = {}
    for k, c in t.terms.items():
        if counit_mono(k[i]):
            key = k[:i] + k[i + 1:]
            acc[key] = acc.get(key, t.field.zero) + c
    if len(algs) == 1:
        return Element(algs[0], {k[0]: c for k, c in acc.items()})
    return TensorElement(algs, acc)


def antipode_on_leg(t: TensorElement, i: int) -> TensorElement:
    alg = t.algebras[i]
    acc: dict = {}
    for k, c in t.terms.items():
        for m, c2 in antipode_mono(alg, k[i]).terms.items():
            key = k[:i] + (m,) + k[i + 1:]
            v = acc.get(key)
            acc[key] = c * c2 if v is None else v + c * c2
    return TensorElement(t.algebras, acc)


def multiply_legs(t: TensorElement) -> Element:
    """m(a (x) b) = a b for a two-leg tensor over a single algebra."""
    a, b = t.algebras
    if a is not b:
        raise ValueError("legs live in different algebras")
    acc: dict = {}
    for (x, y), c in t.terms.items():
        for m, c2 in a.mul_mono(x, y).items():
            v = acc.get(m)
            acc[m] = c * c2 if v is None else v + c * c2
    return Element(a, acc)
