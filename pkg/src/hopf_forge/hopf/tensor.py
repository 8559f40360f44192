"""Elements of tensor products of the PBW algebras."""
from __future__ import annotations

from ..pbw import AlgebraError, Element


class TensorElement:
    """Finite sum of coeff * m_1 (x) m_2 (x) ... with m_i monomials of algebras[i]."""

    __slots__ = ("algebras", "terms")

    def __init__(self, algebras: tuple, terms: dict):
        self.algebras = tuple(algebras)
        self.terms = {k: c for k, c in terms.items() if c}

    @property
    def field(self):
        return self.algebras[0].field

    @property
    def arity(self) -> int:
        return len(self.algebras)

    @classmethod
    def pure(cls, *elements: Element) -> "TensorElement":
        """x_1 (x) x_2 (x) ... for elements x_i."""
        terms = {(): elements[0].field.one}
        for x in elements:
            new = {}
            for k, c in terms.items():
                for m, c2 in x.terms.items():
                    new[k + (m,)] = c * c2
            terms = new
        return cls(tuple(x.algebra for x in elements), terms)

    def _check(self, other: "TensorElement"):
        if not isinstance(other, TensorElement) or other.algebras != self.algebras:
            raise AlgebraError("tensor factors do not match")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            out[k] = c if v is None else v + c
        return TensorElement(self.algebras, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorElement(self.algebras, {k: -c for k, c in self.terms.items()})

    def scale(self, c) -> "TensorElement":
        c = self.field(c)
        return TensorElement(self.algebras, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return tensor_multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.algebras == other.algebras and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        from ..pbw.algebra import mono_sort_key

        return sorted(self.terms.items(), key=lambda kc: tuple(mono_sort_key(m) for m in kc[0]))

    def legs(self, i: int) -> Element:
        """Sum over terms of the i-th leg (used when the other legs are scalars)."""
        out = {}
        for k, c in self.terms.items():
            out[k[i]] = out.get(k[i], self.field.zero) + c
        return Element(self.algebras[i], out)

    def __repr__(self):
        return f"TensorElement({self})"

    def __str__(self):
        from ..pbw.render import render_mono
        from ..qfield.render import is_compound, render_scalar

        if not self.terms:
            return "0"
        parts = []
        for k, c in self.sorted_terms():
            body = " (x) ".join(render_mono(m) for m in k)
            text = render_scalar(c)
            if text == "1":
                parts.append(body)
            else:
                parts.append(f"({text})*({body})" if is_compound(text) or text.startswith("-") else f"{text}*({body})")
        return " + ".join(parts)


def tensor_multiply(a: TensorElement, b: TensorElement) -> TensorElement:
    a._check(b)
    algs = a.algebras
    acc: dict = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            partial = {(): ca * cb}
            for alg, ma, mb in zip(algs, ka, kb):
                prod = alg.mul_mono(ma, mb)
                new = {}
                for k, c in partial.items():
                    for m, c2 in prod.items():
                        new[k + (m,)] = c * c2
                partial = new
                if not partial:
                    break
            for k, c in partial.items():
                v = acc.get(k)
                acc[k] = c if v is None else v + c
    return TensorElement(algs, acc)


def tensor_from_terms(algebras, items) -> TensorElement:
    """Accumulate (coeff, (m1, m2, ...)) pairs."""
    acc: dict = {}
    zero = algebras[0].field.zero
    for c, k in items:
        acc[k] = acc.get(k, zero) + c
    return TensorElement(algebras, acc)

