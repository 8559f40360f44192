"""The skew Hopf pairing between the Borel quotients uGeq0 and uLeq0.

Generator values:

    phi(K_i, K_j^(+-1)) = q^(+-a_ij),  phi(E_i, F_j) = delta_ij delta_i1 * c,
    phi(E_i, K) = phi(K, F_j) = 0,     phi(1, y) = eps(y)

where c = 1/(q^2 - 1) (``normalization="printed"``) or c = 1/(q - q^-1)
(``normalization="symmetric"``).

General values come from the recursion phi(x' g, y) = sum phi(x', y1) phi(g, y2)
that splits off the last generator g of the left argument, and
phi(E_i, w h) = phi(K_i, h) phi(E_i, w) + phi(E_i, h) eps(w) for words in the
right argument.  With ``prune=True`` terms whose degrees cannot match are
skipped before recursing.
"""
from __future__ import annotations

from ..pbw import ONE_MONO, Element, get_algebra
from ..pbw.algebra import CARTAN
from ..qfield import Scalar
from .coproduct import antipode, counit_mono, delta_mono

NORMALIZATIONS = ("printed", "symmetric")


def _y_grade(m) -> tuple[int, int]:
    return (m[0] + m[1], m[1] + m[2])


def _x_grade(m) -> tuple[int, int]:
    return (m[7] + m[8], m[8] + m[9])


class SkewPairing:
    def __init__(self, l: int, normalization: str = "printed"):
        if normalization not in NORMALIZATIONS:
            raise ValueError(f"normalization must be one of {NORMALIZATIONS}")
        self.l = l
        self.normalization = normalization
        self.plus = get_algebra("uGeq0", l)
        self.minus = get_algebra("uLeq0", l)
        f = self.field = self.plus.field
        q = f.q
        if normalization == "printed":
            self.c1 = (q * q - 1).inverse()
        else:
            self.c1 = (q - q.inverse()).inverse()
        self._cache: dict = {}
        self._gen_cache: dict = {}

    def __repr__(self):
        return f"SkewPairing(l={self.l}, normalization={self.normalization!r})"

    # -- generator level -----------------------------------------------------

    def _y_word(self, y) -> list[tuple[Scalar, tuple]]:
        """Generator-word expansion of a uLeq0 monomial F^t K^r."""
        f = self.field
        words = [(f.one, ())]
        for _ in range(y[0]):
            words = [(c, w + ("F1",)) for c, w in words]
        for _ in range(y[1]):
            # F12 = F2 F1 - q F1 F2
            words = [(c, w + ("F2", "F1")) for c, w in words] + [(-f.q * c, w + ("F1", "F2")) for c, w in words]
        for _ in range(y[2]):
            words = [(c, w + ("F2",)) for c, w in words]
        ks = ("K1",) * y[3] + ("K2",) * y[4]
        return [(c, w + ks) for c, w in words]

    def _k_on_letter(self, i: int, h: str) -> Scalar:
        """phi(K_i, h) for a generator letter h of uLeq0."""
        if h[0] == "F":
            return self.field.zero
        j = int(h[1]) - 1
        return self.field.q_pow(CARTAN[i][j])

    def _e_on_word(self, i: int, w: tuple) -> Scalar:
        """phi(E_{i+1}, w) for a generator word w."""
        f = self.field
        if not w:
            return f.zero
        *head, h = w
        head = tuple(head)
        val = self._k_on_letter(i, h) * self._e_on_word(i, head)
        if h[0] == "F" and int(h[1]) - 1 == i and i == 0 and all(x[0] == "K" for x in head):
            val = val + self.c1
        return val

    def generator_value(self, g: str, y) -> Scalar:
        """phi(g, y) for g in {E1, E2} and a uLeq0 monomial y."""
        key = (g, y)
        hit = self._gen_cache.get(key)
        if hit is not None:
            return hit
        i = int(g[1]) - 1
        total = self.field.zero
        for c, w in self._y_word(y):
            total = total + c * self._e_on_word(i, w)
        self._gen_cache[key] = total
        return total

    def _k_value(self, x, y) -> Scalar:
        """phi(K^r, y)."""
        f = self.field
        if y[0] or y[1] or y[2]:
            # phi(K^r, f y') = phi(K^r, y') phi(K^r, f) and phi(K, F_j) = 0
            return f.zero
        e = 0
        for i, ri in enumerate(x[3:5]):
            for j, rj in enumerate(y[3:5]):
                e += ri * rj * CARTAN[i][j]
        return f.q_pow(e)

    # -- general values --------------------------------------------------------

    def mono(self, x, y, prune: bool = True) -> Scalar:
        key = (x, y, prune)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        val = self._mono(x, y, prune)
        self._cache[key] = val
        return val

    def _mono(self, x, y, prune: bool) -> Scalar:
        f = self.field
        if prune and _x_grade(x) != _y_grade(y):
            return f.zero
        if x == ONE_MONO:
            return f.one if counit_mono(y) else f.zero
        s1, s2, s3 = x[7], x[8], x[9]
        if not (s1 or s2 or s3):
            return self._k_value(x, y)
        if s3:
            return self._split(Element(self.plus, {x[:9] + (s3 - 1,): f.one}), "E2", y, prune)
        if s2:
            base = Element(self.plus, {x[:8] + (s2 - 1, 0): f.one})
            # x = base E12 = base E1 E2 - q^-1 base E2 E1
            p = base * self.plus.gen("E1")
            r = base * self.plus.gen("E2")
            return self._split(p, "E2", y, prune) - f.q.inverse() * self._split(r, "E1", y, prune)
        return self._split(Element(self.plus, {x[:7] + (s1 - 1, 0, 0): f.one}), "E1", y, prune)

    def _split(self, xp: Element, g: str, y, prune: bool) -> Scalar:
        """phi(xp * g, y) = sum phi(xp, y1) phi(g, y2)."""
        f = self.field
        gdeg = (1, 0) if g == "E1" else (0, 1)
        total = f.zero
        for (y1, y2), c in delta_mono(self.minus, y).terms.items():
            if prune and _y_grade(y2) != gdeg:
                continue
            gv = self.generator_value(g, y2)
            if not gv:
                continue
            inner = f.zero
            for m, cm in xp.terms.items():
                v = self.mono(m, y1, prune)
                if v:
                    inner = inner + cm * v
            if inner:
                total = total + c * gv * inner
        return total

    # -- bilinear extension ---------------------------------------------------

    def __call__(self, x: Element, y: Element, prune: bool = True) -> Scalar:
        return self.pair(x, y, prune)

    def pair(self, x: Element, y: Element, prune: bool = True) -> Scalar:
        if x.algebra is not self.plus or y.algebra is not self.minus:
            raise ValueError(f"pairing needs (uGeq0, uLeq0) elements at l={self.l}")
        total = self.field.zero
        for mx, cx in x.terms.items():
            for my, cy in y.terms.items():
                v = self.mono(mx, my, prune)
                if v:
                    total = total + cx * cy * v
        return total

    def inverse(self, x: Element, y: Element) -> Scalar:
        """phi^-1(x, y) = phi(S(x), y)."""
        return self.pair(antipode(x), y)

    def inverse_mono(self, x, y) -> Scalar:
        key = ("inv", x, y)
        hit = self._cache.get(key)
        if hit is None:
            hit = self.inverse(Element(self.plus, {x: self.field.one}), Element(self.minus, {y: self.field.one}))
            self._cache[key] = hit
        return hit


_PAIRINGS: dict = {}


def get_pairing(l: int, normalization: str = "printed") -> SkewPairing:
    key = (l, normalization)
    p = _PAIRINGS.get(key)
    if p is None:
        p = SkewPairing(l, normalization)
        _PAIRINGS[key] = p
    return p


def pairing(x: Element, y: Element, normalization: str = "printed") -> Scalar:
    return get_pairing(x.algebra.l, normalization).pair(x, y)


def pairing_inverse(x: Element, y: Element, normalization: str = "printed") -> Scalar:
    return get_pairing(x.algebra.l, normalization).inverse(x, y)





def axiom_failures(p: SkewPairing, xs, ys, limit: int = 10) -> list[str]:
    """Check the skew pairing axioms with one factor a generator.

    phi(g b, y) = sum phi(g, y1) phi(b, y2) and phi(a, h y) = sum phi(a1, y) phi(a2, h)
    for generators g, h and monomials b, a in ``xs``, y in ``ys``, plus the unit
    conditions.  By induction on length this covers all products.
    """
    f = p.field
    out: list[str] = []
    plus_gens = {n: p.plus.gen(n) for n in ("E1", "E2", "K1", "K2")}
    minus_gens = {n: p.minus.gen(n) for n in ("F1", "F2", "K1", "K2")}
    deltas_y = {y: delta_mono(p.minus, y).terms for y in ys}
    deltas_x = {x: delta_mono(p.plus, x).terms for x in xs}

    def val(el: Element, y) -> Scalar:
        total = f.zero
        for m, c in el.terms.items():
            v = p.mono(m, y)
            if v:
                total = total + c * v
        return total

    for x in xs:
        if p.mono(x, ONE_MONO) != (f.one if counit_mono(x) else f.zero):
            out.append(f"phi({x}, 1) != eps")
    for y in ys:
        if p.mono(ONE_MONO, y) != (f.one if counit_mono(y) else f.zero):
            out.append(f"phi(1, {y}) != eps")
    for gname, g in plus_gens.items():
        for b in xs:
            gb = g * Element(p.plus, {b: f.one})
            for y in ys:
                rhs = f.zero
                for (y1, y2), c in deltas_y[y].items():
                    v = val(g, y1)
                    if v:
                        w = p.mono(b, y2)
                        if w:
                            rhs = rhs + c * v * w
                if val(gb, y) != rhs:
                    out.append(f"phi({gname} * {b}, {y})")
                    if len(out) >= limit:
                        return out
    for hname, h in minus_gens.items():
        for y in ys:
            hy = h * Element(p.minus, {y: f.one})
            for a in xs:
                rhs = f.zero
                for (a1, a2), c in deltas_x[a].items():
                    v = p.mono(a1, y)
                    if v:
                        w = p.pair(Element(p.plus, {a2: f.one}), h)
                        if w:
                            rhs = rhs + c * v * w
                if p.pair(Element(p.plus, {a: f.one}), hy) != rhs:
                    out.append(f"phi({a}, {hname} * {y})")
                    if len(out) >= limit:
                        return out
    return out

__all__ = ["NORMALIZATIONS", "SkewPairing", "axiom_failures", "get_pairing", "pairing", "pairing_inverse"]
