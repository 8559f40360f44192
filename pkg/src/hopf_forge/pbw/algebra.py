"""PBW normal forms and multiplication.

A PBW monomial is stored as a plain 10-tuple of integers

    (t1, t2, t3, r1, r2, rt1, rt2, s1, s2, s3)

standing for F1^t1 F12^t2 F2^t3 K1^r1 K2^r2 Kt1^rt1 Kt2^rt2 E1^s1 E12^s2 E2^s3.
The root vectors are E12 = E1 E2 - q^-1 E2 E1 and F12 = F2 F1 - q F1 F2.
The Kt slots are only used by the double crossproduct ``Dphi``.

Multiplication is driven by ``Algebra.left_mul(letter, m)``, the normal form
of a single letter times a monomial.  It is memoised per algebra.  The rules
it uses:

* inside the F block:  F2 F1 = F12 + q F1 F2,  F12 F1 = q^-1 F1 F12,
  F2 F12 = q^-1 F12 F2;
* inside the E block:  E2 E1 = q E1 E2 - q E12,  E12 E1 = q^-1 E1 E12,
  E2 E12 = q^-1 E12 E2;
* K_i x K_i^-1 = q^(A_i . wt x) x for a root vector x of weight wt x;
* e f = f e + [e, f] with the commutators
  [E1, F1] = (K1 - K1^-1)/(q - q^-1),  [E1, F12] = -K1 F2,
  [E12, F1] = -E2 K1^-1, all other pairs commuting (in ``Dphi`` the K1^-1
  above becomes Kt1^-1).

In the quotients at a root of unity every monomial with an E or F exponent
>= l is dropped and K exponents are reduced mod l; the span of such
monomials is the two-sided ideal being factored out, so dropping can
happen at any stage.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from ..qfield import GENERIC, Field, Scalar, field_for

Mono = tuple  # 10 ints, see module docstring

CARTAN = ((2, -1), (-1, 2))

KINDS = ("U", "u", "uGeq0", "uLeq0", "u1", "Dphi")
QUOTIENT_KINDS = ("u", "uGeq0", "uLeq0", "u1", "Dphi")

E_LETTERS = ("E1", "E12", "E2")
F_LETTERS = ("F1", "F12", "F2")

# weights (coefficients of alpha1, alpha2) of the root vectors
WEIGHT = {
    "E1": (1, 0),
    "E12": (1, 1),
    "E2": (0, 1),
    "F1": (-1, 0),
    "F12": (-1, -1),
    "F2": (0, -1),
}

# K-type letters: increments of (r1, r2, rt1, rt2)
K_LETTERS = {
    "K1": (1, 0, 0, 0),
    "K1^-1": (-1, 0, 0, 0),
    "K2": (0, 1, 0, 0),
    "K2^-1": (0, -1, 0, 0),
    "Kt1": (0, 0, 1, 0),
    "Kt1^-1": (0, 0, -1, 0),
    "Kt2": (0, 0, 0, 1),
    "Kt2^-1": (0, 0, 0, -1),
}

SYMBOLS = E_LETTERS + F_LETTERS + tuple(K_LETTERS)

ONE_MONO: Mono = (0,) * 10


def mono(t=(0, 0, 0), r=(0, 0), s=(0, 0, 0), rt=(0, 0)) -> Mono:
    """Build a PBW monomial from its exponent groups."""
    return (t[0], t[1], t[2], r[0], r[1], rt[0], rt[1], s[0], s[1], s[2])


def mono_parts(m: Mono) -> dict:
    return {"t": m[0:3], "r": m[3:5], "rt": m[5:7], "s": m[7:10]}


def _kq(i: int, w: Sequence[int]) -> int:
    return CARTAN[i][0] * w[0] + CARTAN[i][1] * w[1]


class AlgebraError(ValueError):
    pass


class Algebra:
    """One of U, u, uGeq0, uLeq0, u1, Dphi over a fixed coefficient field."""

    def __init__(self, kind: str, field: Field):
        if kind not in KINDS:
            raise AlgebraError(f"unknown algebra {kind!r}")
        if kind in QUOTIENT_KINDS and not field.is_root_mode():
            raise AlgebraError(f"{kind} requires root-of-unity mode")
        self.kind = kind
        self.field = field
        self.l = field.l
        self.truncated = kind in QUOTIENT_KINDS
        self.has_tilde = kind == "Dphi"
        self.symbols = self._legal_symbols()
        # which monomial slots may be nonzero
        allowed = [True] * 10
        if kind != "Dphi":
            allowed[5] = allowed[6] = False
        if kind == "uGeq0":
            allowed[0] = allowed[1] = allowed[2] = False
        if kind == "uLeq0":
            allowed[7] = allowed[8] = allowed[9] = False
        if kind == "u1":
            allowed = [i in (0, 3, 7) for i in range(10)]
        self.allowed_slots = tuple(allowed)
        q = field.q
        self._qdiff_inv = (q - field.q_pow(-1)).inverse()
        self._commutators = self._commutator_table()
        self._left_cache: dict = {}
        self._fblock_cache: dict = {}
        self._eblock_cache: dict = {}
        self._mul_cache: dict = {}

    def __repr__(self):
        mode = "generic" if self.l is None else f"l={self.l}"
        return f"Algebra({self.kind}, {mode})"

    def __reduce__(self):
        return (get_algebra, (self.kind, self.l))

    # -- legality --------------------------------------------------------------

    def _legal_symbols(self) -> frozenset:
        kind = self.kind
        ks = {"K1", "K1^-1", "K2", "K2^-1"}
        if kind == "u1":
            return frozenset({"E1", "F1", "K1", "K1^-1"})
        if kind == "uGeq0":
            return frozenset(set(E_LETTERS) | ks)
        if kind == "uLeq0":
            return frozenset(set(F_LETTERS) | ks)
        if kind == "Dphi":
            return frozenset(set(E_LETTERS) | set(F_LETTERS) | set(K_LETTERS))
        return frozenset(set(E_LETTERS) | set(F_LETTERS) | ks)

    def check_symbol(self, sym: str):
        if sym not in self.symbols:
            raise AlgebraError(f"symbol {sym!r} is not legal in {self.kind}")

    def is_legal_mono(self, m: Mono) -> bool:
        if len(m) != 10:
            return False
        for i, x in enumerate(m):
            if x and not self.allowed_slots[i]:
                return False
        for i in (0, 1, 2, 7, 8, 9):
            if m[i] < 0 or (self.truncated and m[i] >= self.l):
                return False
        if self.truncated:
            if any(not (0 <= m[i] < self.l) for i in (3, 4, 5, 6)):
                return False
        return True

    def reduce_mono(self, m: Mono) -> Mono | None:
        """Image of a monomial of U in this algebra (None if it vanishes)."""
        if not self.truncated:
            return m
        l = self.l
        if m[0] >= l or m[1] >= l or m[2] >= l or m[7] >= l or m[8] >= l or m[9] >= l:
            return None
        if 0 <= m[3] < l and 0 <= m[4] < l and 0 <= m[5] < l and 0 <= m[6] < l:
            return m
        return (m[0], m[1], m[2], m[3] % l, m[4] % l, m[5] % l, m[6] % l, m[7], m[8], m[9])

    # -- commutator table ------------------------------------------------------

    def _commutator_table(self) -> dict:
        """[e, f] = e f - f e as a list of (coefficient, word) pairs."""
        one = self.field.one
        k1inv = "Kt1^-1" if self.has_tilde else "K1^-1"
        d = self._qdiff_inv
        return {
            ("E1", "F1"): [(d, ("K1",)), (-d, (k1inv,))],
            ("E1", "F12"): [(-one, ("K1", "F2"))],
            ("E12", "F1"): [(-one, ("E2", k1inv))],
        }

    # -- block rules -----------------------------------------------------------

    def _trunc3(self, t: tuple) -> bool:
        return self.truncated and (t[0] >= self.l or t[1] >= self.l or t[2] >= self.l)

    def _f_block(self, f: str, t: tuple) -> list:
        """f * F^t as a list of (coefficient, t')."""
        key = (f, t)
        hit = self._fblock_cache.get(key)
        if hit is not None:
            return hit
        F = self.field
        t1, t2, t3 = t
        if f == "F1":
            out = [(F.one, (t1 + 1, t2, t3))]
        elif f == "F12":
            out = [(F.q_pow(-t1), (t1, t2 + 1, t3))]
        elif t1 == 0:
            out = [(F.q_pow(-t2), (0, t2, t3 + 1))]
        else:
            # F2 F1 X = F12 X + q F1 (F2 X)
            tp = (t1 - 1, t2, t3)
            acc: dict = {}
            for c, tt in self._f_block("F12", tp):
                acc[tt] = acc.get(tt, F.zero) + c
            q = F.q
            for c, tt in self._f_block("F2", tp):
                for c2, t4 in self._f_block("F1", tt):
                    acc[t4] = acc.get(t4, F.zero) + q * c * c2
            out = [(c, tt) for tt, c in acc.items() if c]
        out = [(c, tt) for c, tt in out if not self._trunc3(tt)]
        self._fblock_cache[key] = out
        return out

    def _e_block(self, e: str, s: tuple) -> list:
        """e * E^s as a list of (coefficient, s')."""
        key = (e, s)
        hit = self._eblock_cache.get(key)
        if hit is not None:
            return hit
        F = self.field
        s1, s2, s3 = s
        if e == "E1":
            out = [(F.one, (s1 + 1, s2, s3))]
        elif e == "E12":
            out = [(F.q_pow(-s1), (s1, s2 + 1, s3))]
        elif s1 == 0:
            out = [(F.q_pow(-s2), (0, s2, s3 + 1))]
        else:
            # E2 E1 X = q E1 (E2 X) - q E12 X
            sp = (s1 - 1, s2, s3)
            q = F.q
            acc: dict = {}
            for c, ss in self._e_block("E2", sp):
                for c2, s4 in self._e_block("E1", ss):
                    acc[s4] = acc.get(s4, F.zero) + q * c * c2
            for c, ss in self._e_block("E12", sp):
                acc[ss] = acc.get(ss, F.zero) - q * c
            out = [(c, ss) for ss, c in acc.items() if c]
        out = [(c, ss) for c, ss in out if not self._trunc3(ss)]
        self._eblock_cache[key] = out
        return out

    # -- single letter times monomial -----------------------------------------

    def left_mul(self, letter: str, m: Mono) -> dict:
        """Normal form of letter * m as {monomial: coefficient}; do not mutate."""
        key = (letter, m)
        hit = self._left_cache.get(key)
        if hit is None:
            hit = self._left_mul(letter, m)
            self._left_cache[key] = hit
        return hit

    def _left_mul(self, letter: str, m: Mono) -> dict:
        F = self.field
        if letter in K_LETTERS:
            d = K_LETTERS[letter]
            w = (-(m[0] + m[1]), -(m[1] + m[2]))
            e = (d[0] + d[2]) * _kq(0, w) + (d[1] + d[3]) * _kq(1, w)
            new = (m[0], m[1], m[2], m[3] + d[0], m[4] + d[1], m[5] + d[2], m[6] + d[3], m[7], m[8], m[9])
            new = self.reduce_mono(new)
            return {new: F.q_pow(e)}
        if letter in F_LETTERS:
            out = {}
            rest = m[3:]
            for c, tt in self._f_block(letter, m[0:3]):
                nm = tt + rest
                out[nm] = c
            return out
        if letter not in E_LETTERS:
            raise AlgebraError(f"unknown letter {letter!r}")
        t1, t2, t3 = m[0], m[1], m[2]
        if t1 == 0 and t2 == 0 and t3 == 0:
            w = WEIGHT[letter]
            e = -((m[3] + m[5]) * _kq(0, w) + (m[4] + m[6]) * _kq(1, w))
            sc = F.q_pow(e)
            head = m[0:7]
            return {head + ss: sc * c for c, ss in self._e_block(letter, m[7:10])}
        if t1:
            f, tp = "F1", (t1 - 1, t2, t3)
        elif t2:
            f, tp = "F12", (0, t2 - 1, t3)
        else:
            f, tp = "F2", (0, 0, t3 - 1)
        x = tp + m[3:]
        acc: dict = {}
        # e f X = f (e X) + [e, f] X
        for xm, c in self.left_mul(letter, x).items():
            for ym, c2 in self.left_mul(f, xm).items():
                v = acc.get(ym)
                acc[ym] = c * c2 if v is None else v + c * c2
        for coef, word in self._commutators.get((letter, f), ()):
            for ym, c2 in self.apply_word(word, {x: F.one}).items():
                v = acc.get(ym)
                acc[ym] = coef * c2 if v is None else v + coef * c2
        return {k: v for k, v in acc.items() if v}

    def apply_letter(self, letter: str, terms: dict) -> dict:
        acc: dict = {}
        for m, c in terms.items():
            for m2, c2 in self.left_mul(letter, m).items():
                v = acc.get(m2)
                acc[m2] = c * c2 if v is None else v + c * c2
        return {k: v for k, v in acc.items() if v}

    def apply_word(self, word: Sequence[str], terms: dict) -> dict:
        """word[0] * word[1] * ... * terms."""
        for letter in reversed(word):
            terms = self.apply_letter(letter, terms)
        return terms

    def apply_k(self, dk: tuple, terms: dict) -> dict:
        """K1^a K2^b Kt1^c Kt2^d * terms for dk = (a, b, c, d)."""
        F = self.field
        out = {}
        for m, c in terms.items():
            w = (-(m[0] + m[1]), -(m[1] + m[2]))
            e = (dk[0] + dk[2]) * _kq(0, w) + (dk[1] + dk[3]) * _kq(1, w)
            new = (m[0], m[1], m[2], m[3] + dk[0], m[4] + dk[1], m[5] + dk[2], m[6] + dk[3], m[7], m[8], m[9])
            new = self.reduce_mono(new)
            out[new] = c * F.q_pow(e)
        return out

    # -- monomial products -----------------------------------------------------

    def mul_mono(self, a: Mono, b: Mono) -> dict:
        """Normal form of the product of two PBW monomials; do not mutate."""
        key = (a, b)
        hit = self._mul_cache.get(key)
        if hit is not None:
            return hit
        terms = {b: self.field.one}
        for letter, n in (("E2", a[9]), ("E12", a[8]), ("E1", a[7])):
            for _ in range(n):
                terms = self.apply_letter(letter, terms)
        if any(a[3:7]):
            terms = self.apply_k(a[3:7], terms)
        for letter, n in (("F2", a[2]), ("F12", a[1]), ("F1", a[0])):
            for _ in range(n):
                terms = self.apply_letter(letter, terms)
        self._mul_cache[key] = terms
        return terms

    # -- element constructors -------------------------------------------------

    def element(self, terms: dict | None = None) -> "Element":
        return Element(self, terms or {})

    def one(self) -> "Element":
        return Element(self, {ONE_MONO: self.field.one})

    def zero(self) -> "Element":
        return Element(self, {})

    def scalar(self, c) -> "Element":
        c = self.field(c)
        return Element(self, {ONE_MONO: c} if c else {})

    def monomial(self, m: Mono, coeff=1) -> "Element":
        if not self.is_legal_mono(m):
            raise AlgebraError(f"monomial {m} is not legal in {self.kind}")
        c = self.field(coeff)
        return Element(self, {m: c} if c else {})

    def gen(self, sym: str) -> "Element":
        """The generator (or root vector / K letter) named ``sym``."""
        self.check_symbol(sym)
        return Element(self, dict(self.apply_letter(sym, {ONE_MONO: self.field.one})))

    def generator_names(self) -> list[str]:
        """Algebra generators (K inverses omitted)."""
        order = ["E1", "E2", "F1", "F2", "K1", "K2", "Kt1", "Kt2"]
        return [g for g in order if g in self.symbols]

    def generators(self) -> list["Element"]:
        return [self.gen(g) for g in self.generator_names()]

    def word(self, symbols: Sequence[str], coeff=1) -> "Element":
        return normal_form(symbols, self, coeff)


_ALGEBRAS: dict = {}


def get_algebra(kind: str, l: int | None = None) -> Algebra:
    """Shared algebra object for ``kind`` over Q(q) (l=None) or Q(zeta_l)."""
    key = (kind, l)
    alg = _ALGEBRAS.get(key)
    if alg is None:
        alg = Algebra(kind, field_for(l))
        _ALGEBRAS[key] = alg
    return alg


def mono_sort_key(m: Mono):
    return (m[0:3], m[3:5], m[5:7], m[7:10])


class Element:
    """Finite linear combination of PBW monomials of one algebra."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: Algebra, terms: dict):
        self.algebra = algebra
        self.terms = {m: c for m, c in terms.items() if c}

    @property
    def field(self) -> Field:
        return self.algebra.field

    def _check(self, other: "Element"):
        if other.algebra is not self.algebra:
            raise AlgebraError(f"algebra mismatch: {self.algebra} vs {other.algebra}")

    def _lift(self, other):
        if isinstance(other, Element):
            self._check(other)
            return other
        return self.algebra.scalar(other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            out[m] = c if v is None else v + c
        return Element(self.algebra, out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return Element(self.algebra, {m: -c for m, c in self.terms.items()})

    def scale(self, c) -> "Element":
        c = self.field(c)
        if not c:
            return self.algebra.zero()
        return Element(self.algebra, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of an element")
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Element):
            return other.algebra is self.algebra and self.terms == other.terms
        if isinstance(other, (int, Scalar)):
            return self == self.algebra.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.algebra.kind, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, m: Mono) -> Scalar:
        return self.terms.get(m, self.field.zero)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda mc: mono_sort_key(mc[0]))

    def __iter__(self) -> Iterator:
        return iter(self.sorted_terms())

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        from .render import render_element

        return f"Element[{self.algebra.kind}]({render_element(self)})"

    def __str__(self):
        from .render import render_element

        return render_element(self)


def multiply(a: Element, b: Element) -> Element:
    if a.algebra is not b.algebra:
        raise AlgebraError(f"algebra mismatch: {a.algebra} vs {b.algebra}")
    alg = a.algebra
    acc: dict = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            cab = ca * cb
            for m, c in alg.mul_mono(ma, mb).items():
                v = acc.get(m)
                acc[m] = cab * c if v is None else v + cab * c
    return Element(alg, acc)


def normal_form(word: Sequence[str], algebra: Algebra, coeff=1) -> Element:
    """PBW expansion of coeff * word[0] * word[1] * ... in ``algebra``."""
    for sym in word:
        algebra.check_symbol(sym)
    c = algebra.field(coeff)
    if not c:
        return algebra.zero()
    terms = algebra.apply_word(tuple(word), {ONE_MONO: c})
    return Element(algebra, terms)


def linear_combination(algebra: Algebra, items: Iterable) -> Element:
    """Sum of coeff * word for (coeff, word) pairs."""
    out = algebra.zero()
    for c, w in items:
        out = out + normal_form(w, algebra, c)
    return out
