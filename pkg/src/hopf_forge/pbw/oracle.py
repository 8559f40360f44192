"""Naive reference normal form, used only to cross-check the engine.

Works directly from the defining relations on raw words in E1, E2, F1, F2
and the K letters:

* E_i F_j -> F_j E_i + delta_ij delta_i1 (K1 - K1^-1)/(q - q^-1)
* E_i K -> q^(..) K E_i,   K F_i -> q^(..) F_i K,   K letters sorted/cancelled
* Serre relations used as E2 E1 E1 -> [2] E1 E2 E1 - E1 E1 E2 and
  E2 E2 E1 -> [2] E2 E1 E2 - E1 E2 E2 (same for F)

Irreducible words have the shape (F word)(K word)(E word).  The E and F
words are then rewritten in the PBW basis by solving, for every bidegree,
the linear system obtained by expanding the PBW monomials (with E12, F12
replaced by their definitions) into reduced words.
"""
from __future__ import annotations

from itertools import product as iproduct
from typing import Sequence

from ..qfield import Matrix, q_int
from .algebra import CARTAN, K_LETTERS, Algebra, Element

MAX_LETTERS = 12

_K_ORDER = ("K1", "K1^-1", "K2", "K2^-1", "Kt1", "Kt1^-1", "Kt2", "Kt2^-1")
_K_RANK = {k: i for i, k in enumerate(_K_ORDER)}
_INVERSE = {"K1": "K1^-1", "K1^-1": "K1", "K2": "K2^-1", "K2^-1": "K2",
            "Kt1": "Kt1^-1", "Kt1^-1": "Kt1", "Kt2": "Kt2^-1", "Kt2^-1": "Kt2"}


class OracleError(ValueError):
    pass


def _index(letter: str) -> int:
    return 0 if letter[-1] == "1" else 1


def _k_info(letter: str) -> tuple[int, int]:
    """(vertex index, sign) of a K letter."""
    d = K_LETTERS[letter]
    if d[0] or d[2]:
        return 0, d[0] + d[2]
    return 1, d[1] + d[3]


class Oracle:
    def __init__(self, algebra: Algebra):
        self.algebra = algebra
        self.field = algebra.field
        f = self.field
        self.qdiff_inv = (f.q - f.q_pow(-1)).inverse()
        self.two = q_int(2, f)
        self._reduce_cache: dict = {}
        self._basis_cache: dict = {}

    # -- word rewriting --------------------------------------------------------

    def _rewrite(self, w: tuple):
        """Apply one rule at the leftmost reducible position, or return None."""
        f = self.field
        n = len(w)
        for i in range(n - 1):
            a, b = w[i], w[i + 1]
            ka, kb = a in K_LETTERS, b in K_LETTERS
            if a[0] == "E" and b[0] == "F":
                out = [(f.one, w[:i] + (b, a) + w[i + 2:])]
                if a == "E1" and b == "F1":
                    kinv = "Kt1^-1" if self.algebra.has_tilde else "K1^-1"
                    out.append((self.qdiff_inv, w[:i] + ("K1",) + w[i + 2:]))
                    out.append((-self.qdiff_inv, w[:i] + (kinv,) + w[i + 2:]))
                return out
            if a[0] == "E" and kb:
                j, sign = _k_info(b)
                e = -sign * CARTAN[_index(a)][j]
                return [(f.q_pow(e), w[:i] + (b, a) + w[i + 2:])]
            if ka and b[0] == "F":
                j, sign = _k_info(a)
                e = -sign * CARTAN[_index(b)][j]
                return [(f.q_pow(e), w[:i] + (b, a) + w[i + 2:])]
            if ka and kb:
                if _INVERSE[a] == b:
                    return [(f.one, w[:i] + w[i + 2:])]
                if _K_RANK[a] > _K_RANK[b]:
                    return [(f.one, w[:i] + (b, a) + w[i + 2:])]
            if i + 2 < n:
                c = w[i + 2]
                for x in ("E", "F"):
                    one, two = x + "1", x + "2"
                    if (a, b, c) == (two, one, one):
                        return [(self.two, w[:i] + (one, two, one) + w[i + 3:]),
                                (-f.one, w[:i] + (one, one, two) + w[i + 3:])]
                    if (a, b, c) == (two, two, one):
                        return [(self.two, w[:i] + (two, one, two) + w[i + 3:]),
                                (-f.one, w[:i] + (one, two, two) + w[i + 3:])]
        return None

    def reduce_word(self, w: tuple) -> dict:
        """Fully reduced form of a raw word as {irreducible word: coeff}."""
        hit = self._reduce_cache.get(w)
        if hit is not None:
            return hit
        step = self._rewrite(w)
        if step is None:
            out = {w: self.field.one}
        else:
            out = {}
            for c, w2 in step:
                for w3, c3 in self.reduce_word(w2).items():
                    v = out.get(w3)
                    out[w3] = c * c3 if v is None else v + c * c3
            out = {k: v for k, v in out.items() if v}
        self._reduce_cache[w] = out
        return out

    # -- PBW conversion for E and F runs --------------------------------------

    def _expand_root_word(self, x: str, exps: Sequence[int]) -> dict:
        """Raw-word expansion of x1^a x12^b x2^c (x = 'E' or 'F')."""
        f = self.field
        one, two = x + "1", x + "2"
        if x == "E":
            # E12 = E1 E2 - q^-1 E2 E1
            root = {(one, two): f.one, (two, one): -f.q_pow(-1)}
        else:
            # F12 = F2 F1 - q F1 F2
            root = {(two, one): f.one, (one, two): -f.q}
        terms = {(one,) * exps[0]: f.one}
        for _ in range(exps[1]):
            new = {}
            for w, c in terms.items():
                for r, c2 in root.items():
                    new[w + r] = new.get(w + r, f.zero) + c * c2
            terms = new
        terms = {w + (two,) * exps[2]: c for w, c in terms.items()}
        out = {}
        for w, c in terms.items():
            for w2, c2 in self.reduce_word(w).items():
                out[w2] = out.get(w2, f.zero) + c * c2
        return {k: v for k, v in out.items() if v}

    def _basis_change(self, x: str, deg: tuple[int, int]):
        """Map reduced word -> {PBW exponent triple: coeff} for one bidegree."""
        key = (x, deg)
        hit = self._basis_cache.get(key)
        if hit is not None:
            return hit
        n1, n2 = deg
        pbw = [(n1 - b, b, n2 - b) for b in range(min(n1, n2) + 1)]
        expansions = [self._expand_root_word(x, e) for e in pbw]
        words = sorted({w for ex in expansions for w in ex})
        if len(words) != len(pbw):
            raise OracleError(f"reduced words and PBW monomials differ in number at {deg}")
        f = self.field
        widx = {w: i for i, w in enumerate(words)}
        mat = Matrix.zeros(f, len(words), len(pbw))
        for j, ex in enumerate(expansions):
            for w, c in ex.items():
                mat.rows[widx[w]][j] = c
        inv = mat.inverse()
        table = {}
        for w, i in widx.items():
            table[w] = {pbw[p]: inv.rows[p][i] for p in range(len(pbw)) if inv.rows[p][i]}
        self._basis_cache[key] = table
        return table

    def _run_to_pbw(self, x: str, run: tuple) -> dict:
        if not run:
            return {(0, 0, 0): self.field.one}
        deg = (run.count(x + "1"), run.count(x + "2"))
        return self._basis_change(x, deg)[run]

    # -- entry point -----------------------------------------------------------

    def normal_form(self, word: Sequence[str], coeff=1) -> Element:
        alg = self.algebra
        f = self.field
        for sym in word:
            alg.check_symbol(sym)
        raw: dict = {(): f(coeff)}
        letters = 0
        for sym in word:
            if sym == "E12":
                pieces = {("E1", "E2"): f.one, ("E2", "E1"): -f.q_pow(-1)}
            elif sym == "F12":
                pieces = {("F2", "F1"): f.one, ("F1", "F2"): -f.q}
            else:
                pieces = {(sym,): f.one}
            letters += len(next(iter(pieces)))
            raw = {w + p: c * c2 for w, c in raw.items() for p, c2 in pieces.items()}
        if letters > MAX_LETTERS:
            raise OracleError(f"word too long for the oracle ({letters} > {MAX_LETTERS} letters)")
        reduced: dict = {}
        for w, c in raw.items():
            for w2, c2 in self.reduce_word(w).items():
                reduced[w2] = reduced.get(w2, f.zero) + c * c2
        out: dict = {}
        for w, c in reduced.items():
            if not c:
                continue
            frun = tuple(x for x in w if x[0] == "F")
            erun = tuple(x for x in w if x[0] == "E")
            kvec = [0, 0, 0, 0]
            for x in w:
                if x in K_LETTERS:
                    kvec = [a + b for a, b in zip(kvec, K_LETTERS[x])]
            for t, ct in self._run_to_pbw("F", frun).items():
                for s, cs in self._run_to_pbw("E", erun).items():
                    m = alg.reduce_mono((t[0], t[1], t[2], kvec[0], kvec[1], kvec[2], kvec[3], s[0], s[1], s[2]))
                    if m is None:
                        continue
                    out[m] = out.get(m, f.zero) + c * ct * cs
        return Element(alg, out)


_ORACLES: dict = {}


def oracle_normal_form(word: Sequence[str], algebra: Algebra, coeff=1) -> Element:
    orc = _ORACLES.get(id(algebra))
    if orc is None or orc.algebra is not algebra:
        orc = Oracle(algebra)
        _ORACLES[id(algebra)] = orc
    return orc.normal_form(word, coeff)


def all_words(letters: Sequence[str], max_len: int):
    for n in range(max_len + 1):
        yield from iproduct(letters, repeat=n)
