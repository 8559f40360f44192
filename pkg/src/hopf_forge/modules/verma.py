"""Verma modules M(lambda) of U as exact, finitely supported vectors.

A vector is a finite sum of c * F1^t1 F12^t2 F2^t3 v keyed by (t1, t2, t3).
Acting with a letter straightens letter * F^t in U, drops every term with
an E part (E_i v = 0) and evaluates the K part on v through lambda.
Nothing is ever truncated: the filtration quotients M(lambda, n) are
handled by dropping the span t2 + t3 >= n + 1, which is a submodule.
"""
from __future__ import annotations

from ..pbw import get_algebra
from ..pbw.algebra import Algebra
from ..qfield import Matrix, Scalar, q_binomial, q_binomial_a, q_bracket_a, q_factorial, q_int
from .character import Character, signed_q_power

_FREE_LETTERS = ("F1", "F12", "F2")


def _algebra_for(char: Character) -> Algebra:
    return get_algebra("U", char.field.l if char.field.is_root_mode() else None)


class FreeVermaVector:
    __slots__ = ("char", "coeffs")

    def __init__(self, char: Character, coeffs: dict):
        self.char = char
        self.coeffs = {t: c for t, c in coeffs.items() if c}

    @classmethod
    def highest(cls, char: Character) -> "FreeVermaVector":
        return cls(char, {(0, 0, 0): char.field.one})

    @classmethod
    def basis(cls, char: Character, t) -> "FreeVermaVector":
        return cls(char, {tuple(t): char.field.one})

    @property
    def field(self):
        return self.char.field

    def _check(self, other):
        if not isinstance(other, FreeVermaVector) or other.char != self.char:
            raise ValueError("vectors of different Verma modules")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for t, c in other.coeffs.items():
            v = out.get(t)
            out[t] = c if v is None else v + c
        return FreeVermaVector(self.char, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "FreeVermaVector":
        c = self.field(c)
        return FreeVermaVector(self.char, {t: c * v for t, v in self.coeffs.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, FreeVermaVector):
            return NotImplemented
        return self.char == other.char and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def weights(self) -> set:
        """Set of weight indices (i, j) = (t1 + t2, t2 + t3) in the support."""
        return {(t[0] + t[1], t[1] + t[2]) for t in self.coeffs}

    def truncate(self, n: int) -> "FreeVermaVector":
        """Image modulo M[lambda, n + 1] (drop t2 + t3 >= n + 1)."""
        return FreeVermaVector(self.char, {t: c for t, c in self.coeffs.items() if t[1] + t[2] <= n})

    def __repr__(self):
        return f"FreeVermaVector({self})"

    def __str__(self):
        from ..pbw.render import render_mono
        from ..qfield.render import is_compound, render_scalar

        if not self.coeffs:
            return "0"
        parts = []
        for t, c in sorted(self.coeffs.items()):
            m = render_mono(t + (0,) * 7)
            body = "v" if m == "1" else f"{m}*v"
            text = render_scalar(c)
            if text == "1":
                parts.append(body)
            elif is_compound(text) or text.startswith("-"):
                parts.append(f"({text})*{body}")
            else:
                parts.append(f"{text}*{body}")
        return " + ".join(parts)


def verma_act(g: str, w: FreeVermaVector) -> FreeVermaVector:
    """g . w for a letter g (E1, E2, E12, F1, F2, F12, K1, K2 or a K inverse)."""
    alg = _algebra_for(w.char)
    alg.check_symbol(g)
    l1, l2 = w.char.l1, w.char.l2
    acc: dict = {}
    for t, c in w.coeffs.items():
        for m, c2 in alg.left_mul(g, t + (0,) * 7).items():
            if m[7] or m[8] or m[9]:
                continue
            val = c * c2 * l1 ** m[3] * l2 ** m[4]
            key = m[:3]
            v = acc.get(key)
            acc[key] = val if v is None else v + val
    return FreeVermaVector(w.char, acc)


def verma_act_word(word, w: FreeVermaVector) -> FreeVermaVector:
    """word[0] word[1] ... . w"""
    for g in reversed(word):
        w = verma_act(g, w)
    return w


def _require_generic(char: Character):
    if char.field.is_root_mode():
        raise ValueError("this construction assumes q is not a root of unity")


def hw_vector_vn(char: Character, n: int) -> FreeVermaVector:
    """v_n = sum_i a_i F1^i F2^i F12^(n-i) v with

    a_i = q^-(n-i) l1^-(n-i) [n-i]! [n choose n-i] [l1; 1 choose n-i].
    """
    _require_generic(char)
    if n < 0:
        raise ValueError("n must be >= 0")
    f = char.field
    l1 = char.l1
    total = FreeVermaVector(char, {})
    for i in range(n + 1):
        k = n - i
        a = f.q_pow(-k) * l1 ** (-k) * q_factorial(k, f) * q_binomial(n, k, f) * q_binomial_a(l1, 1, k)
        if not a:
            continue
        word = ["F1"] * i + ["F2"] * i + ["F12"] * k
        total = total + verma_act_word(word, FreeVermaVector.highest(char)).scale(a)
    return total


def is_weight_vector(w: FreeVermaVector) -> bool:
    if w.is_zero():
        raise ValueError("the zero vector has no weight")
    t0 = next(iter(w.coeffs))
    for k in ("K1", "K2"):
        kw = verma_act(k, w)
        c = kw.coeffs.get(t0, w.field.zero) / w.coeffs[t0]
        if kw != w.scale(c):
            return False
    return True


def check_highest_weight(w: FreeVermaVector) -> bool:
    """E1 w = E2 w = 0 and w is a weight vector."""
    if w.is_zero():
        raise ValueError("the zero vector is not a highest weight vector")
    return verma_act("E1", w).is_zero() and verma_act("E2", w).is_zero() and is_weight_vector(w)


def weight_of_index(char: Character, i: int, j: int) -> Character:
    """Weight (q^(-2i+j) l1, q^(i-2j) l2) of the (i, j) weight space."""
    return char.shift(-2 * i + j, i - 2 * j)


def weight_space_monomials(i: int, j: int) -> list[tuple[int, int, int]]:
    return [(i - t2, t2, j - t2) for t2 in range(min(i, j) + 1)]


def _coords(vectors, basis) -> list[list[Scalar]]:
    index = {t: k for k, t in enumerate(basis)}
    rows = []
    for v in vectors:
        row = [v.field.zero] * len(basis)
        for t, c in v.coeffs.items():
            row[index[t]] = c
        rows.append(row)
    return rows


def weight_space_basis_vectors(char: Character, i: int, j: int) -> list[FreeVermaVector]:
    """F1^(i-s) F2^(j-s) v_s for s = 0..min(i, j)."""
    out = []
    for s in range(min(i, j) + 1):
        out.append(verma_act_word(["F1"] * (i - s) + ["F2"] * (j - s), hw_vector_vn(char, s)))
    return out


def weight_space_dimension(char: Character, i: int, j: int) -> int:
    """Rank of {F1^(i-s) F2^(j-s) v_s} inside the (i, j) weight space."""
    vecs = weight_space_basis_vectors(char, i, j)
    basis = weight_space_monomials(i, j)
    for v in vecs:
        if not v.weights() <= {(i, j)}:
            raise AssertionError("vector left its weight space")
    return Matrix(char.field, _coords(vecs, basis), len(basis)).rank()


# -- filtration components ------------------------------------------------------


def filtration_character(char: Character, t2: int, t3: int) -> Character:
    """lambda' = (q^(t3-t2) l1, q^(-t2-2t3) l2)."""
    return char.shift(t3 - t2, -t2 - 2 * t3)


def check_filtration_component(char: Character, t2: int, t3: int, window: int = 6) -> bool:
    """Check that u_i -> F1^i F2^t3 pi_n(v_t2), i <= window, intertwines V(lambda') with M(lambda, n).

    Actions of E1, E2, F1, F2, K1, K2 are compared modulo M[lambda, n + 1].
    """
    _require_generic(char)
    n = t2 + t3
    lp = filtration_character(char, t2, t3)
    f = char.field
    base = verma_act_word(["F2"] * t3, hw_vector_vn(char, t2)).truncate(n)
    images = [base]
    for _ in range(window + 1):
        images.append(verma_act("F1", images[-1]).truncate(n))
    zero = FreeVermaVector(char, {})
    for i in range(window + 1):
        u = images[i]
        if u.is_zero():
            return False
        expect = {
            "K1": u.scale(lp.l1 * f.q_pow(-2 * i)),
            "K2": u.scale(lp.l2 * f.q_pow(i)),
            "F1": images[i + 1],
            "E1": images[i - 1].scale(q_int(i, f) * q_bracket_a(lp.l1, 1 - i)) if i else zero,
            "E2": zero,
            "F2": zero,
        }
        for g, want in expect.items():
            if verma_act(g, u).truncate(n) != want:
                return False
    return True


# -- vectors killed by E1 ---------------------------------------------------------


def kernel_of_E1_in_verma(char: Character, cap: int = 6) -> dict:
    """Kernel of E1 on every weight space (i, j) with i + j <= cap.

    Returns a report with, per weight, the kernel dimension, the predicted
    family members (k = t2 of F1^a F2^t3 v_k) and whether the kernel equals
    their span.  The two families are F2^t3 v_t2, and F1^(m1+t3-t2+1) F2^t3 v_t2
    when l1 = +-q^m1 and m1 + t3 - t2 >= 0.
    """
    _require_generic(char)
    f = char.field
    sq = signed_q_power(char.l1, -4 * cap - 4, 4 * cap + 4)
    m1 = sq[1] if sq else None
    per_weight = {}
    ok = True
    for total in range(cap + 1):
        for i in range(total + 1):
            j = total - i
            basis = weight_space_monomials(i, j)
            target = weight_space_monomials(i - 1, j) if i else []
            if target:
                cols = []
                for t in basis:
                    img = verma_act("E1", FreeVermaVector.basis(char, t))
                    cols.append(_coords([img], target)[0])
                mat = Matrix(f, [list(r) for r in zip(*cols)], len(basis))
                ker = mat.kernel()
            else:
                ker = [[f.one if a == b else f.zero for a in range(len(basis))] for b in range(len(basis))]
            predicted = []
            bvecs = weight_space_basis_vectors(char, i, j)
            for k in range(min(i, j) + 1):
                a, t3 = i - k, j - k
                if a == 0:
                    predicted.append(k)
                elif m1 is not None and m1 + t3 - k >= 0 and a == m1 + t3 - k + 1:
                    predicted.append(k)
            pred_rows = _coords([bvecs[k] for k in predicted], basis)
            r_ker = Matrix(f, ker, len(basis)).rank() if ker else 0
            r_pred = Matrix(f, pred_rows, len(basis)).rank() if pred_rows else 0
            r_both = Matrix(f, ker + pred_rows, len(basis)).rank() if ker or pred_rows else 0
            same = r_ker == r_pred == r_both
            ok = ok and same
            if ker or predicted:
                per_weight[(i, j)] = {"kernel_dim": r_ker, "predicted": predicted, "agrees": same}
    return {"m1": m1, "weights": per_weight, "agrees": ok}


def v_reducibility_witness(l1: Scalar, j_max: int = 8) -> list[int]:
    """The j in 1..j_max where the E1 coefficient [j][l1; 1-j] of V(lambda) vanishes."""
    f = l1.field
    return [j for j in range(1, j_max + 1) if (q_int(j, f) * q_bracket_a(l1, 1 - j)).is_zero()]


# -- the maximal submodule J(lambda) ----------------------------------------------


def _e_words(i: int, j: int):
    """All words with i letters E1 and j letters E2."""
    if i == 0 and j == 0:
        yield []
        return
    if i:
        for w in _e_words(i - 1, j):
            yield ["E1"] + w
    if j:
        for w in _e_words(i, j - 1):
            yield ["E2"] + w


def in_maximal_submodule(w: FreeVermaVector) -> bool:
    """Whether w lies in J(lambda), the largest submodule missing v.

    A weight component at index (i, j) is in J(lambda) iff every E-word of
    weight (i, j) sends it to 0 (the image lands on the line of v).
    """
    by_weight: dict = {}
    for t, c in w.coeffs.items():
        key = (t[0] + t[1], t[1] + t[2])
        by_weight.setdefault(key, {})[t] = c
    for (i, j), coeffs in by_weight.items():
        comp = FreeVermaVector(w.char, coeffs)
        for word in _e_words(i, j):
            if not verma_act_word(word, comp).is_zero():
                return False
    return True


# -- intertwiners between the V(lambda) on a window ---------------------------------


def _v_e1(char: Character, j: int) -> Scalar:
    return q_int(j, char.field) * q_bracket_a(char.l1, 1 - j)


def window_intertwiners(lam: Character, mu: Character, window: int = 4) -> int:
    """Dimension of the maps u_i -> sum c_ij u'_j (i, j <= window) from V(lambda) to V(mu)

    commuting with K1, K2, F1 and E1 wherever both sides stay inside the window.
    E2 and F2 act by 0 on both sides.
    """
    if lam.field is not mu.field:
        raise ValueError("characters over different fields")
    f = lam.field
    n = window + 1
    idx = lambda i, j: i * n + j  # noqa: E731
    rows = []

    def eq(pairs):
        row = [f.zero] * (n * n)
        for k, c in pairs:
            row[k] = row[k] + c
        rows.append(row)

    for i in range(n):
        for j in range(n):
            for a, b in ((lam.l1 * f.q_pow(-2 * i), mu.l1 * f.q_pow(-2 * j)), (lam.l2 * f.q_pow(i), mu.l2 * f.q_pow(j))):
                if a != b:
                    eq([(idx(i, j), f.one)])
    for i in range(n - 1):
        # f(F1 u_i) = F1 f(u_i), compared on u'_0 .. u'_window
        eq([(idx(i + 1, 0), f.one)])
        for j in range(1, n):
            eq([(idx(i + 1, j), f.one), (idx(i, j - 1), -f.one)])
    for i in range(1, n):
        # f(E1 u_i) = E1 f(u_i), compared on u'_0 .. u'_(window-1)
        for k in range(n - 1):
            eq([(idx(i - 1, k), _v_e1(lam, i)), (idx(i, k + 1), -_v_e1(mu, k + 1))])
    return n * n - Matrix(f, rows, n * n).rank()
