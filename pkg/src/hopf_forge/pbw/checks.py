"""Structural checks on the algebras: centrality, gradings, bases, relations."""
from __future__ import annotations

from itertools import product as iproduct
from typing import Iterator

from ..qfield import Scalar, q_binomial
from .algebra import CARTAN, Algebra, AlgebraError, Element, Mono, normal_form


def central_check(x: Element) -> bool:
    """True iff x commutes with every generator of its algebra."""
    for g in x.algebra.generators():
        if x * g != g * x:
            return False
    return True


def grade(m: Mono, algebra: Algebra) -> tuple[int, int]:
    """Degree (coefficients of alpha1, alpha2) of a Borel monomial."""
    if algebra.kind in ("uGeq0",):
        s = m[7:10]
    elif algebra.kind in ("uLeq0",):
        s = m[0:3]
    else:
        raise AlgebraError("grade is defined on the Borel subalgebras uGeq0 and uLeq0")
    return (s[0] + s[1], s[1] + s[2])


def element_grades(x: Element) -> set:
    return {grade(m, x.algebra) for m in x.terms}


def enumerate_basis(algebra: Algebra, cap: int | None = None) -> tuple[int, Iterator[Mono]]:
    """All PBW monomials of a finite algebra (or of U inside an exponent box).

    For U the box is 0 <= t_i, s_i <= cap and -cap <= r_j <= cap.
    """
    if algebra.truncated:
        l = algebra.l
        ranges = [range(l) if ok else range(1) for ok in algebra.allowed_slots]
    else:
        if cap is None:
            raise AlgebraError("U is infinite dimensional: pass an exponent cap")
        ranges = []
        for i, ok in enumerate(algebra.allowed_slots):
            if not ok:
                ranges.append(range(1))
            elif i in (3, 4):
                ranges.append(range(-cap, cap + 1))
            else:
                ranges.append(range(cap + 1))
    count = 1
    for r in ranges:
        count *= len(r)
    return count, iproduct(*ranges)


# -- braiding of root vectors -------------------------------------------------

# root vectors as multisets of vertices of the A2 x A2 datum
_ROOT_VERTICES = {
    "E1": (1,),
    "E12": (1, 2),
    "E2": (2,),
    "F1": (3,),
    "F12": (3, 4),
    "F2": (4,),
}


def _chi_exponent(j: int, i: int) -> int:
    """Exponent e with chi_j(g_i) = q^e; g3 = g1, g4 = g2, chi3 = chi1^-1, chi4 = chi2^-1."""
    gi = i if i <= 2 else i - 2
    if j <= 2:
        return CARTAN[gi - 1][j - 1]
    return -CARTAN[gi - 1][j - 3]


def braiding_exponent(alpha: str, beta: str) -> int:
    """e with q_{alpha beta} = chi_beta(g_alpha) = q^e."""
    try:
        va, vb = _ROOT_VERTICES[alpha], _ROOT_VERTICES[beta]
    except KeyError as exc:
        raise AlgebraError(f"not a root vector: {exc.args[0]!r}") from None
    return sum(_chi_exponent(j, i) for i in va for j in vb)


def qcommutator_check(alpha: str, beta: str, algebra: Algebra, N: int | None = None) -> bool:
    """x_alpha x_beta^N == q_{alpha beta}^N x_beta^N x_alpha (N defaults to l)."""
    if N is None:
        if algebra.l is None:
            raise AlgebraError("N must be given in generic mode")
        N = algebra.l
    for name in (alpha, beta):
        if name not in _ROOT_VERTICES:
            raise AlgebraError(f"not a root vector: {name!r}")
        algebra.check_symbol(name)
    xa = algebra.gen(alpha)
    xbN = algebra.gen(beta) ** N
    c = algebra.field.q_pow(braiding_exponent(alpha, beta) * N)
    return (xa * xbN - (xbN * xa).scale(c)).is_zero()


# -- relation lists -------------------------------------------------------------


def derived_relations(algebra: Algebra) -> dict[str, Element]:
    """The relations satisfied by E12, F12 written as lhs - rhs (should vanish)."""
    f = algebra.field
    q, qi = f.q, f.q_pow(-1)
    nf = lambda w, c=1: normal_form(w, algebra, c)  # noqa: E731
    k1inv = "Kt1^-1" if algebra.has_tilde else "K1^-1"
    rels = {}
    for k in ("K1", "K2"):
        kinv = k + "^-1"
        rels[f"{k} E12 {k}^-1 = q E12"] = nf([k, "E12", kinv]) - nf(["E12"], q)
        rels[f"{k} F12 {k}^-1 = q^-1 F12"] = nf([k, "F12", kinv]) - nf(["F12"], qi)
    rels["E12 E1 = q^-1 E1 E12"] = nf(["E12", "E1"]) - nf(["E1", "E12"], qi)
    rels["E12 E2 = q E2 E12"] = nf(["E12", "E2"]) - nf(["E2", "E12"], q)
    rels["F12 F1 = q^-1 F1 F12"] = nf(["F12", "F1"]) - nf(["F1", "F12"], qi)
    rels["F12 F2 = q F2 F12"] = nf(["F12", "F2"]) - nf(["F2", "F12"], q)
    rels["[E12, F12] = 0"] = nf(["E12", "F12"]) - nf(["F12", "E12"])
    rels["[E12, F1] = -E2 K1^-1"] = nf(["E12", "F1"]) - nf(["F1", "E12"]) + nf(["E2", k1inv])
    rels["[E12, F2] = 0"] = nf(["E12", "F2"]) - nf(["F2", "E12"])
    rels["F12 E1 - E1 F12 = K1 F2"] = nf(["F12", "E1"]) - nf(["E1", "F12"]) - nf(["K1", "F2"])
    rels["[F12, E2] = 0"] = nf(["F12", "E2"]) - nf(["E2", "F12"])
    return rels


def relation_words(algebra: Algebra) -> dict[str, list[tuple[Scalar, list[str]]]]:
    """The defining relations of ``algebra`` as formal sums of words (lhs - rhs).

    Kept unnormalized so they can be evaluated in representations.
    """
    f = algebra.field
    one = f.one
    sym = algebra.symbols
    rels: dict[str, list] = {}
    ks = [k for k in ("K1", "K2", "Kt1", "Kt2") if k in sym]
    for k in ks:
        rels[f"{k} {k}^-1 = 1"] = [(one, [k, k + "^-1"]), (-one, [])]
        for k2 in ks:
            if k < k2:
                rels[f"{k} {k2} = {k2} {k}"] = [(one, [k, k2]), (-one, [k2, k])]
        i = int(k[-1]) - 1
        for x in ("E", "F"):
            for j in (1, 2):
                g = f"{x}{j}"
                if g not in sym:
                    continue
                e = CARTAN[j - 1][i] * (1 if x == "E" else -1)
                rels[f"{k} {g} {k}^-1 = q^{e} {g}"] = [(one, [k, g, k + "^-1"]), (-f.q_pow(e), [g])]
    for i in (1, 2):
        for j in (1, 2):
            e, fj = f"E{i}", f"F{j}"
            if e not in sym or fj not in sym:
                continue
            terms = [(one, [e, fj]), (-one, [fj, e])]
            if i == j == 1:
                d = (f.q - f.q_pow(-1)).inverse()
                kinv = "Kt1^-1" if algebra.has_tilde else "K1^-1"
                terms += [(-d, ["K1"]), (d, [kinv])]
            rels[f"[{e}, {fj}]"] = terms
    for x in ("E", "F"):
        for i, j in ((1, 2), (2, 1)):
            xi, xj = f"{x}{i}", f"{x}{j}"
            if xi not in sym or xj not in sym:
                continue
            rels[f"serre {xi},{xj}"] = [
                (q_binomial(2, s, f) * (-1) ** s, [xi] * (2 - s) + [xj] + [xi] * s) for s in range(3)
            ]
    if algebra.truncated:
        l = algebra.l
        for g in ("E1", "E2", "F1", "F2", "E12", "F12"):
            if g in sym:
                rels[f"{g}^{l} = 0"] = [(one, [g] * l)]
        for k in ks:
            rels[f"{k}^{l} = 1"] = [(one, [k] * l), (-one, [])]
    return rels


def serre_elements(algebra: Algebra) -> dict[str, Element]:
    """sum_s (-1)^s [2 choose s] x_i^(2-s) x_j x_i^s for i != j, x in {E, F}."""
    return {n: _normalize(algebra, t) for n, t in relation_words(algebra).items() if n.startswith("serre")}


def _normalize(algebra: Algebra, terms) -> Element:
    total = algebra.zero()
    for c, w in terms:
        total = total + normal_form(w, algebra, c)
    return total


def defining_relations(algebra: Algebra) -> dict[str, Element]:
    """The defining relations (as lhs - rhs) that make sense in ``algebra``, normalized."""
    return {n: _normalize(algebra, t) for n, t in relation_words(algebra).items()}
