"""Idempotents of the group algebra of K, the commutation formula for F^m E^s,
and the quadratic system whose solutions are the idempotents sum_p a_p e_i E^p F^p
of the small quantum group u1.

In u1 we write K, E, F for K1, E1, F1 and e_i = (1/l) sum_s (q^i K)^s, so that
K e_i = q^-i e_i.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..pbw import Element, get_algebra, normal_form
from ..pbw.algebra import Algebra
from ..qfield import Scalar, cyclotomic_field, field_sqrt, q_binomial, q_factorial

DEFAULT_MAX_L = 7


def _root_algebra(kind: str, l: int) -> Algebra:
    if l is None:
        raise ValueError("idempotents live in root-of-unity mode")
    return get_algebra(kind, l)


def _k_power(alg: Algebra, sym: str, n: int) -> Element:
    n %= alg.l
    return normal_form([sym] * n, alg) if n else alg.one()


def group_idempotents(l: int) -> dict[tuple[int, int], Element]:
    """e_{i,j} = (1/l^2) sum_{s,t} q^(is+jt) K1^s K2^t for i, j in Z_l."""
    alg = _root_algebra("u", l)
    f = alg.field
    out = {}
    inv = f(1) / (l * l)
    for i in range(l):
        for j in range(l):
            total = alg.zero()
            for s in range(l):
                for t in range(l):
                    total = total + (_k_power(alg, "K1", s) * _k_power(alg, "K2", t)).scale(f.q_pow(i * s + j * t))
            out[(i, j)] = total.scale(inv)
    return out


def _e_k(sym: str, i: int, l: int, kind: str) -> Element:
    alg = _root_algebra(kind, l)
    f = alg.field
    total = alg.zero()
    for s in range(l):
        total = total + _k_power(alg, sym, s).scale(f.q_pow(i * s))
    return total.scale(f(1) / l)


def e_K1(i: int, l: int, kind: str = "u") -> Element:
    """e_i(K1) = (1/l) sum_s (q^i K1)^s."""
    return _e_k("K1", i, l, kind)


def e_K2(j: int, l: int, kind: str = "u") -> Element:
    """e_j(K2) = (1/l) sum_s (q^j K2)^s."""
    return _e_k("K2", j, l, kind)


# -- the commutation formula ----------------------------------------------------


def k_inverse_bracket(alg: Algebra, r: int) -> Element:
    """[K^-1; r] = (K^-1 q^r - K q^-r)/(q - q^-1) with K = K1."""
    f = alg.field
    d = (f.q - f.q_pow(-1)).inverse()
    return alg.gen("K1^-1").scale(f.q_pow(r) * d) - alg.gen("K1").scale(f.q_pow(-r) * d)


def fe_commutation_rhs(m: int, s: int, alg: Algebra | None = None) -> Element:
    """sum_j [j]! [m j][s j] E^(s-j) prod_{r=j-m-s+1}^{2j-m-s} [K^-1; r] F^(m-j)."""
    if m < 0 or s < 0:
        raise ValueError("m, s must be >= 0")
    if alg is None:
        alg = get_algebra("U")
    f = alg.field
    total = alg.zero()
    for j in range(min(m, s) + 1):
        c = q_factorial(j, f) * q_binomial(m, j, f) * q_binomial(s, j, f)
        term = normal_form(["E1"] * (s - j), alg, c)
        for r in range(j - m - s + 1, 2 * j - m - s + 1):
            term = term * k_inverse_bracket(alg, r)
        total = total + term * normal_form(["F1"] * (m - j), alg)
    return total


# -- the quadratic system ----------------------------------------------------------


def structure_constant(m: int, s: int, j: int, i: int, l: int) -> Scalar:
    """a_{m,s,j} = [j]!^2 [m j][s j][m+s+i j] at q = zeta_l."""
    if not (0 <= j <= min(m, s) and max(m, s) < l):
        raise ValueError("need 0 <= j <= min(m, s) and m, s < l")
    f = cyclotomic_field(l)
    i %= l
    fj = q_factorial(j, f)
    return fj * fj * q_binomial(m, j, f) * q_binomial(s, j, f) * q_binomial(m + s + i, j, f)


@dataclass
class QuadraticSystem:
    i: int
    l: int
    terms: dict  # p -> list of ((m, s, j), a_{m,s,j})

    def residual(self, a) -> list[Scalar]:
        """a_p - sum a_{m,s,j} a_m a_s for every p."""
        out = []
        for p in range(self.l):
            r = a[p]
            for (m, s, j), c in self.terms[p]:
                r = r - c * a[m] * a[s]
            out.append(r)
        return out

    def is_solution(self, a) -> bool:
        return all(r.is_zero() for r in self.residual(a))


def _require_odd(l: int):
    if l % 2 == 0:
        raise ValueError("the idempotent system assumes odd l")


def build_system(i: int, l: int) -> QuadraticSystem:
    _require_odd(l)
    terms: dict = {p: [] for p in range(l)}
    for m in range(l):
        for s in range(l):
            for j in range(min(m, s) + 1):
                p = m + s - j
                if p < l:
                    c = structure_constant(m, s, j, i, l)
                    if c:
                        terms[p].append(((m, s, j), c))
    return QuadraticSystem(i % l, l, terms)


def idempotent_element(i: int, coeffs, l: int) -> Element:
    """sum_p a_p e_i E^p F^p in u1."""
    alg = _root_algebra("u1", l)
    e = e_K1(i, l, "u1")
    total = alg.zero()
    for p, a in enumerate(coeffs):
        if a:
            total = total + e * normal_form(["E1"] * p + ["F1"] * p, alg, a)
    return total


@dataclass
class IdempotentSolution:
    i: int
    coeffs: tuple
    element: Element

    def __post_init__(self):
        if self.element * self.element != self.element:
            raise ValueError(f"coefficients {self.coeffs} do not give an idempotent")


def solve_idempotents(i: int, l: int, max_l: int = DEFAULT_MAX_L) -> list[IdempotentSolution]:
    """All solutions of the system, found by solving for a_0, a_1, ... in turn.

    Equation p is a_ppp a_p^2 + (2 a_0 + 2 sum_{0<s<p} a_{p,s,s} a_s - 1) a_p + R = 0
    with R built from a_0..a_{p-1}.  Branches without a root in Q(zeta_l) are
    discarded.  If the equation degenerates to 0 = 0 the unknown is free and
    a ValueError is raised, since the solution set is then infinite.
    """
    _require_odd(l)
    if l > max_l:
        raise ValueError(f"l = {l} exceeds the cap {max_l}")
    system = build_system(i, l)
    f = cyclotomic_field(l)
    branches = [[]]
    for p in range(l):
        new = []
        for a in branches:
            quad = f.zero
            lin = -f.one
            const = f.zero
            for (m, s, j), c in system.terms[p]:
                if m == p and s == p:
                    quad = quad + c
                elif m == p:
                    lin = lin + c * a[s]
                elif s == p:
                    lin = lin + c * a[m]
                else:
                    const = const + c * a[m] * a[s]
            for root in _roots(quad, lin, const):
                new.append(a + [root])
        branches = new
    out = []
    for a in branches:
        if not system.is_solution(a):
            raise AssertionError("solver produced a non-solution")
        out.append(IdempotentSolution(i % l, tuple(a), idempotent_element(i, a, l)))
    out.sort(key=lambda s: [str(x) for x in s.coeffs])
    return out


def _roots(a: Scalar, b: Scalar, c: Scalar) -> list[Scalar]:
    """Roots in the field of a x^2 + b x + c."""
    if a.is_zero():
        if b.is_zero():
            if c.is_zero():
                raise ValueError("degenerate equation: the unknown is free")
            return []
        return [-c / b]
    disc = b * b - 4 * a * c
    r = field_sqrt(disc)
    if r is None:
        return []
    x1 = (-b + r) / (2 * a)
    x2 = (-b - r) / (2 * a)
    return [x1] if x1 == x2 else [x1, x2]


def flip(sol: IdempotentSolution, l: int) -> tuple:
    """(1 - a_0, -a_1, ..., -a_{l-1})."""
    a = sol.coeffs
    return (1 - a[0],) + tuple(-x for x in a[1:])


# -- congruences ---------------------------------------------------------------


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return a, 1, 0
    g, x, y = _egcd(b, a % b)
    return g, y, x - (a // b) * y


CONGRUENCE_MATRIX = ((-1, 1), (-1, -2))


def congruence_solve(m1: int, m2: int, l: int) -> tuple[int, int]:
    """(t2, t3) in [0, l)^2 with (-t2 + t3, -t2 - 2 t3) = (m1, m2) mod l.

    Built from p l + 3 q = 1: (t2, t3) = (q - 1, q) solves the target (1, 0)
    and (-q, -q) solves (0, 1); the general target is their combination.
    """
    g, p, q = _egcd(l, 3)
    if g != 1:
        raise ValueError("needs gcd(l, 3) = 1")
    assert p * l + 3 * q == 1
    a2, a3 = q - 1, q
    b2, b3 = -q, -q
    return ((m1 * a2 + m2 * b2) % l, (m1 * a3 + m2 * b3) % l)


def congruence_holds(t2: int, t3: int, m1: int, m2: int, l: int) -> bool:
    (a, b), (c, d) = CONGRUENCE_MATRIX
    return (a * t2 + b * t3 - m1) % l == 0 and (c * t2 + d * t3 - m2) % l == 0
