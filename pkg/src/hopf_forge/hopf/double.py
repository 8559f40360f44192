"""The double crossproduct of the Borels and the maps pi, pi_z, eps_z out of Dphi.

The product on uGeq0 (x) uLeq0 is

    (a (x) x)(b (x) y) = sum phi(b1, x1) a b2 (x) x2 y phi^-1(b3, x3)

computed directly from the pairing.  ``to_dphi`` sends a (x) x to a x~ in the
presented algebra Dphi, where x~ is x with K_i renamed Kt_i; comparing the two
products on generators is how the presentation is checked against the formula.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..pbw import Element, get_algebra
from ..qfield import Scalar, cyclotomic_field, zeta_sqrt
from .coproduct import delta_mono, delta_on_leg
from .pairing import get_pairing
from .tensor import TensorElement

_DELTA2: dict = {}


def _delta2(alg, m) -> dict:
    key = (alg, m)
    hit = _DELTA2.get(key)
    if hit is None:
        hit = delta_on_leg(delta_mono(alg, m), 0).terms
        _DELTA2[key] = hit
    return hit


def double_pair(a: Element, x: Element) -> TensorElement:
    """a (x) x as an element of uGeq0 (x) uLeq0."""
    if a.algebra.kind != "uGeq0" or x.algebra.kind != "uLeq0":
        raise ValueError("double pairs are (uGeq0, uLeq0) elements")
    return TensorElement.pure(a, x)


def double_multiply(p: TensorElement, p2: TensorElement, normalization: str = "printed") -> TensorElement:
    plus, minus = p.algebras
    if (plus.kind, minus.kind) != ("uGeq0", "uLeq0") or p2.algebras != p.algebras:
        raise ValueError("double_multiply needs elements of uGeq0 (x) uLeq0 at the same l")
    phi = get_pairing(plus.l, normalization)
    f = plus.field
    acc: dict = {}
    for (a, x), c in p.terms.items():
        dx = _delta2(minus, x)
        for (b, y), d in p2.terms.items():
            db = _delta2(plus, b)
            cd = c * d
            for (b1, b2, b3), cb in db.items():
                for (x1, x2, x3), cx in dx.items():
                    v1 = phi.mono(b1, x1)
                    if not v1:
                        continue
                    v3 = phi.inverse_mono(b3, x3)
                    if not v3:
                        continue
                    coeff = cd * cb * cx * v1 * v3
                    left = plus.mul_mono(a, b2)
                    right = minus.mul_mono(x2, y)
                    for ml, cl in left.items():
                        for mr, cr in right.items():
                            key = (ml, mr)
                            v = acc.get(key)
                            term = coeff * cl * cr
                            acc[key] = term if v is None else v + term
    return TensorElement((plus, minus), {k: v for k, v in acc.items() if v != f.zero})


def to_dphi(t: TensorElement) -> Element:
    """a (x) x -> a x~ in Dphi (x~: K_i renamed Kt_i)."""
    plus, _ = t.algebras
    D = get_algebra("Dphi", plus.l)
    acc: dict = {}
    for (a, x), c in t.terms.items():
        ad = a
        xd = x[:3] + (0, 0) + x[3:5] + (0, 0, 0)
        for m, c2 in D.mul_mono(ad, xd).items():
            v = acc.get(m)
            acc[m] = c * c2 if v is None else v + c * c2
    return Element(D, acc)


def presentation_mismatches(l: int, normalization: str = "printed") -> list[tuple[str, str, Element]]:
    """Generator pairs where the double product and the Dphi product disagree.

    Each entry is (left, right, double image minus Dphi product).
    """
    plus, minus = get_algebra("uGeq0", l), get_algebra("uLeq0", l)
    gens = {}
    for n in ("E1", "E2", "K1", "K2"):
        gens[n] = double_pair(plus.gen(n), minus.one())
    for n in ("F1", "F2", "K1", "K2"):
        gens[n if n[0] == "F" else "Kt" + n[1]] = double_pair(plus.one(), minus.gen(n))
    out = []
    for n1, g1 in gens.items():
        for n2, g2 in gens.items():
            diff = to_dphi(double_multiply(g1, g2, normalization)) - to_dphi(g1) * to_dphi(g2)
            if not diff.is_zero():
                out.append((n1, n2, diff))
    return out


# -- maps out of Dphi -------------------------------------------------------


@dataclass(frozen=True)
class CentralParameter:
    """z = (z1, z2) with z_i^l = 1; the scalars by which K_i Kt_i^-1 act."""

    z1: Scalar
    z2: Scalar

    def __post_init__(self):
        for z in (self.z1, self.z2):
            f = z.field
            if not f.is_root_mode():
                raise ValueError("central parameters live in a cyclotomic field")
            if z ** f.l != f.one:
                raise ValueError(f"{z} is not an l-th root of unity")

    @property
    def l(self) -> int:
        return self.z1.field.l

    @classmethod
    def from_powers(cls, l: int, k1: int, k2: int) -> "CentralParameter":
        f = cyclotomic_field(l)
        return cls(f.q_pow(k1), f.q_pow(k2))


def _check_odd(l: int):
    if l % 2 == 0:
        raise ValueError("z^(1/2) needs odd l")


def project_pi(d: Element) -> Element:
    """Kt_i -> K_i."""
    if d.algebra.kind != "Dphi":
        raise ValueError("project_pi takes an element of Dphi")
    u = get_algebra("u", d.algebra.l)
    acc: dict = {}
    for m, c in d.terms.items():
        m2 = u.reduce_mono(m[:3] + (m[3] + m[5], m[4] + m[6], 0, 0) + m[7:])
        acc[m2] = acc.get(m2, u.field.zero) + c
    return Element(u, acc)


def pi_z(d: Element, z: CentralParameter) -> Element:
    """E1 -> z1^(1/2) E1, K1 -> z1^(1/2) K1, Kt1 -> z1^(-1/2) K1, Kt2 -> z2^-1 K2, others fixed."""
    if d.algebra.kind != "Dphi":
        raise ValueError("pi_z takes an element of Dphi")
    l = d.algebra.l
    _check_odd(l)
    if z.l != l:
        raise ValueError("central parameter and algebra use different l")
    h1 = zeta_sqrt(z.z1, l)
    h1inv = h1.inverse()
    z2inv = z.z2.inverse()
    u = get_algebra("u", l)
    acc: dict = {}
    for m, c in d.terms.items():
        # E12 = E1 E2 - q^-1 E2 E1 picks up one factor z1^(1/2)
        scale = h1 ** (m[7] + m[8] + m[3]) * h1inv ** m[5] * z2inv ** m[6]
        m2 = u.reduce_mono(m[:3] + (m[3] + m[5], m[4] + m[6], 0, 0) + m[7:])
        acc[m2] = acc.get(m2, u.field.zero) + c * scale
    return Element(u, acc)


def eps_z(z: CentralParameter) -> dict[str, Scalar]:
    """Values of the one-dimensional representation eps_z on the Dphi generators."""
    l = z.l
    _check_odd(l)
    f = z.z1.field
    h1 = zeta_sqrt(z.z1, l)
    return {
        "E1": f.zero,
        "E2": f.zero,
        "F1": f.zero,
        "F2": f.zero,
        "K1": h1,
        "K2": f.one,
        "Kt1": h1.inverse(),
        "Kt2": z.z2.inverse(),
    }


def eps_z_value(d: Element, z: CentralParameter) -> Scalar:
    """eps_z extended multiplicatively to an element of Dphi."""
    vals = eps_z(z)
    total = vals["K1"].field.zero
    for m, c in d.terms.items():
        if any(m[:3]) or any(m[7:]):
            continue
        total = total + c * vals["K1"] ** m[3] * vals["K2"] ** m[4] * vals["Kt1"] ** m[5] * vals["Kt2"] ** m[6]
    return total


def pi_z_relation_failures(z: CentralParameter) -> list[str]:
    """Names of Dphi defining relations not sent to 0 by pi_z."""
    from ..pbw import defining_relations

    D = get_algebra("Dphi", z.l)
    return [name for name, rel in defining_relations(D).items() if not pi_z(rel, z).is_zero()]


def eps_z_relation_failures(z: CentralParameter) -> list[str]:
    """Names of Dphi defining relations with nonzero eps_z value."""
    from ..pbw import defining_relations

    D = get_algebra("Dphi", z.l)
    return [name for name, rel in defining_relations(D).items() if eps_z_value(rel, z)]
