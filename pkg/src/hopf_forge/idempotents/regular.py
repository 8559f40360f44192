"""The regular representation of u1, its radical and primitive decompositions of 1."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..modules import MatrixModule, module_axiom_check
from ..pbw import Element, enumerate_basis, get_algebra
from ..qfield import Matrix, q_int, row_space_basis
from .core import DEFAULT_MAX_L, IdempotentSolution, e_K1, solve_idempotents

DEFAULT_DIM_CAP = 125


@dataclass
class RegularData:
    l: int
    basis: list
    index: dict
    left: list  # left[b] = matrix of left multiplication by basis[b]
    traces: list  # traces[b] = tr(left[b])


_REGULAR: dict = {}


def _vector(x: Element, data: RegularData) -> list:
    f = x.field
    v = [f.zero] * len(data.basis)
    for m, c in x.terms.items():
        v[data.index[m]] = c
    return v


def _element(v, data: RegularData) -> Element:
    alg = get_algebra("u1", data.l)
    return Element(alg, {data.basis[k]: c for k, c in enumerate(v) if c})


def regular_representation(l: int, cap: int = DEFAULT_DIM_CAP) -> RegularData:
    """Left multiplication matrices of u1 on its PBW basis F^t K^r E^s."""
    hit = _REGULAR.get(l)
    if hit is not None:
        return hit
    alg = get_algebra("u1", l)
    n, it = enumerate_basis(alg)
    if n > cap:
        raise ValueError(f"dim u1 = {n} exceeds the cap {cap}")
    basis = list(it)
    index = {m: k for k, m in enumerate(basis)}
    f = alg.field
    left = []
    for a in basis:
        m = Matrix.zeros(f, n, n)
        for col, b in enumerate(basis):
            for prod, c in alg.mul_mono(a, b).items():
                m.rows[index[prod]][col] = c
        left.append(m)
    traces = [sum((m.rows[k][k] for k in range(n)), f.zero) for m in left]
    data = RegularData(l, basis, index, left, traces)
    _REGULAR[l] = data
    return data


def left_matrix(x: Element, data: RegularData) -> Matrix:
    f = x.field
    n = len(data.basis)
    out = Matrix.zeros(f, n, n)
    for m, c in x.terms.items():
        out = out + data.left[data.index[m]].scale(c)
    return out


def radical_trace_form(l: int) -> list[list]:
    """Basis (coordinate vectors) of rad(u1) = {x : tr(L_xy) = 0 for all y}."""
    data = regular_representation(l)
    alg = get_algebra("u1", l)
    f = alg.field
    n = len(data.basis)
    gram = []
    for a in data.basis:
        row = []
        for b in data.basis:
            t = f.zero
            for prod, c in alg.mul_mono(a, b).items():
                tr = data.traces[data.index[prod]]
                if tr:
                    t = t + c * tr
            row.append(t)
        gram.append(row)
    return Matrix(f, gram, n).kernel()


def semisimple_dimension(l: int) -> int:
    data = regular_representation(l)
    return len(data.basis) - len(radical_trace_form(l))


def _span_dim(vectors, n: int, f) -> int:
    return len(row_space_basis(f, vectors, n)) if vectors else 0


def is_primitive(e: Element) -> bool:
    """dim eAe - dim e rad(A) e == 1."""
    if e * e != e:
        raise ValueError("not an idempotent")
    l = e.algebra.l
    data = regular_representation(l)
    f = e.field
    n = len(data.basis)
    if e.is_zero():
        return False
    Le = left_matrix(e, data)
    # x -> e x e on coordinate vectors: left by e, then right by e
    right = Matrix.zeros(f, n, n)
    for col, b in enumerate(data.basis):
        prod = Element(e.algebra, {b: f.one}) * e
        for m, c in prod.terms.items():
            right.rows[data.index[m]][col] = c
    sandwich = Le * right
    whole = [sandwich.column(k) for k in range(n)]
    rad = [sandwich.apply(r) for r in radical_trace_form(l)]
    return _span_dim(whole, n, f) - _span_dim(rad, n, f) == 1


def left_ideal_dimension(e: Element) -> int:
    """dim u1 e."""
    data = regular_representation(e.algebra.l)
    f = e.field
    n = len(data.basis)
    vecs = [_vector(Element(e.algebra, {b: f.one}) * e, data) for b in data.basis]
    return _span_dim(vecs, n, f)


# -- simple u1-modules and heads -------------------------------------------------------


def simple_u1_module(m: int, l: int) -> MatrixModule:
    """V(m) over u1: K w_j = q^(m-2j) w_j, E w_j = [m+1-j] w_(j-1), F w_j = [j+1] w_(j+1)."""
    alg = get_algebra("u1", l)
    f = alg.field
    n = m + 1
    K = Matrix.diagonal(f, [f.q_pow(m - 2 * j) for j in range(n)])
    E = Matrix.zeros(f, n, n)
    F = Matrix.zeros(f, n, n)
    for j in range(1, n):
        E.rows[j - 1][j] = q_int(m + 1 - j, f)
    for j in range(n - 1):
        F.rows[j + 1][j] = q_int(j + 1, f)
    M = MatrixModule(alg, [f"w{j}" for j in range(n)], {"E1": E, "F1": F, "K1": K})
    return M


def head_of(e: Element) -> list[int]:
    """The m with rank rho_V(m)(e) > 0, repeated by rank."""
    l = e.algebra.l
    out = []
    for m in range(l):
        r = simple_u1_module(m, l).represent(e).rank()
        out.extend([m] * r)
    return out


# -- decomposition of the regular module -------------------------------------------------


@dataclass
class Summand:
    i: int
    coeffs: tuple
    element: Element
    ideal_dim: int
    primitive: bool
    head: list


@dataclass
class Decomposition:
    l: int
    summands: list
    flags: dict

    @property
    def ok(self) -> bool:
        return all(self.flags.values())


def _orthogonal_cover(target: Element, cands: list[IdempotentSolution], max_size: int):
    """Pairwise orthogonal candidates summing to ``target`` (smallest set first)."""
    for size in range(1, max_size + 1):
        for combo in combinations(cands, size):
            total = target.algebra.zero()
            for c in combo:
                total = total + c.element
            if total != target:
                continue
            if all((a.element * b.element).is_zero() and (b.element * a.element).is_zero() for a, b in combinations(combo, 2)):
                return list(combo)
    return None


def decompose_regular_u1(l: int = 3, max_l: int = DEFAULT_MAX_L) -> Decomposition:
    """Split every e_i into orthogonal primitive solutions of the idempotent system."""
    if l > max_l:
        raise ValueError(f"l = {l} exceeds the cap {max_l}")
    alg = get_algebra("u1", l)
    summands = []
    complete = True
    for i in range(l):
        e = e_K1(i, l, "u1")
        cands = [s for s in solve_idempotents(i, l, max_l) if not s.element.is_zero() and is_primitive(s.element)]
        cover = _orthogonal_cover(e, cands, l)
        if cover is None:
            complete = False
            continue
        for s in cover:
            summands.append(Summand(i, s.coeffs, s.element, left_ideal_dimension(s.element), True, head_of(s.element)))
    total = alg.zero()
    for s in summands:
        total = total + s.element
    orth = all(
        (a.element * b.element).is_zero() for a in summands for b in summands if a is not b
    ) and all(s.element * s.element == s.element for s in summands)
    heads = [s.head for s in summands]
    head_counts = {m: sum(1 for h in heads if h == [m]) for m in range(l)}
    flags = {
        "complete": complete,
        "sum_is_one": total == alg.one(),
        "orthogonal_idempotents": orth,
        "all_primitive": all(s.primitive for s in summands),
        "count": len(summands) == l * (l + 1) // 2,
        "dimension_sum": sum(s.ideal_dim for s in summands) == l ** 3,
        "head_multiplicities": head_counts == {m: m + 1 for m in range(l)},
    }
    return Decomposition(l, summands, flags)


def simple_modules_check(l: int) -> bool:
    return all(not module_axiom_check(simple_u1_module(m, l)) for m in range(l))
