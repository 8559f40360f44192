"""Finite-dimensional modules given by one exact matrix per generator."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ..pbw import get_algebra, relation_words
from ..pbw.algebra import Algebra
from ..qfield import Field, Matrix, Scalar, q_bracket_a, q_int, row_space_basis
from .character import Character, signed_q_power


class ModuleError(ValueError):
    pass


class MatrixModule:
    """A module over ``algebra`` on basis ``labels``; ``action[g]`` is the matrix of g."""

    def __init__(self, algebra: Algebra, labels: list, action: dict[str, Matrix]):
        self.algebra = algebra
        self.labels = list(labels)
        self.action = dict(action)
        n = len(self.labels)
        for g in algebra.generator_names():
            if g not in self.action:
                raise ModuleError(f"missing matrix for {g}")
        for g, m in self.action.items():
            if (m.nrows, m.ncols) != (n, n):
                raise ModuleError(f"matrix of {g} has the wrong shape")
        self._cache: dict[str, Matrix] = {}

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return len(self.labels)

    def __repr__(self):
        return f"MatrixModule({self.algebra.kind}, dim={self.dim})"

    def matrix(self, sym: str) -> Matrix:
        """Matrix of any letter, including root vectors and K inverses."""
        if sym in self.action:
            return self.action[sym]
        hit = self._cache.get(sym)
        if hit is not None:
            return hit
        q = self.field.q
        if sym.endswith("^-1"):
            out = self.action[sym[:-3]].inverse()
        elif sym == "E12":
            e1, e2 = self.action["E1"], self.action["E2"]
            out = e1 * e2 - (e2 * e1).scale(q.inverse())
        elif sym == "F12":
            f1, f2 = self.action["F1"], self.action["F2"]
            out = f2 * f1 - (f1 * f2).scale(q)
        else:
            raise ModuleError(f"no matrix for {sym!r}")
        self._cache[sym] = out
        return out

    def word_matrix(self, word) -> Matrix:
        out = Matrix.identity(self.field, self.dim)
        for sym in word:
            out = out * self.matrix(sym)
        return out

    def represent(self, x) -> Matrix:
        """Matrix of an Element of the acting algebra."""
        out = Matrix.zeros(self.field, self.dim, self.dim)
        for m, c in x.terms.items():
            word = (
                ["F1"] * m[0] + ["F12"] * m[1] + ["F2"] * m[2]
                + _k_word("K1", m[3]) + _k_word("K2", m[4]) + _k_word("Kt1", m[5]) + _k_word("Kt2", m[6])
                + ["E1"] * m[7] + ["E12"] * m[8] + ["E2"] * m[9]
            )
            out = out + self.word_matrix(word).scale(c)
        return out

    def act(self, sym: str, vec: list) -> list:
        return self.matrix(sym).apply(vec)

    def basis_vector(self, i: int) -> list:
        f = self.field
        return [f.one if k == i else f.zero for k in range(self.dim)]

    def with_matrix(self, sym: str, m: Matrix) -> "MatrixModule":
        action = dict(self.action)
        action[sym] = m
        return MatrixModule(self.algebra, self.labels, action)


def _k_word(sym: str, e: int) -> list:
    return [sym] * e if e >= 0 else [sym + "^-1"] * (-e)


# -- relation check ----------------------------------------------------------------


def module_axiom_check(M: MatrixModule) -> list[str]:
    """Names of the defining relations of the algebra that fail on M."""
    bad = []
    for name, terms in relation_words(M.algebra).items():
        total = Matrix.zeros(M.field, M.dim, M.dim)
        for c, w in terms:
            total = total + M.word_matrix(w).scale(c)
        if not total.is_zero():
            bad.append(name)
    return bad


# -- constructions -----------------------------------------------------------------


def _matrix_from_map(field: Field, n: int, entries: dict) -> Matrix:
    """entries[(row, col)] = value."""
    m = Matrix.zeros(field, n, n)
    for (i, j), v in entries.items():
        m.rows[i][j] = field(v)
    return m


def build_L(char: Character) -> MatrixModule:
    """L(lambda) for l1 = +-q^m1 (generic q), on the standard basis u_0..u_m1."""
    f = char.field
    if f.is_root_mode():
        raise ModuleError("build_L works over Q(q)")
    sq = signed_q_power(char.l1)
    if sq is None:
        raise ModuleError(f"lambda(K1) = {char.l1} is not +-q^m with m >= 0")
    _, m1 = sq
    n = m1 + 1
    action = {
        "K1": Matrix.diagonal(f, [char.l1 * f.q_pow(-2 * j) for j in range(n)]),
        "K2": Matrix.diagonal(f, [char.l2 * f.q_pow(j) for j in range(n)]),
        "F1": _matrix_from_map(f, n, {(j + 1, j): 1 for j in range(n - 1)}),
        "E1": _matrix_from_map(f, n, {(j - 1, j): q_int(j, f) * q_bracket_a(char.l1, 1 - j) for j in range(1, n)}),
        "E2": Matrix.zeros(f, n, n),
        "F2": Matrix.zeros(f, n, n),
    }
    return MatrixModule(get_algebra("U"), [f"u{j}" for j in range(n)], action)


def example_module(eps1: int, eps2: int, a) -> MatrixModule:
    """The two-dimensional V(eps1, eps2, a) exactly as listed: F2 v1 = v2, everything else diagonal or 0."""
    alg = get_algebra("U")
    f = alg.field
    a = f(a)
    action = {
        "K1": Matrix.diagonal(f, [eps1, eps2]),
        "K2": Matrix.diagonal(f, [a, a * f.q_pow(-2)]),
        "E1": Matrix.zeros(f, 2, 2),
        "E2": Matrix.zeros(f, 2, 2),
        "F1": Matrix.zeros(f, 2, 2),
        "F2": _matrix_from_map(f, 2, {(1, 0): 1}),
    }
    return MatrixModule(alg, ["v1", "v2"], action)


def build_V_u(m1: int, m2: int, l: int) -> MatrixModule:
    """The simple u-module V(m1, m2) on w_0..w_m1."""
    if not (0 <= m1 < l and 0 <= m2 < l):
        raise ModuleError("need 0 <= m1, m2 < l")
    alg = get_algebra("u", l)
    f = alg.field
    n = m1 + 1
    action = {
        "K1": Matrix.diagonal(f, [f.q_pow(m1 - 2 * j) for j in range(n)]),
        "K2": Matrix.diagonal(f, [f.q_pow(m2 + j) for j in range(n)]),
        "E1": _matrix_from_map(f, n, {(j - 1, j): q_int(m1 + 1 - j, f) for j in range(1, n)}),
        "F1": _matrix_from_map(f, n, {(j + 1, j): q_int(j + 1, f) for j in range(n - 1)}),
        "E2": Matrix.zeros(f, n, n),
        "F2": Matrix.zeros(f, n, n),
    }
    return MatrixModule(alg, [f"w{j}" for j in range(n)], action)


def build_verma_u(m1: int, m2: int, l: int) -> MatrixModule:
    """M(m1, m2) = u (x)_{u>=0} k v on the basis F1^t1 F12^t2 F2^t3 v, t_i < l."""
    alg = get_algebra("u", l)
    f = alg.field
    basis = [(a, b, c) for a in range(l) for b in range(l) for c in range(l)]
    index = {t: i for i, t in enumerate(basis)}
    l1, l2 = f.q_pow(m1), f.q_pow(m2)
    n = len(basis)
    action = {}
    for g in alg.generator_names():
        m = Matrix.zeros(f, n, n)
        for col, t in enumerate(basis):
            for mono, c in alg.left_mul(g, t + (0,) * 7).items():
                if mono[7] or mono[8] or mono[9]:
                    continue
                row = index[mono[:3]]
                m.rows[row][col] = m.rows[row][col] + c * l1 ** mono[3] * l2 ** mono[4]
        action[g] = m
    labels = ["F1^%d*F12^%d*F2^%d*v" % t for t in basis]
    return MatrixModule(alg, labels, action)


def tensor(M: MatrixModule, N: MatrixModule) -> MatrixModule:
    """M (x) N through the coproduct; basis index i * dim N + j."""
    if M.algebra is not N.algebra:
        raise ModuleError("tensor factors are modules over different algebras")
    alg = M.algebra
    f = M.field
    IM, IN = Matrix.identity(f, M.dim), Matrix.identity(f, N.dim)
    action = {}
    for g in alg.generator_names():
        if g[0] == "K":
            action[g] = M.matrix(g).kron(N.matrix(g))
        elif g[0] == "E":
            i = g[1]
            action[g] = M.matrix(f"K{i}").kron(N.matrix(g)) + M.matrix(g).kron(IN)
        else:
            i = g[1]
            kinv = f"Kt{i}^-1" if alg.has_tilde else f"K{i}^-1"
            action[g] = IM.kron(N.matrix(g)) + M.matrix(g).kron(N.matrix(kinv))
    labels = [f"{a}(x){b}" for a in M.labels for b in N.labels]
    return MatrixModule(alg, labels, action)


# -- weights and highest weight vectors -------------------------------------------------


def weight_spaces(M: MatrixModule) -> dict[Character, list[int]]:
    """Basis indices grouped by (K1, K2) eigenvalue; K1 and K2 must be diagonal."""
    k1, k2 = M.action["K1"], M.action["K2"]
    out: dict = {}
    for i in range(M.dim):
        for k in (k1, k2):
            if any(k.rows[i][j] for j in range(M.dim) if j != i):
                raise ModuleError("weight spaces need diagonal K1, K2 matrices")
        out.setdefault(Character(k1.rows[i][i], k2.rows[i][i]), []).append(i)
    return out


def find_hw_vectors(M: MatrixModule) -> list[tuple[Character, list[list[Scalar]]]]:
    """Per weight, a basis of the vectors of that weight killed by E1 and E2."""
    f = M.field
    e1, e2 = M.action["E1"], M.action["E2"]
    out = []
    for char, idx in weight_spaces(M).items():
        rows = [[e.rows[r][c] for c in idx] for e in (e1, e2) for r in range(M.dim)]
        ker = Matrix(f, rows, len(idx)).kernel()
        if ker:
            vecs = []
            for k in ker:
                v = [f.zero] * M.dim
                for pos, c in zip(idx, k):
                    v[pos] = c
                vecs.append(v)
            out.append((char, vecs))
    return out


def generated_submodule(M: MatrixModule, vectors) -> list[list[Scalar]]:
    """Reduced basis of the submodule generated by ``vectors``."""
    f = M.field
    gens = [M.action[g] for g in M.algebra.generator_names()]
    gens += [M.matrix(g + "^-1") for g in M.algebra.generator_names() if g[0] == "K"]
    basis = row_space_basis(f, vectors, M.dim)
    frontier = list(basis)
    while frontier:
        new = [g.apply(v) for v in frontier for g in gens]
        grown = row_space_basis(f, basis + new, M.dim)
        if len(grown) == len(basis):
            break
        basis = grown
        frontier = grown
    return basis


def is_simple(M: MatrixModule) -> bool:
    """Exactly one highest weight line, and it generates M.

    Every nonzero submodule of a finite weight module with nilpotent E's
    contains a highest weight vector, so this decides simplicity.
    """
    hw = find_hw_vectors(M)
    if sum(len(v) for _, v in hw) != 1:
        return False
    return len(generated_submodule(M, hw[0][1])) == M.dim


# -- Clebsch-Gordan ------------------------------------------------------------------


@dataclass
class DecompositionReport:
    factors: list  # (Character, multiplicity, dimension of the generated submodule)
    expected: list  # the predicted highest weights
    flags: dict = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.flags.values())


def cg_weights(char: Character, mu: Character) -> list[Character]:
    """eta^(i) = (eps1 eps2 q^(m+n-2i), q^i l2 mu2), i = 0..min(m, n)."""
    s1, s2 = signed_q_power(char.l1), signed_q_power(mu.l1)
    if s1 is None or s2 is None:
        raise ModuleError("Clebsch-Gordan needs lambda(K1), mu(K1) of the form +-q^m")
    (e1, m), (e2, n) = s1, s2
    f = char.field
    return [
        Character(f.q_pow(m + n - 2 * i) * (e1 * e2), f.q_pow(i) * char.l2 * mu.l2) for i in range(min(m, n) + 1)
    ]


def clebsch_gordan(char: Character, mu: Character) -> DecompositionReport:
    expected = cg_weights(char, mu)
    L1, L2 = build_L(char), build_L(mu)
    T = tensor(L1, L2)
    hw = find_hw_vectors(T)
    factors = []
    spans = []
    simple_ok = True
    for w, vecs in hw:
        sub = generated_submodule(T, vecs)
        spans.extend(sub)
        factors.append((w, len(vecs), len(sub)))
        if len(vecs) == 1:
            L = build_L(w)
            simple_ok = simple_ok and len(sub) == L.dim
    total = len(row_space_basis(T.field, spans, T.dim)) if spans else 0
    flags = {
        "axioms": not module_axiom_check(T),
        "multiplicity_one": all(mult == 1 for _, mult, _ in factors),
        "weights_match": sorted(str(w) for w, _, _ in factors) == sorted(str(e) for e in expected)
        and len(factors) == len(expected),
        "dimension_sum": sum(d for _, _, d in factors) == L1.dim * L2.dim,
        "direct_sum": total == T.dim,
        "factor_dims": simple_ok,
    }
    return DecompositionReport(factors, expected, flags)


# -- pullback along pi_z ---------------------------------------------------------------


def pullback_z(M: MatrixModule, z) -> MatrixModule:
    """M_z: the u-module M viewed over Dphi through pi_z."""
    from ..hopf.double import eps_z

    if M.algebra.kind != "u":
        raise ModuleError("pullback_z takes a u-module")
    if z.l != M.algebra.l:
        raise ModuleError("central parameter and module use different l")
    vals = eps_z(z)  # rejects even l; the scalars of pi_z are the same
    h1, h1inv, z2inv = vals["K1"], vals["Kt1"], vals["Kt2"]
    D = get_algebra("Dphi", M.algebra.l)
    action = {
        "E1": M.action["E1"].scale(h1),
        "E2": M.action["E2"],
        "F1": M.action["F1"],
        "F2": M.action["F2"],
        "K1": M.action["K1"].scale(h1),
        "K2": M.action["K2"],
        "Kt1": M.action["K1"].scale(h1inv),
        "Kt2": M.action["K2"].scale(z2inv),
    }
    return MatrixModule(D, M.labels, action)


def one_dim_module(z) -> MatrixModule:
    """The one-dimensional Dphi-module eps_z."""
    from ..hopf.double import eps_z

    D = get_algebra("Dphi", z.l)
    f = D.field
    return MatrixModule(D, ["1"], {g: Matrix(f, [[c]]) for g, c in eps_z(z).items()})


def twist_check(M: MatrixModule, z) -> bool:
    """M_z equals eps_z (x) M_1 matrix by matrix."""
    from ..hopf.double import CentralParameter

    f = M.field
    one = CentralParameter(f.one, f.one)
    Mz = pullback_z(M, z)
    T = tensor(one_dim_module(z), pullback_z(M, one))
    return all(Mz.action[g] == T.action[g] for g in Mz.algebra.generator_names())


# -- JSON ---------------------------------------------------------------------------


def module_to_json(M: MatrixModule) -> dict:
    from ..pbw.serialize import mode_to_json
    from ..qfield import scalar_to_json

    action = {}
    for g in M.algebra.generator_names():
        m = M.action[g]
        action[g] = [[i, j, scalar_to_json(m.rows[i][j])] for i in range(M.dim) for j in range(M.dim) if m.rows[i][j]]
    return {"algebra": M.algebra.kind, "mode": mode_to_json(M.algebra), "basis": list(M.labels), "action": action}


def module_from_json(data: dict) -> MatrixModule:
    from ..pbw.serialize import algebra_from_json
    from ..qfield import scalar_from_json

    try:
        alg = algebra_from_json(data["algebra"], data["mode"])
        labels = list(data["basis"])
        n = len(labels)
        action = {}
        for g, entries in data["action"].items():
            m = Matrix.zeros(alg.field, n, n)
            for i, j, c in entries:
                m.rows[int(i)][int(j)] = scalar_from_json(c)
            action[g] = m
    except (KeyError, TypeError, ValueError) as exc:
        raise ModuleError(f"bad module JSON: {exc}") from None
    return MatrixModule(alg, labels, action)


# -- highest weight modules ---------------------------------------------------------


def classify_highest_weight_module(M: MatrixModule) -> Character | None:
    """lambda when the finite U-module M is generated by one highest weight
    vector of weight lambda and has the weights of L(lambda); otherwise None.
    """
    if M.algebra.kind != "U":
        raise ModuleError("classification is for modules over U")
    hw = find_hw_vectors(M)
    if len(hw) != 1 or len(hw[0][1]) != 1:
        return None
    lam, vecs = hw[0]
    if len(generated_submodule(M, vecs)) != M.dim:
        return None
    try:
        L = build_L(lam)
    except ModuleError:
        return None
    mine = sorted((str(w), len(i)) for w, i in weight_spaces(M).items())
    theirs = sorted((str(w), len(i)) for w, i in weight_spaces(L).items())
    return lam if mine == theirs else None
