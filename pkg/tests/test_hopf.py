import random
from itertools import product

import pytest

from hopf_forge.hopf import (
    CentralParameter,
    TensorElement,
    antipode,
    axiom_failures,
    comultiply,
    counit,
    double_multiply,
    double_pair,
    eps_z,
    eps_z_relation_failures,
    eps_z_value,
    get_pairing,
    hopf_axiom_failures,
    pairing,
    pairing_inverse,
    pi_z,
    pi_z_relation_failures,
    presentation_mismatches,
    project_pi,
    single_axiom_failures,
    to_dphi,
)
from hopf_forge.hopf.coproduct import delta_mono
from hopf_forge.pbw import enumerate_basis, get_algebra, grade, normal_form, render_element
from hopf_forge.qfield import GENERIC, cyclotomic_field

U = get_algebra("U")
q = GENERIC.q


def gen_pair(l):
    return get_algebra("uGeq0", l), get_algebra("uLeq0", l)


# -- coproduct, counit, antipode ---------------------------------------------------------


def test_delta_examples():
    K1, E1 = U.gen("K1"), U.gen("E1")
    assert comultiply(K1) == TensorElement.pure(K1, K1)
    expected = (
        TensorElement.pure(K1 * K1, E1 * E1)
        + TensorElement.pure(K1 * E1, E1).scale(1 + q ** -2)
        + TensorElement.pure(E1 * E1, U.one())
    )
    assert comultiply(E1 * E1) == expected
    assert comultiply(U.one()) == TensorElement.pure(U.one(), U.one())


def test_delta_f_uses_tilde_in_dphi():
    D = get_algebra("Dphi", 3)
    expected = TensorElement.pure(D.one(), D.gen("F1")) + TensorElement.pure(D.gen("F1"), D.gen("Kt1^-1"))
    assert comultiply(D.gen("F1")) == expected


def test_counit_examples():
    assert counit(U.word(["K1", "K2"])) == 1
    assert counit(U.word(["E1", "F1"])) == 0
    assert counit(U.scalar(3) + U.gen("E1")) == 3


def test_antipode_examples():
    assert antipode(U.gen("E1")) == -U.word(["K1^-1", "E1"])
    assert antipode(U.gen("K1")) == U.gen("K1^-1")
    assert antipode(U.word(["E1", "F1"])) == normal_form(["F1", "E1"], U)
    assert antipode(U.gen("F2")) == -U.word(["F2", "K2"])


@pytest.mark.parametrize("kind,l", [("U", None), ("U", 3), ("u", 3), ("uGeq0", 3), ("uLeq0", 3), ("u1", 3), ("Dphi", 3), ("u", 5)])
def test_hopf_axioms(kind, l):
    assert hopf_axiom_failures(get_algebra(kind, l), samples=40, seed=11) == []


def test_axiom_checker_detects_a_wrong_antipode(monkeypatch):
    import hopf_forge.hopf.coproduct as co

    monkeypatch.setattr(co, "_ANTIPODE", {})
    e1 = U.gen("E1")
    (m,) = e1.terms
    co._ANTIPODE[(U, m)] = co.antipode_mono(U, m).scale(2)
    assert single_axiom_failures(e1) != []
    assert hopf_axiom_failures(U, samples=5) != []


# -- the pairing ----------------------------------------------------------------------------


def test_pairing_examples():
    P, M = gen_pair(3)
    f = P.field
    assert pairing(P.gen("E1"), M.gen("F1")) == (f.q ** 2 - 1).inverse()
    assert pairing(P.gen("E2"), M.gen("F2")) == 0
    assert pairing(P.gen("K1"), M.gen("K2")) == f.q ** -1
    assert pairing(P.one(), M.gen("K1")) == 1
    assert pairing(P.gen("K1"), M.gen("K1")) == f.q ** 2
    assert pairing(P.gen("E1"), M.gen("F1"), normalization="symmetric") == (f.q - f.q ** -1).inverse()


def test_pairing_inverse_examples():
    P, M = gen_pair(3)
    f = P.field
    assert pairing_inverse(P.gen("K1"), M.gen("K2")) == f.q
    assert pairing_inverse(P.one(), M.one()) == 1
    assert pairing_inverse(P.gen("E1"), M.gen("F1")) == -pairing(P.gen("E1"), M.gen("F1"))


def test_pairing_needs_borels():
    P, M = gen_pair(3)
    with pytest.raises(ValueError):
        pairing(M.gen("F1"), P.gen("E1"))
    with pytest.raises(ValueError):
        get_pairing(3, "other")


def _grid(alg, cap=2):
    _, it = enumerate_basis(alg)
    return [m for m in it if max(m) <= cap and min(m) >= 0]


@pytest.mark.parametrize("normalization", ["printed", "symmetric"])
def test_pairing_axioms_on_grid(normalization):
    P, M = gen_pair(3)
    p = get_pairing(3, normalization)
    assert axiom_failures(p, _grid(P), _grid(M)) == []


def test_pairing_axioms_on_products():
    # phi(ab, x) and phi(a, xy) with both factors arbitrary monomials (sampled)
    P, M = gen_pair(3)
    p = get_pairing(3)
    f = P.field
    xs, ys = _grid(P), _grid(M)
    rng = random.Random(2)
    for _ in range(150):
        a, b = rng.choice(xs), rng.choice(xs)
        x = rng.choice(ys)
        ab = P.monomial(a) * P.monomial(b)
        rhs = f.zero
        for (x1, x2), c in delta_mono(M, x).terms.items():
            rhs = rhs + c * p.mono(a, x1) * p.mono(b, x2)
        assert p.pair(ab, M.monomial(x)) == rhs
        y = rng.choice(ys)
        xy = M.monomial(x) * M.monomial(y)
        rhs = f.zero
        for (a1, a2), c in delta_mono(P, a).terms.items():
            rhs = rhs + c * p.mono(a1, y) * p.mono(a2, x)
        assert p.pair(P.monomial(a), xy) == rhs


def test_degree_orthogonality():
    P, M = gen_pair(3)
    p = get_pairing(3)
    for x in _grid(P):
        for y in _grid(M):
            if grade(x, P) != grade(y, M):
                assert p.mono(x, y, prune=False) == 0


def test_pruning_does_not_change_values():
    P, M = gen_pair(3)
    p = get_pairing(3)
    rng = random.Random(4)
    xs, ys = _grid(P), _grid(M)
    for _ in range(200):
        x, y = rng.choice(xs), rng.choice(ys)
        assert p.pair(P.monomial(x), M.monomial(y), prune=False) == p.pair(P.monomial(x), M.monomial(y))


def test_convolution_inverse():
    # sum phi(a1, x1) phi^-1(a2, x2) = eps(a) eps(x)
    P, M = gen_pair(3)
    p = get_pairing(3)
    f = P.field
    rng = random.Random(8)
    xs, ys = _grid(P), _grid(M)
    for _ in range(120):
        a, x = rng.choice(xs), rng.choice(ys)
        total = f.zero
        for (a1, a2), c in delta_mono(P, a).terms.items():
            for (x1, x2), d in delta_mono(M, x).terms.items():
                total = total + c * d * p.mono(a1, x1) * p.inverse_mono(a2, x2)
        expect = f.one if not any(a[7:]) and not any(x[:3]) else f.zero
        assert total == expect


# -- double crossproduct -------------------------------------------------------------------


def test_double_unit_and_trivial_products():
    P, M = gen_pair(3)
    one = double_pair(P.one(), M.one())
    x = double_pair(P.word(["E1", "K2"]), M.word(["F2", "F1"]))
    assert double_multiply(one, x) == x == double_multiply(x, one)
    e1 = double_pair(P.gen("E1"), M.one())
    f1 = double_pair(P.one(), M.gen("F1"))
    assert double_multiply(e1, f1) == double_pair(P.gen("E1"), M.gen("F1"))


def test_double_f1_e1_matches_presentation_only_when_symmetric():
    P, M = gen_pair(3)
    D = get_algebra("Dphi", 3)
    e1 = double_pair(P.gen("E1"), M.one())
    f1 = double_pair(P.one(), M.gen("F1"))
    presented = D.gen("F1") * D.gen("E1")
    assert to_dphi(double_multiply(f1, e1, "symmetric")) == presented
    diff = to_dphi(double_multiply(f1, e1, "printed")) - presented
    assert render_element(diff) == "q*Kt1^2 - q*K1"


def test_presentation_mismatches():
    assert presentation_mismatches(3, "symmetric") == []
    bad = presentation_mismatches(3, "printed")
    assert [(a, b) for a, b, _ in bad] == [("F1", "E1")]
    D = get_algebra("Dphi", 3)
    assert bad[0][2] == D.word(["Kt1", "Kt1"], D.field.q) - D.gen("K1").scale(D.field.q)


def test_double_associativity():
    P, M = gen_pair(3)
    rng = random.Random(6)
    letters_p = ["E1", "E2", "K1", "K2"]
    letters_m = ["F1", "F2", "K1", "K2"]

    def rand():
        a = P.word([rng.choice(letters_p) for _ in range(rng.randint(0, 2))])
        x = M.word([rng.choice(letters_m) for _ in range(rng.randint(0, 2))])
        return double_pair(a, x)

    for _ in range(100):
        a, b, c = rand(), rand(), rand()
        assert double_multiply(double_multiply(a, b), c) == double_multiply(a, double_multiply(b, c))


# -- pi, pi_z, eps_z ------------------------------------------------------------------------


def test_project_pi_examples():
    D, u = get_algebra("Dphi", 3), get_algebra("u", 3)
    assert project_pi(D.gen("Kt1")) == u.gen("K1")
    assert project_pi(D.gen("K1") - D.gen("Kt1")).is_zero()
    assert project_pi(D.word(["E1", "F1"])) == u.word(["E1", "F1"])


def test_pi_z_examples():
    D = get_algebra("Dphi", 3)
    f = cyclotomic_field(3)
    rng = random.Random(9)
    from hopf_forge.hopf import random_elements

    for d in random_elements(D, 20, 3, rng):
        assert pi_z(d, CentralParameter(f.one, f.one)) == project_pi(d)
    for k1, k2 in product(range(3), repeat=2):
        z = CentralParameter.from_powers(3, k1, k2)
        assert pi_z(D.word(["K1", "Kt1^-1"]), z) == get_algebra("u", 3).scalar(z.z1)
        assert pi_z(D.word(["K2", "Kt2^-1"]), z) == get_algebra("u", 3).scalar(z.z2)
    z = CentralParameter(f.q, f.one)
    assert pi_z(D.gen("E1"), z) == get_algebra("u", 3).gen("E1").scale(f.q ** 2)


def test_central_parameter_validation():
    f = cyclotomic_field(3)
    with pytest.raises(ValueError):
        CentralParameter(f(2), f.one)
    with pytest.raises(ValueError):
        CentralParameter(GENERIC.one, GENERIC.one)
    with pytest.raises(ValueError):
        pi_z(get_algebra("Dphi", 4).gen("E1"), CentralParameter.from_powers(4, 0, 0))


def test_eps_z_examples():
    f = cyclotomic_field(3)
    D = get_algebra("Dphi", 3)
    z = CentralParameter(f.one, f.one)
    rng = random.Random(10)
    from hopf_forge.hopf import random_elements

    for d in random_elements(D, 20, 3, rng):
        assert eps_z_value(d, z) == counit(d)
    z = CentralParameter(f.q, f.q ** 2)
    vals = eps_z(z)
    assert vals["E1"] == vals["E2"] == vals["F1"] == vals["F2"] == 0
    assert vals["Kt2"] == f.q ** -2
    assert vals["K1"] ** 2 == f.q


@pytest.mark.parametrize("l", [3, 5])
def test_pi_z_and_eps_z_respect_relations(l):
    for k1, k2 in product(range(l), repeat=2):
        z = CentralParameter.from_powers(l, k1, k2)
        assert pi_z_relation_failures(z) == []
        assert eps_z_relation_failures(z) == []


def test_pi_z_is_multiplicative():
    D = get_algebra("Dphi", 3)
    rng = random.Random(12)
    from hopf_forge.hopf import random_elements

    xs = random_elements(D, 40, 3, rng)
    z = CentralParameter.from_powers(3, 1, 2)
    for a, b in zip(xs[::2], xs[1::2]):
        assert pi_z(a * b, z) == pi_z(a, z) * pi_z(b, z)
        assert eps_z_value(a * b, z) == eps_z_value(a, z) * eps_z_value(b, z)
