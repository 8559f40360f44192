import json
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import Q, sym_cyclo_equal, sym_equal, sym_qbinom, sym_qfac, sym_qint, to_sympy
from hopf_forge.qfield import (
    GENERIC,
    FieldMismatch,
    Matrix,
    cyclotomic_field,
    cyclotomic_polynomial,
    field_sqrt,
    q_binomial,
    q_binomial_a,
    q_binomial_a_product,
    q_bracket_a,
    q_factorial,
    q_factorial_a,
    q_int,
    render_scalar,
    scalar_from_json,
    scalar_to_json,
    zeta_sqrt,
)

G = GENERIC
q = G.q


# -- strategies ---------------------------------------------------------------

small_frac = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def laurent(draw, field=G):
    coeffs = draw(st.dictionaries(st.integers(-3, 3), small_frac, max_size=4))
    return field.from_laurent(coeffs)


@st.composite
def generic_scalar(draw):
    num = draw(laurent())
    den = draw(laurent())
    if den.is_zero():
        return num
    return num / den


def cyclo_scalar(l):
    f = cyclotomic_field(l)
    return st.lists(small_frac, min_size=f.degree, max_size=f.degree).map(f.from_vector)


# -- q-integers and friends -------------------------------------------------------


def test_q_int_examples():
    assert q_int(0) == 0
    assert q_int(2) == q + q ** -1
    assert q_int(3, cyclotomic_field(3)) == 0


@pytest.mark.parametrize("n", range(-6, 7))
def test_q_int_matches_definition(n):
    assert sym_equal(to_sympy(q_int(n)), sym_qint(n))
    assert q_int(-n) == -q_int(n)


def test_q_factorial_examples():
    assert q_factorial(0) == 1
    assert q_factorial(2) == q + q ** -1
    # [2][3] multiplied out by sympy
    expected = sp.expand((Q + 1 / Q) * (Q**2 + 1 + Q**-2))
    assert sym_equal(to_sympy(q_factorial(3)), expected)
    with pytest.raises(ValueError):
        q_factorial(-1)


def test_q_binomial_examples():
    assert q_binomial(5, 0) == 1
    assert q_binomial(2, 1) == q + q ** -1
    assert sym_equal(to_sympy(q_binomial(4, 2)), sym_qbinom(4, 2))
    assert q_binomial(4, 2) == G.from_laurent({4: 1, 2: 1, 0: 2, -2: 1, -4: 1})
    with pytest.raises(ValueError):
        q_binomial(2, 3)


@pytest.mark.parametrize("n", range(0, 9))
def test_q_binomial_quotient_and_pascal(n):
    for j in range(n + 1):
        val = q_binomial(n, j)
        assert sym_equal(to_sympy(val), sym_qbinom(n, j))
        assert val.laurent_terms() is not None
        if 0 < j < n:
            # [n j] = q^j [n-1 j] + q^-(n-j) [n-1 j-1]
            assert val == q ** j * q_binomial(n - 1, j) + q ** (j - n) * q_binomial(n - 1, j - 1)


def test_q_bracket_a():
    for m in range(-3, 5):
        assert q_bracket_a(G.one, m) == q_int(m)
        assert q_bracket_a(q ** m, 1) == q_int(m + 1)
    a = G(3) / 2
    assert sym_equal(to_sympy(q_bracket_a(a, 2)), (sp.Rational(3, 2) * Q**2 - sp.Rational(2, 3) * Q**-2) / (Q - 1 / Q))
    with pytest.raises(ValueError):
        q_bracket_a(G.zero, 1)


def test_q_binomial_a_basic():
    for a in (G(2), q ** 3, q + 1):
        for n in range(-3, 4):
            assert q_binomial_a(a, n, 0) == 1
            for j in range(4):
                assert q_binomial_a(a * q ** -1, n + 1, j) == q_binomial_a(a, n, j)


def test_q_binomial_a_shift_independence():
    assert q_binomial_a(q ** 2, 1, 2, shift=1) == q_binomial_a(q ** 2, 1, 2, shift=2)
    combos = [
        (G(2), -1, 2, 1, 3),
        (G(2), 0, 3, 0, 2),
        (q, -2, 1, 2, 5),
        (q ** 2, 1, 3, 0, 4),
        (q + 1, -1, 2, 1, 2),
        (G(3) * q, 2, 4, 0, 1),
        (q ** -1, 0, 2, 0, 3),
        (G(5), -3, 2, 3, 6),
        (q ** 4, 1, 2, 0, 1),
        (G(Fraction(1, 2)), 0, 1, 0, 7),
    ]
    for a, n, j, s1, s2 in combos:
        assert q_binomial_a(a, n, j, shift=s1) == q_binomial_a(a, n, j, shift=s2)
        assert q_binomial_a(a, n, j) == q_binomial_a_product(a, n, j)


def test_q_binomial_a_quotient_form_when_defined():
    for a in (G(2), q + 2):
        for n in range(0, 5):
            for j in range(n + 1):
                expect = q_factorial_a(a, n) / (q_factorial(j) * q_factorial_a(a, n - j))
                assert q_binomial_a(a, n, j) == expect


def test_q_binomial_a_integral_argument():
    # [q; 1 choose 2] has a vanishing factor [q; -1] = 0; the product form handles it
    assert q_binomial_a(G.one, 1, 1) == 1
    assert q_binomial_a(q ** -2, 1, 1) == q_bracket_a(q ** -2, 1)


# -- fields ---------------------------------------------------------------------------


@pytest.mark.parametrize("l", range(1, 16))
def test_cyclotomic_polynomial_matches_sympy(l):
    mine = cyclotomic_polynomial(l)
    assert sym_equal(sum(sp.Rational(int(c.p), int(c.q)) * Q**i for i, c in enumerate(mine.coeffs())), sp.cyclotomic_poly(l, Q))


def test_cyclotomic_field_rejects_small_l():
    for l in (1, 2):
        with pytest.raises(ValueError):
            cyclotomic_field(l)


@settings(max_examples=200, deadline=None)
@given(generic_scalar(), generic_scalar(), generic_scalar())
def test_generic_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if not a.is_zero():
        assert a * a.inverse() == 1


@settings(max_examples=200, deadline=None)
@given(generic_scalar(), generic_scalar())
def test_generic_arithmetic_against_sympy(a, b):
    A, B = to_sympy(a), to_sympy(b)
    assert sym_equal(to_sympy(a + b), A + B)
    assert sym_equal(to_sympy(a * b), A * B)
    if not b.is_zero():
        assert sym_equal(to_sympy(a / b), A / B)


@pytest.mark.parametrize("l", [3, 5, 7])
def test_cyclotomic_field_axioms(l):
    f = cyclotomic_field(l)

    @settings(max_examples=200, deadline=None)
    @given(cyclo_scalar(l), cyclo_scalar(l), cyclo_scalar(l))
    def check(a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert sym_cyclo_equal(to_sympy(a * b), to_sympy(a) * to_sympy(b), l)
        if not a.is_zero():
            assert a * a.inverse() == f.one

    check()


def test_q_is_primitive_root():
    for l in (3, 5, 7, 9):
        f = cyclotomic_field(l)
        assert f.q ** l == 1
        assert all(f.q ** k != 1 for k in range(1, l))


def test_mixing_fields_is_an_error():
    with pytest.raises(FieldMismatch):
        _ = cyclotomic_field(3).q + cyclotomic_field(5).q
    with pytest.raises(FieldMismatch):
        _ = G.q + cyclotomic_field(5).q


def test_canonical_form_is_unique():
    a = (q ** 2 - 1) / (q - 1)
    b = q + 1
    assert a == b and hash(a) == hash(b)
    assert render_scalar(a) == render_scalar(b) == "q + 1"
    assert render_scalar(q ** -1) == "q^-1"


# -- square roots ---------------------------------------------------------------------


def test_zeta_sqrt_examples():
    f3, f5 = cyclotomic_field(3), cyclotomic_field(5)
    assert zeta_sqrt(f3.one) == 1
    assert zeta_sqrt(f3.q) == f3.q ** 2
    assert zeta_sqrt(f5.q ** 2) == f5.q


@pytest.mark.parametrize("l", [3, 5, 7])
def test_zeta_sqrt_squares_back(l):
    f = cyclotomic_field(l)
    for k in range(l):
        r = zeta_sqrt(f.q ** k)
        assert r * r == f.q ** k


def test_zeta_sqrt_errors():
    with pytest.raises(ValueError):
        zeta_sqrt(cyclotomic_field(4).q)
    with pytest.raises(ValueError):
        zeta_sqrt(cyclotomic_field(3)(2))
    with pytest.raises(ValueError):
        zeta_sqrt(G.q)


@pytest.mark.parametrize("l", [3, 5, 7])
def test_field_sqrt(l):
    f = cyclotomic_field(l)
    roots = (f(2), f.q, f.q + 1, f(Fraction(3, 2)) * f.q, f.q - 2, f.q ** 2 + f(Fraction(1, 3)))
    for root in roots:
        x = root * root
        r = field_sqrt(x)
        assert r is not None and r * r == x
        assert r == root or r == -root
    assert field_sqrt(f.zero) == 0


def test_field_sqrt_non_square():
    # 2 is not a square in Q(zeta_3) = Q(sqrt(-3)); -3 is
    f = cyclotomic_field(3)
    assert field_sqrt(f(2)) is None
    r = field_sqrt(f(-3))
    assert r is not None and r * r == -3


# -- JSON -----------------------------------------------------------------------------


@settings(max_examples=100, deadline=None)
@given(generic_scalar())
def test_generic_json_round_trip(a):
    data = scalar_to_json(a)
    text = json.dumps(data)
    b = scalar_from_json(json.loads(text))
    assert b == a
    assert json.dumps(scalar_to_json(b)) == text


@pytest.mark.parametrize("l", [3, 5, 7])
def test_cyclotomic_json_round_trip(l):
    f = cyclotomic_field(l)
    for x in (f.zero, f.one, f.q, f.q ** 2 + f(Fraction(1, 3)), f.q ** -1):
        data = scalar_to_json(x)
        assert data["l"] == l and len(data["zeta"]) == f.degree
        assert scalar_from_json(json.loads(json.dumps(data))) == x


def test_bad_scalar_json():
    for bad in ([], {"l": 3, "zeta": ["1"]}, {"num": [[-1, "1"]], "den": [[0, "1"]]}, {"foo": 1}):
        with pytest.raises(ValueError):
            scalar_from_json(bad)


# -- linear algebra -------------------------------------------------------------------


def test_kernel_examples():
    assert Matrix.identity(G, 3).kernel() == []
    assert len(Matrix.zeros(G, 2, 3).kernel()) == 3
    m = Matrix(G, [[G.one, q], [q ** -1, G.one]])
    ker = m.kernel()
    assert len(ker) == 1
    v = ker[0]
    # proportional to (q, -1)
    assert v[0] * (-1) == v[1] * q
    assert all(x.is_zero() for x in m.apply(v))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_rank_nullity(rows, cols, data):
    entries = [[data.draw(laurent()) for _ in range(cols)] for _ in range(rows)]
    m = Matrix(G, entries, cols)
    ker = m.kernel()
    assert m.rank() + len(ker) == cols
    for v in ker:
        assert all(x.is_zero() for x in m.apply(v))


def test_inverse_and_products():
    f = cyclotomic_field(5)
    m = Matrix(f, [[f.q, f.one], [f.one, f.q ** 2 + 1]])
    inv = m.inverse()
    assert m * inv == Matrix.identity(f, 2)
    assert (m ** 3) == m * m * m
