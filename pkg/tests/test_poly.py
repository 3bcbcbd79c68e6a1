import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schubert import kernels
from schubert.poly import (
    Polynomial,
    PolynomialError,
    divided_difference,
    divided_difference_word,
    in_staircase,
    leading_monomial,
    leading_term,
    monomial_quotient,
    order_key,
    parse_monomial,
    parse_polynomial,
    staircase,
    swap_action,
)
from schubert.verify import divided_difference_oracle, random_polynomial

P = parse_polynomial

monomials = st.lists(st.integers(0, 5), max_size=6).map(tuple)
polys = st.dictionaries(monomials, st.integers(-50, 50), max_size=8).map(Polynomial)


def test_swap_action():
    assert swap_action(1, P("x1^2*x2")) == P("x1*x2^2")
    assert swap_action(1, P("x3")) == P("x3")
    f = P("3*x1^2*x4 - x2*x3 + 7")
    assert swap_action(2, swap_action(2, f)) == f


def test_divided_difference_examples():
    assert divided_difference(1, P("x1^3")) == P("x1^2 + x1*x2 + x2^2")
    assert divided_difference(1, P("x2^2")) == P("-x2 - x1")
    assert divided_difference(3, P("17")) == Polynomial()
    assert divided_difference(1, P("x1^2*x2")) == P("x1*x2")
    assert divided_difference_word((1, 2), P("x1^2*x2")) == P("x1 + x2")


def test_rational_oracle_examples():
    assert divided_difference_oracle(1, P("x1^2*x2")) == P("x1*x2")
    assert divided_difference_oracle(1, P("x1^3")) == P("x1^2 + x1*x2 + x2^2")


def test_termwise_equals_rational_quotient():
    rng = random.Random(0)
    for _ in range(1000):
        f = random_polynomial(rng, nvars=rng.randint(1, 8), max_degree=10)
        i = rng.randint(1, 7)
        assert divided_difference(i, f) == divided_difference_oracle(i, f)


@settings(max_examples=200, deadline=None)
@given(polys, polys, st.integers(1, 5))
def test_leibniz(f, g, i):
    lhs = divided_difference(i, f * g)
    rhs = divided_difference(i, f) * g + swap_action(i, f) * divided_difference(i, g)
    assert lhs == rhs


@settings(max_examples=200, deadline=None)
@given(polys, st.integers(1, 5))
def test_nilcoxeter_relations(f, i):
    d = divided_difference
    assert not d(i, d(i, f))
    assert divided_difference_word((i, i + 1, i), f) == divided_difference_word((i + 1, i, i + 1), f)
    assert d(i, d(i + 3, f)) == d(i + 3, d(i, f))
    assert not d(i, f + swap_action(i, f))
    assert not divided_difference_word((1, 1), f)


@settings(max_examples=200, deadline=None)
@given(polys, polys)
def test_order_is_multiplicative(f, g):
    if not f or not g:
        return
    (mf, cf), (mg, cg) = leading_term(f), leading_term(g)
    m, c = leading_term(f * g)
    assert m == tuple(a + b for a, b in zip(mf + (0,) * 6, mg + (0,) * 6))[: len(m)]
    assert c == cf * cg


def test_leading_monomial():
    assert leading_term(P("3*x3^2 + 2*x3*x7 - 7*x5*x7")) == ((0, 0, 0, 0, 1, 0, 1), -7)
    assert leading_monomial(P("x1 + x2")) == (0, 1)
    assert leading_monomial(P("5*x2*x4")) == (0, 1, 0, 1)
    with pytest.raises(PolynomialError, match="no leading monomial"):
        leading_term(Polynomial())


def test_order_degree_first():
    assert order_key((0, 0, 0, 0, 1)) < order_key((2,))
    assert order_key((1, 1)) < order_key((0, 2))


def test_monomial_quotient():
    assert monomial_quotient((2, 1), ()) == (2, 1)
    assert monomial_quotient((1, 1), (0, 1)) == (1,)
    assert monomial_quotient((1,), (0, 1)) is None


def test_closure_on_staircase():
    rng = random.Random(5)
    n = 5
    box = [m for m in [(a, b, c, d) for a in range(5) for b in range(4) for c in range(3) for d in range(2)]]
    for _ in range(200):
        f = Polynomial({rng.choice(box): rng.randint(-5, 5) for _ in range(4)})
        for t in range(1, n):
            assert all(in_staircase(m, n) for m, _ in divided_difference(t, f).items())


def test_staircase():
    assert staircase(4) == (3, 2, 1)
    assert staircase(1) == ()


def test_text_round_trip():
    for text in ["3*x1^2*x2 - 7*x5*x7", "x1^2 + x1*x2 + x2^2", "-x2 - x1 + 4", "0"]:
        f = P(text) if text != "0" else Polynomial()
        assert P(str(f)) == f if f else str(f) == "0"
    rng = random.Random(6)
    for _ in range(300):
        f = random_polynomial(rng)
        if f:
            assert P(str(f)) == f


def test_parse_forms():
    assert P("2*x1*3") == P("6*x1")
    assert P("x1 * x1") == P("x1^2")
    assert parse_monomial("x3*x4") == (0, 0, 1, 1)
    assert parse_monomial("1") == ()


@pytest.mark.parametrize("bad, pos", [("x1 + y2", 5), ("x1 +", 4), ("3 x1", 2), ("x0", 0)])
def test_parse_errors(bad, pos):
    with pytest.raises(PolynomialError) as err:
        P(bad)
    assert err.value.position == pos


def test_display_order():
    assert str(P("x3^2 + x1*x2 + x1^2 + x2*x3 + x2^2 + x1*x3")) == "x1^2 + x1*x2 + x1*x3 + x2^2 + x2*x3 + x3^2"
    assert str(P("1 - x1")) == "-x1 + 1"


# --- kernels ---------------------------------------------------------------------


backends = [kernels.python_backend]
if kernels.compiled_backend is not None:
    backends.append(kernels.compiled_backend)


@pytest.mark.parametrize("backend", backends, ids=lambda b: b.BACKEND)
def test_backends_agree(backend):
    rng = random.Random(7)
    ref = kernels.python_backend
    for _ in range(300):
        a = random_polynomial(rng).terms
        b = random_polynomial(rng, max_degree=4).terms
        i = rng.randint(1, 9)
        assert backend.swap(a, i) == ref.swap(a, i)
        assert backend.divided_difference(a, i) == ref.divided_difference(a, i)
        assert backend.multiply(a, b) == ref.multiply(a, b)
        assert backend.add_scaled(a, b, -3) == ref.add_scaled(a, b, -3)


def test_compiled_backend_is_selected_when_built():
    if kernels.compiled_backend is None:
        pytest.skip("compiled extension not built")
    assert kernels.BACKEND in ("cython", "python")


def test_big_integers_survive():
    f = Polynomial({(1,): 10**30})
    assert (f * f).coefficient((2,)) == 10**60
    assert divided_difference(1, f * f).coefficient((1,)) == 10**60
