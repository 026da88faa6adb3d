from fractions import Fraction as F
from itertools import permutations

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from recrel.errors import ParseError
from recrel.poly import (
    GRLEX,
    LEX,
    EmptyDivisorList,
    EmptyInput,
    GroebnerBasis,
    Monomial,
    Polynomial,
    ZeroDivisor,
    ZeroPolynomial,
    buchberger,
    compare,
    divide,
    ideal_membership,
    is_groebner,
    parse_polynomial,
    reduce_basis,
    s_polynomial,
    standard_monomials,
)

P = parse_polynomial
X, Y = Polynomial.x(), Polynomial.y()

EXAMPLE_RELATIONS = [P("14 - 21*x + 2*y + 5*x^2"), P("12 - 8*x - 9*y + 5*x*y"), P("16 + 6*x - 27*y + 5*y^2")]
EXAMPLE_BASIS = [P("8 - 14*y + 7*y^2 - y^3"), P("16 + 6*x - 27*y + 5*y^2")]


def test_compare_examples():
    assert compare(Monomial(2, 0), Monomial(1, 1), LEX) == 1
    assert compare(Monomial(0, 2), Monomial(1, 0), GRLEX) == 1
    assert compare(Monomial(0, 3), Monomial(1, 0), LEX) == -1
    assert compare(Monomial(1, 1), Monomial(1, 1), GRLEX) == 0


def test_grlex_increasing_enumeration():
    ms = [Monomial(a, b) for a in range(3) for b in range(3) if a + b <= 2]
    ms.sort(key=GRLEX.key)
    assert ms == [Monomial(0, 0), Monomial(0, 1), Monomial(1, 0), Monomial(0, 2), Monomial(1, 1), Monomial(2, 0)]


@given(st.tuples(st.integers(0, 6), st.integers(0, 6)), st.tuples(st.integers(0, 6), st.integers(0, 6)))
def test_order_sanity(a, b):
    a, b = Monomial(*a), Monomial(*b)
    if a.degree < b.degree:
        assert compare(a, b, GRLEX) == -1
    assert compare(a, b, LEX) == ((a.ex, a.ey) > (b.ex, b.ey)) - ((a.ex, a.ey) < (b.ex, b.ey))


def test_leading_term():
    assert EXAMPLE_RELATIONS[2].leading_term(LEX) == (6, Monomial(1, 0))
    assert EXAMPLE_BASIS[0].leading_term(LEX) == (-1, Monomial(0, 3))
    assert Polynomial.constant(F(3, 7)).leading_term(GRLEX) == (F(3, 7), Monomial(0, 0))
    with pytest.raises(ZeroPolynomial):
        Polynomial().leading_term(LEX)


def test_zero_coefficients_are_dropped():
    p = Polynomial({(1, 0): 2, (0, 1): 0}) + Polynomial({(1, 0): -2})
    assert p.is_zero() and len(p) == 0
    assert str(p) == "0"


def test_evaluate_and_multiply():
    p = EXAMPLE_RELATIONS[0]
    assert p.evaluate(2, 4) == 0
    assert p.evaluate(0, 0) == 14
    assert X * p == P("14*x - 21*x^2 + 2*x*y + 5*x^3")


def test_ring_axioms_spot():
    p, q, r = P("x^2 - y"), P("x*y + 3/2"), P("y^3 - x")
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert p - p == Polynomial()
    assert p ** 2 == p * p
    assert 3 * p == p.scale(3)


def test_divide_examples():
    f = P("x*y^2 + 1")
    qs, r = divide(f, [P("x*y + 1"), P("y + 1")], LEX)
    assert r == Polynomial.constant(2)
    assert qs == [Y, Polynomial.constant(-1)]

    g = P("x^3 - 2*x*y + 7")
    qs, r = divide(g, [g], LEX)
    assert qs == [Polynomial.constant(1)] and r.is_zero()

    prod = P("14*x - 21*x^2 + 2*x*y + 5*x^3")
    assert divide(prod, [EXAMPLE_RELATIONS[0]], LEX)[1].is_zero()


def test_divide_matches_sympy_reduced():
    x, y = sympy.symbols("x y")
    _, r = sympy.reduced(x * y**2 + 1, [x * y + 1, y + 1], x, y, order="lex")
    assert Polynomial.constant(int(r)) == divide(P("x*y^2 + 1"), [P("x*y + 1"), P("y + 1")], LEX)[1]


def test_divide_errors():
    with pytest.raises(EmptyDivisorList):
        divide(X, [], LEX)
    with pytest.raises(ZeroDivisor):
        divide(X, [Y, Polynomial()], LEX)


small_coeff = st.builds(F, st.integers(-5, 5), st.integers(1, 3))
polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), small_coeff, max_size=5
).map(Polynomial)
nonzero_polys = polys.filter(bool)


@given(polys, st.lists(nonzero_polys, min_size=1, max_size=3), st.sampled_from([LEX, GRLEX]))
def test_division_invariants(f, divisors, order):
    qs, r = divide(f, divisors, order)
    total = r
    for q, g in zip(qs, divisors):
        total = total + q * g
    assert total == f
    leads = [g.leading_monomial(order) for g in divisors]
    assert not any(lm.divides(m) for m in r.monomials() for lm in leads)
    if f:
        top = order.key(f.leading_monomial(order))
        for q, g in zip(qs, divisors):
            if q:
                assert order.key((q * g).leading_monomial(order)) <= top


def test_s_polynomial_examples():
    f, g = P("x^2 - y"), P("x*y - 1")
    assert s_polynomial(f, g, LEX) == P("x - y^2")
    assert s_polynomial(f, f, LEX).is_zero()
    assert s_polynomial(f.scale(3), g.scale(F(-2, 5)), LEX) == s_polynomial(f, g, LEX)
    with pytest.raises(ZeroPolynomial):
        s_polynomial(f, Polynomial(), LEX)


def test_buchberger_examples():
    f = P("x^2 - y")
    assert buchberger([f], LEX).polys == (f,)
    G = buchberger([P("x^2 - y"), P("x*y - 1")], LEX)
    assert is_groebner(G)
    assert reduce_basis(G).polys == (P("y^3 - 1"), P("x - y^2"))
    with pytest.raises(EmptyInput):
        buchberger([Polynomial()], LEX)


def test_buchberger_worked_example():
    G = buchberger(EXAMPLE_RELATIONS, LEX)
    assert all(p in G.polys for p in EXAMPLE_RELATIONS)
    assert is_groebner(G)
    printed = GroebnerBasis(tuple(EXAMPLE_BASIS), LEX)
    assert all(ideal_membership(p, G) for p in EXAMPLE_BASIS)
    assert all(ideal_membership(p, printed) for p in G.polys)
    R = reduce_basis(G)
    assert R.polys == (P("y^3 - 7*y^2 + 14*y - 8"), P("x + 5/6*y^2 - 9/2*y + 8/3"))
    assert reduce_basis(printed) == R


def test_ideal_membership_examples():
    G = reduce_basis(buchberger(EXAMPLE_RELATIONS, LEX))
    assert ideal_membership(P("14*x - 21*x^2 + 2*x*y + 5*x^3"), G)
    assert ideal_membership(Polynomial(), G)
    assert not ideal_membership(Polynomial.constant(1), G)


def test_reduce_basis_trivial_cases():
    f = P("3*x^2 - 6*y")
    R = reduce_basis(GroebnerBasis((f,), LEX))
    assert R.polys == (P("x^2 - 2*y"),) and R.reduced
    assert reduce_basis(R) == R


def _sympy_reduced(gens, order):
    x, y = sympy.symbols("x y")
    exprs = [sum(sympy.Rational(c.numerator, c.denominator) * x**m.ex * y**m.ey for m, c in g.terms.items()) for g in gens]
    G = sympy.groebner(exprs, x, y, order=order.value, domain="QQ")
    out = []
    for e in G.exprs:
        poly = sympy.Poly(e, x, y)
        out.append(Polynomial({m: F(int(c.p), int(c.q)) for m, c in zip(poly.monoms(), poly.coeffs())}))
    return set(out)


@settings(max_examples=40, deadline=None)
@given(st.lists(nonzero_polys, min_size=1, max_size=3), st.sampled_from([LEX, GRLEX]))
def test_reduced_basis_matches_sympy(gens, order):
    G = buchberger(gens, order)
    assert is_groebner(G)
    R = reduce_basis(G)
    assert set(R.polys) == _sympy_reduced(gens, order)
    assert reduce_basis(R) == R
    for g in R.polys:
        lm = g.leading_monomial(order)
        assert g.coefficient(lm) == 1
        others = [h.leading_monomial(order) for h in R.polys if h is not g]
        assert not any(o.divides(m) for o in others for m in g.monomials())


@settings(max_examples=20, deadline=None)
@given(st.lists(nonzero_polys, min_size=2, max_size=3))
def test_reduced_basis_permutation_invariant(gens):
    results = {reduce_basis(buchberger(list(p), LEX)) for p in permutations(gens)}
    assert len(results) == 1


def test_standard_monomials():
    G = reduce_basis(buchberger(EXAMPLE_RELATIONS, LEX))
    assert standard_monomials(G) == [Monomial(0, 0), Monomial(0, 1), Monomial(0, 2)]


@pytest.mark.parametrize(
    "text, expected",
    [
        ("5*x^3 - 21*x^2 + 2*x*y + 14*x", Polynomial({(3, 0): 5, (2, 0): -21, (1, 1): 2, (1, 0): 14})),
        ("  -x + 5/6 * y^2 ", Polynomial({(1, 0): -1, (0, 2): F(5, 6)})),
        ("0", Polynomial()),
        ("x*y*x", Polynomial({(2, 1): 1})),
        ("2*3", Polynomial.constant(6)),
    ],
)
def test_parse(text, expected):
    assert parse_polynomial(text) == expected


@pytest.mark.parametrize("text, column", [("x +", 4), ("x y", 3), ("3/0*x", 3), ("x & y", 3), ("x^", 3)])
def test_parse_errors_report_column(text, column):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text)
    assert info.value.column == column


def test_canonical_text_form():
    assert P("14 - 21*x + 2*y + 5*x^2").to_str(LEX) == "5*x^2 - 21*x + 2*y + 14"
    assert P("16 + 6*x - 27*y + 5*y^2").to_str(GRLEX) == "5*y^2 + 6*x - 27*y + 16"
    assert P("x + 5/6*y^2 - 9/2*y + 8/3").to_str(LEX) == "x + 5/6*y^2 - 9/2*y + 8/3"
    assert P("-y^3 + 1").to_str(LEX) == "-y^3 + 1"


@given(polys, st.sampled_from([LEX, GRLEX]))
def test_print_parse_roundtrip(p, order):
    assert parse_polynomial(p.to_str(order)) == p


def test_primitive_normalization():
    p = P("-7/5*x^2 + 21/10*x - 1/5*y - 7/5")
    assert p.primitive(LEX) == P("14*x^2 - 21*x + 2*y + 14")
