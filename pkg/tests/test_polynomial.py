from fractions import Fraction

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from braided_casimir.polynomial import Polynomial, WeightPolynomial, monomials_up_to

X = sympy.symbols("x0:3")

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
monos = st.tuples(*[st.integers(0, 2)] * 3)
polys = st.dictionaries(monos, coeffs, max_size=5).map(lambda t: Polynomial(3, t))


def to_sympy(p: Polynomial):
    out = sympy.Integer(0)
    for mono, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for x, e in zip(X, mono):
            term *= x ** e
        out += term
    return sympy.expand(out)


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_ring_operations_match_sympy(p, q):
    assert to_sympy(p + q) == sympy.expand(to_sympy(p) + to_sympy(q))
    assert to_sympy(p - q) == sympy.expand(to_sympy(p) - to_sympy(q))
    assert to_sympy(p * q) == sympy.expand(to_sympy(p) * to_sympy(q))


@settings(max_examples=40, deadline=None)
@given(polys, st.tuples(coeffs, coeffs, coeffs))
def test_evaluate_matches_sympy(p, point):
    want = to_sympy(p).subs(dict(zip(X, [sympy.Rational(c.numerator, c.denominator) for c in point])))
    got = p.evaluate(point)
    assert sympy.Rational(got.numerator, got.denominator) == want


@settings(max_examples=40, deadline=None)
@given(polys, polys)
def test_substitute_is_composition(p, q):
    x1 = Polynomial.variable(3, 1)
    images = [q, x1, x1 * 2 + 1]
    got = to_sympy(p.substitute(images))
    want = sympy.expand(to_sympy(p).subs({X[0]: to_sympy(q), X[1]: X[1], X[2]: 2 * X[1] + 1}, simultaneous=True))
    assert got == want


@settings(max_examples=30, deadline=None)
@given(polys)
def test_json_roundtrip(p):
    assert Polynomial.from_json(3, p.to_json()) == p


def test_zero_terms_are_dropped_and_equality_with_scalars():
    p = Polynomial(2, {(1, 0): Fraction(0), (0, 0): Fraction(3)})
    assert p == Polynomial.constant(2, 3)
    assert p.degree() == 0
    assert not Polynomial(2)


def test_power_and_degree():
    x = Polynomial.variable(2, 0) + Polynomial.variable(2, 1)
    assert (x ** 3).degree() == 3
    assert (x ** 0) == Polynomial.constant(2, 1)


def test_monomials_up_to_counts():
    # number of monomials of degree <= d in k variables is C(k+d, d)
    assert len(list(monomials_up_to(3, 2))) == 10
    assert len(list(monomials_up_to(2, 4))) == 15


def test_weight_polynomial_closure_and_printing():
    mu1, mu2 = WeightPolynomial.mu(2, 1), WeightPolynomial.mu(2, 2)
    p = mu1 * mu2 - mu1
    assert isinstance(p, WeightPolynomial)
    assert str(p) == "mu1*mu2 - mu1"
