from fractions import Fraction
from math import comb

from hypothesis import given, settings, strategies as hyp

from rowmotion.families import rectangle
from rowmotion.qpoly import (
    Polynomial,
    RationalFunction,
    poly_gcd,
    q_binomial,
    q_factorial,
    q_number,
    rational_roots,
)

fractions = hyp.fractions(
    min_value=-10, max_value=10, max_denominator=12
)
polys = hyp.lists(fractions, max_size=6).map(Polynomial)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def test_q_number_and_binomial_values():
    assert q_number(3) == Polynomial((1, 1, 1))
    assert q_binomial(4, 2) == RationalFunction(Polynomial((1, 1, 2, 1, 1)))
    assert q_binomial(5, 0) == RationalFunction.const(1)


def test_q_binomial_specializes_to_binomial():
    for n in range(8):
        for k in range(n + 1):
            assert q_binomial(n, k).evaluate(1) == comb(n, k)


def test_q_binomial_counts_weighted_ideals():
    # sum over ideals of q^(n - #I) is the Gaussian binomial for a rectangle
    for a in range(1, 5):
        for b in range(1, 5):
            P = rectangle(a, b)
            total = Polynomial()
            for mask in P.ideal_masks():
                k = P.n - bin(mask).count("1")
                total = total + Polynomial.q_power(k)
            assert RationalFunction(total) == q_binomial(a + b, b)


def test_q_factorial():
    assert q_factorial(3) == q_number(1) * q_number(2) * q_number(3)


@given(polys, polys, polys)
@settings(max_examples=60, deadline=None)
def test_polynomial_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert f - f == Polynomial()
    assert (f * g) * h == f * (g * h)


@given(polys, nonzero_polys)
@settings(max_examples=60, deadline=None)
def test_divmod_is_exact(f, g):
    q, r = f.divmod(g)
    assert q * g + r == f
    assert r.is_zero() or r.degree < g.degree


@given(nonzero_polys, nonzero_polys)
@settings(max_examples=60, deadline=None)
def test_gcd_divides_both(f, g):
    d = poly_gcd(f, g)
    assert f.divmod(d)[1].is_zero()
    assert g.divmod(d)[1].is_zero()
    assert d.leading() == 1


@given(nonzero_polys, nonzero_polys, nonzero_polys)
@settings(max_examples=40, deadline=None)
def test_gcd_scales_with_common_factor(f, g, h):
    assert poly_gcd(f * h, g * h) == poly_gcd(f, g) * h.monic()


@given(polys, nonzero_polys, polys, nonzero_polys)
@settings(max_examples=60, deadline=None)
def test_rational_function_field_axioms(a, b, c, d):
    x = RationalFunction(a, b)
    y = RationalFunction(c, d)
    assert x + y - y == x
    if not y.is_zero():
        assert (x / y) * y == x
    # canonical form: monic denominator, coprime with the numerator
    assert x.den.leading() == 1
    if not x.num.is_zero():
        assert poly_gcd(x.num, x.den).degree == 0


@given(polys, nonzero_polys, hyp.fractions(min_value=-5, max_value=5, max_denominator=7))
@settings(max_examples=60, deadline=None)
def test_evaluation_is_a_homomorphism(a, b, z):
    if b.evaluate(z) == 0:
        return
    x = RationalFunction(a, b)
    assert x.evaluate(z) == a.evaluate(z) / b.evaluate(z)


def test_rational_roots_exact():
    # (q - 1/2)(q + 3)(q^2 + 1) has rational roots 1/2 and -3 only
    p = (
        Polynomial((Fraction(-1, 2), 1))
        * Polynomial((3, 1))
        * Polynomial((1, 0, 1))
    )
    assert rational_roots(p) == [Fraction(-3), Fraction(1, 2)]
    assert rational_roots(Polynomial((0, 0, 1))) == [Fraction(0)]


def test_rational_function_pole_detection():
    x = RationalFunction(Polynomial((1,)), Polynomial((-1, 1)))  # 1/(q-1)
    try:
        x.evaluate(1)
    except ZeroDivisionError:
        pass
    else:
        raise AssertionError("expected a pole at q=1")
