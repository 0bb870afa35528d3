from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from alterna.exactmath import (
    FactoredFraction,
    LaurentPoly,
    RationalFunction,
    TruncatedSeries,
    divide_by_plus_inverse,
    poly_arith,
    ratfun_normalize,
    series_expand,
)

q = LaurentPoly.var("q")
b0 = LaurentPoly.var("b0")
b1 = LaurentPoly.var("b1")
t = LaurentPoly.var("t")


@st.composite
def laurent(draw, names=("q", "b0"), lo=-3, hi=3):
    n = draw(st.integers(0, 4))
    p = LaurentPoly.const(draw(st.integers(-5, 5)))
    for _ in range(n):
        exps = {v: draw(st.integers(lo, hi)) for v in names}
        p = p + LaurentPoly.monomial(exps, draw(st.integers(-5, 5)))
    return p


points = st.fixed_dictionaries({
    "q": st.fractions(min_value=-9, max_value=9, max_denominator=7).filter(lambda x: x != 0),
    "b0": st.fractions(min_value=-9, max_value=9, max_denominator=7).filter(lambda x: x != 0),
})


def test_poly_arith_examples():
    assert poly_arith(b0, b0, "add") == 2 * b0
    assert poly_arith(b0 + b1, b0 - b1, "mul") == b0 ** 2 - b1 ** 2
    assert poly_arith(q - q ** -1, q + q ** -1, "mul") == q ** 2 - q ** -2


def test_poly_arith_rejects_unknown_op():
    with pytest.raises(ValueError):
        poly_arith(q, q, "div")


def test_laurent_printing_and_json():
    p = 3 * b0 ** 2 * b1 - q ** -1 + 1
    assert LaurentPoly.from_json(p.to_json()) == p
    assert str(LaurentPoly.const(0)) == "0"
    assert str(q ** 2 - q ** -2) == "q^2 - q^-2"


def test_ratfun_normalize_examples():
    assert ratfun_normalize(2 * b0, LaurentPoly.const(2)) == RationalFunction(b0)
    assert ratfun_normalize(q ** 2 - 1, q - 1) == RationalFunction(q + 1)
    r = ratfun_normalize(LaurentPoly.const(0), q + q ** -1)
    assert r.is_zero() and r == RationalFunction(0)


def test_ratfun_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RationalFunction(q, 0)


def test_series_geometric():
    s = series_expand(LaurentPoly.const(1), 1 - t, "t", 3)
    assert [s[i] for i in range(4)] == [LaurentPoly.const(1)] * 4


def test_series_product_truncates():
    a = TruncatedSeries.from_poly(1 + t, "t", 2)
    b = TruncatedSeries.from_poly(1 - t, "t", 2)
    assert (a * b).to_poly() == 1 - t ** 2


def test_divide_by_plus_inverse():
    assert divide_by_plus_inverse(q ** 2 - q ** -2, "q") == q - q ** -1
    assert divide_by_plus_inverse(q, "q") is None


def test_factored_fraction_basic():
    f = FactoredFraction(q, {"q": 1, "2": 1})
    assert str(f) == "(q)/(2*(q + q^-1))"
    assert f + f == FactoredFraction(q, {"q": 1})
    assert f.evaluate({"q": 2}) == Fraction(2, 2 * Fraction(5, 2))
    assert (f - f).is_zero()


def test_factored_fraction_cancels_factor():
    f = FactoredFraction(q ** 2 - q ** -2, {"q": 1})
    assert f == FactoredFraction(q - q ** -1)


@settings(max_examples=60, deadline=None)
@given(laurent(), laurent(), laurent())
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == LaurentPoly.const(0)


@settings(max_examples=60, deadline=None)
@given(laurent(), laurent(), points)
def test_evaluation_is_a_homomorphism(a, b, pt):
    assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)
    assert (a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt)


@settings(max_examples=40, deadline=None)
@given(laurent(), laurent().filter(bool), points)
def test_rational_function_matches_evaluation(a, b, pt):
    den = b.evaluate(pt)
    if den == 0:
        return
    r = RationalFunction(a, b)
    assert r.evaluate(pt) == a.evaluate(pt) / den
    assert r * RationalFunction(b) == RationalFunction(a)


@settings(max_examples=40, deadline=None)
@given(laurent(names=("q",)), st.integers(0, 3), st.integers(0, 2))
def test_factored_fraction_roundtrip(num, pq, p2):
    f = FactoredFraction(num, {"q": pq, "2": p2})
    den = (q + q ** -1) ** pq * LaurentPoly.const(2 ** p2)
    assert f.to_rational_function() == RationalFunction(num, den)
    g = f.div_factor("q")
    assert (g * FactoredFraction(q + q ** -1)) == f
