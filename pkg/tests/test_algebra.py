import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from skeinlab.algebra import (
    CycloNum,
    EvalPoint,
    LaurentPoly,
    RatFunc,
    cyclo_to_complex,
    delta_color,
    evaluate_at,
    poly_gcd,
    quantum_integer,
    ratfunc_canonical,
)
from skeinlab.errors import PoleError, ZeroDenominatorError

A = LaurentPoly.gen()
one = LaurentPoly.one()


def qi(n):
    return quantum_integer(n)


# -- Laurent polynomials -------------------------------------------------------


def test_quantum_integer_small_values():
    assert qi(0).is_zero()
    assert qi(1) == one
    assert qi(2) == LaurentPoly.monomial(2) + LaurentPoly.monomial(-2)
    assert qi(4) == (LaurentPoly.monomial(6) + LaurentPoly.monomial(2)
                     + LaurentPoly.monomial(-2) + LaurentPoly.monomial(-6))


def test_quantum_integer_is_the_exact_quotient():
    # [n] (A^2 - A^-2) = A^2n - A^-2n
    for n in range(12):
        lhs = qi(n) * (LaurentPoly.monomial(2) - LaurentPoly.monomial(-2))
        rhs = LaurentPoly.monomial(2 * n) - LaurentPoly.monomial(-2 * n)
        assert lhs == rhs


@pytest.mark.parametrize("m", range(1, 31))
def test_doubling_identity(m):
    assert qi(2 * m) == qi(m) * (LaurentPoly.monomial(2 * m) + LaurentPoly.monomial(-2 * m))


def test_delta_color_values():
    assert delta_color(0) == one
    assert delta_color(1) == -(LaurentPoly.monomial(2) + LaurentPoly.monomial(-2))
    assert delta_color(2) == LaurentPoly.monomial(4) + one + LaurentPoly.monomial(-4)


def test_str_forms():
    assert str(delta_color(1)) == "-A^2 - A^-2"
    assert str(one) == "1"
    assert str(LaurentPoly.zero()) == "0"
    assert str(qi(4)) == "A^6 + A^2 + A^-2 + A^-6"


def _random_poly(rng, max_terms=6, max_exp=10):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        terms[rng.randint(-max_exp, max_exp)] = Fraction(
            rng.randint(-9, 9), rng.randint(1, 7)
        )
    return LaurentPoly(terms)


small_coeffs = st.fractions(
    min_value=-5, max_value=5, max_denominator=6
).filter(lambda f: f != 0)

polys = st.dictionaries(
    st.integers(min_value=-8, max_value=8), small_coeffs, max_size=5
).map(LaurentPoly)


@given(polys, polys, polys)
@settings(max_examples=200, deadline=None)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + LaurentPoly.zero() == f
    assert f * one == f


# -- canonical rational functions ----------------------------------------------


def test_ratfunc_canonical_examples():
    assert ratfunc_canonical(qi(2) * qi(3), qi(3)) == RatFunc(qi(2))
    r = ratfunc_canonical(one, LaurentPoly.monomial(2))
    assert r.num == LaurentPoly.monomial(-2) and r.den == one
    r = ratfunc_canonical(qi(4), qi(2))
    assert r.num == LaurentPoly.monomial(4) + LaurentPoly.monomial(-4)
    assert r.den == one


def test_ratfunc_zero_denominator():
    with pytest.raises(ZeroDenominatorError):
        RatFunc(one, LaurentPoly.zero())


def test_ratfunc_field_ops():
    half = RatFunc(one, qi(2))
    assert half + half == RatFunc(LaurentPoly.const(2), qi(2))
    assert half * qi(2) == RatFunc(one)
    assert (half / half) == RatFunc(one)
    assert RatFunc(qi(3)) - RatFunc(qi(3)) == RatFunc(LaurentPoly.zero())


def test_canonical_idempotence():
    rng = random.Random(40923)
    for _ in range(1000):
        num = _random_poly(rng)
        den = _random_poly(rng)
        if den.is_zero():
            continue
        once = ratfunc_canonical(num, den)
        twice = ratfunc_canonical(once.num, once.den)
        assert once == twice


def test_poly_gcd_divides_both():
    rng = random.Random(777)
    for _ in range(100):
        f, g = _random_poly(rng), _random_poly(rng)
        d = poly_gcd(f, g)
        if d.is_zero():
            assert f.is_zero() and g.is_zero()
            continue
        assert (RatFunc(f, d).den == one) and (RatFunc(g, d).den == one)


# -- evaluation at roots of unity ----------------------------------------------


def test_evaluate_delta1_level1_is_one():
    v = evaluate_at(delta_color(1), EvalPoint(1, 1))
    assert v.as_rational() == 1


def test_evaluate_delta1_level2_matches_cosine():
    v = cyclo_to_complex(evaluate_at(delta_color(1), EvalPoint(2, 1)))
    with mpmath.workdps(30):
        assert abs(v.real + 2 * mpmath.cos(2 * mpmath.pi / 5)) < 1e-25
        assert abs(v.imag) < 1e-25


def test_constants_are_fixed():
    for d in (1, 2, 5):
        assert evaluate_at(LaurentPoly.const(7), EvalPoint(d, -1)).as_rational() == 7


def test_root_embedding_level1():
    z = cyclo_to_complex(CycloNum.root_power(1, 1))
    assert abs(complex(z) - complex(0.5, 3 ** 0.5 / 2)) < 1e-15


def test_quantum_integer_nonvanishing_in_range():
    for d in range(1, 51):
        p = EvalPoint(d, 1)
        assert not evaluate_at(qi(d), p).is_zero()
    # and the first vanishing argument is 2d+1
    for d in (1, 2, 3, 7):
        assert evaluate_at(qi(2 * d + 1), EvalPoint(d, 1)).is_zero()


def test_pole_detection():
    d = 2
    bad = RatFunc(one, qi(2 * d + 1))
    with pytest.raises(PoleError):
        evaluate_at(bad, EvalPoint(d, 1))


def test_evaluation_is_ring_homomorphism():
    rng = random.Random(65537)
    points = [EvalPoint(d, s) for d in range(1, 11) for s in (1, -1)]
    for _ in range(1000):
        f, g = _random_poly(rng, max_terms=4, max_exp=8), _random_poly(rng, max_terms=4, max_exp=8)
        p = rng.choice(points)
        lhs = evaluate_at(f * g + f, p)
        rhs = evaluate_at(f, p) * evaluate_at(g, p) + evaluate_at(f, p)
        assert lhs == rhs


def test_conjugation_symmetry():
    rng = random.Random(11)
    for _ in range(200):
        f = _random_poly(rng)
        for d in (1, 2, 3):
            plus = evaluate_at(f, EvalPoint(d, 1))
            minus = evaluate_at(f, EvalPoint(d, -1))
            assert plus.conjugate() == minus


def test_cyclo_inverse_roundtrip():
    rng = random.Random(202)
    for d in (1, 2, 4):
        for _ in range(50):
            x = evaluate_at(_random_poly(rng), EvalPoint(d, 1))
            if x.is_zero():
                continue
            assert (x * x.inverse()).is_one()
