import gc
import weakref
from fractions import Fraction
from math import comb

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from src.errors import InputError
from src.geometry.gltype import GLType
from src.grading.lgroup import LElement, canonical, generator, normal_form, zero
from src.ring.glring import (GLRing, Polynomial, ReducedMonomial, RingElement, compositions, hilbert,
                             monomial_basis, multiply, reduce, ring_for)
from strategies import elements, gl_types


def as_polynomial(f: RingElement) -> Polynomial:
    return Polynomial(f.ring.type, {(m.xexp, m.texp): c for m, c in f.terms.items()})


@st.composite
def homogeneous(draw, t, max_ell=3):
    a = tuple(draw(st.integers(0, p - 1)) for p in t.weights)
    g = LElement(a=a, ell=draw(st.integers(0, max_ell)), weights=tuple(t.weights))
    basis = monomial_basis(g, t)
    coefs = draw(st.lists(st.integers(-3, 3), min_size=len(basis), max_size=len(basis)))
    return RingElement(ring_for(t), dict(zip(basis, coefs)))


@st.composite
def polynomials(draw, t, max_terms=4):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        xexp = tuple(draw(st.integers(0, 2 * p)) for p in t.weights)
        texp = tuple(draw(st.integers(0, 2)) for _ in range(t.d + 1))
        terms[(xexp, texp)] = Fraction(draw(st.integers(-4, 4)), draw(st.integers(1, 3)))
    return Polynomial(t, terms)


def sympy_presentation(t: GLType):
    """Generators X.., T.. and the relations X_i^p_i - l_i(T); a lex Groebner basis with X before T."""
    xs = tuple(sp.Symbol(f"X{i + 1}") for i in range(t.n))
    ts = tuple(sp.Symbol(f"T{j}") for j in range(t.d + 1))
    relations = [x ** p - sum(sp.Rational(c.numerator, c.denominator) * tj for c, tj in zip(row, ts))
                 for x, p, row in zip(xs, t.weights, t.hyperplanes)]
    return xs + ts, relations


def to_sympy(terms, gens):
    return sp.expand(sum((sp.Rational(c.numerator, c.denominator)
                          * sp.Mul(*[v ** e for v, e in zip(gens, xexp + texp)])
                          for (xexp, texp), c in terms), sp.Integer(0)))


def sympy_normal_form(t: GLType, *factors: Polynomial):
    gens, relations = sympy_presentation(t)
    expr = sp.Integer(1)
    for f in factors:
        expr *= to_sympy(f.terms.items(), gens)
    expr = sp.expand(expr)
    if expr == 0 or not relations:
        return expr, gens
    _, remainder = sp.reduced(expr, relations, *gens, order='lex')
    return remainder, gens


def test_reduce_examples(d1):
    ring = ring_for(d1)
    assert ring.reduce(Polynomial.X(0, d1) ** 2) == ring.t(0)
    x3_squared = reduce(Polynomial.X(2, d1) ** 2, d1)
    assert x3_squared == ring.t(0) - ring.t(1)
    assert str(x3_squared) == "T0 - T1"
    assert reduce(Polynomial.T(0, d1), d1) == ring.t(0)


def test_reduce_higher_power(d1):
    ring = ring_for(d1)
    # X3^5 = X3 (T0 - T1)^2
    value = ring.reduce(Polynomial.X(2, d1) ** 5)
    assert str(value) == "X3*T0^2 - 2*X3*T0*T1 + X3*T1^2"


def test_sympy_normal_form_example(d1):
    expected, gens = sympy_normal_form(d1, Polynomial.X(2, d1) ** 5)
    value = ring_for(d1).reduce(Polynomial.X(2, d1) ** 5)
    assert sp.expand(to_sympy((((m.xexp, m.texp), c) for m, c in value.terms.items()), gens) - expected) == 0
    x3, t0, t1 = gens[2], gens[3], gens[4]
    assert sp.expand(expected - x3 * (t0 - t1) ** 2) == 0


def test_multiply_examples(d1):
    ring = ring_for(d1)
    x1, x2 = ring.x(0), ring.x(1)
    assert multiply(x1, x1) == ring.t(0)
    assert str(x1 * x2) == "X1*X2"
    assert ring.one() * x2 == x2
    assert ring.x(2) ** 2 == x1 ** 2 - x2 ** 2


def test_weight_one_generator_is_linear_form():
    t = GLType.create(1, [1, 2], [[1, 1], [0, 1]])
    ring = ring_for(t)
    assert ring.x(0) == ring.linear_form(0)
    assert ring.x(0) == ring.t(0) + ring.t(1)


def test_rejects_mixed_types(d1, d2):
    with pytest.raises(InputError):
        ring_for(d1).x(0) * ring_for(d2).x(0)


def test_inhomogeneous_degree(d1):
    ring = ring_for(d1)
    f = ring.one() + ring.t(0)
    assert not f.is_homogeneous()
    with pytest.raises(InputError):
        f.degree()
    assert ring.x(0).degree() == generator(0, d1)
    assert RingElement(ring).degree() is None


def test_monomial_basis_examples(d1, d2):
    assert [str(m) for m in monomial_basis(generator(0, d1), d1)] == ["X1"]
    assert [str(m) for m in monomial_basis(canonical(d1), d1)] == ["T0", "T1"]
    assert [str(m) for m in monomial_basis(zero(d1), d1)] == ["1"]
    assert monomial_basis(-canonical(d1), d1) == []
    assert hilbert(generator(0, d1) + generator(1, d1), d1) == 1
    assert hilbert(canonical(d2, 2), d2) == 6
    assert hilbert(canonical(d2, -1), d2) == 0


def test_compositions():
    assert compositions(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert compositions(0, 3) == [(0, 0, 0)]
    assert compositions(-1, 2) == []


def test_monomial_degree(d1):
    m = ReducedMonomial((1, 0, 1), (2, 0))
    assert m.degree(d1) == normal_form([1, 0, 1, 2], d1)
    assert str(m) == "X1*X3*T0^2"


def test_polynomial_text(d1):
    p = Polynomial.X(0, d1) * 2 - Polynomial.T(1, d1) + Polynomial.constant(d1, Fraction(1, 2))
    assert str(p) == "2*X1 - T1 + 1/2"


@settings(max_examples=60, deadline=None)
@given(gl_types(max_n=3).flatmap(lambda t: st.tuples(st.just(t), homogeneous(t), homogeneous(t), homogeneous(t))))
def test_ring_laws(data):
    t, f, g, h = data
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h
    product_ = f * g
    if not product_.is_zero():
        assert product_.is_homogeneous()
        assert product_.degree() == f.degree() + g.degree()


@settings(max_examples=1000, deadline=None)
@given(gl_types(max_n=3).flatmap(lambda t: st.tuples(st.just(t), polynomials(t), polynomials(t))))
def test_multiply_matches_sympy_reduction(data):
    t, p, q = data
    ring = ring_for(t)
    expected, gens = sympy_normal_form(t, p, q)
    product_ = ring.reduce(p) * ring.reduce(q)
    actual = to_sympy((((m.xexp, m.texp), c) for m, c in product_.terms.items()), gens)
    assert sp.expand(actual - expected) == 0
    single, _ = sympy_normal_form(t, p)
    reduced = ring.reduce(p)
    assert sp.expand(to_sympy((((m.xexp, m.texp), c) for m, c in reduced.terms.items()), gens) - single) == 0


@settings(max_examples=100, deadline=None)
@given(gl_types(max_n=3).flatmap(lambda t: st.tuples(st.just(t), homogeneous(t), homogeneous(t))))
def test_reduced_product_is_stable(data):
    t, f, g = data
    ring = ring_for(t)
    assert ring.reduce(as_polynomial(f) * as_polynomial(g)) == f * g
    assert ring.reduce(as_polynomial(f)) == f


@settings(max_examples=500, deadline=None)
@given(gl_types(max_d=3, max_n=4).flatmap(lambda t: st.tuples(st.just(t), elements(t, bound=4))))
def test_hilbert_counts_basis(data):
    t, g = data
    basis = monomial_basis(g, t)
    assert hilbert(g, t) == len(basis)
    assert len(set(basis)) == len(basis)
    assert all(m.degree(t) == g for m in basis)


@given(gl_types(max_d=3), st.integers(0, 4))
def test_polynomial_subring(t, ell):
    basis = monomial_basis(canonical(t, ell), t)
    assert all(not any(m.xexp) for m in basis)
    assert len(basis) == comb(ell + t.d, t.d)


def test_form_powers_cached_per_ring(d1):
    ring = GLRing(d1)
    ring.reduce(Polynomial.X(2, d1) ** 5)
    assert ring._powers[(2, 2)] == {(2, 0): 1, (1, 1): -2, (0, 2): 1}
    assert not GLRing(d1)._powers
    ref = weakref.ref(ring)
    del ring
    gc.collect()
    assert ref() is None
