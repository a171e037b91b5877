from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from src.errors import DegreeError, InputError
from src.geometry.gltype import GLType
from src.grading.lgroup import LElement, canonical, format_element, generator, normal_form, zero
from src.regrade.regrade import (RegradedElement, b_algebra_dim, b_algebra_series, component_total, coset_reps,
                                 regrade_component, regrade_identity, regrade_multiply, regraded_series,
                                 transport_shift, triangular_series, triangular_tensor_dim, untransport)
from src.ring.glring import RingElement, hilbert, ring_for
from strategies import elements, gl_types


def test_coset_reps(d1):
    reps = coset_reps(d1)
    assert len(reps) == 8
    assert reps[0] == zero(d1)
    assert [r.a for r in reps[:3]] == [(0, 0, 0), (0, 0, 1), (0, 1, 0)]
    assert all(r.ell == 0 for r in reps)


def test_component_d1(d1):
    component = regrade_component(0, d1)
    assert component.dimension == 27
    assert component.dims().shape == (8, 8)
    assert component.dims()[0, 0] == 1


def test_component_beilinson(beilinson):
    for h in range(5):
        component = regrade_component(h, beilinson)
        assert component.dims().shape == (1, 1)
        assert component.dimension == comb(h + 2, 2)
    assert regrade_component(-1, beilinson).dimension == 0


def test_two_coset_block_pattern(single):
    # reps {0, x1} of Z/2: [[A_h, A_{h-1}], [A_{h+1}, A_h]] up to the x1 offset
    x1 = generator(0, single)
    for h in range(3):
        component = regrade_component(h, single)
        assert component.block_degree(0, 0) == canonical(single, h)
        assert component.block_degree(0, 1) == x1 + canonical(single, h - 1)
        assert component.block_degree(1, 0) == x1 + canonical(single, h)
        assert component.block_degree(1, 1) == canonical(single, h)


def test_component_blocks_are_monomial_bases(d2):
    component = regrade_component(1, d2)
    for (i, j), basis in component.blocks.items():
        assert len(basis) == hilbert(component.block_degree(i, j), d2)
        assert component.dims()[i, j] == len(basis)


def test_triangular_examples(d1, beilinson):
    assert triangular_tensor_dim(0, d1) == 27
    assert triangular_tensor_dim(-1, d1) == 0
    assert [triangular_tensor_dim(ell, beilinson) for ell in range(4)] == [1, 3, 6, 10]


def test_b_algebra_examples(d1, single, beilinson):
    assert b_algebra_dim(0, d1) == 27
    assert b_algebra_dim(1, single) == 7
    assert b_algebra_dim(3, beilinson) == 10
    with pytest.raises(DegreeError):
        b_algebra_dim(-1, d1)


def test_series(d1):
    assert regraded_series(d1, 4) == triangular_series(d1, 4) == b_algebra_series(d1, 4)
    assert regraded_series(d1, 0) == [27]


@settings(max_examples=25, deadline=None)
@given(gl_types(max_d=3, max_n=3).filter(lambda t: t.order_rank <= 27))
def test_hilbert_identity(t):
    for h in range(7):
        regraded = component_total(h, t)
        assert regraded == triangular_tensor_dim(h, t) == b_algebra_dim(h, t)
    for h in range(3):
        assert regrade_component(h, t).dimension == component_total(h, t)


def _entry(t, component, i, j, coefs):
    basis = component.blocks[(i, j)]
    return RingElement(ring_for(t), dict(zip(basis, coefs)))


def test_identity_is_two_sided_unit(d1):
    one = regrade_identity(d1)
    component = regrade_component(1, d1)
    u = RegradedElement(h=1, reps=component.reps, entries={
        (i, j): _entry(d1, component, i, j, range(1, 10)) for (i, j) in component.blocks if component.blocks[(i, j)]
    })
    assert regrade_multiply(one, u) == u
    assert regrade_multiply(u, one) == u


def test_single_entry_product(d1):
    reps = coset_reps(d1)
    ring = ring_for(d1)
    c0, c1 = regrade_component(0, d1), regrade_component(1, d1)
    i, k, j = 7, 3, 0
    f = _entry(d1, c0, i, k, [2])
    g = _entry(d1, c1, k, j, [1, -1])
    assert not f.is_zero() and not g.is_zero()
    u = RegradedElement(h=0, reps=reps, entries={(i, k): f})
    v = RegradedElement(h=1, reps=reps, entries={(k, j): g})
    product_ = regrade_multiply(u, v)
    assert product_.h == 1
    assert product_.nonzero() == {(i, j): ring.multiply(f, g)}


def test_multiply_rejects_degree_mismatch(d1):
    reps = coset_reps(d1)
    ring = ring_for(d1)
    wrong = RegradedElement(h=0, reps=reps, entries={(0, 0): ring.t(0)})
    with pytest.raises(DegreeError):
        regrade_multiply(wrong, regrade_identity(d1))
    shifted = [reps[0] + canonical(d1)] + reps[1:]
    with pytest.raises(DegreeError):
        regrade_multiply(regrade_identity(d1), regrade_identity(d1, shifted))


@st.composite
def regraded_elements(draw, t, h):
    component = regrade_component(h, t)
    entries = {}
    for (i, j), basis in component.blocks.items():
        if basis and draw(st.booleans()):
            coefs = draw(st.lists(st.integers(-2, 2), min_size=len(basis), max_size=len(basis)))
            entries[(i, j)] = RingElement(ring_for(t), dict(zip(basis, coefs)))
    return RegradedElement(h=h, reps=component.reps, entries=entries)


@settings(max_examples=20, deadline=None)
@given(st.data())
def test_associativity(data):
    t = data.draw(gl_types(max_d=2, max_n=2, max_weight=2))
    u, v, w = (data.draw(regraded_elements(t, h)) for h in (0, 1, 1))
    assert regrade_multiply(regrade_multiply(u, v), w) == regrade_multiply(u, regrade_multiply(v, w))


@given(gl_types(max_d=2, max_n=3), st.integers(-2, 2), st.integers(0, 3), st.data())
def test_representative_independence(t, m, h, data):
    reps = coset_reps(t)
    k = data.draw(st.integers(0, len(reps) - 1))
    shifted = list(reps)
    shifted[k] = reps[k] + canonical(t, m)
    moved = regrade_component(h, t, shifted)
    for (i, j), basis in moved.blocks.items():
        offset = (m if i == k else 0) - (m if j == k else 0)
        assert basis == regrade_component(h + offset, t).blocks[(i, j)]


def test_reps_must_cover_cosets(d1):
    reps = coset_reps(d1)
    with pytest.raises(InputError):
        regrade_component(0, d1, reps[:-1])
    with pytest.raises(InputError):
        regrade_component(0, d1, [reps[0]] * len(reps))


def test_transport_examples(d1):
    assert transport_shift(zero(d1), d1) == (0, 0)
    assert transport_shift(canonical(d1), d1) == (1, 0)
    t = GLType.create(1, [2, 3], [[1, 0], [0, 1]])
    g = normal_form([1, 4, 0], t)
    h, index = transport_shift(g, t)
    assert h == 1
    assert format_element(coset_reps(t)[index]) == "x1+x2"


def test_transport_rejects_other_group(d1):
    with pytest.raises(InputError):
        transport_shift(LElement(a=(1,), ell=0, weights=(2,)), d1)
    with pytest.raises(InputError):
        untransport(0, 8, d1)


@given(gl_types(max_n=4).flatmap(lambda t: st.tuples(st.just(t), elements(t))))
def test_transport_bijection(data):
    t, g = data
    h, index = transport_shift(g, t)
    assert untransport(h, index, t) == g
    assert transport_shift(g + canonical(t), t) == (h + 1, index)
