"""Exterior algebra of the off-diagonal tangent block, the compact-group
action on it, the distinguished wedge vectors, and the curvature class."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from fockcocycles.liealg import (
    DPRIME,
    PRIME,
    Multivector,
    chern_element,
    highest_weight_check,
    k_action,
    k_basis,
    pair,
    vz_vector,
    wedge,
)
from fockcocycles.scalars import I, MINUS_ONE, ONE, Scalar


def gens(p, q, alg="p"):
    out = []
    for kind in (PRIME, DPRIME):
        for alpha in range(1, p + 1):
            for mu in range(p + 1, p + q + 1):
                out.append(Multivector.basis(alg, kind, alpha, mu))
    return out


@st.composite
def multivectors(draw, p=2, q=2, alg="p"):
    basis = gens(p, q, alg)
    v = Multivector.zero(alg)
    for _ in range(draw(st.integers(0, 3))):
        factors = draw(st.lists(st.sampled_from(range(len(basis))), min_size=0, max_size=3))
        term = Multivector.unit(alg)
        for i in factors:
            term = wedge(term, basis[i])
        c = Scalar.from_int(draw(st.integers(-3, 3)))
        v = v + term.scale(c)
    return v


@given(multivectors(), multivectors(), multivectors())
@settings(max_examples=40, deadline=None)
def test_wedge_bilinear_associative(u, v, w):
    assert wedge(wedge(u, v), w) == wedge(u, wedge(v, w))
    assert wedge(u + v, w) == wedge(u, w) + wedge(v, w)


def test_wedge_anticommutes_on_generators():
    a, b = gens(2, 2)[0], gens(2, 2)[3]
    assert wedge(a, b) == -wedge(b, a)
    assert wedge(a, a).is_zero()


def test_pairing_is_diagonal_on_sorted_monomials():
    p, q = 2, 2
    xs = gens(p, q, "p")
    duals = gens(p, q, "p*")
    w1 = wedge(xs[0], xs[1])
    d1 = wedge(duals[0], duals[1])
    d2 = wedge(duals[0], duals[2])
    assert pair(d1, w1) == ONE
    assert pair(d2, w1) == Scalar.from_int(0)
    # reversing the wedge order flips the sign on both sides consistently
    assert pair(wedge(duals[1], duals[0]), w1) == MINUS_ONE


@given(multivectors(), multivectors())
@settings(max_examples=30, deadline=None)
def test_k_action_is_a_derivation(u, v):
    for X in [("gl_p", 1, 2), ("gl_q", 3, 4), ("gl_p", 2, 2)]:
        lhs = k_action(X, wedge(u, v))
        rhs = wedge(k_action(X, u), v) + wedge(u, k_action(X, v))
        assert lhs == rhs


def test_k_action_respects_commutators():
    """pi([X,Y]) = pi(X)pi(Y) - pi(Y)pi(X) on random elements, where
    [E_rs, E_tu] = delta_st E_ru - delta_ur E_ts within each gl block."""
    rng = random.Random(7)
    p, q = 3, 2
    basis = gens(p, q)
    v = Multivector.zero("p")
    for _ in range(4):
        term = Multivector.unit("p")
        for i in rng.sample(range(len(basis)), 2):
            term = wedge(term, basis[i])
        v = v + term.scale(Scalar.from_int(rng.randint(-2, 2)))

    def bracket_action(X, Y, w):
        fam, r, s = X
        _, t, u = Y
        out = Multivector.zero(w.alg)
        if s == t:
            out = out + k_action((fam, r, u), w)
        if u == r:
            out = out - k_action((fam, t, s), w)
        return out

    pairs = [(("gl_p", 1, 2), ("gl_p", 2, 3)), (("gl_p", 1, 1), ("gl_p", 1, 2)),
             (("gl_q", 4, 5), ("gl_q", 5, 4)), (("gl_q", 4, 4), ("gl_q", 4, 5))]
    for X, Y in pairs:
        lhs = k_action(X, k_action(Y, v)) - k_action(Y, k_action(X, v))
        assert lhs == bracket_action(X, Y, v)


def test_k_basis_size():
    assert len(k_basis(3, 2)) == 9 + 4


def test_vz_vector_is_highest_weight():
    for (p, q, a, b) in [(2, 1, 1, 1), (3, 2, 1, 1), (3, 1, 2, 1), (4, 2, 2, 2)]:
        v = vz_vector(b, a, p, q)
        ok, weight = highest_weight_check(v, p, q)
        assert ok, weight
        assert weight[:p] == tuple([q] * b + [0] * (p - a - b) + [-q] * a)
        assert weight[p:] == tuple([a - b] * q)


def test_vz_vector_bidegree():
    v = vz_vector(2, 1, 3, 2)
    assert v.bidegree() == (4, 2)
    assert len(v.terms) == 1
    assert vz_vector(0, 0, 2, 1) == Multivector.unit("p")


def test_chern_element_invariant_and_nonzero():
    for (p, q) in [(1, 1), (2, 1), (2, 2), (3, 2)]:
        c = chern_element(p, q)
        assert not c.is_zero()
        assert c.bidegree() == (q, q)
        for X in k_basis(p, q):
            assert k_action(X, c).is_zero(), (p, q, X)


def test_chern_element_q1_formula():
    """c_1 = (-i/(2 pi)) sum_alpha xi''_{alpha,p+1} ^ xi'_{alpha,p+1}."""
    p = 2
    c = chern_element(p, 1)
    want = Multivector.zero("p*")
    for alpha in (1, 2):
        w = wedge(Multivector.basis("p*", DPRIME, alpha, 3),
                  Multivector.basis("p*", PRIME, alpha, 3))
        want = want + w
    from fockcocycles.scalars import PI_INV, rational
    want = want.scale(MINUS_ONE * I * rational(1, 2) * PI_INV)
    assert c == want


def test_highest_weight_check_rejects_non_extremal():
    # xi-side vector killed by no means: a non-highest vector
    v = Multivector.basis("p", PRIME, 2, 3)  # p=2,q=1: x_{2,3} is lowered from x_{1,3}
    ok, _ = highest_weight_check(v, 2, 1)
    assert not ok
