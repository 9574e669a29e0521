"""Split model: creation/annihilation commutators, the transfer map and
its intertwining properties, the raising-operator forms, and the product
formula comparisons."""

import random
from itertools import product as iproduct

import pytest

from fockcocycles import cochains
from fockcocycles.fock import FockPoly, ZP, ZPP, var
from fockcocycles.schrodinger import (
    SchrodFn,
    SchrodForm,
    annihilation_z,
    annihilation_zbar,
    bargmann,
    bargmann_form,
    creation_z,
    creation_zbar,
    d_plus,
    dbar_plus,
    km_block,
    km_cocycle,
    nonfactorization_demo,
    product_formula_check,
)
from fockcocycles.scalars import ONE, PI_INV, Scalar, rational


def rand_fn(rng, p, block=1, nterms=3):
    out = SchrodFn()
    for _ in range(nterms):
        f = SchrodFn.gaussian((block,)).scale(Scalar.from_int(rng.randint(-2, 2)))
        for _ in range(rng.randint(0, 2)):
            alpha = rng.randint(1, p)
            f = (creation_z if rng.random() < 0.5 else creation_zbar)(alpha, block, f)
        out = out + f
    return out


def test_vacuum_and_weights():
    phi0 = SchrodFn.gaussian()
    assert phi0.weights_used() == {((1, 1),)}
    assert (phi0 * phi0).weights_used() == {((1, 2),)}


def test_creation_operators_commute():
    rng = random.Random(2)
    p = 2
    for _ in range(6):
        f = rand_fn(rng, p)
        for a1, a2 in iproduct((1, 2), repeat=2):
            assert creation_z(a1, 1, creation_zbar(a2, 1, f)) == \
                creation_zbar(a2, 1, creation_z(a1, 1, f))
            assert creation_z(a1, 1, creation_z(a2, 1, f)) == \
                creation_z(a2, 1, creation_z(a1, 1, f))


def test_annihilation_kills_vacuum():
    phi0 = SchrodFn.gaussian()
    assert annihilation_z(1, 1, phi0).is_zero()
    assert annihilation_zbar(1, 1, phi0).is_zero()


def test_canonical_commutators():
    """[annihilation_z, creation_z] = 1/pi, and the mixed pairs commute."""
    rng = random.Random(9)
    p = 2
    for _ in range(5):
        f = rand_fn(rng, p)
        for a1, a2 in iproduct((1, 2), repeat=2):
            comm = annihilation_z(a1, 1, creation_z(a2, 1, f)) - \
                creation_z(a2, 1, annihilation_z(a1, 1, f))
            if a1 == a2:
                assert comm == f.scale(PI_INV)
            else:
                assert comm.is_zero()
            mixed = annihilation_z(a1, 1, creation_zbar(a2, 1, f)) - \
                creation_zbar(a2, 1, annihilation_z(a1, 1, f))
            assert mixed.is_zero()


def test_creation_requires_gaussian_weight():
    with pytest.raises(ValueError):
        creation_z(1, 1, SchrodFn({((), ()): ONE}))
    with pytest.raises(ValueError):
        creation_z(1, 2, SchrodFn.gaussian((1,)))


def test_bargmann_of_unit_is_gaussian():
    assert bargmann(FockPoly.constant(ONE)) == SchrodFn.gaussian()


def test_bargmann_p1_hand_value():
    """B(z'' z') = (2 zbar z - 1/pi) phi0 for p = 1."""
    f = FockPoly.variable(var(ZPP, 1, 1)) * FockPoly.variable(var(ZP, 1, 1))
    got = bargmann(f)
    phi0 = SchrodFn.gaussian()
    zzbar = creation_z(1, 1, creation_zbar(1, 1, phi0))
    assert got == zzbar
    want_terms = {}
    for (mono, wts), c in phi0.terms.items():
        want_terms[(((0, 1, 1), 1), ((1, 1, 1), 1)), wts] = Scalar.from_int(2)
        want_terms[(mono, wts)] = -PI_INV
    assert got == SchrodFn(want_terms)


def test_bargmann_rejects_bad_variables():
    with pytest.raises(ValueError):
        bargmann(FockPoly.variable(var(ZP, 1, 2)), blocks=(1,))


def test_bargmann_injective_on_graded_pieces():
    """Distinct low-degree monomials transfer to linearly independent
    functions: check pairwise differences are nonzero for p = 2."""
    p = 2
    monos = []
    for e in range(3):
        for combo in iproduct(
            [var(ZP, 1, 1), var(ZP, 2, 1), var(ZPP, 1, 1), var(ZPP, 2, 1)], repeat=e
        ):
            f = FockPoly.constant(ONE)
            for v in combo:
                f = f.mul_var(v)
            monos.append(f)
    images = [bargmann(f) for f in monos]
    for i in range(len(monos)):
        for j in range(i + 1, len(monos)):
            if monos[i] != monos[j]:
                assert images[i] != images[j]


def test_bargmann_intertwines_annihilation():
    """B((1/pi) df/dz'_alpha) = annihilation_z(alpha) B(f), and the
    conjugate statement, on monomials up to degree 4."""
    p = 2
    pool = [var(ZP, 1, 1), var(ZP, 2, 1), var(ZPP, 1, 1), var(ZPP, 2, 1)]
    rng = random.Random(31)
    for _ in range(25):
        f = FockPoly.constant(ONE)
        for _ in range(rng.randint(0, 4)):
            f = f.mul_var(rng.choice(pool))
        for alpha in (1, 2):
            lhs = bargmann(f.diff(var(ZP, alpha, 1)).scale(PI_INV))
            assert lhs == annihilation_z(alpha, 1, bargmann(f))
            lhs = bargmann(f.diff(var(ZPP, alpha, 1)).scale(PI_INV))
            assert lhs == annihilation_zbar(alpha, 1, bargmann(f))


def test_d_operators_anticommute():
    p, q = 2, 2
    F = SchrodForm.vacuum(p, q)
    for m1, m2 in iproduct((3, 4), repeat=2):
        a = d_plus(m1, 1, d_plus(m2, 1, F)) + d_plus(m2, 1, d_plus(m1, 1, F))
        assert a.is_zero()
        b = d_plus(m1, 1, dbar_plus(m2, 1, F)) + dbar_plus(m2, 1, d_plus(m1, 1, F))
        assert b.is_zero()


def test_d_operators_raise_bidegree():
    F = SchrodForm.vacuum(2, 1)
    assert d_plus(3, 1, F).bidegree() == (1, 0)
    assert dbar_plus(3, 1, F).bidegree() == (0, 1)


def test_km_cocycle_bidegree_and_weight():
    for (p, q) in [(1, 1), (2, 1), (2, 2)]:
        c = km_cocycle(p, q, 1)
        assert c.bidegree() == (q, q)
        assert c.weights_used() == {((1, 1),)}
        assert c == km_block(p, q, 1)
    c2 = km_cocycle(2, 1, 2)
    assert c2.bidegree() == (2, 2)
    assert c2.weights_used() == {((1, 1), (2, 1))}


def test_product_formula():
    for (p, q) in [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (3, 2)]:
        assert product_formula_check(p, q), (p, q)


def test_product_formula_two_blocks():
    for (p, q) in [(2, 1), (1, 1)]:
        n = 2
        transported = bargmann_form(cochains.psi(n, n, p, q), blocks=(1, 2))
        want = km_cocycle(p, q, n).scale(Scalar.from_int(2 ** (n * q)))
        assert transported == want


def test_km_blockwise_wedge_relation():
    """The two-block form equals the wedge of one-block copies up to the
    exterior reordering sign (-1)^(q^2)."""
    for (p, q) in [(2, 1), (2, 2)]:
        w = km_block(p, q, 1).wedge(km_block(p, q, 2))
        sign = Scalar.from_int((-1) ** (q * q))
        assert km_cocycle(p, q, 2) == w.scale(sign)


def test_nonfactorization():
    for p in (1, 2, 3):
        first, second = nonfactorization_demo(p)
        assert first.weights_used() == {((1, 2),)}
        assert second.weights_used() == {((1, 1),)}
        assert first != second


def test_nonfactorization_display_values_p1():
    """For p=1 the two objects are 2 zbar z phi0^2 and
    (2 zbar z - 1/pi) phi0, on the single exterior monomial."""
    first, second = nonfactorization_demo(1)
    key = ((0, 1, 2), (1, 1, 2))
    assert set(first.terms) == {key} and set(second.terms) == {key}
    two_zzbar = {((((0, 1, 1), 1), ((1, 1, 1), 1)), ((1, 2),)): Scalar.from_int(2)}
    assert first.terms[key] == SchrodFn(two_zzbar)
    w1 = ((1, 1),)
    honest = {
        ((((0, 1, 1), 1), ((1, 1, 1), 1)), w1): Scalar.from_int(2),
        ((), w1): -PI_INV,
    }
    assert second.terms[key] == SchrodFn(honest)
