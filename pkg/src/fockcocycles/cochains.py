"""The relative cochain complex Hom(Lambda^{r,s} p, P) and the special
cocycles.

A Cochain is a finite sum of (basis monomial of Lambda p*) tensor
(FockPoly), stored by exterior monomial, together with the ambient
parameters (p, q, a, b) of the Fock space it acts in.  The differential
is d = del + delbar with no bracket terms ([p,p] lies in k and projects
to zero in Lambda(g/k)): each p-direction contributes its oscillator
operator on the polynomial side and a left exterior multiplication by
the dual covector on the form side.

The special cocycles are outer wedges of the one-block generators:
psi_{bq,0} uses one negative W-coordinate per factor with values in the
z'' variables, psi_{0,aq} one positive W-coordinate with values in z',
and psi_{bq,aq} = psi_{bq,0} ^ psi_{0,aq}.
"""

from __future__ import annotations

from itertools import product

from . import fock
from .fock import FockPoly, var, ZP, ZPP
from .liealg import (
    DPRIME,
    PRIME,
    Multivector,
    _sorted_with_sign,
    k_action,
)
from .scalars import Scalar, ONE


class Cochain:
    """Element of Hom(Lambda p, P) as sum of exterior-monomial tensors."""

    __slots__ = ("params", "terms", "b_blocks", "a_blocks")

    def __init__(self, params, terms=None, b_blocks=frozenset(), a_blocks=frozenset()):
        self.params = params  # (p, q, a, b)
        self.terms = {}
        self.b_blocks = frozenset(b_blocks)
        self.a_blocks = frozenset(a_blocks)
        if terms:
            for key, f in terms.items():
                if not f.is_zero():
                    self.terms[key] = f

    @staticmethod
    def unit(params):
        return Cochain(params, {(): FockPoly.constant(ONE)})

    @staticmethod
    def zero(params):
        return Cochain(params)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, Cochain)
            and self.params == other.params
            and self.terms == other.terms
        )

    def __add__(self, other):
        if self.params != other.params:
            raise ValueError("mismatched ambient parameters")
        t = dict(self.terms)
        for key, f in other.terms.items():
            g = t.get(key)
            if g is None:
                t[key] = f
            else:
                g = g + f
                if g.is_zero():
                    del t[key]
                else:
                    t[key] = g
        out = Cochain(self.params, b_blocks=self.b_blocks | other.b_blocks,
                      a_blocks=self.a_blocks | other.a_blocks)
        out.terms = t
        return out

    def __neg__(self):
        out = Cochain(self.params, b_blocks=self.b_blocks, a_blocks=self.a_blocks)
        out.terms = {k: -f for k, f in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Scalar):
        out = Cochain(self.params, b_blocks=self.b_blocks, a_blocks=self.a_blocks)
        if c:
            out.terms = {k: f.scale(c) for k, f in self.terms.items()}
        return out

    def bidegrees(self):
        out = set()
        for key in self.terms:
            r = sum(1 for kind, _, _ in key if kind == PRIME)
            out.add((r, len(key) - r))
        return out

    def bidegree(self):
        degs = self.bidegrees()
        if len(degs) != 1:
            raise ValueError("not homogeneous: %r" % (degs,))
        return degs.pop()

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms):
            names = {PRIME: "xi'", DPRIME: "xi''"}
            mono = "^".join("%s_%d,%d" % (names[k], a, m) for k, a, m in key) or "1"
            bits.append("%s (x) [%r]" % (mono, self.terms[key]))
        return "  +  ".join(bits)


def psi_q0(p: int, q: int, block: int = 1, params=None) -> Cochain:
    """The bidegree (q,0) generator on one negative W-coordinate.

    sum over (alpha_1..alpha_q) of z''_{alpha_1,block} ... z''_{alpha_q,block}
    tensor xi'_{alpha_1,p+1} ^ ... ^ xi'_{alpha_q,p+q}, with successive
    second indices p+1..p+q.
    """
    if params is None:
        params = (p, q, 0, block)
    out = Cochain(params, b_blocks={block})
    for alphas in product(range(1, p + 1), repeat=q):
        key = tuple((PRIME, alphas[m], p + 1 + m) for m in range(q))
        skey, sign = _sorted_with_sign(key)
        mono = {}
        for alpha in alphas:
            v = var(ZPP, alpha, block)
            mono[v] = mono.get(v, 0) + 1
        poly = FockPoly({tuple(sorted(mono.items())): ONE if sign > 0 else -ONE})
        existing = out.terms.get(skey)
        out.terms[skey] = poly if existing is None else existing + poly
    return out


def psi_0q(p: int, q: int, block: int = 1, params=None) -> Cochain:
    """Mirror of psi_q0: bidegree (0,q), z' values, xi'' factors."""
    if params is None:
        params = (p, q, block, 0)
    out = Cochain(params, a_blocks={block})
    for alphas in product(range(1, p + 1), repeat=q):
        key = tuple((DPRIME, alphas[m], p + 1 + m) for m in range(q))
        skey, sign = _sorted_with_sign(key)
        mono = {}
        for alpha in alphas:
            v = var(ZP, alpha, block)
            mono[v] = mono.get(v, 0) + 1
        poly = FockPoly({tuple(sorted(mono.items())): ONE if sign > 0 else -ONE})
        existing = out.terms.get(skey)
        out.terms[skey] = poly if existing is None else existing + poly
    return out


def outer_wedge(phi: Cochain, psi_: Cochain) -> Cochain:
    """Wedge of cochains built over disjoint W-coordinate blocks.

    Exterior factors wedge in Lambda p*; polynomial values multiply
    (variable sets are disjoint by the block precondition).
    """
    if phi.params != psi_.params:
        raise ValueError("mismatched ambient parameters")
    if (phi.b_blocks & psi_.b_blocks) or (phi.a_blocks & psi_.a_blocks):
        raise ValueError("overlapping W-coordinate blocks")
    out = Cochain(
        phi.params,
        b_blocks=phi.b_blocks | psi_.b_blocks,
        a_blocks=phi.a_blocks | psi_.a_blocks,
    )
    t = out.terms
    for k1, f1 in phi.terms.items():
        for k2, f2 in psi_.terms.items():
            key, sign = _sorted_with_sign(k1 + k2)
            if key is None:
                continue
            g = f1 * f2
            if sign < 0:
                g = -g
            h = t.get(key)
            if h is None:
                t[key] = g
            else:
                h = h + g
                if h.is_zero():
                    del t[key]
                else:
                    t[key] = h
    return out


def psi(b: int, a: int, p: int, q: int) -> Cochain:
    """The special cocycle psi_{bq,aq} of bidegree (bq, aq), the outer
    wedge of b negative-block and a positive-block generators."""
    params = (p, q, a, b)
    out = Cochain.unit(params)
    for block in range(1, b + 1):
        out = outer_wedge(out, psi_q0(p, q, block, params=params))
    for block in range(1, a + 1):
        out = outer_wedge(out, psi_0q(p, q, block, params=params))
    return out


def differential(phi: Cochain) -> Cochain:
    """d phi = sum over p-directions of (oscillator operator on values)
    tensor (left exterior multiplication by the dual covector)."""
    p, q, a, b = phi.params
    out = Cochain(phi.params, b_blocks=phi.b_blocks, a_blocks=phi.a_blocks)
    t = out.terms
    for key, f in phi.terms.items():
        present = set(key)
        for alpha in range(1, p + 1):
            for mu in range(p + 1, p + q + 1):
                for kind in (PRIME, DPRIME):
                    idx = (kind, alpha, mu)
                    if idx in present:
                        continue
                    g = fock.weil_p_action(idx, f, phi.params)
                    if g.is_zero():
                        continue
                    nkey, sign = _sorted_with_sign((idx,) + key)
                    if sign < 0:
                        g = -g
                    h = t.get(nkey)
                    if h is None:
                        t[nkey] = g
                    else:
                        h = h + g
                        if h.is_zero():
                            del t[nkey]
                        else:
                            t[nkey] = h
    return out


def evaluate(phi: Cochain, v: Multivector) -> FockPoly:
    """phi(v): sum of duality pairings of exterior factors against v
    times the polynomial values."""
    if v.alg != "p":
        raise ValueError("evaluate expects a Lambda p argument")
    out = FockPoly()
    for key, c in v.terms.items():
        f = phi.terms.get(key)
        if f is not None:
            out = out + f.scale(c)
    return out


def equivariance_defect(phi: Cochain, X) -> Cochain:
    """The cochain v -> k_side_action(X, phi(v)) - phi(k_action(X, v)).

    In stored form: sum_I xi_I tensor pi(X) f_I plus
    sum_I (ad*(X) xi_I) tensor f_I, since precomposition with ad(X) is
    minus the contragredient action on the exterior factors.
    """
    if X[0] not in ("gl_p", "gl_q"):
        raise ValueError("equivariance is tested for gl(p) + gl(q) only")
    out = Cochain(phi.params, b_blocks=phi.b_blocks, a_blocks=phi.a_blocks)
    t = out.terms

    def accumulate(key, g):
        if g.is_zero():
            return
        h = t.get(key)
        if h is None:
            t[key] = g
        else:
            h = h + g
            if h.is_zero():
                del t[key]
            else:
                t[key] = h

    for key, f in phi.terms.items():
        accumulate(key, fock.k_side_action(X, f, phi.params))
        acted = k_action(X, Multivector("p*", {key: ONE}))
        for nkey, c in acted.terms.items():
            accumulate(nkey, f.scale(c))
    return out


def isotypic_multiplicity(p: int, q: int, a: int, b: int, degree: int) -> int:
    """Number of independent K-equivariant maps from the rectangle
    K-type V(b x q, a x q) into the degree-`degree` harmonic subspace:
    the dimension of the highest-weight-vector slice."""
    if a + b > p:
        raise ValueError("need a+b <= p")
    return fock.harmonic_hw_multiplicity(p, q, a, b, degree)
