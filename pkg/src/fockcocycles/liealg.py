"""Exterior algebra of p = p' + p'' for U(p,q), with K-action.

Basis conventions: p' is spanned by x_{alpha,mu} and p'' by y_{alpha,mu}
with alpha in 1..p and mu in p+1..p+q; xi'_{alpha,mu} and
xi''_{alpha,mu} are the dual bases of p* under the determinant pairing.
A PIndex is a tuple (kind, alpha, mu) with kind 0 for prime and 1 for
doubleprime; the fixed total order (prime before doubleprime, then
(alpha, mu) lexicographic) makes canonical forms and signs
deterministic.

The module provides the wedge product, the duality pairing, the adjoint
K-action (and its contragredient on Lambda p*), the Vogan-Zuckerman
vectors e(bq, aq), highest weight certification against the fixed
Borel, and the invariant Chern element c_q.
"""

from __future__ import annotations

import math

from .scalars import Scalar, ZERO, ONE, rational

PRIME = 0
DPRIME = 1


def pindex(kind, alpha, mu):
    return (kind, alpha, mu)


def _sorted_with_sign(indices):
    """Sort an index tuple, returning (sorted tuple, parity sign) or
    (None, 0) when an index repeats."""
    idx = list(indices)
    sign = 1
    # insertion sort with parity count; tuples are tiny
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j] < idx[j - 1]:
            idx[j], idx[j - 1] = idx[j - 1], idx[j]
            sign = -sign
            j -= 1
    for i in range(1, len(idx)):
        if idx[i] == idx[i - 1]:
            return None, 0
    return tuple(idx), sign


class Multivector:
    """Exact-coefficient element of Lambda p or Lambda p*.

    terms maps strictly increasing index tuples to nonzero Scalars.
    """

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms=None):
        if alg not in ("p", "p*"):
            raise ValueError("alg must be 'p' or 'p*'")
        self.alg = alg
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if c:
                    self.terms[key] = c

    @staticmethod
    def basis(alg, kind, alpha, mu, coeff=ONE):
        return Multivector(alg, {((kind, alpha, mu),): coeff})

    @staticmethod
    def unit(alg):
        return Multivector(alg, {(): ONE})

    @staticmethod
    def zero(alg):
        return Multivector(alg)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, Multivector)
            and self.alg == other.alg
            and self.terms == other.terms
        )

    def __add__(self, other):
        if self.alg != other.alg:
            raise ValueError("mixed algebras")
        t = dict(self.terms)
        for key, c in other.terms.items():
            s = t.get(key)
            if s is None:
                t[key] = c
            else:
                s = s + c
                if s:
                    t[key] = s
                else:
                    del t[key]
        out = Multivector(self.alg)
        out.terms = t
        return out

    def __neg__(self):
        out = Multivector(self.alg)
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Scalar):
        if not c:
            return Multivector(self.alg)
        out = Multivector(self.alg)
        out.terms = {k: v * c for k, v in self.terms.items()}
        return out

    def bidegrees(self):
        """Set of (r, s) = (#prime, #doubleprime) over the support."""
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
        names = {PRIME: "xi'" if self.alg == "p*" else "x",
                 DPRIME: "xi''" if self.alg == "p*" else "y"}
        bits = []
        for key in sorted(self.terms):
            mono = "^".join("%s_%d,%d" % (names[k], a, m) for k, a, m in key) or "1"
            bits.append("(%r)*%s" % (self.terms[key], mono))
        return " + ".join(bits)


def wedge(u: Multivector, v: Multivector) -> Multivector:
    """Graded-commutative exterior product with normalized signs."""
    if u.alg != v.alg:
        raise ValueError("mixed algebras")
    out = Multivector(u.alg)
    t = out.terms
    for ku, cu in u.terms.items():
        for kv, cv in v.terms.items():
            key, sign = _sorted_with_sign(ku + kv)
            if key is None:
                continue
            c = cu * cv
            if sign < 0:
                c = -c
            s = t.get(key)
            if s is None:
                t[key] = c
            else:
                s = s + c
                if s:
                    t[key] = s
                else:
                    del t[key]
    return out


def pair(omega: Multivector, v: Multivector) -> Scalar:
    """Duality pairing of Lambda p* with Lambda p.

    With both sides in canonical (sorted) form the determinant-of-
    pairings convention degenerates to matching index sets: the pairing
    matrix of two equal sorted sets is the identity.
    """
    if omega.alg != "p*" or v.alg != "p":
        raise ValueError("pair expects (Lambda p*, Lambda p)")
    acc = ZERO
    for key, c in omega.terms.items():
        d = v.terms.get(key)
        if d is not None:
            acc = acc + c * d
    return acc


# ---------------------------------------------------------------------------
# K-action
# ---------------------------------------------------------------------------
#
# Basis elements of k: ("gl_p", alpha, beta) acting on V+ indices and
# ("gl_q", mu, nu) acting on V- indices (mu, nu in p+1..p+q), with the
# conventions ad(E+_{ab}) x_{b,mu} = x_{a,mu} (standard action on the
# V+ index) and ad(E-_{mn}) x_{alpha,m} = -x_{alpha,n} (dual action on
# the V-* index), so that X -> ad(X) is a Lie algebra homomorphism on
# both blocks.


def _act_generator(X, idx, dual):
    """Adjoint action of the k-basis element X on one p (or p*) generator.

    Returns a list of (new index, integer coefficient).
    """
    family, r, s = X
    kind, alpha, mu = idx
    if family == "gl_p":
        if not dual:
            if kind == PRIME:  # x_{alpha,mu} -> delta(alpha,s) x_{r,mu}
                return [((PRIME, r, mu), 1)] if alpha == s else []
            # y_{alpha,mu} -> -delta(alpha,r) y_{s,mu}
            return [((DPRIME, s, mu), -1)] if alpha == r else []
        if kind == PRIME:  # xi'_{alpha,mu} -> -delta(alpha,r) xi'_{s,mu}
            return [((PRIME, s, mu), -1)] if alpha == r else []
        # xi''_{alpha,mu} -> delta(alpha,s) xi''_{r,mu}
        return [((DPRIME, r, mu), 1)] if alpha == s else []
    if family == "gl_q":
        if not dual:
            if kind == PRIME:  # x_{alpha,mu_r} -> -x_{alpha,nu}
                return [((PRIME, alpha, s), -1)] if mu == r else []
            # y_{alpha,nu} -> y_{alpha,mu_r}
            return [((DPRIME, alpha, r), 1)] if mu == s else []
        if kind == PRIME:  # xi'_{alpha,nu} -> xi'_{alpha,mu_r}
            return [((PRIME, alpha, r), 1)] if mu == s else []
        # xi''_{alpha,mu_r} -> -xi''_{alpha,nu}
        return [((DPRIME, alpha, s), -1)] if mu == r else []
    raise ValueError("unknown k-basis element %r" % (X,))


def k_action(X, v: Multivector) -> Multivector:
    """Adjoint action of X extended as a derivation of the exterior
    algebra; contragredient action on Lambda p*."""
    dual = v.alg == "p*"
    out = Multivector(v.alg)
    t = out.terms
    for key, c in v.terms.items():
        for pos in range(len(key)):
            for new_idx, coeff in _act_generator(X, key[pos], dual):
                new_key, sign = _sorted_with_sign(
                    key[:pos] + (new_idx,) + key[pos + 1:]
                )
                if new_key is None:
                    continue
                val = c if coeff * sign > 0 else -c
                s = t.get(new_key)
                if s is None:
                    t[new_key] = val
                else:
                    s = s + val
                    if s:
                        t[new_key] = s
                    else:
                        del t[new_key]
    return out


def k_basis(p, q):
    """All basis elements of gl(p) + gl(q)."""
    out = [("gl_p", r, s) for r in range(1, p + 1) for s in range(1, p + 1)]
    out += [
        ("gl_q", m, n)
        for m in range(p + 1, p + q + 1)
        for n in range(p + 1, p + q + 1)
    ]
    return out


def highest_weight_check(v: Multivector, p: int, q: int):
    """Certify v as a highest weight vector for the fixed Borel.

    The Borel is upper-triangular on V+ and lower-triangular on V-, so
    the raising set is {E+_{a,a+1}} union {E-_{m+1,m}}.  Returns
    (True, weight) with the (p+q)-entry weight on success, or
    (False, description of the first violating operator).
    """
    if v.is_zero():
        raise ValueError("zero vector")
    weight = []
    diagonals = [("gl_p", a, a) for a in range(1, p + 1)]
    diagonals += [("gl_q", m, m) for m in range(p + 1, p + q + 1)]
    for X in diagonals:
        w = k_action(X, v)
        eig = None
        for key, c in v.terms.items():
            d = w.terms.get(key)
            if d is None:
                cand = 0
            else:
                cand = _int_ratio(d, c)
                if cand is None:
                    return False, "not an eigenvector of %r" % (X,)
            if eig is None:
                eig = cand
            elif eig != cand:
                return False, "not an eigenvector of %r" % (X,)
        if w.terms.keys() - v.terms.keys():
            return False, "not an eigenvector of %r" % (X,)
        weight.append(eig if eig is not None else 0)
    raising = [("gl_p", a, a + 1) for a in range(1, p)]
    raising += [("gl_q", m, m + 1) for m in range(p + 1, p + q)]
    for X in raising:
        if not k_action(X, v).is_zero():
            return False, "not annihilated by raising operator %r" % (X,)
    return True, tuple(weight)


def _int_ratio(d: Scalar, c: Scalar):
    """d / c when the quotient is an integer scalar, else None."""
    for n in range(-64, 65):
        if d == c * Scalar.from_int(n):
            return n
    return None


def vz_vector(b: int, a: int, p: int, q: int) -> Multivector:
    """The Vogan-Zuckerman vector e(bq, aq) in Lambda^{bq,aq} p.

    Expanded in the x/y basis as the ordered wedge of x_{k,mu}
    (k = 1..b, mu = p+1..p+q) followed by y_{alpha,mu}
    (alpha = p-a+1..p, mu = p+1..p+q).  The sign prefactor of the
    defining formula exactly cancels the signs from rewriting
    v_k tensor v*_mu = -x_{k,mu}, so the canonical coefficient is +1;
    this normalization is pinned down by the evaluation identity
    psi_{bq,aq}(e(bq,aq)) = Delta~_a^q Delta_b^q.
    """
    if a < 0 or b < 0 or a + b > p:
        raise ValueError("need a, b >= 0 and a+b <= p")
    key = []
    for k in range(1, b + 1):
        for mu in range(p + 1, p + q + 1):
            key.append((PRIME, k, mu))
    for alpha in range(p - a + 1, p + 1):
        for mu in range(p + 1, p + q + 1):
            key.append((DPRIME, alpha, mu))
    skey, sign = _sorted_with_sign(tuple(key))
    assert sign == 1  # the construction order is already canonical
    return Multivector("p", {skey: ONE})


def chern_element(p: int, q: int) -> Multivector:
    """The invariant (q,q)-element c_q of Lambda p*.

    Built from the curvature two-forms
    Omega_{mu,nu} = sum_alpha xi''_{alpha,mu} ^ xi'_{alpha,nu}
    as c_q = ((-i)/(2 pi))^q (1/q!) sum_{s,t in S_q} sgn(st)
    Omega_{p+s(1),p+t(1)} ^ ... ^ Omega_{p+s(q),p+t(q)}.
    """
    from itertools import permutations

    def omega(mu, nu):
        out = Multivector("p*")
        for alpha in range(1, p + 1):
            out = out + wedge(
                Multivector.basis("p*", DPRIME, alpha, mu),
                Multivector.basis("p*", PRIME, alpha, nu),
            )
        return out

    omegas = {
        (mu, nu): omega(mu, nu)
        for mu in range(p + 1, p + q + 1)
        for nu in range(p + 1, p + q + 1)
    }
    total = Multivector("p*")
    perms = list(permutations(range(1, q + 1)))
    for s in perms:
        sgn_s = _perm_sign(s)
        for t in perms:
            term = Multivector.unit("p*")
            for i in range(q):
                term = wedge(term, omegas[(p + s[i], p + t[i])])
                if term.is_zero():
                    break
            sgn = sgn_s * _perm_sign(t)
            total = total + (term if sgn > 0 else -term)
    # (-i/(2 pi))^q / q!
    minus_i_over_2pi = Scalar.from_rational(0, -1, k=-1) * rational(1, 2)
    pref = rational(1, math.factorial(q))
    for _ in range(q):
        pref = pref * minus_i_over_2pi
    return total.scale(pref)


def _perm_sign(perm):
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign
