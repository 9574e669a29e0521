"""Split Schrodinger model, Kudla-Millson operators, Bargmann transfer.

Functions here are polynomials in z_{alpha,k} and zbar_{alpha,k}
(alpha in 1..p, W-block k) times an explicit per-block Gaussian weight:
weight g in block k stands for a factor phi0^g = exp(-pi sum z zbar)^g
in that block's variables.  Tracking integer weights makes the
"phi0 squared versus phi0" distinction of the non-factorization remark
representable exactly.

All derivative operators use the product rule through the Gaussian:
d/dzbar (P phi0^g) = (dP/dzbar - g pi z P) phi0^g and symmetrically.
Only the one-(1,1)-block-per-W-coordinate transfer map is defined;
signature (n,n) is realized by block-wise tensoring.
"""

from __future__ import annotations

from .fock import FockPoly, ZP, ZPP
from .liealg import DPRIME, PRIME, _sorted_with_sign
from .scalars import ONE, PI, PI_INV, SQRT2, Scalar, rational, scalar_div_unit

ZVAR, ZBAR = 0, 1  # variable kinds: z_{alpha,block}, zbar_{alpha,block}


class SchrodFn:
    """Polynomial in z, zbar with per-term Gaussian block weights.

    terms maps (monomial, weights) to nonzero Scalar, where monomial is
    a sorted tuple of ((kind, alpha, block), exponent) and weights a
    sorted tuple of (block, positive integer).
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if c:
                    self.terms[key] = c

    @staticmethod
    def gaussian(blocks=(1,)):
        """The vacuum: weight-1 Gaussian in each listed block."""
        return SchrodFn({((), tuple(sorted((k, 1) for k in set(blocks)))): ONE})

    @staticmethod
    def zero():
        return SchrodFn()

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, SchrodFn) and self.terms == other.terms

    def __add__(self, other):
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
        out = SchrodFn()
        out.terms = t
        return out

    def __neg__(self):
        out = SchrodFn()
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Scalar):
        if not c:
            return SchrodFn()
        out = SchrodFn()
        out.terms = {k: v * c for k, v in self.terms.items()}
        return out

    def __mul__(self, other):
        """Product; Gaussian weights add block-wise."""
        out = SchrodFn()
        t = out.terms
        for (m1, w1), c1 in self.terms.items():
            for (m2, w2), c2 in other.terms.items():
                mono = dict(m1)
                for v, e in m2:
                    mono[v] = mono.get(v, 0) + e
                wts = dict(w1)
                for blk, g in w2:
                    wts[blk] = wts.get(blk, 0) + g
                key = (tuple(sorted(mono.items())), tuple(sorted(wts.items())))
                c = c1 * c2
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

    def weights_used(self):
        return {w for _, w in self.terms}

    def __repr__(self):
        if not self.terms:
            return "0"
        names = {ZVAR: "z", ZBAR: "zbar"}
        bits = []
        for (mono, wts) in sorted(self.terms):
            c = self.terms[(mono, wts)]
            m = "*".join(
                "%s_%d[%d]%s" % (names[k], a, blk, "^%d" % e if e > 1 else "")
                for (k, a, blk), e in mono
            ) or "1"
            w = "*".join("phi0^%d[%d]" % (g, blk) for blk, g in wts)
            bits.append("(%r)*%s%s" % (c, m, "*" + w if w else ""))
        return " + ".join(bits)


def _term_mul_var(key, kind, alpha, block):
    mono, wts = key
    d = dict(mono)
    v = (kind, alpha, block)
    d[v] = d.get(v, 0) + 1
    return (tuple(sorted(d.items())), wts)


def _gauss_diff(f: SchrodFn, kind, alpha, block) -> SchrodFn:
    """d/dz_{alpha,block} (kind ZVAR) or d/dzbar (kind ZBAR), through
    the Gaussian: the derivative of phi0^g contributes
    -g pi (conjugate variable) per term."""
    conj = ZBAR if kind == ZVAR else ZVAR
    out = SchrodFn()
    t = out.terms
    v = (kind, alpha, block)
    for (mono, wts), c in f.terms.items():
        # polynomial part
        for pos, (w, e) in enumerate(mono):
            if w == v:
                if e == 1:
                    nmono = mono[:pos] + mono[pos + 1:]
                    nc = c
                else:
                    nmono = mono[:pos] + ((w, e - 1),) + mono[pos + 1:]
                    nc = c * Scalar.from_int(e)
                key = (nmono, wts)
                s = t.get(key)
                t[key] = nc if s is None else s + nc
                if not t[key]:
                    del t[key]
                break
        # Gaussian part
        g = dict(wts).get(block, 0)
        if g:
            key = _term_mul_var((mono, wts), conj, alpha, block)
            nc = c * PI * Scalar.from_int(-g)
            s = t.get(key)
            t[key] = nc if s is None else s + nc
            if not t[key]:
                del t[key]
    return out


def _require_weight(f: SchrodFn, block):
    for _, wts in f.terms:
        if dict(wts).get(block, 0) < 1:
            raise ValueError("Gaussian weight 0 in block %d" % block)


_HALF_SQRT2 = scalar_div_unit(ONE, SQRT2)


def _raw_creation(f: SchrodFn, alpha, block, bar) -> SchrodFn:
    """z_a f - (1/pi) d f/dzbar_a (bar=False), or the conjugate."""
    _require_weight(f, block)
    mult_kind = ZBAR if bar else ZVAR
    diff_kind = ZVAR if bar else ZBAR
    out = SchrodFn()
    for key, c in f.terms.items():
        nkey = _term_mul_var(key, mult_kind, alpha, block)
        s = out.terms.get(nkey)
        out.terms[nkey] = c if s is None else s + c
    return out - _gauss_diff(f, diff_kind, alpha, block).scale(PI_INV)


def creation_z(alpha: int, block: int, f: SchrodFn) -> SchrodFn:
    """(1/sqrt2)(z_alpha - (1/pi) d/dzbar_alpha) with the Gaussian rule."""
    return _raw_creation(f, alpha, block, bar=False).scale(_HALF_SQRT2)


def creation_zbar(alpha: int, block: int, f: SchrodFn) -> SchrodFn:
    """(1/sqrt2)(zbar_alpha - (1/pi) d/dz_alpha) with the Gaussian rule."""
    return _raw_creation(f, alpha, block, bar=True).scale(_HALF_SQRT2)


def annihilation_z(alpha: int, block: int, f: SchrodFn) -> SchrodFn:
    """(1/sqrt2)(zbar_alpha + (1/pi) d/dz_alpha): the adjoint lowering
    partner of creation_z (transfer of (1/pi) d/dz'_alpha)."""
    out = SchrodFn()
    for key, c in f.terms.items():
        nkey = _term_mul_var(key, ZBAR, alpha, block)
        s = out.terms.get(nkey)
        out.terms[nkey] = c if s is None else s + c
    return (out + _gauss_diff(f, ZVAR, alpha, block).scale(PI_INV)).scale(_HALF_SQRT2)


def annihilation_zbar(alpha: int, block: int, f: SchrodFn) -> SchrodFn:
    """(1/sqrt2)(z_alpha + (1/pi) d/dzbar_alpha)."""
    out = SchrodFn()
    for key, c in f.terms.items():
        nkey = _term_mul_var(key, ZVAR, alpha, block)
        s = out.terms.get(nkey)
        out.terms[nkey] = c if s is None else s + c
    return (out + _gauss_diff(f, ZBAR, alpha, block).scale(PI_INV)).scale(_HALF_SQRT2)


# ---------------------------------------------------------------------------
# Bargmann transfer
# ---------------------------------------------------------------------------


def bargmann(f: FockPoly, blocks=(1,)) -> SchrodFn:
    """Transfer of a Fock polynomial to the split model.

    Defined on monomials by sending the vacuum 1 to the Gaussian and
    each variable to its creation operator: z'_{alpha,i} acts as
    creation_z(alpha, block i) and z''_{alpha,j} as
    creation_zbar(alpha, block j).  The creation operators commute, so
    the recursion is unambiguous.  Inputs must only use z'/z''
    variables whose W-index lies in `blocks` (one (1,1) pair each).
    """
    blocks = tuple(sorted(set(blocks)))
    out = SchrodFn()
    for mono, c in f.terms.items():
        fn = SchrodFn.gaussian(blocks)
        for (family, vidx, widx), e in mono:
            if family not in (ZP, ZPP):
                raise ValueError("transfer defined on P+ variables only")
            if widx not in blocks:
                raise ValueError("W-index %d outside blocks %r" % (widx, blocks))
            for _ in range(e):
                if family == ZP:
                    fn = creation_z(vidx, widx, fn)
                else:
                    fn = creation_zbar(vidx, widx, fn)
        out = out + fn.scale(c)
    return out


# ---------------------------------------------------------------------------
# Lambda p*-valued functions and the Kudla-Millson operators
# ---------------------------------------------------------------------------


class SchrodForm:
    """Finite sum of (exterior monomial of Lambda p*, SchrodFn)."""

    __slots__ = ("p", "q", "terms")

    def __init__(self, p, q, terms=None):
        self.p = p
        self.q = q
        self.terms = {}
        if terms:
            for key, f in terms.items():
                if not f.is_zero():
                    self.terms[key] = f

    @staticmethod
    def vacuum(p, q, blocks=(1,)):
        return SchrodForm(p, q, {(): SchrodFn.gaussian(blocks)})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, SchrodForm)
            and (self.p, self.q) == (other.p, other.q)
            and self.terms == other.terms
        )

    def __add__(self, other):
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
        out = SchrodForm(self.p, self.q)
        out.terms = t
        return out

    def __neg__(self):
        out = SchrodForm(self.p, self.q)
        out.terms = {k: -f for k, f in self.terms.items()}
        return out

    def scale(self, c: Scalar):
        out = SchrodForm(self.p, self.q)
        if c:
            out.terms = {k: f.scale(c) for k, f in self.terms.items()}
        return out

    def wedge(self, other) -> "SchrodForm":
        """Exterior product; function factors multiply (same-block
        products add Gaussian weights — the `internal' wedge)."""
        out = SchrodForm(self.p, self.q)
        t = out.terms
        for k1, f1 in self.terms.items():
            for k2, f2 in other.terms.items():
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

    def weights_used(self):
        return {w for f in self.terms.values() for w in f.weights_used()}

    def bidegrees(self):
        out = set()
        for key in self.terms:
            r = sum(1 for kind, _, _ in key if kind == PRIME)
            out.add((r, len(key) - r))
        return out

    def bidegree(self):
        degs = self.bidegrees()
        if len(degs) != 1:
            raise ValueError("not homogeneous")
        return degs.pop()

    def __repr__(self):
        if not self.terms:
            return "0"
        names = {PRIME: "xi'", DPRIME: "xi''"}
        bits = []
        for key in sorted(self.terms):
            mono = "^".join("%s_%d,%d" % (names[k], a, m) for k, a, m in key) or "1"
            bits.append("%s (x) [%r]" % (mono, self.terms[key]))
        return "  +  ".join(bits)


def bargmann_form(phi, blocks=(1,)) -> SchrodForm:
    """Apply the transfer term-wise to a Cochain's polynomial values."""
    p, q, _, _ = phi.params
    out = SchrodForm(p, q)
    for key, f in phi.terms.items():
        g = bargmann(f, blocks)
        if not g.is_zero():
            out.terms[key] = g
    return out


def _apply_d(mu, block, F: SchrodForm, bar) -> SchrodForm:
    """One Kudla-Millson raising operator: sum over alpha of the
    unnormalized creation operator tensor left multiplication by
    xi'_{alpha,mu} (bar=False) or xi''_{alpha,mu} (bar=True)."""
    p = F.p
    kind = DPRIME if bar else PRIME
    out = SchrodForm(F.p, F.q)
    t = out.terms
    for key, f in F.terms.items():
        present = set(key)
        for alpha in range(1, p + 1):
            idx = (kind, alpha, mu)
            if idx in present:
                continue
            g = _raw_creation(f, alpha, block, bar=not bar)
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


def d_plus(mu: int, block: int, F: SchrodForm) -> SchrodForm:
    """D+_mu = sum_alpha (zbar_alpha - (1/pi) d/dz_alpha) (x) A(xi'_{alpha,mu})."""
    return _apply_d(mu, block, F, bar=False)


def dbar_plus(mu: int, block: int, F: SchrodForm) -> SchrodForm:
    """Dbar+_mu = sum_alpha (z_alpha - (1/pi) d/dzbar_alpha) (x) A(xi''_{alpha,mu})."""
    return _apply_d(mu, block, F, bar=True)


def km_block(p: int, q: int, block: int = 1) -> SchrodForm:
    """One-block Kudla-Millson form phi_{q,q} in the given block:
    (1/2^{2q}) (prod_mu D+_mu)(prod_nu Dbar+_nu) applied to the vacuum,
    products ordered so the exterior factors come out as
    xi'_{p+1} ^ ... ^ xi'_{p+q} ^ xi''_{p+1} ^ ... ^ xi''_{p+q}."""
    F = SchrodForm.vacuum(p, q, blocks=(block,))
    for mu in range(p + q, p, -1):
        F = dbar_plus(mu, block, F)
    for mu in range(p + q, p, -1):
        F = d_plus(mu, block, F)
    return F.scale(rational(1, 2 ** (2 * q)))


def km_cocycle(p: int, q: int, n: int = 1) -> SchrodForm:
    """The Kudla-Millson (nq,nq)-form phi_{nq,nq} by the direct operator
    formula: (1/2^{2nq}) times all D+ operators (every mu, every block)
    applied after all Dbar+ operators, on the n-block vacuum.

    For n=1 this is km_block.  For n>1 it equals the block-wise wedge
    km_block(1) ^ ... ^ km_block(n) up to the exterior reordering sign
    (-1)^{q^2 n(n-1)/2}: the direct formula interleaves each block's
    xi'-word with the next block's, whereas the wedge of one-block
    copies keeps each block's (q,q)-word contiguous.  The direct
    ordering is the one matching the transferred special cocycles.
    """
    if n < 1:
        raise ValueError("n >= 1")
    F = SchrodForm.vacuum(p, q, blocks=tuple(range(1, n + 1)))
    for block in range(n, 0, -1):
        for mu in range(p + q, p, -1):
            F = dbar_plus(mu, block, F)
    for block in range(n, 0, -1):
        for mu in range(p + q, p, -1):
            F = d_plus(mu, block, F)
    return F.scale(rational(1, 2 ** (2 * n * q)))


def product_formula_check(p: int, q: int) -> bool:
    """(B (x) 1)(psi_{q,0} ^ psi_{0,q}) = 2^q phi_{q,q}, exactly."""
    from . import cochains

    transported = bargmann_form(cochains.psi(1, 1, p, q), blocks=(1,))
    return transported == km_cocycle(p, q, 1).scale(Scalar.from_int(2 ** q))


def nonfactorization_demo(p: int):
    """The q=1 comparison showing the transported outer product does not
    factor in the split model.

    Returns (first, second): first is the internal (same-block) wedge
    (B (x) 1)(psi_{1,0}) ^ (B (x) 1)(psi_{0,1}), which carries Gaussian
    weight 2 and equals 2 phi0^2 (sum z_bar_alpha z_beta (x)
    xi' ^ xi''); second is the weight-1 transported cocycle
    (B (x) 1)(psi_{1,0} ^ psi_{0,1}) = 2 phi_{1,1}, whose top-degree
    part is 2 phi0 (sum zbar_alpha z_beta (x) xi' ^ xi'').  The two are
    unequal.
    """
    from . import cochains

    params = (p, 1, 1, 1)
    first = bargmann_form(
        cochains.psi_q0(p, 1, 1, params=params), blocks=(1,)
    ).wedge(bargmann_form(cochains.psi_0q(p, 1, 1, params=params), blocks=(1,)))
    second = km_cocycle(p, 1, 1).scale(Scalar.from_int(2))
    assert first.weights_used() == {((1, 2),)}
    assert second.weights_used() == {((1, 1),)}
    assert first != second
    return first, second
