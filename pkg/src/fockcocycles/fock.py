"""The polynomial Fock model P(V tensor W) = P+ tensor P-.

Variables come in four families indexed by a V-index and a W-index:

* z'_{alpha,i}  (family ZP):  alpha in 1..p, i in 1..a
* z''_{alpha,j} (family ZPP): alpha in 1..p, j in 1..b
* w'_{mu,j}     (family WP):  mu in p+1..p+q, j in 1..b
* w''_{mu,i}    (family WPP): mu in p+1..p+q, i in 1..a

The module implements exact polynomial arithmetic, the oscillator
operators of the p-action (sums over W-coordinates of the rank-one
formulas), the lowering Laplacians and harmonicity, the minor
determinants generating the special harmonic vectors, the infinitesimal
twisted action of gl(p)+gl(q)+gl(a)+gl(b), and the graded-slice linear
algebra behind the multiplicity-one checks.
"""

from __future__ import annotations

from fractions import Fraction

from .liealg import PRIME, DPRIME
from .scalars import Scalar, ZERO, ONE

ZP, ZPP, WP, WPP = 0, 1, 2, 3
_FAMILY_NAMES = {ZP: "z'", ZPP: "z''", WP: "w'", WPP: "w''"}


def var(family, vidx, widx):
    return (family, vidx, widx)


class FockPoly:
    """Finite map from exponent vectors to nonzero Scalars.

    A monomial is a sorted tuple of (variable, positive exponent) pairs.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if c:
                    self.terms[key] = c

    @staticmethod
    def constant(c: Scalar):
        return FockPoly({(): c} if c else None)

    @staticmethod
    def variable(v, coeff=ONE):
        return FockPoly({((v, 1),): coeff})

    @staticmethod
    def zero():
        return FockPoly()

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, FockPoly) and self.terms == other.terms

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
        out = FockPoly()
        out.terms = t
        return out

    def __neg__(self):
        out = FockPoly()
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Scalar):
        if not c:
            return FockPoly()
        out = FockPoly()
        out.terms = {k: v * c for k, v in self.terms.items()}
        return out

    def __mul__(self, other):
        out = FockPoly()
        t = out.terms
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = _merge_monomials(k1, k2)
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

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = FockPoly.constant(ONE)
        for _ in range(n):
            out = out * self
        return out

    def mul_var(self, v):
        """Multiply by a single variable (hot path of the differential)."""
        out = FockPoly()
        for key, c in self.terms.items():
            out.terms[_merge_monomials(key, ((v, 1),))] = c
        return out

    def diff(self, v):
        """Exact partial derivative with respect to variable v."""
        out = FockPoly()
        t = out.terms
        for key, c in self.terms.items():
            for pos, (w, e) in enumerate(key):
                if w == v:
                    if e == 1:
                        nkey = key[:pos] + key[pos + 1:]
                        nc = c
                    else:
                        nkey = key[:pos] + ((w, e - 1),) + key[pos + 1:]
                        nc = c * Scalar.from_int(e)
                    s = t.get(nkey)
                    if s is None:
                        t[nkey] = nc
                    else:
                        s = s + nc
                        if s:
                            t[nkey] = s
                        else:
                            del t[nkey]
                    break
        return out

    def total_degree(self):
        return max((sum(e for _, e in key) for key in self.terms), default=0)

    def families_used(self):
        return {v[0] for key in self.terms for v, _ in key}

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms):
            mono = "*".join(
                "%s_%d,%d%s" % (_FAMILY_NAMES[f], vi, wi, "^%d" % e if e > 1 else "")
                for (f, vi, wi), e in key
            ) or "1"
            bits.append("(%r)*%s" % (self.terms[key], mono))
        return " + ".join(bits)


def _merge_monomials(k1, k2):
    if not k1:
        return k2
    if not k2:
        return k1
    d = dict(k1)
    for v, e in k2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def poly_mul(f: FockPoly, g: FockPoly) -> FockPoly:
    return f * g


# ---------------------------------------------------------------------------
# Oscillator action of p
# ---------------------------------------------------------------------------


def weil_p_action(idx, f: FockPoly, params) -> FockPoly:
    """Action of the p-basis element named by idx on f.

    For x_{alpha,mu}: sum_i d^2 f / dz'_{alpha,i} dw''_{mu,i}
                    + sum_j z''_{alpha,j} w'_{mu,j} f.
    For y_{alpha,mu}: sum_i z'_{alpha,i} w''_{mu,i} f
                    + sum_j d^2 f / dz''_{alpha,j} dw'_{mu,j}.

    The general (a,b) operator is the sum over W-coordinates of the
    rank-one-W formulas (Fock model of a direct sum).
    """
    p, q, a, b = params
    kind, alpha, mu = idx
    out = FockPoly()
    fams = f.families_used()
    if kind == PRIME:
        if WPP in fams:
            for i in range(1, a + 1):
                out = out + f.diff(var(ZP, alpha, i)).diff(var(WPP, mu, i))
        for j in range(1, b + 1):
            out = out + f.mul_var(var(ZPP, alpha, j)).mul_var(var(WP, mu, j))
    else:
        for i in range(1, a + 1):
            out = out + f.mul_var(var(ZP, alpha, i)).mul_var(var(WPP, mu, i))
        if WP in fams:
            for j in range(1, b + 1):
                out = out + f.diff(var(ZPP, alpha, j)).diff(var(WP, mu, j))
    return out


# ---------------------------------------------------------------------------
# Laplacians, harmonics, minors
# ---------------------------------------------------------------------------


def laplacian(i: int, j: int, f: FockPoly, p: int) -> FockPoly:
    """Delta_{i,j} f = sum_alpha d^2 f / dz'_{alpha,i} dz''_{alpha,j}."""
    out = FockPoly()
    for alpha in range(1, p + 1):
        out = out + f.diff(var(ZP, alpha, i)).diff(var(ZPP, alpha, j))
    return out


def is_harmonic(f: FockPoly, p: int, a: int, b: int) -> bool:
    """True iff all lowering Laplacians annihilate f (f in P+ variables)."""
    if f.families_used() - {ZP, ZPP}:
        raise ValueError("harmonicity is defined for P+ polynomials")
    return all(
        laplacian(i, j, f, p).is_zero()
        for i in range(1, a + 1)
        for j in range(1, b + 1)
    )


def _det(entries, k):
    """Determinant of the k x k matrix of variables entries[(r,c)]."""
    from itertools import permutations

    out = FockPoly()
    for perm in permutations(range(k)):
        sign = 1
        for r in range(k):
            for s in range(r + 1, k):
                if perm[r] > perm[s]:
                    sign = -sign
        term = FockPoly.constant(ONE if sign > 0 else -ONE)
        for r in range(k):
            term = term.mul_var(entries[(r, perm[r])])
        out = out + term
    return out


def det_delta(k: int, p: int, b: int) -> FockPoly:
    """Delta_k = det(z''_{alpha,j}), 1 <= alpha, j <= k."""
    if not (1 <= k <= min(p, b)):
        raise ValueError("need 1 <= k <= min(p, b)")
    return _det({(r, c): var(ZPP, r + 1, c + 1) for r in range(k) for c in range(k)}, k)


def det_delta_tilde(ell: int, p: int, a: int) -> FockPoly:
    """Delta~_ell = det(z'_{alpha,j}), p-ell+1 <= alpha <= p, 1 <= j <= ell."""
    if not (1 <= ell <= min(p, a)):
        raise ValueError("need 1 <= ell <= min(p, a)")
    return _det(
        {(r, c): var(ZP, p - ell + 1 + r, c + 1) for r in range(ell) for c in range(ell)},
        ell,
    )


# ---------------------------------------------------------------------------
# Infinitesimal twisted action of gl(p) + gl(q) + gl(a) + gl(b)
# ---------------------------------------------------------------------------


def k_side_action(X, f: FockPoly, params) -> FockPoly:
    """Infinitesimal twisted oscillator action on P+ polynomials.

    gl(p) E_{alpha,beta}: sum_j z''_{alpha,j} d/dz''_{beta,j}
                        - sum_i z'_{beta,i} d/dz'_{alpha,i}
      (standard on the z'' matrix block, dual on z'; no determinant
      twist).  gl(q) acts by the central character: (a-b) delta_{mu,nu}.
      gl(a) acts by the dual row action plus the twist shift q delta;
      gl(b) by the standard row action plus the shift p delta.
    """
    p, q, a, b = params
    family, r, s = X
    out = FockPoly()
    if family == "gl_p":
        for j in range(1, b + 1):
            out = out + f.diff(var(ZPP, s, j)).mul_var(var(ZPP, r, j))
        for i in range(1, a + 1):
            out = out - f.diff(var(ZP, r, i)).mul_var(var(ZP, s, i))
        return out
    if family == "gl_q":
        if r == s:
            return f.scale(Scalar.from_int(a - b))
        return out
    if family == "gl_a":
        for alpha in range(1, p + 1):
            out = out - f.diff(var(ZP, alpha, r)).mul_var(var(ZP, alpha, s))
        if r == s:
            out = out + f.scale(Scalar.from_int(q))
        return out
    if family == "gl_b":
        for alpha in range(1, p + 1):
            out = out + f.diff(var(ZPP, alpha, s)).mul_var(var(ZPP, alpha, r))
        if r == s:
            out = out + f.scale(Scalar.from_int(p))
        return out
    raise ValueError("unknown block %r" % (family,))


def vacuum_character(p: int, q: int, a: int, b: int):
    """Diagonal eigenvalues of the four blocks on the constant 1."""
    one = FockPoly.constant(ONE)
    params = (p, q, a, b)

    def eig(X):
        g = k_side_action(X, one, params)
        if g.is_zero():
            return 0
        c = g.terms.get(())
        for n in range(-p - q - a - b - 4, p + q + a + b + 5):
            if c == Scalar.from_int(n):
                return n
        raise AssertionError("non-scalar vacuum action")

    glp = [eig(("gl_p", i, i)) for i in range(1, p + 1)]
    glq = [eig(("gl_q", p + m, p + m)) for m in range(1, q + 1)]
    gla = [eig(("gl_a", i, i)) for i in range(1, a + 1)]
    glb = [eig(("gl_b", j, j)) for j in range(1, b + 1)]
    return glp, glq, gla, glb


# ---------------------------------------------------------------------------
# Graded-slice linear algebra for multiplicity counts
# ---------------------------------------------------------------------------


def _scalar_fraction(c: Scalar) -> Fraction:
    if c.is_zero():
        return Fraction(0)
    items = list(c.items())
    if len(items) != 1:
        raise ValueError("non-rational scalar in linear algebra: %r" % c)
    (eps, k), (re, im) = items[0]
    if eps or k or im:
        raise ValueError("non-rational scalar in linear algebra: %r" % c)
    return re


def _monomials_of_degree(variables, degree):
    """All monomials of exactly the given total degree."""
    out = []

    def gen(pos, remaining, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if pos == len(variables):
            return
        gen(pos + 1, remaining, prefix)
        for e in range(1, remaining + 1):
            gen(pos + 1, remaining - e, prefix + [(variables[pos], e)])

    gen(0, degree, [])
    return [tuple(sorted(m)) for m in out]


def harmonic_hw_multiplicity(p: int, q: int, a: int, b: int, degree: int) -> int:
    """Dimension of the space of highest weight vectors of weight
    (q^b, 0^{p-a-b}, (-q)^a) inside the degree-`degree` harmonic part
    of P+ (joint kernel of Laplacians and gl(p) raising operators on
    the weight-and-degree graded slice)."""
    target = tuple([q] * b + [0] * (p - a - b) + [-q] * a)
    variables = [var(ZP, alpha, i) for alpha in range(1, p + 1) for i in range(1, a + 1)]
    variables += [var(ZPP, alpha, j) for alpha in range(1, p + 1) for j in range(1, b + 1)]
    slice_basis = []
    for mono in _monomials_of_degree(variables, degree):
        wt = [0] * p
        for (fam, vidx, _), e in mono:
            wt[vidx - 1] += e if fam == ZPP else -e
        if tuple(wt) == target:
            slice_basis.append(mono)
    if not slice_basis:
        return 0
    params = (p, q, a, b)
    operators = []
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            operators.append(lambda f, i=i, j=j: laplacian(i, j, f, p))
    for alpha in range(1, p):
        operators.append(
            lambda f, alpha=alpha: k_side_action(("gl_p", alpha, alpha + 1), f, params)
        )
    rows = {}
    for col, mono in enumerate(slice_basis):
        f = FockPoly({mono: ONE})
        for opno, op in enumerate(operators):
            g = op(f)
            for key, c in g.terms.items():
                rows.setdefault((opno, key), {})[col] = _scalar_fraction(c)
    rank = _matrix_rank(list(rows.values()), len(slice_basis))
    return len(slice_basis) - rank


def _matrix_rank(rows, ncols):
    """Rank of a sparse matrix over Q (rows are {col: Fraction} dicts)."""
    pivots = {}  # pivot col -> normalized row dict
    rank = 0
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            if col in pivots:
                factor = row[col]
                for c, v in pivots[col].items():
                    nv = row.get(c, Fraction(0)) - factor * v
                    if nv:
                        row[c] = nv
                    elif c in row:
                        del row[c]
            else:
                inv = 1 / row[col]
                pivots[col] = {c: v * inv for c, v in row.items()}
                rank += 1
                break
    return rank
