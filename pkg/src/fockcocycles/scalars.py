"""Exact coefficient ring: Q(i)[sqrt2]/(sqrt2^2 - 2) with Laurent powers of pi.

Every downstream identity is a bit-exact equality of canonical forms in
this ring, so no check anywhere needs a tolerance.  A Scalar is a finite
map (eps, k) -> Gaussian rational, where eps in {0,1} is the exponent of
sqrt2 and k in Z is the exponent of the formal invertible symbol pi.
Only monomial units can be inverted; general field inversion is out of
scope (no in-scope formula needs it).
"""

from __future__ import annotations

from fractions import Fraction


class Scalar:
    """Immutable element of Q(i)[sqrt2] tensor Z-Laurent monomials in pi.

    Stored as ``{(eps, k): (re, im)}`` with Fraction components and no
    zero values (canonical form).  sqrt2^2 is always rewritten to 2.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for (eps, k), (re, im) in terms.items():
                re = Fraction(re)
                im = Fraction(im)
                if re or im:
                    t[(eps, k)] = (re, im)
        self._terms = t
        self._hash = None

    # ---- constructors -------------------------------------------------

    @staticmethod
    def from_rational(re, im=0, eps=0, k=0):
        return Scalar({(eps, k): (Fraction(re), Fraction(im))})

    @staticmethod
    def from_int(n):
        return Scalar({(0, 0): (Fraction(n), Fraction(0))})

    # ---- structure ----------------------------------------------------

    def is_zero(self):
        return not self._terms

    def items(self):
        return self._terms.items()

    def is_rational_monomial(self):
        """True when self = c * sqrt2^eps * pi^k for a single key."""
        return len(self._terms) == 1

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # ---- ring operations ----------------------------------------------

    def __add__(self, other):
        if not other._terms:
            return self
        if not self._terms:
            return other
        t = dict(self._terms)
        for key, (re, im) in other._terms.items():
            if key in t:
                r, i = t[key]
                r, i = r + re, i + im
                if r or i:
                    t[key] = (r, i)
                else:
                    del t[key]
            else:
                t[key] = (re, im)
        out = Scalar.__new__(Scalar)
        out._terms = t
        out._hash = None
        return out

    def __neg__(self):
        out = Scalar.__new__(Scalar)
        out._terms = {key: (-re, -im) for key, (re, im) in self._terms.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self._terms or not other._terms:
            return ZERO
        t = {}
        for (e1, k1), (r1, i1) in self._terms.items():
            for (e2, k2), (r2, i2) in other._terms.items():
                # complex product
                re = r1 * r2 - i1 * i2
                im = r1 * i2 + i1 * r2
                eps = e1 + e2
                if eps == 2:  # sqrt2 * sqrt2 -> 2
                    eps = 0
                    re *= 2
                    im *= 2
                key = (eps, k1 + k2)
                if key in t:
                    r, i = t[key]
                    re, im = r + re, i + im
                if re or im:
                    t[key] = (re, im)
                elif key in t:
                    del t[key]
        out = Scalar.__new__(Scalar)
        out._terms = t
        out._hash = None
        return out

    def inverse_unit(self):
        """Inverse of a monomial unit c*sqrt2^eps*pi^k."""
        if len(self._terms) != 1:
            raise ValueError("only monomial units are invertible: %r" % self)
        ((eps, k), (re, im)), = self._terms.items()
        norm = re * re + im * im
        cre, cim = re / norm, -im / norm
        if eps == 0:
            return Scalar({(0, -k): (cre, cim)})
        # 1/sqrt2 = sqrt2/2
        return Scalar({(1, -k): (cre / 2, cim / 2)})

    # ---- rendering -----------------------------------------------------

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for (eps, k) in sorted(self._terms, key=lambda ek: (ek[1], ek[0])):
            re, im = self._terms[(eps, k)]
            if im == 0:
                coeff = str(re)
            elif re == 0:
                coeff = "%si" % im
            else:
                sign = "+" if im > 0 else "-"
                coeff = "(%s%s%si)" % (re, sign, abs(im))
            sym = ""
            if eps:
                sym += "*sqrt2"
            if k:
                sym += "*pi^%d" % k
            parts.append(coeff + sym)
        return " + ".join(parts)


def scalar_add(x: Scalar, y: Scalar) -> Scalar:
    return x + y


def scalar_mul(x: Scalar, y: Scalar) -> Scalar:
    return x * y


def scalar_div_unit(x: Scalar, u: Scalar) -> Scalar:
    """Divide by a monomial unit; rejects non-monomial divisors."""
    return x * u.inverse_unit()


ZERO = Scalar()
ONE = Scalar.from_int(1)
MINUS_ONE = Scalar.from_int(-1)
TWO = Scalar.from_int(2)
I = Scalar.from_rational(0, 1)
SQRT2 = Scalar.from_rational(1, 0, eps=1)
PI = Scalar.from_rational(1, 0, k=1)
PI_INV = Scalar.from_rational(1, 0, k=-1)


def rational(num, den=1):
    return Scalar.from_rational(Fraction(num, den))


def pi_power(k):
    return Scalar.from_rational(1, 0, k=k)
