"""Young diagram combinatorics.

Conjugates, box complements, Schur functor dimensions (hook-content),
Littlewood-Richardson coefficients by direct lattice-word tableau
enumeration, and the two rectangle decompositions used by the K-type
analysis: the decomposition of Lambda^R(V+ tensor V-*) and the
dimension of the special Hom space for the rectangle K-types.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


class Partition:
    """A weakly decreasing sequence of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(x) for x in parts if x)
        for i in range(len(parts) - 1):
            if parts[i] < parts[i + 1]:
                raise ValueError("parts must be weakly decreasing: %r" % (parts,))
        if parts and parts[-1] < 0:
            raise ValueError("parts must be positive")
        self.parts = parts

    def size(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        return self.parts == tuple(other)

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        return self.parts < tuple(other)

    def __repr__(self):
        return "[" + ",".join(str(x) for x in self.parts) + "]"


def _parts(lam):
    return lam.parts if isinstance(lam, Partition) else tuple(lam)


def conjugate(lam) -> Partition:
    """Transpose of the diagram."""
    parts = _parts(lam)
    if not parts:
        return Partition()
    return Partition(sum(1 for x in parts if x > i) for i in range(parts[0]))


def complement_in_box(lam, p: int, q: int) -> Partition:
    """Complement of lam inside the p x q box: (q - lam_p, ..., q - lam_1)."""
    parts = _parts(lam)
    if len(parts) > p or (parts and parts[0] > q):
        raise ValueError("%r does not fit in the %dx%d box" % (parts, p, q))
    padded = list(parts) + [0] * (p - len(parts))
    return Partition(q - padded[i] for i in range(p - 1, -1, -1))


def schur_dim(lam, n: int) -> int:
    """Dimension of the Schur functor S_lam(C^n), by hook-content."""
    parts = _parts(lam)
    if len(parts) > n:
        return 0
    conj = conjugate(parts).parts
    dim = Fraction(1)
    for i, row in enumerate(parts):
        for j in range(row):
            hook = (row - j) + (conj[j] - i) - 1
            dim *= Fraction(n + j - i, hook)
    assert dim.denominator == 1
    return int(dim)


def lr_coefficient(lam, mu, nu) -> int:
    """Littlewood-Richardson coefficient c^nu_{lam,mu}.

    Counts semistandard skew tableaux of shape nu/lam and content mu
    whose reverse reading word (rows top to bottom, each right to left)
    is a lattice word.  Direct backtracking enumeration.
    """
    lam, mu, nu = _parts(lam), _parts(mu), _parts(nu)
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    rows = len(nu)
    inner = list(lam) + [0] * (rows - len(lam))
    for i in range(rows):
        if inner[i] > nu[i]:
            return 0
    fill = [[0] * nu[i] for i in range(rows)]
    # cells in reverse reading word order: row by row, right to left
    cells = [(i, j) for i in range(rows) for j in range(nu[i] - 1, inner[i] - 1, -1)]
    counts = [0] * (len(mu) + 1)  # counts[v] = occurrences of value v so far

    def backtrack(pos):
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        total = 0
        for v in range(1, len(mu) + 1):
            if counts[v] >= mu[v - 1]:
                continue
            # lattice condition on the reverse reading word
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            # weakly increasing along the row (right neighbour already set)
            if j + 1 < nu[i] and v > fill[i][j + 1]:
                continue
            # strictly increasing down the column (cell above, if in the skew shape)
            if i > 0 and j < nu[i - 1] and j >= inner[i - 1] and v <= fill[i - 1][j]:
                continue
            # cell above inside inner shape contributes no constraint
            fill[i][j] = v
            counts[v] += 1
            total += backtrack(pos + 1)
            counts[v] -= 1
            fill[i][j] = 0
        return total

    return backtrack(0)


def exterior_decomposition(p: int, q: int, R: int):
    """All partitions of R inside the p x q box.

    These index the summands S_lam(V+) tensor S_{lam*}(V-)* of
    Lambda^R(V+ tensor V-*).
    """
    if not (0 <= R <= p * q):
        raise ValueError("R out of range")
    out = []

    def gen(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if len(prefix) == p:
            return
        for part in range(min(maxpart, remaining), 0, -1):
            gen(remaining - part, part, prefix + [part])

    gen(R, q, [])
    out.sort(key=lambda lam: lam.parts)
    return out


def special_hom_dimension(p: int, q: int, a: int, b: int, n: int) -> int:
    """Multiplicity of the rectangle K-type V(b x q, a x q) in the special
    part of Lambda^{nq} p, computed combinatorially.

    The special summand in exterior degree (A+B)q carries the U(q)
    character det^{A-B}; matching it against det^{a-b} and matching the
    U(p) Cartan-product type reduces to a single LR coefficient
    c^{((2q)^b, q^{p-a-b})}_{(q^B), (q^{p-A})} per admissible (A, B).
    """
    if a + b > p or not (0 <= n <= p):
        raise ValueError("need a+b <= p and 0 <= n <= p")
    nu = Partition([2 * q] * b + [q] * (p - a - b))
    total = 0
    for B in range(0, p + 1):
        A = n - B
        if not (0 <= A <= p):
            continue
        if A - B != a - b:
            continue
        lam = Partition([q] * B)
        mu = Partition([q] * (p - A))
        total += lr_coefficient(lam, mu, nu)
    return total


def dimension_identity_holds(p: int, q: int) -> bool:
    """Check sum over lam in the box of dim S_lam(C^p) * dim S_{lam*}(C^q)
    against binomial(pq, R), for every exterior degree R."""
    for R in range(p * q + 1):
        total = sum(
            schur_dim(lam, p) * schur_dim(conjugate(lam), q)
            for lam in exterior_decomposition(p, q, R)
        )
        if total != comb(p * q, R):
            return False
    return True
