"""Exact-arithmetic cocycle constructions for the dual pair U(p,q) x U(a,b).

The package builds, in the polynomial Fock model of the oscillator
representation, the closed K-equivariant cochains whose wedge structure
mirrors the Kudla-Millson forms, and verifies their defining identities
(closedness, evaluation on Vogan-Zuckerman vectors, equivariance,
harmonicity, multiplicity one, and the split-model product formula) by
bit-exact computation.
"""

from .scalars import Scalar
from .partitions import Partition

__all__ = ["Scalar", "Partition"]
__version__ = "0.1.0"
