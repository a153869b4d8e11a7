"""vartin: exact computation with virtual Artin groups over Coxeter graphs.

The package materializes, for an arbitrary Coxeter graph, the root system
and Coxeter group (module `coxeter`, `roots`), the monomial linear
representation of the associated virtual Artin group with a machine check
of its defining relations (`varep`), rewriting of group words into
pure x Coxeter normal form (`pva`), and torsion/conjugacy decisions in the
crystallographic quotient (`crystal`).  Everything is exact: scalars live
in Z[2cos(pi/L)] (`scalar`) and signs are certified by adaptive interval
arithmetic.
"""

from .scalar import INFINITY, Scalar, ScalarRing, make_ring

__all__ = [
    "INFINITY",
    "Scalar",
    "ScalarRing",
    "make_ring",
]

__version__ = "0.1.0"
