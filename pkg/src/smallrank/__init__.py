"""smallrank: exact arithmetic for rings of rank 2, 3 and 4 over Z.

Composition of binary quadratic forms through 2x2x2 cubes, the ideal <-> form
dictionary for quadratic rings, cubic rings from binary cubic forms, quartic
rings with cubic resolvents from pairs of ternary quadratic forms, maximality
testing, and a p-adic balanced-triple count with its enumeration oracle.
"""

from . import (
    cubes,
    cubicrings,
    errors,
    exactlattice,
    padic,
    quadforms,
    quadrings,
    quarticrings,
)

__version__ = "0.1.0"

__all__ = [
    "cubes",
    "cubicrings",
    "errors",
    "exactlattice",
    "padic",
    "quadforms",
    "quadrings",
    "quarticrings",
    "__version__",
]
