"""Exact lattices over Q: Hermite normal form, indices, membership.

Lattices are given by generating sets of row vectors with rational entries.
The canonical form is the row-style HNF: pivots positive and on the diagonal
of the surviving rows, entries above each pivot reduced into [0, pivot).
"""

from fractions import Fraction
from math import isqrt, lcm

from .errors import DimensionError, DomainError, RankError


def xgcd(a, b):
    """Return (g, x, y) with g = gcd(a,b) >= 0 and a*x + b*y = g."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


class LatticeBasis(tuple):
    """Immutable matrix of rational row vectors."""

    def __new__(cls, rows):
        rows = tuple(tuple(Fraction(e) for e in row) for row in rows)
        if rows:
            n = len(rows[0])
            if any(len(row) != n for row in rows):
                raise DimensionError("rows of unequal length")
        return super().__new__(cls, rows)

    @property
    def ambient(self):
        return len(self[0]) if self else 0


def _hnf_int(rows):
    # row-style HNF of integer rows, echelon with positive pivots,
    # entries above each pivot reduced; zero rows dropped
    rows = [list(r) for r in rows]
    if not rows:
        return []
    n = len(rows[0])
    r = 0
    for col in range(n):
        # clear everything below position r in this column
        while True:
            live = [i for i in range(r, len(rows)) if rows[i][col]]
            if not live:
                break
            i = min(live, key=lambda i: abs(rows[i][col]))
            rows[r], rows[i] = rows[i], rows[r]
            if len(live) == 1:
                break
            p = rows[r][col]
            for i in range(r + 1, len(rows)):
                if rows[i][col]:
                    q = rows[i][col] // p
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
        if r < len(rows) and rows[r][col]:
            if rows[r][col] < 0:
                rows[r] = [-a for a in rows[r]]
            p = rows[r][col]
            for k in range(r):
                q = rows[k][col] // p
                if q:
                    rows[k] = [a - q * b for a, b in zip(rows[k], rows[r])]
            r += 1
    return [row for row in rows[:r]]


def hnf_canonicalize(basis) -> LatticeBasis:
    """Canonical full-rank HNF basis of the lattice generated by the rows."""
    basis = LatticeBasis(basis)
    if not basis:
        raise RankError("empty generating set")
    n = basis.ambient
    scale = lcm(*(e.denominator for row in basis for e in row))
    ints = [[int(e * scale) for e in row] for row in basis]
    hnf = _hnf_int(ints)
    if len(hnf) < n:
        raise RankError("rank %d < ambient dimension %d" % (len(hnf), n))
    return LatticeBasis([[Fraction(e, scale) for e in row] for row in hnf])


def mat_det(rows):
    """Determinant of a square rational matrix, as a Fraction."""
    rows = [[Fraction(e) for e in row] for row in rows]
    n = len(rows)
    assert all(len(row) == n for row in rows)
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if rows[i][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for i in range(col + 1, n):
            if rows[i][col]:
                f = rows[i][col] * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[col])]
    return det


def mat_mul(a, b):
    """Matrix product of two row-major rational matrices."""
    return tuple(
        tuple(sum(ra[k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
        for ra in a
    )


def mat_inv(rows):
    """Inverse of a square rational matrix (RankError if singular)."""
    rows = [[Fraction(e) for e in row] for row in rows]
    n = len(rows)
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col]), None)
        if piv is None:
            raise RankError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [e * inv for e in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def solve_left(basis, v):
    """Solve x * basis = v over Q; x as a tuple of Fractions."""
    inv = mat_inv(basis)
    return tuple(sum(Fraction(v[k]) * inv[k][j] for k in range(len(v))) for j in range(len(v)))


def lattice_index(sub, sup) -> Fraction:
    """Generalized index [sup : sub] = |det sub| / |det sup|."""
    sub = hnf_canonicalize(sub)
    sup = hnf_canonicalize(sup)
    if sub.ambient != sup.ambient:
        raise DimensionError("ambient dimensions differ")
    return abs(mat_det(sub)) / abs(mat_det(sup))


def contains(lat, v) -> bool:
    """Is the vector v in the lattice spanned by the given basis?"""
    lat = hnf_canonicalize(lat)
    if len(v) != lat.ambient:
        raise DimensionError("vector length differs from ambient dimension")
    return all(c.denominator == 1 for c in solve_left(lat, v))


def lattice_intersect(b1, b2) -> LatticeBasis:
    """Intersection of two full-rank lattices via the dual-sum trick."""
    b1 = hnf_canonicalize(b1)
    b2 = hnf_canonicalize(b2)
    if b1.ambient != b2.ambient:
        raise DimensionError("ambient dimensions differ")
    d1 = tuple(zip(*mat_inv(b1)))  # rows of (B^-1)^T span the dual
    d2 = tuple(zip(*mat_inv(b2)))
    dsum = hnf_canonicalize(d1 + d2)
    return hnf_canonicalize(tuple(zip(*mat_inv(dsum))))


def factorize(n):
    """Prime factorization of n >= 1 as a dict {p: exponent}."""
    assert n >= 1
    out = {}
    for p in [2, 3]:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisor_sigma(n) -> int:
    """Sum of the positive divisors of n."""
    if not isinstance(n, int) or n <= 0:
        raise DomainError("divisor_sigma needs a positive integer")
    total = 1
    for p, e in factorize(n).items():
        total *= (p ** (e + 1) - 1) // (p - 1)
    return total


def is_prime(n) -> bool:
    """Deterministic primality by trial division (intended for small n)."""
    if not isinstance(n, int) or n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f <= isqrt(n):
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True
