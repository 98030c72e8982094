"""Quadratic rings over Z and their fractional ideals.

A ring is Z[xi] with xi^2 = t*xi - u, stored as the pair (t, u) exactly as
given (no silent normalization, so raw presentations coming out of cube
computations survive round trips).  Elements are coordinate pairs (x, y)
meaning x + y*xi.  Ideals are rank-2 lattices in Q^2 stable under
multiplication by xi, stored with the basis rows exactly as given.
"""

from fractions import Fraction

from .errors import (
    FormRingMismatch,
    NotAModule,
    NotUnit,
    RankError,
    RingMismatch,
    UnsupportedDiscriminant,
    ZeroForm,
)
from .exactlattice import LatticeBasis, hnf_canonicalize, mat_det, mat_inv, mat_mul, xgcd
from .quadforms import content, discriminant, reduce, twisted_act


class QuadraticRing:
    """Z[xi] with xi^2 = t*xi - u."""

    def __init__(self, t, u):
        self.t = int(t)
        self.u = int(u)

    @property
    def disc(self):
        return self.t * self.t - 4 * self.u

    def normalized(self):
        """Isomorphic presentation with t in {0, 1} (xi shifted by an integer)."""
        k = self.t // 2
        return QuadraticRing(self.t - 2 * k, self.u - self.t * k + k * k)

    def mul(self, x, y):
        return (
            x[0] * y[0] - self.u * x[1] * y[1],
            x[0] * y[1] + x[1] * y[0] + self.t * x[1] * y[1],
        )

    def conj(self, x):
        return (x[0] + self.t * x[1], -x[1])

    def norm(self, x):
        return x[0] * x[0] + self.t * x[0] * x[1] + self.u * x[1] * x[1]

    def trace(self, x):
        return 2 * x[0] + self.t * x[1]

    def xi_matrix(self):
        # right-multiplication matrix of xi on row coordinates (x, y)
        return ((0, 1), (-self.u, self.t))

    def __eq__(self, other):
        return isinstance(other, QuadraticRing) and (self.t, self.u) == (other.t, other.u)

    def __hash__(self):
        return hash((self.t, self.u))

    def __repr__(self):
        return "QuadraticRing(t=%d, u=%d)" % (self.t, self.u)


def ring_from_disc(d) -> QuadraticRing:
    """The quadratic ring of discriminant d in normalized presentation."""
    if d % 4 == 0:
        return QuadraticRing(0, -d // 4)
    if d % 4 == 1:
        return QuadraticRing(1, (1 - d) // 4)
    raise UnsupportedDiscriminant("%d is not 0 or 1 mod 4" % d)


def ring_from_norm_form(f, v) -> QuadraticRing:
    """Ring whose norm form is GL2(Z)-equivalent to f via a vector of value 1."""
    a, b, c = f
    x0, y0 = v
    if a * x0 * x0 + b * x0 * y0 + c * y0 * y0 != 1:
        raise NotUnit("form value at %r is not 1" % (v,))
    g, alpha, beta = xgcd(x0, y0)
    assert g == 1  # value 1 forces a primitive vector
    m = ((x0, y0), (-beta, alpha))
    one, q, r = twisted_act(m, f)
    assert one == 1
    return QuadraticRing(q, r).normalized()


class QuadIdeal:
    """Fractional ideal of a quadratic ring, basis rows stored as given."""

    def __init__(self, ring, basis):
        self.ring = ring
        self.basis = tuple(tuple(Fraction(e) for e in row) for row in basis)
        if len(self.basis) != 2 or any(len(r) != 2 for r in self.basis):
            raise RankError("an ideal basis is two row vectors of length 2")
        if mat_det(self.basis) == 0:
            raise RankError("basis rows are dependent")
        x = self.xi_action()
        if any(e.denominator != 1 for row in x for e in row):
            raise NotAModule("lattice is not xi-stable over %r" % ring)

    def xi_action(self):
        # matrix X with xi*eta_i = X[0][i]*eta_1 + X[1][i]*eta_2
        p = self.basis
        xp = mat_mul(mat_mul(p, self.ring.xi_matrix()), mat_inv(p))
        return tuple(zip(*xp))

    def hnf(self) -> LatticeBasis:
        return hnf_canonicalize(self.basis)

    def canonical(self):
        return QuadIdeal(self.ring, self.hnf())

    def __eq__(self, other):
        return (
            isinstance(other, QuadIdeal)
            and self.ring == other.ring
            and self.hnf() == other.hnf()
        )

    def __hash__(self):
        return hash((self.ring, self.hnf()))

    def __repr__(self):
        return "QuadIdeal(%r, %r)" % (self.ring, self.basis)


def unit_ideal(ring) -> QuadIdeal:
    return QuadIdeal(ring, ((1, 0), (0, 1)))


def raw_form(ideal):
    """Associated form of the stored basis, before any reduction."""
    x = ideal.xi_action()
    (a, b), (c, d) = x
    f = (int(c), int(d - a), int(-b))
    assert a + d == ideal.ring.t and a * d - b * c == ideal.ring.u
    assert discriminant(f) == ideal.ring.disc
    return f


def form_from_ideal(ideal):
    """Associated form; Lagrange-reduced when the discriminant is negative."""
    f = raw_form(ideal)
    if ideal.ring.disc >= 0:
        return f
    if f[0] < 0:
        f = (-f[0], f[1], -f[2])  # improper twist, determinant -1
    return reduce(f)[0]


def ideal_from_form(f, ring) -> QuadIdeal:
    """The ideal whose stored basis has raw associated form exactly f."""
    if f == (0, 0, 0):
        raise ZeroForm("the zero form defines no ideal")
    if discriminant(f) != ring.disc:
        raise FormRingMismatch("form disc %d != ring disc %d" % (discriminant(f), ring.disc))
    p, q, r = f
    if p != 0:
        a = (ring.t - q) // 2
        basis = ((Fraction(1), Fraction(0)), (Fraction(-a, p), Fraction(1, p)))
    else:
        # move a nonzero value into the leading slot, build there, pull back
        m = ((0, 1), (-1, 0)) if r != 0 else ((1, 1), (0, 1))
        g = twisted_act(m, f)
        assert g[0] != 0
        inner = ideal_from_form(g, ring)
        basis = mat_mul(mat_inv(m), inner.basis)
    ideal = QuadIdeal(ring, basis)
    assert raw_form(ideal) == f
    return ideal


def multiply(i, j) -> QuadIdeal:
    """Product ideal, canonical (HNF) basis."""
    if i.ring != j.ring:
        raise RingMismatch("%r vs %r" % (i.ring, j.ring))
    rows = [i.ring.mul(bi, bj) for bi in i.basis for bj in j.basis]
    return QuadIdeal(i.ring, hnf_canonicalize(rows))


def conjugate(i) -> QuadIdeal:
    """Image under the nontrivial ring involution, canonical basis."""
    return QuadIdeal(i.ring, hnf_canonicalize([i.ring.conj(row) for row in i.basis]))


def ideal_norm(i) -> Fraction:
    """Covolume relative to the ring of coefficients, always positive."""
    return abs(mat_det(i.basis))


def scale(i, elt) -> QuadIdeal:
    """The ideal elt * I for a ring element elt = (x, y), canonical basis."""
    rows = [i.ring.mul(elt, row) for row in i.basis]
    return QuadIdeal(i.ring, hnf_canonicalize(rows))


def endomorphism_ring(i) -> QuadraticRing:
    """Multiplier ring of the lattice, in normalized presentation."""
    c = content(raw_form(i))
    return ring_from_disc(i.ring.disc // (c * c))


def is_invertible(i) -> bool:
    """Invertible as a module over its own ring (primitive associated form)."""
    return content(raw_form(i)) == 1


def inverse(i) -> QuadIdeal:
    """Inverse of an invertible ideal: conjugate divided by the norm."""
    n = ideal_norm(i)
    conj = conjugate(i)
    rows = [[e / n for e in row] for row in conj.basis]
    inv = QuadIdeal(i.ring, hnf_canonicalize(rows))
    assert multiply(i, inv) == unit_ideal(i.ring).canonical()
    return inv


def class_semigroup(d):
    """All reduced forms of discriminant d and their ideal-class product table.

    Returns (elements, table): table[i][j] is the index of the reduced form of
    the product of the ideals of elements[i] and elements[j].
    """
    from .quadforms import enumerate_reduced

    ring = ring_from_disc(d)
    elements = enumerate_reduced(d)
    ideals = [ideal_from_form(f, ring) for f in elements]
    table = [
        [elements.index(form_from_ideal(multiply(a, b))) for b in ideals] for a in ideals
    ]
    return elements, table
