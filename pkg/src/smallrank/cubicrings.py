"""Binary cubic forms and cubic rings: the rank-3 dictionary.

A binary cubic form (p, q, r, s) stands for p*x^3 + q*x^2*y + r*x*y^2 +
s*y^3.  Its cubic ring has basis (1, xi1, xi2) and multiplication table

    xi1^2   = -b*f + a*xi1 + b*xi2
    xi1*xi2 = b*e
    xi2^2   = -a*e + e*xi1 + f*xi2

with (a, b, e, f) = (-q, p, -s, r).  The constant terms are the unique
choice making the table associative once the cross product xi1*xi2 has no
xi1, xi2 component; general tables are brought to that shape by translating
the generators.
"""

from math import gcd

from .errors import DomainError, NotUnimodular
from .exactlattice import mat_det


class CubicRing:
    """Cubic ring with normalized multiplication table, determined by (a, b, e, f)."""

    def __init__(self, a, b, e, f):
        self.a, self.b, self.e, self.f = int(a), int(b), int(e), int(f)

    @property
    def ell(self):
        return -self.b * self.f

    @property
    def m(self):
        return self.b * self.e

    @property
    def n(self):
        return -self.a * self.e

    @classmethod
    def from_table(cls, ell, m, n, a, b, c, d, e, f):
        """Normalize a general associative table

            xi1^2   = ell + a*xi1 + b*xi2
            xi1*xi2 = m   + c*xi1 + d*xi2
            xi2^2   = n   + e*xi1 + f*xi2

        by the translation xi1 -> xi1 - d, xi2 -> xi2 - c.
        """
        a2, b2, e2, f2 = a - 2 * d, b, e, f - 2 * c
        ring = cls(a2, b2, e2, f2)
        # the normalized constants are forced; mismatches mean a bad table
        ell2 = ell + d * d + (a - 2 * d) * d + b * c
        m2 = m + c * d
        n2 = n + c * c + (f - 2 * c) * c + d * e
        if (ell2, m2, n2) != (ring.ell, ring.m, ring.n):
            raise DomainError("multiplication table is not associative")
        return ring

    def mul(self, x, y):
        """Product of two elements given as coordinate triples over (1, xi1, xi2)."""
        x0, x1, x2 = x
        y0, y1, y2 = y
        return (
            x0 * y0 + x1 * y1 * self.ell + (x1 * y2 + x2 * y1) * self.m + x2 * y2 * self.n,
            x0 * y1 + x1 * y0 + x1 * y1 * self.a + x2 * y2 * self.e,
            x0 * y2 + x2 * y0 + x1 * y1 * self.b + x2 * y2 * self.f,
        )

    def trace(self, x):
        """Trace of the multiplication-by-x endomorphism."""
        x0, x1, x2 = x
        return 3 * x0 + x1 * self.a + x2 * self.f

    def trace_matrix(self):
        basis = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        return tuple(
            tuple(self.trace(self.mul(u, v)) for v in basis) for u in basis
        )

    def disc(self) -> int:
        """Determinant of the trace form on the basis (1, xi1, xi2)."""
        d = mat_det(self.trace_matrix())
        assert d.denominator == 1
        return int(d)

    def __eq__(self, other):
        return isinstance(other, CubicRing) and (
            (self.a, self.b, self.e, self.f) == (other.a, other.b, other.e, other.f)
        )

    def __hash__(self):
        return hash((self.a, self.b, self.e, self.f))

    def __repr__(self):
        return "CubicRing(a=%d, b=%d, e=%d, f=%d)" % (self.a, self.b, self.e, self.f)


def ring_from_cubic_form(form) -> CubicRing:
    """Cubic ring of a binary cubic form (p, q, r, s)."""
    p, q, r, s = form
    return CubicRing(-q, p, -s, r)


def form_from_cubic_ring(ring) -> tuple:
    """Binary cubic form of a normalized cubic ring; inverse of ring_from_cubic_form."""
    return (ring.b, -ring.a, ring.f, -ring.e)


def cubic_eval(form, x, y):
    p, q, r, s = form
    return p * x**3 + q * x * x * y + r * x * y * y + s * y**3


def cubic_form_disc(form) -> int:
    """Discriminant 18pqrs - 4q^3 s + q^2 r^2 - 4p r^3 - 27 p^2 s^2."""
    p, q, r, s = form
    return (
        18 * p * q * r * s
        - 4 * q**3 * s
        + q * q * r * r
        - 4 * p * r**3
        - 27 * p * p * s * s
    )


def cubic_content(form) -> int:
    """gcd of the four coefficients (0 for the zero form)."""
    p, q, r, s = form
    return gcd(gcd(abs(p), abs(q)), gcd(abs(r), abs(s)))


def values_mod(form, m) -> frozenset:
    """The set of residues the form attains modulo m."""
    if m < 2:
        raise DomainError("modulus %r below 2" % (m,))
    return frozenset(cubic_eval(form, x, y) % m for x in range(m) for y in range(m))


def cubic_twisted_act(mat, form):
    """Substitute (x, y) -> (x, y) * mat and divide by det(mat)."""
    det = mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    if det not in (1, -1):
        raise NotUnimodular("determinant %r not a unit" % (det,))
    m00, m01 = mat[0]
    m10, m11 = mat[1]
    p, q, r, s = form
    # coefficients of form((x*m00 + y*m10, x*m01 + y*m11))
    p2 = cubic_eval(form, m00, m01)
    s2 = cubic_eval(form, m10, m11)
    q2 = (
        3 * p * m00 * m00 * m10
        + q * (m00 * m00 * m11 + 2 * m00 * m01 * m10)
        + r * (m01 * m01 * m10 + 2 * m00 * m01 * m11)
        + 3 * s * m01 * m01 * m11
    )
    r2 = (
        3 * p * m00 * m10 * m10
        + q * (m10 * m10 * m01 + 2 * m10 * m11 * m00)
        + r * (m11 * m11 * m00 + 2 * m10 * m11 * m01)
        + 3 * s * m11 * m11 * m01
    )
    out = (p2 // det, q2 // det, r2 // det, s2 // det)
    assert (p2 % det, q2 % det, r2 % det, s2 % det) == (0, 0, 0, 0)
    return out


def idempotents_within(ring, height=10):
    """All coordinate triples x with x*x == x and |coordinates| <= height.

    Brute-force box search: a semi-decision used to recognize split rings.
    """
    out = []
    rng = range(-height, height + 1)
    for x0 in rng:
        for x1 in rng:
            for x2 in rng:
                x = (x0, x1, x2)
                if ring.mul(x, x) == x:
                    out.append(x)
    return tuple(sorted(out))
