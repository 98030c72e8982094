"""Quartic rings from pairs of integral ternary quadratic forms.

A pair ``P = (A, B)`` of ternary quadratic forms with integer coefficients
is stored as two 6-tuples in the coefficient order

    (a11, a22, a33, a12, a13, a23),

meaning ``A(x1,x2,x3) = a11*x1^2 + a22*x2^2 + a33*x3^2 + a12*x1*x2 +
a13*x1*x3 + a23*x2*x3`` (cross coefficients are *not* halved).

Such a pair determines a commutative ring with unit that is free of rank 4
as a Z-module, with basis ``1, xi1, xi2, xi3`` and multiplication table

    xi_i * xi_j = c_ij^0 + c_ij^1 xi1 + c_ij^2 xi2 + c_ij^3 xi3 ,

where the structure constants are integer polynomials in the 2x2 minors

    lam(x, y) = a_x * b_y - a_y * b_x

of the 2x6 coefficient matrix of the pair (x, y run over the six index
pairs above).  The basis is normalized so that c_12^1 = c_23^2 = c_13^3 = 0;
with that normalization the xi-coefficients c_ij^k are *linear* in the
minors and the constants c_ij^0 are determined by associativity.

The module provides the pair -> ring map, its inverse (reconstructing, up
to the intrinsic ambiguity, a pair from a quartic ring together with a
choice of rank-2 quotient lattice), the associated cubic resolvent form,
discriminant comparisons, and a maximality test for the ring at a prime.
"""

from fractions import Fraction
from collections import namedtuple
from math import gcd

from .errors import DegenerateRing, DomainError, RankError, TrivialRing
from .exactlattice import (
    divisor_sigma,
    factorize,
    hnf_canonicalize,
    mat_det,
    mat_inv,
    mat_mul,
    solve_left,
)
from .cubicrings import cubic_form_disc, ring_from_cubic_form

__all__ = [
    "SIX",
    "MinimalResolvent",
    "QuarticRing",
    "ternary_eval",
    "lambda_system",
    "plucker_check",
    "ring_from_pair",
    "pair_from_ring",
    "count_numerical_resolvents",
    "enumerate_numerical_resolvents",
    "cubic_resolvent_form",
    "disc_quartic",
    "disc_match",
    "resolvent_identity_check",
    "is_maximal_at_p",
    "is_maximal",
    "nonmaximality_conditions_witness",
]

#: Index pairs (i, j) of the six ternary-form coefficients, in storage order.
SIX = ((1, 1), (2, 2), (3, 3), (1, 2), (1, 3), (2, 3))

_SIX_INDEX = {ij: n for n, ij in enumerate(SIX)}

#: A distinguished rank-2 quotient lattice of a quartic ring: ``lattice`` is
#: the canonical basis of the minimal rank-2 lattice receiving the quadratic
#: map, and ``content`` is the gcd of the lambda-minors (the index scale
#: governing how many enlargements of ``lattice`` also receive the map).
MinimalResolvent = namedtuple("MinimalResolvent", ["lattice", "content"])


def _coerce_pair(pair):
    """Validate a pair of ternary forms and return it as two int 6-tuples."""
    try:
        a, b = pair
        a = tuple(int(v) for v in a)
        b = tuple(int(v) for v in b)
    except (TypeError, ValueError):
        raise DomainError("a pair of ternary forms must be two 6-tuples of integers")
    if len(a) != 6 or len(b) != 6:
        raise DomainError("each ternary form needs exactly 6 coefficients")
    return a, b


def ternary_eval(form, v):
    """Evaluate a ternary quadratic form (6-tuple) at an integer vector."""
    x1, x2, x3 = v
    a11, a22, a33, a12, a13, a23 = form
    return (
        a11 * x1 * x1
        + a22 * x2 * x2
        + a33 * x3 * x3
        + a12 * x1 * x2
        + a13 * x1 * x3
        + a23 * x2 * x3
    )


def lambda_system(pair):
    """The fifteen 2x2 minors of a pair of ternary forms.

    Returns a dict mapping ``(x, y)`` with ``0 <= x < y <= 5`` (indices into
    :data:`SIX`) to ``a_x * b_y - a_y * b_x``.
    """
    a, b = _coerce_pair(pair)
    return {
        (x, y): a[x] * b[y] - a[y] * b[x] for x in range(6) for y in range(x + 1, 6)
    }


def _lam_get(lam, x, y):
    """Signed minor accessor: lam(x, y) = -lam(y, x), lam(x, x) = 0."""
    if x == y:
        return 0
    if x < y:
        return lam[(x, y)]
    return -lam[(y, x)]


def plucker_check(lam):
    """Whether a 15-tuple / dict of minors satisfies all Plucker relations.

    Accepts either the dict produced by :func:`lambda_system` or a flat
    sequence of 15 integers in lexicographic key order.  For every choice of
    four distinct indices ``w < x < y < z`` among the six coefficient slots
    the alternating relation

        lam(w,x)*lam(y,z) - lam(w,y)*lam(x,z) + lam(w,z)*lam(x,y) == 0

    must hold; these are exactly the conditions for the minors to come from
    an actual 2x6 matrix.
    """
    if not isinstance(lam, dict):
        flat = tuple(int(v) for v in lam)
        if len(flat) != 15:
            raise DomainError("a minor system is a dict or a flat 15-tuple")
        keys = [(x, y) for x in range(6) for y in range(x + 1, 6)]
        lam = dict(zip(keys, flat))
    for w in range(6):
        for x in range(w + 1, 6):
            for y in range(x + 1, 6):
                for z in range(y + 1, 6):
                    s = (
                        _lam_get(lam, w, x) * _lam_get(lam, y, z)
                        - _lam_get(lam, w, y) * _lam_get(lam, x, z)
                        + _lam_get(lam, w, z) * _lam_get(lam, x, y)
                    )
                    if s != 0:
                        return False
    return True


class QuarticRing:
    """A commutative unital ring, free of rank 4 over Z.

    Elements are 4-tuples ``(x0, x1, x2, x3)`` standing for
    ``x0 + x1*xi1 + x2*xi2 + x3*xi3``.  The full multiplication table is
    supplied as a dict ``c`` with keys ``(i, j, k)`` for ``1 <= i <= j <= 3``
    and ``0 <= k <= 3``.
    """

    __slots__ = ("c", "_prod")

    def __init__(self, c):
        table = {}
        for i in range(1, 4):
            for j in range(i, 4):
                for k in range(4):
                    try:
                        table[(i, j, k)] = int(c[(i, j, k)])
                    except KeyError:
                        raise DomainError(
                            "multiplication table is missing entry %r" % ((i, j, k),)
                        )
        self.c = table
        prod = {}
        for i in range(1, 4):
            for j in range(1, 4):
                a, b = (i, j) if i <= j else (j, i)
                prod[(i, j)] = tuple(table[(a, b, k)] for k in range(4))
        self._prod = prod

    def __eq__(self, other):
        return isinstance(other, QuarticRing) and self.c == other.c

    def __hash__(self):
        return hash(tuple(sorted(self.c.items())))

    def __repr__(self):
        return "QuarticRing(%r)" % (self.c,)

    def mul(self, x, y):
        """Product of two elements given as length-4 coordinate tuples."""
        x0, x1, x2, x3 = x
        y0, y1, y2, y3 = y
        out = [x0 * y0, x0 * y1 + y0 * x1, x0 * y2 + y0 * x2, x0 * y3 + y0 * x3]
        xs = (x1, x2, x3)
        ys = (y1, y2, y3)
        for i in range(1, 4):
            xi = xs[i - 1]
            if not xi:
                continue
            for j in range(1, 4):
                yj = ys[j - 1]
                if not yj:
                    continue
                t = xi * yj
                pr = self._prod[(i, j)]
                out[0] += t * pr[0]
                out[1] += t * pr[1]
                out[2] += t * pr[2]
                out[3] += t * pr[3]
        return tuple(out)

    def trace(self, x):
        """Trace of multiplication by the element ``x``."""
        t = 4 * x[0]
        for i in range(1, 4):
            if x[i]:
                t += x[i] * sum(self.c[(min(i, j), max(i, j), j)] for j in range(1, 4))
        return t

    def trace_matrix(self):
        """The 4x4 matrix of traces of pairwise products of 1, xi1, xi2, xi3."""
        basis = [
            (1, 0, 0, 0),
            (0, 1, 0, 0),
            (0, 0, 1, 0),
            (0, 0, 0, 1),
        ]
        return tuple(
            tuple(self.trace(self.mul(u, v)) for v in basis) for u in basis
        )

    def disc(self):
        """Discriminant: determinant of the trace pairing on 1, xi1..xi3."""
        d = mat_det(self.trace_matrix())
        assert d == int(d)
        return int(d)


def _c_linear_from_lambda(lam):
    """The xi-coefficients c_ij^k (k >= 1) as linear expressions in minors.

    Uses the normalization c_12^1 = c_23^2 = c_13^3 = 0.  Index pairs refer
    to :data:`SIX`: 0=(1,1), 1=(2,2), 2=(3,3), 3=(1,2), 4=(1,3), 5=(2,3).
    """

    def lg(x, y):
        return _lam_get(lam, x, y)

    # Orientation note: the entries below are the unique solution (under the
    # chosen normalization) of the determinant identity
    #   det[x | y | sum_c] = sum lam^{ij}_{kl} x_i x_j y_k y_l ,
    # checked by exact linear solve; summaries of this system elsewhere can
    # differ by pair-orientation in the first two equation families.
    c = {
        (1, 2, 1): 0,
        (2, 3, 2): 0,
        (1, 3, 3): 0,
        (1, 1, 2): -lg(0, 4),
        (1, 1, 3): lg(0, 3),
        (2, 2, 1): lg(1, 5),
        (2, 2, 3): -lg(1, 3),
        (3, 3, 1): -lg(2, 5),
        (3, 3, 2): lg(2, 4),
        (1, 2, 3): lg(0, 1),
        (1, 3, 2): -lg(0, 2),
        (2, 3, 1): lg(1, 2),
        (1, 2, 2): -lg(0, 5),
        (2, 3, 3): -lg(1, 4),
        (1, 3, 1): -lg(2, 3),
    }
    c[(1, 1, 1)] = lg(3, 4) + c[(1, 2, 2)]
    c[(2, 2, 2)] = -lg(3, 5) + c[(2, 3, 3)]
    c[(3, 3, 3)] = lg(4, 5) + c[(1, 3, 1)]
    return c


def _lambda_from_c(c):
    """Inverse of :func:`_c_linear_from_lambda`: read the minors off a table."""
    lam = {
        (0, 4): -c[(1, 1, 2)],
        (0, 3): c[(1, 1, 3)],
        (1, 5): c[(2, 2, 1)],
        (1, 3): -c[(2, 2, 3)],
        (2, 5): -c[(3, 3, 1)],
        (2, 4): c[(3, 3, 2)],
        (0, 1): c[(1, 2, 3)],
        (0, 2): -c[(1, 3, 2)],
        (1, 2): c[(2, 3, 1)],
        (0, 5): -c[(1, 2, 2)],
        (1, 4): -c[(2, 3, 3)],
        (2, 3): -c[(1, 3, 1)],
        (3, 4): c[(1, 1, 1)] - c[(1, 2, 2)],
        (3, 5): c[(2, 3, 3)] - c[(2, 2, 2)],
        (4, 5): c[(3, 3, 3)] - c[(1, 3, 1)],
    }
    return lam


def _getc(c, i, j, k):
    return c[(i, j, k) if i <= j else (j, i, k)]


def ring_from_pair(pair):
    """The quartic ring attached to a pair of integral ternary forms.

    The xi-coefficients of the multiplication table are linear in the 2x2
    minors of the pair; the constant coefficients are then forced by
    associativity and are asserted to be consistent (independent of which
    associativity instance computes them) before the full 27-triple
    associativity check.
    """
    lam = lambda_system(pair)
    c = _c_linear_from_lambda(lam)

    def c0_off(i, j):
        # constant term of xi_i * xi_j (i != j), from the (i,i,j) instance
        return sum(
            _getc(c, i, i, m) * _getc(c, m, j, i) - _getc(c, i, j, m) * _getc(c, m, i, i)
            for m in range(1, 4)
        )

    def c0_diag(i, j):
        # constant term of xi_i^2, from the (i,j,i)-flavoured instance; any
        # j != i must give the same value
        return sum(
            _getc(c, i, j, m) * _getc(c, m, i, j) - _getc(c, i, i, m) * _getc(c, m, j, j)
            for m in range(1, 4)
        )

    for i in range(1, 4):
        for j in range(i + 1, 4):
            v = c0_off(i, j)
            assert v == c0_off(j, i), "inconsistent constant term for xi%d*xi%d" % (i, j)
            c[(i, j, 0)] = v
    for i in range(1, 4):
        others = [j for j in range(1, 4) if j != i]
        v = c0_diag(i, others[0])
        assert v == c0_diag(i, others[1]), "inconsistent constant term for xi%d^2" % i
        c[(i, i, 0)] = v

    ring = QuarticRing(c)
    basis = [(0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    for x in basis:
        for y in basis:
            xy = ring.mul(x, y)
            for z in basis:
                assert ring.mul(xy, z) == ring.mul(x, ring.mul(y, z)), (
                    "associativity failure in constructed table"
                )
    return ring


def _resolvent_data(ring):
    """Minors, content, mu-vectors and minimal lattice for a quartic ring.

    Returns ``(lam, content, mu, basis0)`` where ``mu`` maps each of the six
    coefficient slots to a rational vector in Q^2 whose pairwise dets are
    exactly the minors, and ``basis0`` is the canonical basis of the lattice
    the mu's span (its covolume equals the content).
    """
    if not isinstance(ring, QuarticRing):
        raise DomainError("expected a QuarticRing")
    lam = _lambda_from_c(ring.c)
    assert plucker_check(lam), "ring table minors violate the Plucker relations"
    if all(v == 0 for v in lam.values()):
        raise TrivialRing("all minors vanish; no rank-2 quotient structure exists")
    content = 0
    for v in lam.values():
        content = gcd(content, abs(v))

    first = next(
        (x, y) for x in range(6) for y in range(x + 1, 6) if lam[(x, y)] != 0
    )
    x, y = first
    d = lam[(x, y)]
    mu = {
        x: (Fraction(1), Fraction(0)),
        y: (Fraction(0), Fraction(d)),
    }
    for z in range(6):
        if z in mu:
            continue
        mu[z] = (Fraction(-_lam_get(lam, y, z), d), Fraction(_lam_get(lam, x, z)))
    for u in range(6):
        for v in range(u + 1, 6):
            det = mu[u][0] * mu[v][1] - mu[u][1] * mu[v][0]
            assert det == lam[(u, v)], "mu realization does not reproduce the minors"

    rows = [mu[z] for z in range(6) if mu[z] != (0, 0)]
    basis0 = hnf_canonicalize(tuple(rows))
    d0 = mat_det(basis0)
    assert d0 == content, "covolume of the mu-lattice must equal the minor gcd"
    return lam, content, mu, basis0


def count_numerical_resolvents(ring):
    """Number of rank-2 lattices receiving the ring's quadratic structure.

    Equals the sum of divisors of the minor gcd.  Raises
    :class:`~smallrank.errors.TrivialRing` when all minors vanish.
    """
    _, content, _, _ = _resolvent_data(ring)
    return divisor_sigma(content)


def enumerate_numerical_resolvents(ring):
    """All lattices M between the minimal mu-lattice and its n-fold shrink.

    Enumerates, for ``n`` the minor gcd, the index-``n`` superlattices of the
    minimal lattice inside Q^2 (one per 2x2 column-style HNF with det n);
    returns their canonical bases, pairwise distinct, ``sigma(n)`` in all.
    """
    _, content, _, basis0 = _resolvent_data(ring)
    out = []
    n = content
    # Index-n enlargements M of the mu-lattice biject with index-n
    # sublattices S = n*M of it (S automatically contains n times the
    # lattice); S runs over row-style Hermite forms H with det n, which are
    # pairwise distinct by left-multiplication canonicity.
    for d in sorted(_divisors(n)):
        a = n // d
        for b in range(d):
            h = ((a, b), (0, d))
            s = mat_mul(h, basis0)
            m = tuple(tuple(Fraction(t, n) for t in row) for row in s)
            out.append(hnf_canonicalize(m))
    assert len(out) == divisor_sigma(n)
    assert len(set(out)) == len(out), "resolvent lattices must be pairwise distinct"
    return out


def _divisors(n):
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return divs


def pair_from_ring(ring):
    """A rank-2 quotient datum and a witness pair reproducing the ring.

    Returns ``(MinimalResolvent(lattice, content), witness_pair)`` where the
    witness is the pair of ternary forms obtained by expressing the intrinsic
    quadratic map in the coordinates of the first enumerated lattice; by
    construction ``ring_from_pair(witness_pair)`` equals ``ring`` exactly.
    """
    lam, content, mu, basis0 = _resolvent_data(ring)
    chosen = enumerate_numerical_resolvents(ring)[0]
    a = []
    b = []
    for z in range(6):
        coords = solve_left(chosen, mu[z])
        for t in coords:
            assert t.denominator == 1, "mu-vectors must be integral in lattice coords"
        a.append(int(coords[0]))
        b.append(int(coords[1]))
    witness = (tuple(a), tuple(b))
    rebuilt = ring_from_pair(witness)
    assert rebuilt == ring, "witness pair must rebuild the identical table"
    return MinimalResolvent(lattice=basis0, content=content), witness


def _tri_product(u, v, w):
    """Cubic form (p, q, r, s) from the product of three binary linear forms."""
    p = u[0] * v[0] * w[0]
    q = u[0] * v[0] * w[1] + u[0] * v[1] * w[0] + u[1] * v[0] * w[0]
    r = u[0] * v[1] * w[1] + u[1] * v[0] * w[1] + u[1] * v[1] * w[0]
    s = u[1] * v[1] * w[1]
    return (p, q, r, s)


def cubic_resolvent_form(pair):
    """The integral binary cubic form ``4 det(A x + B y)`` of a pair.

    With ``mu_ij = a_ij x + b_ij y`` ranging over the six coefficient slots,
    the determinant of the symmetric matrix with halved off-diagonal entries
    expands to the integral cubic

        4 m11 m22 m33 + m12 m13 m23 - m11 m23^2 - m22 m13^2 - m33 m12^2.
    """
    a, b = _coerce_pair(pair)
    m = {SIX[n]: (a[n], b[n]) for n in range(6)}
    total = [0, 0, 0, 0]

    def add(scale, t):
        for k in range(4):
            total[k] += scale * t[k]

    add(4, _tri_product(m[(1, 1)], m[(2, 2)], m[(3, 3)]))
    add(1, _tri_product(m[(1, 2)], m[(1, 3)], m[(2, 3)]))
    add(-1, _tri_product(m[(1, 1)], m[(2, 3)], m[(2, 3)]))
    add(-1, _tri_product(m[(2, 2)], m[(1, 3)], m[(1, 3)]))
    add(-1, _tri_product(m[(3, 3)], m[(1, 2)], m[(1, 2)]))
    return tuple(total)


def disc_quartic(ring):
    """Discriminant of a quartic ring (trace-pairing determinant)."""
    if not isinstance(ring, QuarticRing):
        raise DomainError("expected a QuarticRing")
    return ring.disc()


def disc_match(pair):
    """Whether the ring discriminant equals the resolvent form discriminant."""
    return disc_quartic(ring_from_pair(pair)) == cubic_form_disc(
        cubic_resolvent_form(pair)
    )


def resolvent_identity_check(pair, x):
    """Check the degree-3 / degree-2 determinant identity at one element.

    ``x`` is an element of the rank-3 quotient of the ring of ``pair``,
    given by its three xi-coordinates.  The identity compares the volume
    spanned by the xi-shadows of x, x^2, x^3 with the area spanned in the
    resolvent cubic ring by the image of x under the quadratic map and the
    square of that image.  In the basis of the cubic ring built from the
    resolvent form, the image of x has coordinates (B(x), -A(x)); this
    symplectic twist is forced by the orientation conventions of the two
    form/ring dictionaries and was fixed by exact evaluation on generic
    pairs (any other sign/order combination fails).
    """
    a, b = _coerce_pair(pair)
    x1, x2, x3 = (int(v) for v in x)
    ring = ring_from_pair(pair)
    e = (0, x1, x2, x3)
    e2 = ring.mul(e, e)
    e3 = ring.mul(e2, e)
    lhs = mat_det((e[1:], e2[1:], e3[1:]))

    av = ternary_eval(a, (x1, x2, x3))
    bv = ternary_eval(b, (x1, x2, x3))
    cub = ring_from_cubic_form(cubic_resolvent_form(pair))
    y = (0, bv, -av)
    y2 = cub.mul(y, y)
    rhs = y[1] * y2[2] - y[2] * y2[1]
    return lhs == rhs


def _subspaces_avoiding_one(p):
    """Row-reduced bases of subspaces of F_p^4 not containing (1,0,0,0).

    Yields lists of integer row vectors (entries in [0, p)) in reduced
    echelon form, one list per subspace of dimension 1, 2 or 3.
    """
    from itertools import combinations, product as iproduct

    for r in range(1, 4):
        for pivots in combinations(range(4), r):
            free_positions = []
            for row, piv in enumerate(pivots):
                for col in range(piv + 1, 4):
                    if col not in pivots:
                        free_positions.append((row, col))
            for values in iproduct(range(p), repeat=len(free_positions)):
                rows = [[0] * 4 for _ in range(r)]
                for row, piv in enumerate(pivots):
                    rows[row][piv] = 1
                for (row, col), v in zip(free_positions, values):
                    rows[row][col] = v
                # (1,0,0,0) lies in the span iff the first pivot column is 0
                # and that row vanishes elsewhere
                if pivots[0] == 0 and all(v == 0 for v in rows[0][1:]):
                    continue
                yield [tuple(row) for row in rows]


def is_maximal_at_p(ring, p):
    """Decide whether a nondegenerate quartic ring is maximal at a prime.

    Enumerates every candidate enlargement ``Q' = Q + (1/p) L`` where
    ``L/pQ`` runs over the subspaces of Q/pQ not containing the image of 1,
    and tests multiplicative closure of Q'.  Returns ``(True, None)`` if no
    enlargement is closed, else ``(False, basis)`` with the canonical basis
    of the first ring found.
    """
    if not isinstance(ring, QuarticRing):
        raise DomainError("expected a QuarticRing")
    if ring.disc() == 0:
        raise DegenerateRing("maximality is undefined for discriminant zero")
    if not _is_prime_int(p):
        raise DomainError("maximality test requires a prime")

    identity_rows = [
        (Fraction(1), Fraction(0), Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(1), Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(0), Fraction(1)),
    ]
    for rows in _subspaces_avoiding_one(p):
        cand = list(identity_rows)
        for v in rows:
            cand.append(tuple(Fraction(t, p) for t in v))
        try:
            basis = hnf_canonicalize(tuple(cand))
        except RankError:
            continue
        inv = mat_inv(basis)
        closed = True
        for i in range(4):
            for j in range(i, 4):
                w = ring.mul(basis[i], basis[j])
                coords = tuple(
                    sum(w[k] * inv[k][t] for k in range(4)) for t in range(4)
                )
                if any(co.denominator != 1 for co in coords):
                    closed = False
                    break
            if not closed:
                break
        if closed:
            return (False, basis)
    return (True, None)


def _is_prime_int(p):
    from .exactlattice import is_prime

    return isinstance(p, int) and is_prime(p)


def is_maximal(ring):
    """Whether a nondegenerate quartic ring is maximal at every prime.

    Only primes whose square divides the discriminant can carry a proper
    enlargement, so those are the only ones tested.
    """
    if not isinstance(ring, QuarticRing):
        raise DomainError("expected a QuarticRing")
    d = ring.disc()
    if d == 0:
        raise DegenerateRing("maximality is undefined for discriminant zero")
    for p, e in factorize(abs(d)).items():
        if e >= 2 and not is_maximal_at_p(ring, p)[0]:
            return False
    return True


def nonmaximality_conditions_witness(pair, p):
    """Coefficient-divisibility certificate of nonmaximality at a prime.

    Tests the four sufficient divisibility patterns on the given coefficients
    of the pair and returns the tag of the first that matches, in the fixed
    precedence order ``c, d, a, b`` (later patterns are special cases of
    earlier ones for some inputs, and this order keeps the returned tag the
    most specific).  Returns ``"none"`` when no pattern matches; the patterns
    are sufficient but not necessary, so ``"none"`` carries no maximality
    claim.
    """
    a, b = _coerce_pair(pair)
    a11, a22, a33, a12, a13, a23 = a
    b11, b22, b33, b12, b13, b23 = b
    p2 = p * p

    if (
        a11 % p2 == 0
        and a12 % p2 == 0
        and a22 % p2 == 0
        and a13 % p == 0
        and a23 % p == 0
    ):
        return "c"
    if all(v % p == 0 for v in a):
        return "d"
    if a11 % p2 == 0 and a12 % p == 0 and a13 % p == 0 and b11 % p == 0:
        return "a"
    if (
        a11 % p == 0
        and a12 % p == 0
        and a22 % p == 0
        and b11 % p == 0
        and b12 % p == 0
        and b22 % p == 0
    ):
        return "b"
    return "none"
