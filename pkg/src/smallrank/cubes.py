"""2x2x2 integer cubes and the composition law on balanced ideal triples.

A cube is a tuple (a, b, c, d, e, f, g, h) holding the entries a_ijk in
lexicographic index order: a=a111, b=a112, c=a121, d=a122, e=a211, f=a212,
g=a221, h=a222.  Slicing along each axis and taking negated determinants
yields three binary quadratic forms of equal discriminant; the cube
parametrizes a triple of ideals over the ring Z[xi] with xi^2 = t*xi - u,
where t and u are the symmetric cube invariants below.
"""

from collections import namedtuple
from fractions import Fraction
from math import gcd

from .errors import Degenerate, DomainError, NotBalanced, NotInGamma, RingMismatch, UnsupportedDiscriminant
from .exactlattice import lattice_intersect, mat_inv, mat_mul
from .quadforms import discriminant, represent
from .quadrings import (
    QuadIdeal,
    QuadraticRing,
    form_from_ideal,
    ideal_from_form,
    ideal_norm,
    raw_form,
    scale,
)

BalancedTriple = namedtuple("BalancedTriple", ["ring", "ideals"])


def _slice_forms(q):
    # forms in slice order (first, second, third index)
    a, b, c, d, e, f, g, h = q
    f1 = (b * c - a * d, b * g + c * f - a * h - d * e, f * g - e * h)
    f2 = (b * e - a * f, b * g + d * e - a * h - c * f, d * g - c * h)
    f3 = (c * e - a * g, c * f + d * e - a * h - b * g, d * f - b * h)
    return f1, f2, f3


def cube_invariants(q):
    """The pair (t, u): every associated form has discriminant t^2 - 4u."""
    a, b, c, d, e, f, g, h = q
    t = a * h + b * g + c * f + d * e
    u = (
        a * b * g * h + a * c * f * h + a * d * e * h
        + b * c * f * g + b * d * e * g + c * d * e * f
        - a * d * f * g - b * c * e * h
    )
    return t, u


def associated_forms(q):
    """The three associated forms, in display order (phi1, phi3, phi2)."""
    f1, f2, f3 = _slice_forms(q)
    t, u = cube_invariants(q)
    for f in (f1, f2, f3):
        assert discriminant(f) == t * t - 4 * u
    return f1, f3, f2


def ring_of_cube(q) -> QuadraticRing:
    """The quadratic ring (t, u) of a nondegenerate cube."""
    if any(f == (0, 0, 0) for f in _slice_forms(q)):
        raise Degenerate("a pair of opposite faces is linearly dependent")
    return QuadraticRing(*cube_invariants(q))


def _xi_from_form(f, t):
    p, qq, r = f
    assert (t - qq) % 2 == 0
    return ((t - qq) // 2, -r), (p, (t + qq) // 2)


def xi_actions(q):
    """Matrices of xi on the three reconstructed ideals, display order."""
    ring = ring_of_cube(q)
    f1, f3, f2 = associated_forms(q)
    out = []
    for f in (f1, f3, f2):
        x = _xi_from_form(f, ring.t)
        assert x[0][0] + x[1][1] == ring.t
        assert x[0][0] * x[1][1] - x[0][1] * x[1][0] == ring.u
        out.append(x)
    return tuple(out)


def _xi_coeff(ring, w, z):
    # xi-coefficient of w*z as a linear function of z, and the value
    return w[1] * z[0] + (w[0] + ring.t * w[1]) * z[1]


def triple_from_cube(q) -> BalancedTriple:
    """Reconstruct the balanced ideal triple of a nondegenerate cube.

    The first two ideals come from the associated forms with their standard
    bases; the third ideal's basis is the unique solution of the eight
    coefficient equations xi-coeff(x_i * y_j * z_k) = a_ijk.
    """
    f1, f2, f3 = _slice_forms(q)
    if (0, 0, 0) in (f1, f2, f3):
        raise Degenerate("a pair of opposite faces is linearly dependent")
    ring = QuadraticRing(*cube_invariants(q))
    i1 = ideal_from_form(f1, ring)
    i2 = ideal_from_form(f2, ring)
    xs, ys = i1.basis, i2.basis

    zs = []
    for k in range(2):
        rows, rhs = [], []
        for i in range(2):
            for j in range(2):
                w = ring.mul(xs[i], ys[j])
                rows.append((w[1], w[0] + ring.t * w[1]))
                rhs.append(Fraction(q[4 * i + 2 * j + k]))
        piv = next(
            (
                (r, s)
                for r in range(4)
                for s in range(r + 1, 4)
                if rows[r][0] * rows[s][1] != rows[r][1] * rows[s][0]
            ),
            None,
        )
        if piv is None:
            raise Degenerate("product lattice does not determine a third ideal")
        r, s = piv
        det = rows[r][0] * rows[s][1] - rows[r][1] * rows[s][0]
        z0 = (rhs[r] * rows[s][1] - rhs[s] * rows[r][1]) / det
        z1 = (rows[r][0] * rhs[s] - rows[s][0] * rhs[r]) / det
        z = (z0, z1)
        assert all(
            _xi_coeff(ring, ring.mul(xs[i], ys[j]), z) == rhs[2 * i + j]
            for i in range(2)
            for j in range(2)
        )
        zs.append(z)

    i3 = QuadIdeal(ring, zs)
    assert raw_form(i3) == f3
    triple = BalancedTriple(ring, (i1, i2, i3))
    assert is_balanced(*triple.ideals)
    return triple


def is_balanced(i1, i2, i3) -> bool:
    """Norm product 1 and all triple products of basis elements integral."""
    ring = i1.ring
    if i2.ring != ring or i3.ring != ring:
        raise RingMismatch("ideals live over different rings")
    if ideal_norm(i1) * ideal_norm(i2) * ideal_norm(i3) != 1:
        return False
    for x in i1.basis:
        for y in i2.basis:
            for z in i3.basis:
                w = ring.mul(ring.mul(x, y), z)
                if w[0].denominator != 1 or w[1].denominator != 1:
                    return False
    return True


def cube_from_triple(triple, bases=None):
    """Cube of a balanced triple with respect to the given bases.

    bases defaults to the stored bases of the three ideals; alternative bases
    must span the same lattices.
    """
    ring, ideals = triple.ring, triple.ideals
    if not is_balanced(*ideals):
        raise NotBalanced("triple fails the balancedness conditions")
    if bases is None:
        bases = tuple(i.basis for i in ideals)
    else:
        bases = tuple(tuple(tuple(Fraction(e) for e in row) for row in b) for b in bases)
        for b, ideal in zip(bases, ideals):
            if QuadIdeal(ring, b) != ideal:
                raise DomainError("replacement basis spans a different lattice")
    xs, ys, zs = bases
    cube = []
    for i in range(2):
        for j in range(2):
            for k in range(2):
                w = ring.mul(ring.mul(xs[i], ys[j]), zs[k])
                coeff = w[1]
                assert coeff.denominator == 1
                cube.append(int(coeff))
    return tuple(cube)


def tau_system(q):
    """All eight products tau[i][j][k] = x_i * y_j * z_k of the triple bases."""
    ring, (i1, i2, i3) = triple_from_cube(q)
    xs, ys, zs = i1.basis, i2.basis, i3.basis
    return tuple(
        tuple(
            tuple(ring.mul(ring.mul(xs[i], ys[j]), zs[k]) for k in range(2))
            for j in range(2)
        )
        for i in range(2)
    )


def gamma_act(ms, q):
    """Twisted action of a GL2(Z)^3 triple with determinant product 1."""
    m1, m2, m3 = ms
    dets = []
    for m in ms:
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        if det not in (1, -1):
            raise NotInGamma("matrix determinant %d" % det)
        dets.append(det)
    if dets[0] * dets[1] * dets[2] != 1:
        raise NotInGamma("determinant product %d" % (dets[0] * dets[1] * dets[2]))
    out = []
    for i in range(2):
        for j in range(2):
            for k in range(2):
                out.append(
                    sum(
                        m1[i][l] * m2[j][m] * m3[k][n] * q[4 * l + 2 * m + n]
                        for l in range(2)
                        for m in range(2)
                        for n in range(2)
                    )
                )
    new = tuple(out)
    t0, u0 = cube_invariants(q)
    t1, u1 = cube_invariants(new)
    assert t1 * t1 - 4 * u1 == t0 * t0 - 4 * u0
    return new


def _mult_matrix(ring, b):
    # right-multiplication by b on row coordinates
    return ((b[0], b[1]), (-ring.u * b[1], b[0] + ring.t * b[1]))


def _scalar_candidates(ring, src, dst):
    # all gamma with gamma*src == dst, via the containment lattice and norms
    target = ideal_norm(dst) / ideal_norm(src)
    lats = [
        mat_mul(dst.basis, mat_inv(_mult_matrix(ring, b))) for b in src.basis
    ]
    v1, v2 = lattice_intersect(lats[0], lats[1])
    aa = ring.norm(v1)
    bb = ring.trace(ring.mul(v1, ring.conj(v2)))
    cc = ring.norm(v2)
    s = 1
    for val in (aa, bb, cc, target):
        den = Fraction(val).denominator
        s = s * den // gcd(s, den)
    fi = (int(aa * s), int(bb * s), int(cc * s))
    out = []
    for (m, n) in represent(fi, int(target * s)):
        gamma = (m * v1[0] + n * v2[0], m * v1[1] + n * v2[1])
        if scale(src, gamma) == dst:
            out.append(gamma)
    return out


def triples_equivalent(t1, t2) -> bool:
    """Do scalars (g1, g2, g3) with product 1 map one triple onto the other?"""
    if t1.ring != t2.ring:
        raise RingMismatch("triples live over different rings")
    ring = t1.ring
    if ring.disc >= 0:
        raise UnsupportedDiscriminant("scalar search needs a definite norm form")
    for a, b in zip(t1.ideals, t2.ideals):
        if form_from_ideal(a) != form_from_ideal(b):
            return False
    c1 = _scalar_candidates(ring, t1.ideals[0], t2.ideals[0])
    c2 = _scalar_candidates(ring, t1.ideals[1], t2.ideals[1])
    j3 = t2.ideals[2].canonical()
    for g1 in c1:
        for g2 in c2:
            g12 = ring.mul(g1, g2)
            n12 = ring.norm(g12)
            conj = ring.conj(g12)
            g3 = (Fraction(conj[0], 1) / n12, Fraction(conj[1], 1) / n12)
            if scale(t1.ideals[2], g3) == j3:
                return True
    return False


def identity_cube(d):
    """Cube whose three associated forms are the principal form of d."""
    if d % 4 == 0:
        return (0, 1, 1, 0, 1, 0, 0, d // 4)
    if d % 4 == 1:
        return (0, 1, 1, 1, 1, 1, 1, (d + 3) // 4)
    raise UnsupportedDiscriminant("%d is not 0 or 1 mod 4" % d)


def dirichlet_cube(d, f, g, h):
    """Classical composition data: forms (-d, h, f*g), (-g, h, d*f), (-f, h, d*g)."""
    return (1, 0, 0, d, 0, f, g, -h)
