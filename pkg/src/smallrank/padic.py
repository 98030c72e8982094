"""Counting balanced ideal triples over p-adic orders in an unramified field.

For an odd prime ``p`` and a quadratic non-residue ``u`` mod ``p``, the ring
``S_0 = Z_p[sqrt(u)]`` is the maximal order of the unramified quadratic
extension of ``Q_p``, and ``S_m = Z_p + p^m sqrt(u) Z_p`` is its index-``p^m``
suborder.  Fixing a base order ``S_n``, a triple of fractional ``S_n``-ideals
``(I_1, I_2, I_3)`` is *balanced* when ``I_1 I_2 I_3`` is contained in ``S_n``
and the product of the three norms is 1.  Up to the natural equivalence, the
ideals in such a triple may be scaled to the orders ``S_i, S_j, S_k``
themselves, and the number of inequivalent balanced triples whose three
members are ``S_i, S_j, S_k`` admits a closed formula:

    with s = (3n - i - j - k)/2 and t = max(n - s, 0),
    the count is 0 unless i + j + k = n (mod 2) and i >= t ("reflected
    triangle inequality"), and otherwise equals

        1                   if i = t = 0,
        p^(i-1) (p + 1)     if i > t = 0,
        p^(i-t)             if i >= t > 0.

The counts live on the lattice points of a solid star (two interpenetrating
tetrahedra) once the indices are allowed signs; :func:`stella_membership`
reports that geometry.  :func:`enumerate_balanced_oracle` recomputes the
count by brute force at finite precision, via explicit unit-coset
representatives, and is the reference the formula is tested against.
"""

from .errors import DomainError, PrecisionError
from .exactlattice import is_prime

__all__ = [
    "PadicConfig",
    "least_nonresidue",
    "balanced_count",
    "stella_membership",
    "unit_coset_reps",
    "enumerate_balanced_oracle",
]


class PadicConfig:
    """An odd prime ``p``, a base-order level ``n >= 0``, and a non-residue ``u``.

    ``u`` must be a quadratic non-residue modulo ``p`` so that
    ``Z_p[sqrt(u)]`` is the unramified quadratic extension's maximal order.
    """

    __slots__ = ("p", "n", "u")

    def __init__(self, p, n, u):
        p = int(p)
        n = int(n)
        u = int(u)
        if p < 3 or not is_prime(p):
            raise DomainError("p must be an odd prime, got %r" % (p,))
        if n < 0:
            raise DomainError("the base-order level n must be nonnegative")
        if pow(u % p, (p - 1) // 2, p) != p - 1:
            raise DomainError("u must be a quadratic non-residue modulo p")
        self.p = p
        self.n = n
        self.u = u

    def __repr__(self):
        return "PadicConfig(p=%d, n=%d, u=%d)" % (self.p, self.n, self.u)

    def __eq__(self, other):
        return (
            isinstance(other, PadicConfig)
            and (self.p, self.n, self.u) == (other.p, other.n, other.u)
        )

    def __hash__(self):
        return hash((self.p, self.n, self.u))


def least_nonresidue(p):
    """The smallest positive quadratic non-residue modulo an odd prime."""
    if p < 3 or not is_prime(p):
        raise DomainError("p must be an odd prime, got %r" % (p,))
    for u in range(2, p):
        if pow(u, (p - 1) // 2, p) == p - 1:
            return u
    raise DomainError("no non-residue found; p is not an odd prime")


def _split_index(cfg, idx):
    try:
        i, j, k = (int(v) for v in idx)
    except (TypeError, ValueError):
        raise DomainError("a triple index is three integers")
    if not (0 <= i <= j <= k <= cfg.n):
        raise DomainError(
            "balanced_count requires a sorted index 0 <= i <= j <= k <= n"
        )
    return i, j, k


def balanced_count(cfg, idx):
    """Number of balanced triples of type ``(S_i, S_j, S_k)`` over ``S_n``.

    ``idx`` must be sorted, ``0 <= i <= j <= k <= n``.  Returns 0 when the
    parity condition ``i+j+k = n (mod 2)`` or the reflected triangle
    inequality fails, else evaluates the closed formula.
    """
    if not isinstance(cfg, PadicConfig):
        raise DomainError("expected a PadicConfig")
    i, j, k = _split_index(cfg, idx)
    p, n = cfg.p, cfg.n
    if (i + j + k - n) % 2 != 0:
        return 0
    s = (3 * n - i - j - k) // 2
    t = max(n - s, 0)
    if i < t:
        return 0
    if t == 0:
        return 1 if i == 0 else p ** (i - 1) * (p + 1)
    return p ** (i - t)


def stella_membership(n, idx):
    """Locate a signed index triple relative to the two-tetrahedra star.

    Returns ``(inside, label)``.  ``inside`` is True when the parity
    condition holds and the point lies in the union of the two tetrahedra:
    tetrahedron 1 is the convex hull of ``(n,n,n), (n,-n,-n), (-n,n,-n),
    (-n,-n,n)`` and tetrahedron 2 its mirror image.  ``label`` reports the
    geometry alone: ``1`` or ``2`` when the point is in exactly one
    tetrahedron, ``"boundary"`` when in both, ``None`` when in neither.
    """
    n = int(n)
    if n < 0:
        raise DomainError("the level n must be nonnegative")
    try:
        x, y, z = (int(v) for v in idx)
    except (TypeError, ValueError):
        raise DomainError("a signed triple index is three integers")

    in1 = (
        x + y + z >= -n
        and x + y - z <= n
        and x - y + z <= n
        and -x + y + z <= n
    )
    in2 = (
        x + y + z <= n
        and x + y - z >= -n
        and x - y + z >= -n
        and -x + y + z >= -n
    )
    if in1 and in2:
        label = "boundary"
    elif in1:
        label = 1
    elif in2:
        label = 2
    else:
        label = None
    parity = (x + y + z - n) % 2 == 0
    return (parity and (in1 or in2), label)


def unit_coset_reps(p, t, i):
    """Representatives of the unit classes of ``S_t`` modulo ``S_i`` units.

    Elements are pairs ``(a, b)`` standing for ``a + b sqrt(u)``; the list
    has ``p^(i-1) (p+1)`` entries for ``t = 0 < i``, ``p^(i-t)`` entries for
    ``0 < t <= i``, and a single entry when the quotient is trivial
    (``i <= t``).  Representatives are exact integers independent of ``u``.
    """
    if t < 0 or i < 0:
        raise DomainError("order levels must be nonnegative")
    if i <= t:
        return [(1, 0)]
    if t == 0:
        reps = [(1, b) for b in range(p**i)]
        reps += [(a, 1) for a in range(0, p**i, p)]
        return reps
    return [(1, c * p**t) for c in range(p ** (i - t))]


def enumerate_balanced_oracle(cfg, idx, m):
    """Brute-force the balanced-triple count at working precision ``p^m``.

    Models ``Z_p`` as ``Z/p^m``; enumerates the unit-coset representatives
    of ``S_t`` modulo ``S_i`` units and counts those ``g`` for which
    ``p^s * g * S_i S_j S_k`` lands in ``S_n``, checked on all eight products
    of the module generators ``{1, p^i sqrt(u)} x {1, p^j sqrt(u)} x
    {1, p^k sqrt(u)}``.  Requires ``m >= 2n + 2`` so that every valuation
    comparison is decided exactly.
    """
    if not isinstance(cfg, PadicConfig):
        raise DomainError("expected a PadicConfig")
    i, j, k = _split_index(cfg, idx)
    p, n, u = cfg.p, cfg.n, cfg.u
    if m < 2 * n + 2:
        raise PrecisionError("precision m must be at least 2n + 2")
    if (i + j + k - n) % 2 != 0:
        return 0
    s = (3 * n - i - j - k) // 2
    t = max(n - s, 0)

    mod = p**m

    def mul(a, b):
        return ((a[0] * b[0] + u * a[1] * b[1]) % mod, (a[0] * b[1] + a[1] * b[0]) % mod)

    def val_at_least(c, bound):
        """Whether v_p(c mod p^m) >= bound, exact since bound <= m."""
        return c % p ** min(bound, m) == 0

    def in_sn(elt):
        return val_at_least(elt[1], n)

    gens = []
    for level in (i, j, k):
        gens.append([(1, 0), (0, p**level % mod)])

    ps = p**s % mod
    count = 0
    for g in unit_coset_reps(p, t, i):
        g = (g[0] % mod, g[1] % mod)
        ok = True
        for gi in gens[0]:
            for gj in gens[1]:
                for gk in gens[2]:
                    prod = mul(mul(mul(g, gi), gj), gk)
                    prod = (prod[0] * ps % mod, prod[1] * ps % mod)
                    if not in_sn(prod):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count
