"""Exception hierarchy shared by every smallrank module."""


class SmallRankError(Exception):
    """Base class for all domain errors raised by this package."""


class DomainError(SmallRankError):
    """Input outside the mathematical domain of the operation."""


class RankError(SmallRankError):
    """Generating set does not span a lattice of the required rank."""


class DimensionError(SmallRankError):
    """Ambient dimensions of the operands do not match."""


class NotUnimodular(SmallRankError):
    """Matrix is not in GL2(Z)."""


class UnsupportedDiscriminant(SmallRankError):
    """Discriminant outside the supported range (wrong sign or residue)."""


class DiscriminantMismatch(SmallRankError):
    """Forms with different discriminants cannot be composed."""


class NotPrimitive(SmallRankError):
    """Form has content > 1 where a primitive form is required."""


class NotPositiveDefinite(SmallRankError):
    """Form is negative definite; negate it before reducing."""


class NotUnit(SmallRankError):
    """Form does not take the value 1 at the given vector."""


class ZeroForm(SmallRankError):
    """The zero form defines no ideal."""


class FormRingMismatch(SmallRankError):
    """Form discriminant differs from the ring discriminant."""


class RingMismatch(SmallRankError):
    """Operands live over different quadratic rings."""


class NotAModule(SmallRankError):
    """Lattice is not stable under multiplication by the ring generator."""


class Degenerate(SmallRankError):
    """Cube has a vanishing associated form."""


class NotBalanced(SmallRankError):
    """Ideal triple fails the balancedness conditions."""


class NotInGamma(SmallRankError):
    """Matrix triple is not in the cube symmetry group (det product != 1)."""


class TrivialRing(SmallRankError):
    """The trivial quartic ring has no canonical resolvent."""


class DegenerateRing(SmallRankError):
    """Ring discriminant is zero; maximality is undefined."""


class PrecisionError(SmallRankError):
    """Working precision too small for the requested computation."""
