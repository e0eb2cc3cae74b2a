"""Exception hierarchy shared by all hamedge modules."""


class HamEdgeError(ValueError):
    """Base class for every error raised by hamedge."""


class DomainError(HamEdgeError):
    pass


class NotDivisible(HamEdgeError):
    """Exact polynomial division left a remainder (or a non-integral quotient)."""


class NotRealizable(HamEdgeError):
    """Polynomial data that cannot come from a simple Hamiltonian manifold."""


class NegativeBetti(NotRealizable):
    pass


class NotSymplectic(NotRealizable):
    """Some even Betti number below the top degree vanishes."""


class ZeroDirection(HamEdgeError):
    pass


class OutOfDomain(HamEdgeError):
    pass


class DegenerateSamples(HamEdgeError):
    pass


class SizeMismatch(HamEdgeError):
    pass


class ZeroOmega(HamEdgeError):
    pass


class DegeneratePath(HamEdgeError):
    pass


class TooLarge(HamEdgeError):
    pass


class NotGeneric(HamEdgeError):
    pass


class NotTiny(HamEdgeError):
    pass


class NonPositiveLength(HamEdgeError):
    pass


class BadIndices(HamEdgeError):
    pass


class NonConvergence(HamEdgeError):
    pass


class DegenerateFrame(HamEdgeError):
    pass


class UndefinedAxis(HamEdgeError):
    """The bending axis rho_i + rho_j vanishes, where the circle action is singular."""
