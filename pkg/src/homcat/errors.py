"""Exception hierarchy shared by every homcat module."""


class HomcatError(Exception):
    """Base class for all library errors."""


class IndexOutOfRange(HomcatError, ValueError):
    pass


class CompositionMismatch(HomcatError, ValueError):
    """Raised when composing morphisms whose endpoints do not match."""


class ResourceLimitExceeded(HomcatError):
    """An exhaustive enumeration exceeded the configured bound."""


class ProductNotFound(HomcatError):
    pass


class ColimitNotFound(HomcatError):
    pass


class MissingMorphism(HomcatError):
    pass


class InvalidDiagram(HomcatError, ValueError):
    pass


class DegeneraciesMissing(HomcatError):
    pass


class DegreeOutOfRange(HomcatError, ValueError):
    pass


class DimensionMismatch(HomcatError, ValueError):
    pass


class NotACycle(HomcatError):
    """A homology representative failed to be a cycle (internal consistency)."""


class Unsolvable(HomcatError):
    """No integer solution exists for a boundary equation.

    ``witness`` names the obstruction: the index of the diagonal entry that
    fails to divide, or of a nonzero coordinate outside the image.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class UnsupportedObject(HomcatError):
    pass


class ConeNotVerified(HomcatError):
    pass


class LevelMismatch(HomcatError, ValueError):
    pass


class AxiomUnavailable(HomcatError):
    """A construction needs an axiom witness that the instance does not provide."""

    def __init__(self, axiom, message=None):
        super().__init__(message or f"axiom-{axiom}-unavailable")
        self.axiom = axiom


class FactorizationNotUnique(HomcatError):
    pass


class CompositionIllDefined(HomcatError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class PreconditionFailed(HomcatError):
    pass


class BoundaryNotNilpotent(HomcatError):
    """A constructed complex has a nonzero composite of consecutive boundaries."""
