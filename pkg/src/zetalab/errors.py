"""Exception types shared across the package."""


class ZetalabError(Exception):
    """Base class for all package-specific errors."""


class PrecisionMismatch(ZetalabError):
    """Two truncated objects of different precision were combined."""


class NotRational(ZetalabError):
    """No rational function of the allowed degree matches the series."""


class NotAcyclic(ZetalabError):
    """Quiver adjacency matrix is not nilpotent."""


class KernelsDisagree(ZetalabError):
    """Left and right kernels of the pairing differ; no numerical quotient."""


class NotInvertible(ZetalabError):
    """A matrix required to be invertible is singular."""


class SingularBlock(ZetalabError):
    """A semisimple block has determinant zero."""


class NoSignWorks(ZetalabError):
    """The functional equation fails for both choices of sign."""


class BudgetExceeded(ZetalabError):
    """Point enumeration would exceed the configured budget."""


class SchemaError(ZetalabError):
    """Input JSON does not match the expected schema."""
