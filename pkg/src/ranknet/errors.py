"""Exception types shared across the package."""


class RankNetError(Exception):
    """Base class for all ranknet errors."""


class InvalidKey(RankNetError):
    """A key is NaN, infinite, or otherwise not totally comparable."""


class DimensionError(RankNetError):
    """A size or length precondition was violated."""


class DomainError(RankNetError):
    """An argument is outside the mathematical domain of the operation."""


class PermutationError(RankNetError):
    """A vector expected to be a permutation of 0..N-1 is not."""


class ValidationError(RankNetError):
    """A network failed structural validation."""
