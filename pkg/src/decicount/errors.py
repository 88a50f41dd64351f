"""Exception types shared across the package."""


class DecicountError(Exception):
    """Base class for every error raised by this package."""


class InvalidGroupSpec(DecicountError):
    """Malformed group description (bad modulus list or spec string)."""


class InvalidVectorLiteral(DecicountError):
    """Malformed density-vector literal."""


class GroupMismatch(DecicountError):
    """Operands belong to different groups."""


class NotAUnit(DecicountError):
    """A scaling factor is not coprime to the group exponent."""


class EmptyMultiset(DecicountError):
    """The operation needs a nonempty multiset."""


class UnsupportedParameters(DecicountError):
    """The density violates the coprimality requirement of the operation."""


class PeriodicInput(DecicountError):
    """The multiset has a nonzero period, so translate witnesses are not unique."""


class NotAMultiplier(DecicountError):
    """The given unit does not map the multiset onto one of its translates."""


class NotCyclic(DecicountError):
    """The operation is defined for cyclic groups only."""


class InternalConsistencyError(DecicountError):
    """An exactness invariant failed; this indicates a bug, not bad input."""


class TooLarge(DecicountError):
    """Exhaustive enumeration would exceed the configured budget."""
