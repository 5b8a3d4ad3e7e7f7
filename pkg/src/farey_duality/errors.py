"""Exception hierarchy for farey-duality."""


class FareyDualityError(Exception):
    """Base class for all errors raised by the library."""


class InvalidRatioError(FareyDualityError, ValueError):
    """Raised when a Ratio is built from fields that are not a reduced expression."""


class BothZeroError(FareyDualityError, ValueError):
    """Raised when reducing 0/0."""


class NotNeighborsError(FareyDualityError, ValueError):
    """Raised when two ratios are required to be Farey neighbors but are not."""


class InvalidAddressError(FareyDualityError, ValueError):
    """Raised when an address string contains characters other than L and R."""


class InvalidWordError(FareyDualityError, ValueError):
    """Raised when a flip word or a letter word breaks the rules of its tree."""


class OutOfDomainError(FareyDualityError, ValueError):
    """Raised when an argument lies outside the domain of an operation."""


class OutOfRegionError(FareyDualityError, ValueError):
    """Raised when a gradient lies outside the region swept from the root vertex."""


class MiddleFlipError(FareyDualityError, ValueError):
    """Raised when a matrix flip would move back toward the root vertex."""


class UnclassifiableError(FareyDualityError):
    """Raised when an intersection matrix matches zero or several forms."""


class NotPrimitiveError(FareyDualityError, ValueError):
    """Raised when a lattice segment has an interior lattice point."""


class EqualWordsError(FareyDualityError, ValueError):
    """Raised when the star product is applied to two equal words."""


class TieBreakError(FareyDualityError, ValueError):
    """Raised when a word triple has two equal entries."""
