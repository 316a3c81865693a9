"""Exception hierarchy.

Every domain failure raised by the library derives from :class:`SelfSimError`
(itself a ``ValueError``), so callers and the CLI can separate bad input to a
model from I/O and usage problems.
"""


class SelfSimError(ValueError):
    """Base class for all domain errors."""


# distributions
class DigitOutOfRange(SelfSimError):
    pass


class BaseTooSmall(SelfSimError):
    pass


class RankOutOfRange(SelfSimError):
    pass


class BadExponent(SelfSimError):
    pass


class BelowSupport(SelfSimError):
    pass


class RatioNotAboveOne(SelfSimError):
    pass


class CountOutOfRange(SelfSimError):
    pass


# root finding
class NoSignChange(SelfSimError):
    pass


class NonFinite(SelfSimError):
    pass


class InvalidGroupSize(SelfSimError):
    pass


class InvalidIndex(SelfSimError):
    pass


class NoSolution(SelfSimError):
    pass


class BadFraction(SelfSimError):
    pass


# block models
class InvalidRank(SelfSimError):
    pass


class RankOutOfSupport(SelfSimError):
    pass


class PartitionOverrun(SelfSimError):
    pass


# graph realization
class TopDegreeExceedsN(SelfSimError):
    pass


class Unrepairable(SelfSimError):
    pass


class NotGraphical(SelfSimError):
    pass


# evolution
class BadDepth(SelfSimError):
    pass


class NonConsecutive(SelfSimError):
    pass


# analysis
class EmptyInput(SelfSimError):
    pass


class DegenerateInput(SelfSimError):
    pass


class TooShort(SelfSimError):
    pass


class NonPositive(SelfSimError):
    pass


class SupportMismatch(SelfSimError):
    pass


class Disconnected(SelfSimError):
    def __init__(self, components: int):
        super().__init__(f"graph is disconnected ({components} components)")
        self.components = components


class BadRange(SelfSimError):
    pass
