"""Exception types shared across the package."""


class FusebisetError(Exception):
    """Base class for all library errors."""


class GroupSpecError(FusebisetError, ValueError):
    """A group, fusion or biset description could not be turned into an object."""


class CapExceeded(FusebisetError):
    """An input is larger than the configured desk-scale limit."""


class NotAHomomorphism(FusebisetError, ValueError):
    pass


class NotInFusionSystem(FusebisetError, ValueError):
    pass


class StabilizationError(FusebisetError):
    """The level-by-level stabilization hit a coefficient that is not a nonnegative integer.

    For a saturated fusion system this cannot happen, so it is reported as a
    saturation diagnostic. ``witness`` is the orbit (subgroup or twisted
    diagonal) whose deficiency failed, ``deficiency`` and ``weyl`` the numbers
    involved.
    """

    def __init__(self, message, witness=None, deficiency=None, weyl=None):
        super().__init__(message)
        self.witness = witness
        self.deficiency = deficiency
        self.weyl = weyl


class NegativeCoefficient(StabilizationError):
    pass


class NonIntegerCoefficient(StabilizationError):
    pass


class NotStable(FusebisetError, ValueError):
    pass


class NotSemicharacteristic(FusebisetError, ValueError):
    pass


class InternalCheckFailed(FusebisetError, AssertionError):
    """Two independent computations that must agree did not."""
