"""Exception hierarchy shared by every fintop module."""


class FinTopError(Exception):
    """Base class for all errors raised by fintop."""


class NotATopology(FinTopError, ValueError):
    pass


class CarrierMismatch(FinTopError, ValueError):
    pass


class NotSurjective(FinTopError, ValueError):
    pass


class TooLarge(FinTopError, ValueError):
    pass


class BadSize(FinTopError, ValueError):
    pass


class BNotClosed(FinTopError, ValueError):
    """The chosen point ``b`` does not form a closed singleton."""


class NotPrimeSubspace(FinTopError, ValueError):
    pass


class ArityMismatch(FinTopError, ValueError):
    pass


class WitnessInvalid(FinTopError, ValueError):
    pass


class MemberOutsideA(FinTopError, ValueError):
    pass


class BoundTooSmall(FinTopError, ValueError):
    pass


class NotSaturated(FinTopError, ValueError):
    pass


class PreconditionFailed(FinTopError, ValueError):
    pass


class BadParameters(FinTopError, ValueError):
    pass


class UnsupportedMap(FinTopError, ValueError):
    """A map on omega that the finite-modification representation cannot hold."""
