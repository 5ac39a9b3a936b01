"""Exception types raised by the library."""


class RvNormError(Exception):
    """Base class for every error raised by rvnorm."""


class MomentDoesNotExist(RvNormError):
    def __init__(self, order, family=""):
        self.order = order
        self.family = family
        where = f" for {family}" if family else ""
        super().__init__(f"moment of order {order} does not exist{where}")


class NegativeInterior(RvNormError):
    """The quantity under the d-th root came out negative beyond round-off."""


class OddDegree(RvNormError):
    pass


class DegreeTooLarge(RvNormError):
    pass


class OutOfRange(RvNormError):
    pass


class NotMajorized(RvNormError):
    pass


class MatchingNotFound(RvNormError):
    pass


class NotCentered(RvNormError):
    pass


class NonConvergence(RvNormError):
    pass


class BadParameter(RvNormError):
    pass


class DivisionByZeroConstantTerm(RvNormError):
    pass


class LengthMismatch(RvNormError):
    pass
