"""Exception hierarchy.

Every error raised for bad input derives from ``InputError`` so the CLI can
map it to exit code 2 in one place.
"""


class SpeclapError(Exception):
    pass


class InputError(SpeclapError, ValueError):
    pass


class UnknownVertex(InputError):
    pass


class BadOpPairing(InputError):
    pass


class BadRank(InputError):
    pass


class RankMismatch(InputError):
    pass


class ShapeError(InputError):
    pass


class NotSimple(InputError):
    pass


class DegreeZero(InputError):
    pass


class Unreachable(SpeclapError):
    pass


class Disconnected(InputError):
    pass


class NotHermitian(InputError):
    pass


class NoConvergence(SpeclapError):
    pass


class DimensionTooLarge(InputError):
    pass


class TooLarge(InputError):
    pass


class ZeroDenominator(InputError):
    pass


class BadParam(InputError):
    pass


class DiameterTooSmall(InputError):
    pass


class NotRegular(InputError):
    pass


class NotSymmetric(InputError):
    pass


class IdentityInS(InputError):
    pass


class NotCompatible(InputError):
    pass


class NotInUpq(InputError):
    pass


class NotStochastic(InputError):
    pass


class EmptyAssociation(InputError):
    pass


class ZeroMass(InputError):
    pass


class RankClash(InputError):
    pass
