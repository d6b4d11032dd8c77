"""Exception types shared across the package."""


class CyclosumError(Exception):
    """Base class for every package-specific error."""


class NotDivisible(CyclosumError):
    """Exact polynomial division hit a nonzero remainder."""


class NotAUnit(CyclosumError):
    """A truncated series cannot be inverted: constant term is zero or not a scalar."""


class ParameterCollision(CyclosumError):
    """The deformation parameter landed on an excluded root of unity."""


class InvalidPower(CyclosumError):
    """A negative power was requested where the base degenerates to zero."""


class InvalidParam(CyclosumError):
    """A weight-sequence family received parameters outside its domain."""


class InvalidGrid(CyclosumError):
    """A verification grid is structurally unusable (empty axis, bad identity, ...)."""


class SequenceFileError(CyclosumError):
    """A sequence JSON file is missing, malformed, or inconsistent."""
