"""Exception types raised by the library."""


class TripartiteError(Exception):
    """Base class for all library errors."""


class InvalidInput(TripartiteError, ValueError):
    """A matrix or state failed shape or density-matrix validation."""


class NonHermitian(InvalidInput):
    pass


class NotNormalized(InvalidInput):
    pass


class ParamOutOfRange(InvalidInput):
    pass


class InvalidSlot(InvalidInput):
    pass


class LemmaViolation(TripartiteError):
    """A special reduction came out as something other than a density matrix."""


class ConvergenceError(TripartiteError, ArithmeticError):
    pass
