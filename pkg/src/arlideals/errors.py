"""Exception hierarchy shared by all modules."""


class ArlError(ValueError):
    """Base class for every error raised by this package."""


class AmbientMismatchError(ArlError):
    """Exponent vectors of different lengths were combined."""


class MonomialParseError(ArlError):
    pass


class NoLastGeneratorError(ArlError):
    """The zero or unit ideal has no last generator."""


class HypothesisError(ArlError):
    """A structural precondition of an operation does not hold."""


class InfiniteIndexSetError(HypothesisError):
    """An index set I_i would be infinite because x_{mu-1}^t is not in the ideal."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidPlanError(ArlError):
    """An augmentation plan violates one of its defining clauses."""

    def __init__(self, message, clause):
        super().__init__(message)
        self.clause = clause


class NotUnimodalError(ArlError):
    """Synthesis was asked to realize a sequence that is not unimodal at each tail."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SequenceError(ArlError):
    """Malformed Hilbert sequence input."""


class InvariantViolation(AssertionError):
    """An internal guarantee failed; always a bug, never bad input."""
