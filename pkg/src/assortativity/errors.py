"""Exception types raised across the package."""


class AssortativityError(ValueError):
    """Base class for all domain errors."""


class NegativeEntry(AssortativityError):
    pass


class AllZero(AssortativityError):
    pass


class NonPositiveScalar(AssortativityError):
    pass


class PerturbationOutOfRange(AssortativityError):
    pass


class OutOfDomain(AssortativityError):
    """Index evaluated at a matrix outside its domain."""


class NegativeIndexValue(AssortativityError):
    """A custom index produced a value below zero."""


class ConstraintViolation(AssortativityError):
    pass


class InvalidWitness(AssortativityError):
    """Extremal witness matrix does not have the required zero pattern."""


class UnknownAxiom(AssortativityError):
    pass


class UnknownIndex(AssortativityError):
    pass


class ParseError(AssortativityError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MissingThreshold(AssortativityError):
    pass
