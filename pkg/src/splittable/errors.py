"""Exception types raised across the package."""


class SplittableError(ValueError):
    """Base class for every domain error raised here."""


class NotNonincreasing(SplittableError):
    pass


class NegativePart(SplittableError):
    pass


class NodeOutsideDiagram(SplittableError):
    pass


class NotRemovable(SplittableError):
    pass


class NotAddable(SplittableError):
    pass


class NotInitialBead(SplittableError):
    pass


class NotInitialSpace(SplittableError):
    pass


class NotEnoughProperBeads(SplittableError):
    pass


class EmptyS(SplittableError):
    pass


class InvalidHandle(SplittableError):
    pass


class NotPRegular(SplittableError):
    pass


class UnrealizableSymbol(SplittableError):
    pass


class NotApplicable(SplittableError):
    pass


class NotBig(SplittableError):
    pass


class BadParams(SplittableError):
    pass


class PiNotSatisfied(SplittableError):
    pass


class NotInX(SplittableError):
    pass


class PreconditionViolated(SplittableError):
    pass


class BadH(SplittableError):
    pass


class TermNotPRegular(SplittableError):
    pass


class DecompFormatError(SplittableError):
    """Problem with a decomposition matrix file; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DecompSyntaxError(DecompFormatError):
    pass


class UnitriangularityViolation(DecompFormatError):
    pass


class DiagonalNotOne(DecompFormatError):
    pass


class SizeMismatch(SplittableError):
    pass


class MatrixInconsistent(SplittableError):
    pass


class MissingMatrix(SplittableError):
    pass
