"""Exception hierarchy shared by all realtypes modules."""


class RealTypeError(ValueError):
    """Base class for every error raised by this package."""


class InvalidShape(RealTypeError):
    pass


class MisplacedZero(RealTypeError):
    pass


class ZeroInOddColumn(RealTypeError):
    pass


class EvenColumnWithoutZero(RealTypeError):
    pass


class SignChangeWithoutRoot(RealTypeError):
    """A matrix row switches between +1 and -1 with no zero in between."""

    def __init__(self, row, column):
        self.row = row
        self.column = column
        super().__init__(
            f"row {row} changes sign at column {column} without a zero in between"
        )


class DomainError(RealTypeError):
    pass


class EmptyFamily(RealTypeError):
    pass


class DimensionMismatch(RealTypeError):
    pass


class BudgetExceeded(RealTypeError):
    pass


class NotRealizable(RealTypeError):
    def __init__(self, message, *, row=None, min_degree=None, parity=None):
        self.row = row
        self.min_degree = min_degree
        self.parity = parity
        super().__init__(message)


class ZeroPolynomial(RealTypeError):
    def __init__(self, message="the zero polynomial is not allowed", *, index=None):
        self.index = index
        super().__init__(message)


class EndpointIsRoot(RealTypeError):
    pass


class NotSquarefree(RealTypeError):
    pass
