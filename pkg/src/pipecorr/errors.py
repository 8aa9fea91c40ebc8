"""Exception types shared across the package."""


class DataValidationError(ValueError):
    """Raised when input data violate the record-sequence contract.

    Carries a short machine-readable ``code`` and, for tabular input,
    the offending 1-based data row (header excluded).
    """

    def __init__(self, message, code="invalid-data", row=None):
        super().__init__(message)
        self.code = code
        self.row = row


class InsufficientDataError(DataValidationError):
    """Raised when an operation needs more records than were supplied."""

    def __init__(self, message, row=None):
        super().__init__(message, code="insufficient-data", row=row)


class NumericError(ArithmeticError):
    """Raised when an iterative numeric routine fails to converge.

    ``last_estimate`` and ``previous_estimate`` hold the final two
    iterates so callers can judge how bad the failure was.
    """

    def __init__(self, message, last_estimate=None, previous_estimate=None):
        super().__init__(message)
        self.last_estimate = last_estimate
        self.previous_estimate = previous_estimate
