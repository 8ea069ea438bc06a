"""Exception hierarchy shared by every fqfrs module."""


class FQFRSError(Exception):
    """Base class for all library errors."""


class DomainError(FQFRSError, ValueError):
    """A value lies outside the domain of an operator (e.g. a membership not in [0, 1])."""


class DimensionError(FQFRSError, ValueError):
    """Arguments live on universes of different sizes."""


class CapacityError(FQFRSError, RuntimeError):
    """A brute-force enumeration would exceed its configured limit."""


class ConfigurationError(FQFRSError, ValueError):
    """An experiment or model configuration is invalid."""


class ParseError(FQFRSError, ValueError):
    """An input file could not be parsed.

    ``row`` and ``column`` are 1-based locations when known.
    """

    def __init__(self, message, row=None, column=None):
        location = []
        if row is not None:
            location.append(f"row {row}")
        if column is not None:
            location.append(f"column {column}")
        if location:
            message = f"{message} ({', '.join(location)})"
        super().__init__(message)
        self.row = row
        self.column = column


class UndefinedStatisticError(FQFRSError, ValueError):
    """A test statistic cannot be computed for the given sample."""
