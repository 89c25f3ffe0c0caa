"""Exception hierarchy shared across the package."""


class RatknapError(Exception):
    """Base class for all errors raised by this package."""


class InvalidDenominatorError(RatknapError):
    """A rational was constructed with a zero denominator."""


class EmptyInputError(RatknapError):
    """An operation that needs at least one element received none."""


class RangeError(RatknapError):
    """An argument fell outside its documented range."""


class ShapeError(RatknapError):
    """Lists or vectors whose lengths or structure do not match."""


class ParseError(RatknapError):
    """Malformed textual input (DIMACS, instance files, rationals, witnesses)."""


class ArityError(ParseError):
    """A CNF clause does not contain exactly three literals."""


class OccurrenceBoundError(RatknapError):
    """A formula violates the at-most-four-occurrences-per-variable bound."""


class InvalidPrimesError(RatknapError):
    """A prime list contains duplicates or non-primes."""


class InvalidWitnessError(RatknapError):
    """A witness violates the integrality constraints of its problem kind."""


class ParameterError(RatknapError):
    """An algorithm parameter is outside its admissible range."""


class ResourceLimitError(RatknapError):
    """The configured search or table budget would be exceeded."""
