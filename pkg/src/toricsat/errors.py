"""Exception hierarchy shared by every layer of the toolkit."""


class ToricSatError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ToricSatError, ValueError):
    """Malformed or out-of-range input (dimension mismatch, bad entries...)."""


class CertificateError(ToricSatError):
    """A certificate failed a structural check or could not be parsed."""


class ResourceLimitError(ToricSatError):
    """A search exceeded its configured budget.

    Kept distinct from a negative answer: hitting the limit says nothing
    about membership or saturation.
    """


class SaturatedCase(ToricSatError):
    """Raised when a negative certificate is requested for a positive case."""


class RoutingError(ToricSatError):
    """No construction applies to the given highest weight."""
