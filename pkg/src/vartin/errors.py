"""Exception hierarchy shared by all vartin modules.

The CLI maps these onto exit codes: bad input is 1, anything the library
declines to decide (caps, truncation, non-spherical requests) is 2, and a
violated internal invariant is 3.
"""


class VartinError(Exception):
    """Base class for all errors raised by this package."""


class InputError(VartinError):
    """Malformed user input: graph files, element files, word syntax."""


class NonReducedWordError(InputError):
    """A word claimed to be reduced produced a repeated or negative root."""


class UnsupportedError(VartinError):
    """The request is well-formed but outside what can be decided."""


class CapExceededError(UnsupportedError):
    """An enumeration hit its cap before stabilizing (recoverable)."""


class TruncationError(UnsupportedError):
    """An operation needed roots beyond the enumerated part of the system."""


class ClosureError(UnsupportedError):
    """A matrix basis is not closed under the requested reflections."""


class InternalError(VartinError):
    """An internal consistency invariant failed; indicates a bug."""
