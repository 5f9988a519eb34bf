# -*- coding: utf-8 -*-
"""Exceptions raised by mobiuscheck.

Every error knows the process exit code the command line uses for it, and
can describe itself as a JSON-serializable dict.
"""

from .config import MobiusCheckError


class Error(MobiusCheckError):
    """Base of all errors with an exit code."""

    exit_code = 1

    def __init__(self, message, **details):
        super(Error, self).__init__(message)
        self.message = message
        self.details = details

    def as_dict(self):
        """Return a JSON-serializable dictionary representation of this error."""
        result = {"type": type(self).__name__, "message": self.message}
        result.update(self.details)
        return result

    def __str__(self):
        return self.message


class InputError(Error):
    exit_code = 1


class OddLength(InputError):
    pass


class NotDoubleOccurrence(InputError):
    pass


class EmptyToken(InputError):
    pass


class UnknownLetter(InputError):
    pass


class SameLetter(InputError):
    pass


class AsymmetricMatrix(InputError):
    pass


class MalformedMatrix(InputError):
    pass


class MalformedTwists(InputError):
    pass


class MalformedGraph(InputError):
    pass


class UnknownSubcommand(InputError):
    pass


class IoError(InputError):
    pass


class BoundExceeded(Error):
    """A desk-scale search was asked for more than its configured bound."""

    exit_code = 2

    def __init__(self, what, value, bound):
        super(BoundExceeded, self).__init__(
            "{} = {} exceeds the configured bound {}".format(what, value, bound),
            value=value,
            bound=bound,
        )
        self.value = value
        self.bound = bound


class DimensionTooLarge(BoundExceeded):
    pass


class VerificationError(Error):
    """A returned witness failed its own re-check."""

    exit_code = 3


def check_bound(what, value, bound, error=BoundExceeded):
    if value > bound:
        raise error(what, value, bound)
