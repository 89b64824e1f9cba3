"""Shared exception types."""


class CapacityError(Exception):
    """A configured size cap was exceeded; the message names the cap to raise."""


class NotIntervalError(ValueError):
    """Asked for an interval representation of a graph that is not interval."""


class SelfCheckError(RuntimeError):
    """An internal certificate or a verified theorem failed to check out.

    This is never an expected outcome: it signals a bug in the library (or a
    falsified theorem) and must not be silenced.
    """
