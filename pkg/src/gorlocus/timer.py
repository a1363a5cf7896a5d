"""
The timer module.

The budget clock of the suite's ``--budget`` with the duration parsing and
formatting used by the suite runner.
"""

from datetime import timedelta
import time

from babel.dates import format_timedelta
import pytimeparse

from .helpers import number_types


LOCALE = "en_US"


class BudgetError(ValueError):
    """Exception raised when a duration cannot be parsed."""

    pass


def parse_duration(obj):
    """
    Return the number of seconds in `obj` (``"90s"``, ``"10m"``, ``"1h30m"`` or a
    number of seconds).

    Raises:
        TypeError: When `obj` is neither a string nor a number.
        BudgetError: When the string is not a duration or the value is negative.
    """
    if isinstance(obj, str):
        seconds = pytimeparse.parse(obj)
        if seconds is None:
            raise BudgetError(
                'Value "{0}" is not a recognized duration format'.format(obj)
            )
    elif isinstance(obj, number_types + (float,)):
        seconds = obj
    else:
        raise TypeError(
            "Expected string or number type, not {0}".format(type(obj).__name__)
        )

    if seconds < 0:
        raise BudgetError("Duration {0} is negative".format(obj))
    return seconds


def format_duration(seconds, granularity="second"):
    """
    Return `seconds` as a short human readable string.

    >>> format_duration(120)
    '2 minutes'
    """
    return format_timedelta(
        timedelta(seconds=seconds), granularity=granularity, locale=LOCALE
    )


class Timer(object):
    """
    Budget clock of a suite run.

    Used as a context manager around the run: :meth:`done` tells whether the
    `timeout` has passed and :meth:`describe` renders the clock for log lines.
    Without a timeout the budget never runs out.

    Args:
        timeout (int|float, optional): Budget in seconds, ``None`` for no limit.
    """

    __slots__ = ("timeout", "started_at", "stopped_at")

    def __init__(self, timeout=None):
        self.timeout = timeout
        self.started_at = None
        self.stopped_at = None

    def __enter__(self):
        self.start()
        return self

    def __exit__(self, exc_type, exc, exc_tb):
        self.stop()

    def start(self):
        self.started_at = time.time()
        self.stopped_at = None
        return self

    def stop(self):
        self.stopped_at = time.time()
        return self

    def elapsed(self):
        """Return how long the run has taken so far, ``0`` before the start."""
        if self.started_at is None:
            return 0
        end = self.stopped_at if self.stopped_at is not None else time.time()
        return end - self.started_at

    def remaining(self):
        """Return how much budget is left, ``None`` without a timeout."""
        if self.timeout is None:
            return None
        return self.timeout - self.elapsed()

    def done(self):
        """Return whether the budget has run out."""
        if self.timeout is None:
            return False
        return self.elapsed() >= self.timeout

    def describe(self):
        """Return the elapsed (and remaining) time as text for log messages."""
        text = "{0} elapsed".format(format_duration(self.elapsed()))
        remaining = self.remaining()
        if remaining is not None:
            text += ", {0} left".format(format_duration(max(remaining, 0)))
        return text
