from contextlib import contextmanager
from fractions import Fraction
from unittest import mock

import pytest

from gorlocus import Timer
from gorlocus.timer import BudgetError, format_duration, parse_duration


parametrize = pytest.mark.parametrize


@contextmanager
def mock_time(epoch):
    with mock.patch("time.time", return_value=epoch):
        yield


def test_timer_timing():
    timer = Timer()
    assert timer.elapsed() == 0

    with mock_time(1):
        timer.start()

    with mock_time(3):
        assert timer.elapsed() == 2

    with mock_time(5):
        timer.stop()

    with mock_time(50):
        assert timer.elapsed() == 4


def test_timer_timeout():
    timer = Timer(timeout=10)

    with mock_time(0):
        timer.start()
        assert timer.elapsed() == 0
        assert timer.remaining() == 10
        assert not timer.done()

    with mock_time(4):
        assert timer.elapsed() == 4
        assert timer.remaining() == 6
        assert not timer.done()

    with mock_time(10):
        assert timer.elapsed() == 10
        assert timer.remaining() == 0
        assert timer.done()


def test_timer_without_timeout():
    timer = Timer()

    with mock_time(0):
        timer.start()

    with mock_time(10 ** 6):
        assert timer.remaining() is None
        assert not timer.done()


def test_timer_contextmanager():
    with mock_time(2):
        with Timer(timeout=1) as timer:
            assert timer.started_at == 2
            assert timer.stopped_at is None

    assert timer.stopped_at == 2
    assert timer.elapsed() == 0
    assert not timer.done()


def test_timer_describe():
    timer = Timer(timeout=100)

    with mock_time(0):
        timer.start()

    with mock_time(40):
        assert timer.describe() == "40 seconds elapsed, 1 minute left"

    with mock_time(200):
        assert timer.describe().endswith(", 0 seconds left")


@parametrize(
    "obj, expected",
    [
        ("90s", 90),
        ("10m", 600),
        ("1h30m", 5400),
        ("2 hours", 7200),
        (45, 45),
        (Fraction(3, 2), Fraction(3, 2)),
        (2.5, 2.5),
    ],
)
def test_parse_duration(obj, expected):
    assert parse_duration(obj) == expected


@parametrize("obj", ["soon", "", -5, "-10m"])
def test_parse_duration_invalid(obj):
    with pytest.raises(BudgetError):
        parse_duration(obj)


@parametrize("obj", [None, [1], {}])
def test_parse_duration_type_error(obj):
    with pytest.raises(TypeError):
        parse_duration(obj)


@parametrize(
    "seconds, expected",
    [
        (45, "45 seconds"),
        (120, "2 minutes"),
        (3600, "1 hour"),
    ],
)
def test_format_duration(seconds, expected):
    assert format_duration(seconds) == expected
