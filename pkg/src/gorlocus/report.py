"""
The report module.

Check records and the report that collects them, with JSON, CSV and text
renderings. Reports carry no timestamps so equal runs give equal bytes.
"""

import csv
from dataclasses import dataclass, field
from fractions import Fraction
import io
import json

from .fields import ModInt


PASS = "pass"
FAIL = "fail"
FINDING = "finding"

STATUSES = (PASS, FAIL, FINDING)

CSV_COLUMNS = ("name", "topic", "status", "expected", "observed", "detail")


def jsonable(value):
    """Return `value` with exact scalars as strings and tuples as lists."""
    if isinstance(value, (Fraction, ModInt)):
        return str(value)
    if isinstance(value, dict):
        return {str(key): jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(item) for item in value]
    return value


@dataclass(frozen=True)
class Check(object):
    """
    One verified claim.

    Attributes:
        name (str): What was checked, e.g. ``"profile A[4,7]"``.
        topic (str): Suite section of the check.
        expected: Expected value.
        observed: Computed value.
        status (str): ``pass``, ``fail`` or ``finding``.
        detail (str): Free text, e.g. both readings of an ambiguous claim.
    """

    name: str
    topic: str
    expected: object
    observed: object
    status: str = None
    detail: str = None

    def __post_init__(self):
        status = self.status
        if status is None:
            status = PASS if self.expected == self.observed else FAIL
            object.__setattr__(self, "status", status)
        if status not in STATUSES:
            raise ValueError(
                'Status must be one of {0}, not "{1}"'.format(
                    ", ".join(STATUSES), status
                )
            )
        object.__setattr__(self, "expected", jsonable(self.expected))
        object.__setattr__(self, "observed", jsonable(self.observed))

    def to_dict(self):
        return {
            "name": self.name,
            "topic": self.topic,
            "expected": self.expected,
            "observed": self.observed,
            "status": self.status,
            "detail": self.detail,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(**{key: data.get(key) for key in CSV_COLUMNS})


def finding(name, topic, expected, observed, detail):
    """Return a check recording a disagreement with a suspected misprint."""
    return Check(name, topic, expected, observed, FINDING, detail)


@dataclass
class Report(object):
    """
    The result of a command.

    Attributes:
        command (str): Command that produced it.
        version (str): Package version.
        config (dict): Echo of the run configuration.
        checks (list): :class:`Check` records in run order.
        data (dict): Command specific payload (profiles, tangent reports).
    """

    command: str
    version: str = None
    config: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def add(self, check):
        self.checks.append(check)
        return check

    def extend(self, checks):
        self.checks.extend(checks)

    def count(self, status):
        return sum(1 for check in self.checks if check.status == status)

    @property
    def failed(self):
        return any(check.status == FAIL for check in self.checks)

    @property
    def exit_code(self):
        return 1 if self.failed else 0

    def summary(self):
        return {status: self.count(status) for status in STATUSES}

    def to_dict(self):
        return {
            "command": self.command,
            "version": self.version,
            "config": jsonable(self.config),
            "summary": self.summary(),
            "checks": [check.to_dict() for check in self.checks],
            "data": jsonable(self.data),
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            command=data["command"],
            version=data.get("version"),
            config=data.get("config", {}),
            checks=[Check.from_dict(item) for item in data.get("checks", [])],
            data=data.get("data", {}),
        )


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    return json.dumps(value, sort_keys=True)


def _emit_json(report):
    return json.dumps(report.to_dict(), indent=2) + "\n"


def tables(data):
    """
    Return ``{key: rows}`` for the payloads of `data`.

    A list of mappings is a table, a mapping is a single row and any other
    value is a row with a single ``value`` column.

    >>> tables({"h0": [{"h": 1}, {"h": 2}], "degree": 9})
    {'degree': [{'value': 9}], 'h0': [{'h': 1}, {'h': 2}]}
    """
    result = {}
    for key, value in sorted(jsonable(data).items()):
        if isinstance(value, list) and value and all(
            isinstance(row, dict) for row in value
        ):
            result[key] = value
        elif isinstance(value, dict):
            result[key] = [value]
        else:
            result[key] = [{"value": value}]
    return result


def _columns(rows):
    columns = []
    for row in rows:
        columns.extend(key for key in row if key not in columns)
    return columns


def _emit_csv(report):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for check in report.checks:
        row = check.to_dict()
        writer.writerow([_cell(row[column]) for column in CSV_COLUMNS])

    # each payload follows as its own block, first column naming the payload
    for key, rows in tables(report.data).items():
        columns = _columns(rows)
        writer.writerow([])
        writer.writerow(["table"] + columns)
        for row in rows:
            writer.writerow([key] + [_cell(row.get(column)) for column in columns])
    return buffer.getvalue()


def _emit_text(report):
    lines = ["{0} ({1})".format(report.command, report.version or "dev")]
    for key, value in jsonable(report.config).items():
        lines.append("  {0}: {1}".format(key, value))
    for check in report.checks:
        lines.append(
            "[{0}] {1}: {2}: expected {3}, observed {4}".format(
                check.status.upper(),
                check.topic,
                check.name,
                _cell(check.expected),
                _cell(check.observed),
            )
        )
        if check.detail:
            lines.append("    " + check.detail)
    for key, value in jsonable(report.data).items():
        lines.append("{0}: {1}".format(key, _cell(value)))
    summary = report.summary()
    lines.append(", ".join("{0} {1}".format(summary[s], s) for s in STATUSES))
    return "\n".join(lines) + "\n"


_EMITTERS = {"json": _emit_json, "csv": _emit_csv, "text": _emit_text}


def emit(report, format="json"):
    """
    Return the report rendered in `format` as UTF-8 bytes.

    Raises:
        ValueError: On an unknown format.
    """
    try:
        emitter = _EMITTERS[format]
    except KeyError:
        raise ValueError(
            'Format must be one of {0}, not "{1}"'.format(
                ", ".join(_EMITTERS), format
            )
        )
    return emitter(report).encode("utf-8")


def write(report, path, format="json"):
    """Write the rendered report to `path`."""
    with open(path, "wb") as handle:
        handle.write(emit(report, format))
