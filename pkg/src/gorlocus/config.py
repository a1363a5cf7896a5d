"""
The config module.
"""

from dataclasses import dataclass
from fractions import Fraction
import os

from .fields import parse_field
from .timer import parse_duration


OUTPUT_DIR_ENV = "GORLOCUS_OUTPUT_DIR"

FORMATS = ("json", "csv", "text")

# Suite sections in run order.
SECTIONS = (
    "catalog",
    "separation",
    "families",
    "pfaffians",
    "nets",
    "betti",
    "tangent",
    "bounds",
)

DEFAULT_SAMPLES = (0, 1, -1, 2, 3)


class ConfigError(ValueError):
    """Exception raised when a run configuration is invalid."""

    pass


def parse_samples(text):
    """
    Return the rationals of a comma separated list.

    >>> parse_samples("0,1,-1/2")
    (Fraction(0, 1), Fraction(1, 1), Fraction(-1, 2))
    """
    try:
        return tuple(Fraction(item.strip()) for item in text.split(",") if item.strip())
    except (ValueError, ZeroDivisionError):
        raise ConfigError('Samples "{0}" are not a list of rationals'.format(text))


@dataclass(frozen=True)
class RunConfig(object):
    """
    Options of a run.

    Attributes:
        field (str): ``Q`` or ``Fp:<p>``.
        seed (int): Seed of the random embeddings.
        samples (tuple): Values of ``b`` where family fibres are computed.
        out (str): Output path, ``None`` for stdout.
        suites (tuple): Suite sections to run, empty for all.
        jobs (int): Worker processes for suite sections.
        budget (float): Seconds after which no new section starts.
        format (str): ``json``, ``csv`` or ``text``.

    Raises:
        FieldError: On a bad field descriptor.
        ConfigError: On any other invalid option.
    """

    field: str = "Q"
    seed: int = 0
    samples: tuple = DEFAULT_SAMPLES
    out: str = None
    suites: tuple = ()
    jobs: int = 1
    budget: float = None
    format: str = "json"

    def __post_init__(self):
        object.__setattr__(self, "field", parse_field(self.field).name)
        object.__setattr__(
            self, "samples", tuple(Fraction(value) for value in self.samples)
        )
        object.__setattr__(self, "suites", tuple(self.suites))

        if not isinstance(self.seed, int) or self.seed < 0:
            raise ConfigError(
                "Seed must be a non-negative integer, not {0}".format(self.seed)
            )
        if not self.samples or 0 not in self.samples:
            raise ConfigError("Samples {0} must include 0".format(self.samples))
        if not isinstance(self.jobs, int) or self.jobs < 1:
            raise ConfigError("Jobs must be at least 1, not {0}".format(self.jobs))
        if self.format not in FORMATS:
            raise ConfigError(
                'Format must be one of {0}, not "{1}"'.format(
                    ", ".join(FORMATS), self.format
                )
            )
        unknown = [name for name in self.suites if name not in SECTIONS]
        if unknown:
            raise ConfigError(
                "Unknown suite sections {0}, expected some of {1}".format(
                    unknown, ", ".join(SECTIONS)
                )
            )
        if self.budget is not None:
            object.__setattr__(self, "budget", parse_duration(self.budget))

    @property
    def coefficient_field(self):
        return parse_field(self.field)

    @property
    def sections(self):
        """Selected sections in run order."""
        if not self.suites:
            return SECTIONS
        return tuple(name for name in SECTIONS if name in self.suites)

    def to_dict(self):
        return {
            "field": self.field,
            "seed": self.seed,
            "samples": [str(value) for value in self.samples],
            "suites": list(self.sections),
            "jobs": self.jobs,
            "budget": self.budget,
            "format": self.format,
        }

    @classmethod
    def from_args(cls, args, command="report", environ=None):
        """
        Return the config of parsed command line `args`.

        An explicit ``--out`` wins; otherwise the directory in
        ``GORLOCUS_OUTPUT_DIR`` gets ``<command>.<format>``.
        """
        environ = os.environ if environ is None else environ
        fmt = getattr(args, "format", None) or "json"
        out = getattr(args, "out", None)
        if out is None and environ.get(OUTPUT_DIR_ENV):
            out = os.path.join(
                environ[OUTPUT_DIR_ENV], "{0}.{1}".format(command, fmt)
            )

        samples = getattr(args, "samples", None)
        if isinstance(samples, str):
            samples = parse_samples(samples)

        only = getattr(args, "only", None) or ()
        if isinstance(only, str):
            only = tuple(name.strip() for name in only.split(",") if name.strip())

        return cls(
            field=getattr(args, "field", None) or "Q",
            seed=getattr(args, "seed", None) or 0,
            samples=samples or DEFAULT_SAMPLES,
            out=out,
            suites=only,
            jobs=getattr(args, "jobs", None) or 1,
            budget=getattr(args, "budget", None),
            format=fmt,
        )
