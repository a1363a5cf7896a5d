from argparse import Namespace
from fractions import Fraction
import os

import pytest

from gorlocus.config import (
    DEFAULT_SAMPLES,
    OUTPUT_DIR_ENV,
    SECTIONS,
    ConfigError,
    RunConfig,
    parse_samples,
)
from gorlocus.fields import QQ, FieldError, PrimeField


parametrize = pytest.mark.parametrize


def test_defaults():
    config = RunConfig()
    assert config.field == "Q"
    assert config.coefficient_field == QQ
    assert config.samples == tuple(Fraction(v) for v in DEFAULT_SAMPLES)
    assert config.sections == SECTIONS
    assert config.budget is None


def test_prime_field():
    config = RunConfig(field="Fp")
    assert config.field == "Fp:32003"
    assert config.coefficient_field == PrimeField(32003)


@parametrize(
    "kwargs",
    [
        {"seed": -1},
        {"seed": "1"},
        {"samples": ()},
        {"samples": (1, 2)},
        {"jobs": 0},
        {"format": "xml"},
        {"suites": ("catalog", "misc")},
    ],
)
def test_invalid_config(kwargs):
    with pytest.raises(ConfigError):
        RunConfig(**kwargs)


def test_invalid_field():
    with pytest.raises(FieldError):
        RunConfig(field="R")


def test_sections_keep_run_order():
    config = RunConfig(suites=("tangent", "catalog"))
    assert config.sections == ("catalog", "tangent")


def test_budget_is_parsed():
    assert RunConfig(budget="10m").budget == 600


def test_to_dict():
    config = RunConfig(samples=(0, Fraction(1, 2)), suites=("nets",))
    assert config.to_dict() == {
        "field": "Q",
        "seed": 0,
        "samples": ["0", "1/2"],
        "suites": ["nets"],
        "jobs": 1,
        "budget": None,
        "format": "json",
    }


@parametrize(
    "text, expected",
    [
        ("0,1,-1/2", (Fraction(0), Fraction(1), Fraction(-1, 2))),
        (" 0 , 3 ,", (Fraction(0), Fraction(3))),
    ],
)
def test_parse_samples(text, expected):
    assert parse_samples(text) == expected


@parametrize("text", ["0,x", "1/0"])
def test_parse_samples_invalid(text):
    with pytest.raises(ConfigError):
        parse_samples(text)


def test_from_args():
    args = Namespace(
        field="Fp:101", seed=3, samples="0,2", only="nets, betti", jobs=2, budget="1m"
    )
    config = RunConfig.from_args(args, "suite", environ={})
    assert config.field == "Fp:101"
    assert config.seed == 3
    assert config.samples == (Fraction(0), Fraction(2))
    assert config.sections == ("nets", "betti")
    assert config.jobs == 2
    assert config.budget == 60
    assert config.out is None


def test_from_args_output_dir():
    args = Namespace(format="csv")
    config = RunConfig.from_args(args, "suite", environ={OUTPUT_DIR_ENV: "/tmp/out"})
    assert config.out == os.path.join("/tmp/out", "suite.csv")


def test_from_args_explicit_out_wins():
    args = Namespace(out="report.json")
    config = RunConfig.from_args(args, "suite", environ={OUTPUT_DIR_ENV: "/tmp/out"})
    assert config.out == "report.json"
