"""
The cli module.

Command line front end of the ``gorlocus`` console script.
"""

import argparse
from fractions import Fraction
import logging
import sys

from .__version__ import __version__
from .artin import profile, quotient_algebra
from .catalog import (
    NET,
    CatalogError,
    CatalogId,
    FamilyId,
    expected_net_class,
    expected_profile,
    listing,
    presentation,
)
from .config import FORMATS, SECTIONS, RunConfig
from .nets import classify_net, extract_net
from .parser import ParseError, format_ideal_text
from .report import Check, Report, emit, write
from .suite import analyze, run_suite, verify_family
from .tangent import BOTH, MODES, EmbeddingError, tangent_report


log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2

LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


def _common_options():
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--field", help="Coefficient field, Q or Fp:<p>")
    common.add_argument("--seed", type=int, help="Seed of the random embeddings")
    common.add_argument("--out", help="Output path (default stdout)")
    common.add_argument("--format", choices=FORMATS, help="Report format")
    common.add_argument("--samples", help="Comma separated values of b")
    common.add_argument("-v", "--verbose", action="count", help="-v info, -vv debug")
    return common


def build_parser():
    """Return the argument parser of the ``gorlocus`` command."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="gorlocus",
        description="Local Artinian Gorenstein algebras of small degree.",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=str(__version__))
    commands = parser.add_subparsers(dest="command")
    commands.required = True

    catalog = commands.add_parser("catalog", parents=[common], help="Catalog ids")
    catalog.add_argument("action", choices=("list", "ideal"))
    catalog.add_argument("id", nargs="?", help="Catalog id for 'ideal'")

    analyze_cmd = commands.add_parser(
        "analyze", parents=[common], help="Invariants of an ideal file"
    )
    analyze_cmd.add_argument("file")
    analyze_cmd.add_argument("--tangent", action="store_true")

    verify = commands.add_parser("verify", parents=[common], help="Verify a family")
    verify.add_argument("what", choices=("family",))
    verify.add_argument("id", help="e.g. net-split:A3[h=4,n=4]@corrected")

    net = commands.add_parser("net", parents=[common], help="Classify a net")
    net.add_argument("id")

    tangent = commands.add_parser("tangent", parents=[common], help="h0 of N_X")
    tangent.add_argument("id")
    tangent.add_argument("--mode", choices=MODES, default=BOTH)
    tangent.add_argument("--alpha", type=Fraction, help="Override alpha for h=1")

    suite = commands.add_parser("suite", parents=[common], help="Run the suite")
    suite.add_argument(
        "--only", help="Comma separated sections of {0}".format(", ".join(SECTIONS))
    )
    suite.add_argument("--jobs", type=int, help="Worker processes")
    suite.add_argument("--budget", help='Stop starting sections after e.g. "10m"')
    return parser


def _catalog(args, config):
    if args.action == "ideal":
        if not args.id:
            raise CatalogError("catalog ideal needs a catalog id")
        entry = presentation(args.id, config.coefficient_field)
        ideal = entry.ideal
        text = format_ideal_text(ideal.ring, ideal.generators, [str(entry.id)])
        return text.encode("utf-8")

    report = Report("catalog", __version__, config.to_dict())
    report.data["entries"] = [
        dict(expected_profile(cid).to_dict(), id=str(cid)) for cid in listing()
    ]
    return report


def _net(args, config):
    cid = CatalogId.parse(args.id)
    if cid.family != NET:
        raise CatalogError("net needs an A3 id, not {0}".format(cid))
    algebra = quotient_algebra(presentation(cid, config.coefficient_field).ideal)
    net_class = classify_net(extract_net(algebra))
    report = Report("net", __version__, config.to_dict())
    expected = expected_net_class(cid)
    report.add(Check("class {0}".format(cid), "nets", expected, net_class.label))
    report.data["net"] = net_class.to_dict()
    return report


def _tangent(args, config):
    cid = CatalogId.parse(args.id)
    if args.alpha is not None:
        if cid.family != NET or cid.h != 1:
            raise CatalogError("--alpha applies to h=1 nets, not {0}".format(cid))
        cid = CatalogId(NET, cid.n, cid.d, 1, args.alpha)
    algebra = quotient_algebra(presentation(cid, config.coefficient_field).ideal)
    result = tangent_report(algebra, cid.n, str(cid), args.mode, config.seed)
    report = Report("tangent", __version__, config.to_dict())
    if result.h0_projective is not None:
        report.add(
            Check(
                "lower bound {0}".format(cid),
                "tangent",
                True,
                result.h0_projective >= result.lower_bound,
            )
        )
    if result.shift_ok is not None:
        report.add(Check("shift {0}".format(cid), "tangent", True, result.shift_ok))
    report.data["tangent"] = result.to_dict()
    prof = profile(algebra)
    report.data["profile"] = prof.to_dict()
    return report


def dispatch(args):
    """Run the command of parsed `args` and return a report or raw bytes."""
    command = args.command
    config = RunConfig.from_args(args, command)
    if command == "catalog":
        result = _catalog(args, config)
    elif command == "analyze":
        result = analyze(args.file, config, tangent=args.tangent)
    elif command == "verify":
        result = verify_family(FamilyId.parse(args.id), config)
    elif command == "net":
        result = _net(args, config)
    elif command == "tangent":
        result = _tangent(args, config)
    else:
        result = run_suite(config)
    return config, result


def _output(config, result):
    if isinstance(result, Report):
        if config.out:
            write(result, config.out, config.format)
        else:
            sys.stdout.buffer.write(emit(result, config.format))
        return result.exit_code

    if config.out:
        with open(config.out, "wb") as handle:
            handle.write(result)
    else:
        sys.stdout.buffer.write(result)
    return EXIT_OK


def main(argv=None):
    """
    Entry point of the ``gorlocus`` console script.

    Returns:
        int: ``0`` without failed checks, ``1`` with failed checks and ``2`` on
        usage, parse or I/O errors.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    level = LOG_LEVELS[min(getattr(args, "verbose", 0), len(LOG_LEVELS) - 1)]
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )

    try:
        config, result = dispatch(args)
        return _output(config, result)
    except (ParseError, CatalogError, EmbeddingError, OSError, ValueError) as exc:
        log.debug("Command %s failed", args.command, exc_info=True)
        sys.stderr.write("gorlocus: error: {0}\n".format(exc))
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
