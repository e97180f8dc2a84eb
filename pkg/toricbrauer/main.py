"""
Command Line Entry Point
========================

    toricbrauer compute <file|-> [--format text|structured] [--normalize-rays] [--groups g1,g2,...]
    toricbrauer gen <name> [params...]
    toricbrauer validate <file|-> [--normalize-rays]

Sets up logging (standard error only) and hands a validated CliConfig to
:func:`toricbrauer.cli.run`.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from toricbrauer.cli import CliConfig, run
from toricbrauer.cli.commands import EXIT_USAGE
from toricbrauer.config import settings
from toricbrauer.exceptions import UsageError
from toricbrauer.fans import GENERATORS

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class _ArgumentParser(argparse.ArgumentParser):
    """Report usage errors as exceptions so they map to exit status 1."""

    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="toricbrauer",
        description="Units, class group, Picard group and Brauer groups of a toric variety from its fan.",
    )
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        default=None, help="logging level (default from settings)")
    sub = parser.add_subparsers(dest="command", parser_class=_ArgumentParser)

    compute = sub.add_parser("compute", help="compute the cohomology report of a fan file")
    compute.add_argument("input", help="fan file, or - for standard input")
    compute.add_argument("--format", choices=["text", "structured"], default=None,
                         help="output format (default from settings)")
    compute.add_argument("--normalize-rays", action="store_true", default=None,
                         help="divide non-primitive rays by their gcd instead of rejecting them")
    compute.add_argument("--groups", default="all",
                         help="comma separated subset of units,cl,pic,relbrauer,desingbrauer,h2,all")

    gen = sub.add_parser("gen", help="print a standard fan file")
    gen.add_argument("name", choices=sorted(GENERATORS), help="generator name")
    gen.add_argument("params", nargs="*", type=int, help="integer parameters")

    validate = sub.add_parser("validate", help="report structural problems of a fan file")
    validate.add_argument("input", help="fan file, or - for standard input")
    validate.add_argument("--normalize-rays", action="store_true", default=None,
                          help="divide non-primitive rays by their gcd before checking")
    return parser


def config_from_args(args: argparse.Namespace) -> CliConfig:
    normalize = getattr(args, "normalize_rays", None)
    return CliConfig(
        command=args.command,
        input_path=getattr(args, "input", None),
        generator=getattr(args, "name", None),
        generator_params=tuple(getattr(args, "params", None) or ()),
        output_format=getattr(args, "format", None) or settings.output_format,
        normalize_rays=settings.normalize_rays if normalize is None else normalize,
        groups=getattr(args, "groups", "all"),
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required: compute, gen or validate")
        config = config_from_args(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as e:
        messages = "; ".join(item["msg"] for item in e.errors())
        print(f"error: {messages}", file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(
        level=args.log_level or settings.log_level,
        format=LOG_FORMAT,
        stream=sys.stderr,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
