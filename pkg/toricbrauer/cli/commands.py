"""
CLI Commands
============

``run(config)`` executes one validated command and returns the exit status:

    0  success
    1  usage, file or syntax error
    2  invalid fan
    3  internal inconsistency (nonzero Čech composition)

Reports go to standard output, diagnostics to standard error.
"""

from __future__ import annotations

import logging
import sys
from typing import Optional, TextIO

from toricbrauer.cli.formatting import format_findings, format_report
from toricbrauer.cli.schemas import CliConfig, ReportModel
from toricbrauer.config import settings
from toricbrauer.exceptions import (
    FanError,
    InternalInconsistencyError,
    InvalidFanError,
    ToricBrauerError,
)
from toricbrauer.fans import FanParser, serialize_fan, standard_fans
from toricbrauer.fans.parser import read_document
from toricbrauer.toric import cohomological_brauer

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID_FAN = 2
EXIT_INCONSISTENT = 3


def _compute(config: CliConfig, out: TextIO) -> int:
    fan = FanParser(read_document(config.input_path), normalize_rays=config.normalize_rays).parse()
    report = cohomological_brauer(fan)
    if config.output_format == "structured":
        print(ReportModel.from_report(report, config.groups).to_json(settings.json_indent or None), file=out)
    else:
        print(format_report(report, config.groups), file=out)
    return EXIT_OK


def _gen(config: CliConfig, out: TextIO) -> int:
    fan = standard_fans(config.generator, config.generator_params)
    print(serialize_fan(fan), file=out)
    return EXIT_OK


def _validate(config: CliConfig, out: TextIO) -> int:
    parser = FanParser(read_document(config.input_path), normalize_rays=config.normalize_rays)
    findings = parser.check()
    print(format_findings(findings), file=out)
    return EXIT_INVALID_FAN if any(f.is_violation for f in findings) else EXIT_OK


COMMANDS = {
    "compute": _compute,
    "gen": _gen,
    "validate": _validate,
}


def run(config: CliConfig, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """Execute one command; never raises for expected failures."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        return COMMANDS[config.command](config, out)
    except InvalidFanError as e:
        print(f"error: invalid fan: {e}", file=err)
        return EXIT_INVALID_FAN
    except InternalInconsistencyError as e:
        print(f"error: internal inconsistency: {e}", file=err)
        return EXIT_INCONSISTENT
    except FanError as e:
        print(f"error: {e}", file=err)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: cannot read {config.input_path}: {e.strerror or e}", file=err)
        return EXIT_USAGE
    except UnicodeDecodeError as e:
        print(f"error: {config.input_path} is not UTF-8: {e}", file=err)
        return EXIT_USAGE
    except ToricBrauerError as e:
        logger.exception("unexpected library error")
        print(f"error: {e}", file=err)
        return EXIT_INCONSISTENT
