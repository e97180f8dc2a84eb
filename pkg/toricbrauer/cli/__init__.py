"""Command line frontend."""

from toricbrauer.cli.commands import run
from toricbrauer.cli.schemas import CliConfig, ReportModel, parse_report

__all__ = ["CliConfig", "ReportModel", "parse_report", "run"]
