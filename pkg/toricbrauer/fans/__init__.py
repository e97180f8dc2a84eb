"""Fans: data model, file format, validation and standard examples."""

from toricbrauer.fans.fan import (
    Cone,
    Fan,
    RayVector,
    cone_intersection,
    is_simplicial,
    is_smooth,
    one_skeleton,
)
from toricbrauer.fans.parser import FanParser, load_fan, parse_fan, serialize_fan
from toricbrauer.fans.standard import GENERATORS, standard_fans
from toricbrauer.fans.validation import Finding, FindingCode, Severity, validate_fan

__all__ = [
    "Cone",
    "Fan",
    "FanParser",
    "Finding",
    "FindingCode",
    "GENERATORS",
    "RayVector",
    "Severity",
    "cone_intersection",
    "is_simplicial",
    "is_smooth",
    "load_fan",
    "one_skeleton",
    "parse_fan",
    "serialize_fan",
    "standard_fans",
    "validate_fan",
]
