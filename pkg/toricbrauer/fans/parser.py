"""
Fan Parser
==========

Reads and writes the JSON fan document:

    { "rank": 2, "rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2],[0,2]] }

Key responsibilities:
1. Decode JSON and check the document shape (pydantic schema)
2. Turn the document into a Fan, optionally normalizing rays
3. Write fans back out, big integers as strings
"""

from __future__ import annotations

import json
import logging
import re
import sys
from pathlib import Path
from typing import Annotated, Any, Optional, Union

from pydantic import BaseModel, ConfigDict, PlainValidator, ValidationError

from toricbrauer.config import settings
from toricbrauer.exceptions import FanSyntaxError
from toricbrauer.fans.fan import Cone, Fan, RayVector
from toricbrauer.fans.validation import Finding, duplicate_indices, raise_for_findings, validate_fan

logger = logging.getLogger(__name__)

# Largest magnitude a JSON number can carry without loss in double precision
SAFE_INTEGER = 2**53 - 1

_INTEGER = re.compile(r"[+-]?\d+")


def _lattice_int(value: Any) -> int:
    """Accept JSON integers and decimal strings (for values past 2**53)."""
    if isinstance(value, bool):
        raise ValueError("expected an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and _INTEGER.fullmatch(value.strip()):
        return int(value)
    raise ValueError(f"expected an integer, got {value!r}")


def _index(value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"expected an integer index, got {value!r}")
    return value


LatticeInt = Annotated[int, PlainValidator(_lattice_int)]
Index = Annotated[int, PlainValidator(_index)]


class FanDocument(BaseModel):
    """Schema of a fan file."""
    model_config = ConfigDict(extra="forbid")

    rank: Index
    rays: list[list[LatticeInt]]
    max_cones: list[list[Index]]


class FanParser:
    """Parse a fan document and build the Fan it describes."""

    def __init__(self, document: Union[str, bytes, dict], normalize_rays: Optional[bool] = None):
        self.document = document
        self.normalize_rays = settings.normalize_rays if normalize_rays is None else normalize_rays
        self.findings: list[Finding] = []
        self.load_findings: list[Finding] = []

    def load(self) -> Fan:
        """Build the fan without judging it; only the document shape is checked."""
        raw = self._decode()
        try:
            doc = FanDocument.model_validate(raw)
        except ValidationError as e:
            raise FanSyntaxError(f"invalid fan document: {_summarize(e)}") from e

        rays = self._extract_rays(doc)
        # repeats are recorded as findings, then dropped
        self.load_findings = duplicate_indices(doc.max_cones)
        cones = tuple(Cone(tuple(dict.fromkeys(c))) for c in doc.max_cones)
        return Fan(rank=doc.rank, rays=rays, max_cones=cones)

    def check(self) -> list[Finding]:
        """All findings for the document, including repeated cone indices."""
        fan = self.load()
        self.findings = self.load_findings + validate_fan(fan)
        return self.findings

    def parse(self) -> Fan:
        """Build the fan and raise on the first structural violation."""
        fan = self.load()
        self.findings = self.load_findings + validate_fan(fan)
        raise_for_findings(self.findings)
        logger.info("parsed fan: rank %d, %d rays, %d maximal cones",
                    fan.rank, fan.n_rays, len(fan.max_cones))
        return fan

    def _decode(self) -> Any:
        if isinstance(self.document, dict):
            return self.document
        try:
            return json.loads(self.document)
        except (json.JSONDecodeError, UnicodeDecodeError) as e:
            raise FanSyntaxError(f"malformed JSON: {e}") from e

    def _extract_rays(self, doc: FanDocument) -> tuple[RayVector, ...]:
        rays = []
        for coords in doc.rays:
            ray = RayVector(tuple(coords))
            if self.normalize_rays and not ray.is_zero and not ray.is_primitive:
                logger.info("normalizing ray %s to its primitive generator", list(coords))
                ray = ray.primitive()
            rays.append(ray)
        return tuple(rays)


def _summarize(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        loc = ".".join(str(p) for p in item["loc"]) or "<document>"
        parts.append(f"{loc}: {item['msg']}")
    return "; ".join(parts)


def parse_fan(document: Union[str, bytes, dict], normalize_rays: Optional[bool] = None) -> Fan:
    """Parse a fan document into a structurally valid Fan."""
    return FanParser(document, normalize_rays=normalize_rays).parse()


def read_document(source: Union[str, Path]) -> str:
    """Read a fan document from a path, or from standard input for ``-``."""
    if str(source) == "-":
        return sys.stdin.read()
    return Path(source).read_text(encoding="utf-8")


def load_fan(source: Union[str, Path], normalize_rays: Optional[bool] = None) -> Fan:
    """Read and parse a fan file (``-`` for standard input)."""
    return parse_fan(read_document(source), normalize_rays=normalize_rays)


def _json_int(value: int) -> Union[int, str]:
    return value if abs(value) <= SAFE_INTEGER else str(value)


def serialize_fan(f: Fan, indent: Optional[int] = None) -> str:
    """The fan document for ``f``; ``parse_fan`` reads it back unchanged."""
    doc = {
        "rank": f.rank,
        "rays": [[_json_int(c) for c in r.coords] for r in f.rays],
        "max_cones": [list(c.ray_indices) for c in f.max_cones],
    }
    if indent is None:
        indent = settings.json_indent
    if not indent:
        return json.dumps(doc)
    # one ray / cone per line
    lines = ["{"]
    pad = " " * indent
    lines.append(f'{pad}"rank": {f.rank},')
    for key in ("rays", "max_cones"):
        items = doc[key]
        if not items:
            lines.append(f'{pad}"{key}": [],')
            continue
        lines.append(f'{pad}"{key}": [')
        for n, item in enumerate(items):
            comma = "," if n < len(items) - 1 else ""
            lines.append(f"{pad}{pad}{json.dumps(item)}{comma}")
        lines.append(f"{pad}],")
    lines[-1] = lines[-1].rstrip(",")
    lines.append("}")
    return "\n".join(lines)
