"""
CLI Schemas
===========

Pydantic models for the command line surface:

- CliConfig: one validated command invocation
- ReportModel: the structured (JSON) report, which parses back into a
  CohomologyReport
"""

from __future__ import annotations

import json
from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from toricbrauer.linalg import FinAbGroup
from toricbrauer.toric import BrauerGroup, CohomologyReport, TotalH2

GroupName = Literal["units", "cl", "pic", "relbrauer", "desingbrauer", "h2"]
ALL_GROUPS: tuple[str, ...] = ("units", "cl", "pic", "relbrauer", "desingbrauer", "h2")


# =============================================================================
# Command configuration
# =============================================================================

class CliConfig(BaseModel):
    """One command line invocation."""
    model_config = ConfigDict(frozen=True)

    command: Literal["compute", "gen", "validate"]
    input_path: Optional[str] = None              # file or "-" (compute, validate)
    generator: Optional[str] = None               # gen
    generator_params: tuple[int, ...] = ()
    output_format: Literal["text", "structured"] = "text"
    normalize_rays: bool = False
    groups: tuple[GroupName, ...] = ALL_GROUPS

    @field_validator("groups", mode="before")
    @classmethod
    def _expand_groups(cls, value):
        if isinstance(value, str):
            value = [g.strip() for g in value.split(",") if g.strip()]
        value = list(value)
        if "all" in value:
            return ALL_GROUPS
        if not value:
            raise ValueError("at least one group must be selected")
        # keep report order, drop repeats
        return tuple(g for g in ALL_GROUPS if g in value) + tuple(
            g for g in value if g not in ALL_GROUPS
        )

    @model_validator(mode="after")
    def _check_command(self):
        if self.command == "gen":
            if not self.generator:
                raise ValueError("gen needs a generator name")
        elif not self.input_path:
            raise ValueError(f"{self.command} needs an input file (or - for stdin)")
        return self


# =============================================================================
# Structured report
# =============================================================================

class GroupModel(BaseModel):
    """Z^rank ⊕ Z/t_1 ⊕ ... in invariant-factor form."""
    rank: int = Field(ge=0)
    torsion: list[int] = []

    @classmethod
    def from_group(cls, g: FinAbGroup) -> GroupModel:
        return cls(rank=g.free_rank, torsion=list(g.torsion))

    def to_group(self) -> FinAbGroup:
        return FinAbGroup(free_rank=self.rank, torsion=tuple(self.torsion))


class DivisibleGroupModel(BaseModel):
    """(Q/Z)^qz ⊕ finite torsion."""
    qz: int = Field(ge=0)
    torsion: list[int] = []

    @classmethod
    def from_group(cls, g: BrauerGroup) -> DivisibleGroupModel:
        return cls(qz=g.divisible_rank, torsion=list(g.finite))

    def to_group(self) -> BrauerGroup:
        return BrauerGroup(divisible_rank=self.qz, finite=tuple(self.torsion))


class TotalModel(BaseModel):
    """(Q/Z)^qz ⊕ Z^rank ⊕ torsion."""
    qz: int = Field(ge=0)
    rank: int = Field(ge=0)
    torsion: list[int] = []

    @classmethod
    def from_group(cls, g: TotalH2) -> TotalModel:
        return cls(qz=g.divisible_rank, rank=g.free_rank, torsion=list(g.torsion))

    def to_group(self) -> TotalH2:
        return TotalH2(divisible_rank=self.qz, free_rank=self.rank, torsion=tuple(self.torsion))


class ReportModel(BaseModel):
    """Structured output; keys of unselected groups are left out."""
    model_config = ConfigDict(extra="forbid")

    units_rank: Optional[int] = Field(default=None, ge=0)
    class_group: Optional[GroupModel] = None
    picard: Optional[GroupModel] = None
    relative_brauer: Optional[GroupModel] = None
    desing_brauer: Optional[DivisibleGroupModel] = None
    h2: Optional[TotalModel] = None

    @classmethod
    def from_report(cls, report: CohomologyReport, groups: tuple[str, ...] = ALL_GROUPS) -> ReportModel:
        return cls(
            units_rank=report.units_rank if "units" in groups else None,
            class_group=GroupModel.from_group(report.class_group) if "cl" in groups else None,
            picard=GroupModel.from_group(report.picard) if "pic" in groups else None,
            relative_brauer=GroupModel.from_group(report.relative_brauer) if "relbrauer" in groups else None,
            desing_brauer=DivisibleGroupModel.from_group(report.desing_brauer) if "desingbrauer" in groups else None,
            h2=TotalModel.from_group(report.total_h2) if "h2" in groups else None,
        )

    def to_report(self) -> CohomologyReport:
        missing = [name for name, value in self if value is None]
        if missing:
            raise ValueError(f"structured report lacks {', '.join(missing)}")
        return CohomologyReport(
            units_rank=self.units_rank,
            class_group=self.class_group.to_group(),
            picard=self.picard.to_group(),
            relative_brauer=self.relative_brauer.to_group(),
            desing_brauer=self.desing_brauer.to_group(),
            total_h2=self.h2.to_group(),
        )

    def to_json(self, indent: Optional[int] = 2) -> str:
        # stdlib json keeps arbitrarily large ints exact
        return json.dumps(self.model_dump(exclude_none=True), indent=indent)


def parse_report(document: Union[str, bytes]) -> CohomologyReport:
    """Read structured output back into a CohomologyReport."""
    return ReportModel.model_validate(json.loads(document)).to_report()
