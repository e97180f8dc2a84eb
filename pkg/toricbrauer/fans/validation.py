"""
Fan Validation
==============

Structural checks on a :class:`Fan`. Findings are returned as data; callers
that need a valid fan raise the exception attached to the first violation
(see :func:`raise_for_findings`).

Convexity and the face-intersection axiom are NOT checked: that needs
linear programming over Q and stays the caller's responsibility.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from toricbrauer.exceptions import (
    DimensionMismatchError,
    DuplicateIndexError,
    DuplicateRayError,
    EmptyConesListError,
    IndexOutOfRangeError,
    InvalidFanError,
    NonMaximalConeError,
    NonPrimitiveRayError,
    UnusedRayError,
    ZeroRayError,
)
from toricbrauer.fans.fan import Fan, is_simplicial_cone

logger = logging.getLogger(__name__)


class Severity(str, Enum):
    VIOLATION = "violation"
    ADVISORY = "advisory"


class FindingCode(str, Enum):
    NEGATIVE_RANK = "negative_rank"
    DIMENSION_MISMATCH = "dimension_mismatch"
    ZERO_RAY = "zero_ray"
    NON_PRIMITIVE_RAY = "non_primitive_ray"
    DUPLICATE_RAY = "duplicate_ray"
    INDEX_OUT_OF_RANGE = "index_out_of_range"
    DUPLICATE_INDEX = "duplicate_index"
    EMPTY_CONES_LIST = "empty_cones_list"
    NON_MAXIMAL_CONE = "non_maximal_cone"
    UNUSED_RAY = "unused_ray"
    NON_SIMPLICIAL = "non_simplicial"


_ERRORS: dict[FindingCode, type[InvalidFanError]] = {
    FindingCode.NEGATIVE_RANK: DimensionMismatchError,
    FindingCode.DIMENSION_MISMATCH: DimensionMismatchError,
    FindingCode.ZERO_RAY: ZeroRayError,
    FindingCode.NON_PRIMITIVE_RAY: NonPrimitiveRayError,
    FindingCode.DUPLICATE_RAY: DuplicateRayError,
    FindingCode.INDEX_OUT_OF_RANGE: IndexOutOfRangeError,
    FindingCode.DUPLICATE_INDEX: DuplicateIndexError,
    FindingCode.EMPTY_CONES_LIST: EmptyConesListError,
    FindingCode.NON_MAXIMAL_CONE: NonMaximalConeError,
    FindingCode.UNUSED_RAY: UnusedRayError,
}


@dataclass(frozen=True)
class Finding:
    """One validation result."""
    code: FindingCode
    severity: Severity
    message: str
    ray: Optional[int] = None
    cone: Optional[int] = None

    @property
    def is_violation(self) -> bool:
        return self.severity is Severity.VIOLATION

    def __str__(self) -> str:
        return f"{self.severity.value}: {self.code.value}: {self.message}"


def _violation(code: FindingCode, message: str, **where) -> Finding:
    return Finding(code=code, severity=Severity.VIOLATION, message=message, **where)


def duplicate_indices(max_cones: Sequence[Sequence[int]]) -> list[Finding]:
    """Findings for raw cone index lists that name a ray more than once.

    Runs before the lists become :class:`Cone` values, which cannot hold repeats.
    """
    findings = []
    for k, indices in enumerate(max_cones):
        repeated = sorted(i for i, n in Counter(indices).items() if n > 1)
        if repeated:
            findings.append(_violation(
                FindingCode.DUPLICATE_INDEX,
                f"cone {k} {list(indices)} lists ray(s) {repeated} more than once",
                cone=k,
            ))
    return findings


def _check_rays(f: Fan) -> list[Finding]:
    findings = []
    seen: dict[tuple[int, ...], int] = {}
    for i, ray in enumerate(f.rays):
        if ray.dimension != f.rank:
            findings.append(_violation(
                FindingCode.DIMENSION_MISMATCH,
                f"ray {i} has {ray.dimension} coordinates but the lattice has rank {f.rank}",
                ray=i,
            ))
            continue
        if ray.is_zero:
            findings.append(_violation(FindingCode.ZERO_RAY, f"ray {i} is the zero vector", ray=i))
            continue
        if not ray.is_primitive:
            findings.append(_violation(
                FindingCode.NON_PRIMITIVE_RAY,
                f"ray {i} = {list(ray.coords)} is not primitive (gcd {ray.content})",
                ray=i,
            ))
        key = ray.primitive().coords
        if key in seen:
            findings.append(_violation(
                FindingCode.DUPLICATE_RAY,
                f"ray {i} spans the same ray as ray {seen[key]}",
                ray=i,
            ))
        else:
            seen[key] = i
    return findings


def _check_cones(f: Fan, simplicial: bool) -> list[Finding]:
    if not f.max_cones:
        return [_violation(FindingCode.EMPTY_CONES_LIST, "the fan has no maximal cones")]

    findings = []
    in_range = True
    for k, cone in enumerate(f.max_cones):
        for i in cone:
            if not 0 <= i < f.n_rays:
                in_range = False
                findings.append(_violation(
                    FindingCode.INDEX_OUT_OF_RANGE,
                    f"cone {k} refers to ray {i}, but there are {f.n_rays} rays",
                    cone=k,
                ))

    for k, cone in enumerate(f.max_cones):
        for l, other in enumerate(f.max_cones):
            if k == l or not cone.issubset(other):
                continue
            # equal cones are reported once, on the later copy
            if len(cone) == len(other) and k < l:
                continue
            findings.append(_violation(
                FindingCode.NON_MAXIMAL_CONE,
                f"cone {k} {list(cone.ray_indices)} is contained in cone {l} {list(other.ray_indices)}",
                cone=k,
            ))
            break

    used = {i for cone in f.max_cones for i in cone}
    for i in range(f.n_rays):
        if i not in used:
            findings.append(_violation(
                FindingCode.UNUSED_RAY, f"ray {i} lies in no maximal cone", ray=i,
            ))

    if in_range and simplicial:
        findings.extend(_check_simplicial(f))
    return findings


def _check_simplicial(f: Fan) -> list[Finding]:
    findings = []
    for k, cone in enumerate(f.max_cones):
        if not is_simplicial_cone(f, cone):
            findings.append(Finding(
                code=FindingCode.NON_SIMPLICIAL,
                severity=Severity.ADVISORY,
                message=f"cone {k} has {len(cone)} linearly dependent rays",
                cone=k,
            ))
    return findings


def validate_fan(f: Fan) -> list[Finding]:
    """Report structural violations and advisory notes for ``f``."""
    if f.rank < 0:
        return [_violation(FindingCode.NEGATIVE_RANK, f"lattice rank {f.rank} is negative")]
    ray_findings = _check_rays(f)
    # cone matrices cannot be formed from rays of the wrong length
    shapes_ok = not any(x.code is FindingCode.DIMENSION_MISMATCH for x in ray_findings)
    findings = ray_findings + _check_cones(f, simplicial=shapes_ok)
    logger.debug("validated fan: %d findings", len(findings))
    return findings


def raise_for_findings(findings: list[Finding]) -> None:
    """Raise the error of the first violation, if any."""
    for finding in findings:
        if finding.is_violation:
            raise _ERRORS[finding.code](finding.message)
