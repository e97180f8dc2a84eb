"""Toric pipeline: cone lattices, the Čech complex and the cohomology groups."""

from toricbrauer.toric.cech import CechComplex, build_cech
from toricbrauer.toric.groups import (
    BrauerGroup,
    TotalH2,
    class_group,
    desing_brauer,
    desing_invariants,
    picard_group,
    relative_brauer,
    units_rank,
)
from toricbrauer.toric.lbasis import LBasis, l_basis, restriction_matrix
from toricbrauer.toric.report import CohomologyReport, cohomological_brauer

__all__ = [
    "BrauerGroup",
    "CechComplex",
    "CohomologyReport",
    "LBasis",
    "TotalH2",
    "build_cech",
    "class_group",
    "cohomological_brauer",
    "desing_brauer",
    "desing_invariants",
    "l_basis",
    "picard_group",
    "relative_brauer",
    "restriction_matrix",
    "units_rank",
]
