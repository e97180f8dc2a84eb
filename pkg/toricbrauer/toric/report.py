"""
Cohomology Report
=================

Public interface of the pipeline: all five groups of a fan, plus H²(X, G_m)
assembled from the split-exact sequence

    0 -> H²(K/X, G_m) -> H²(X, G_m) -> H²(X̃, G_m) -> 0
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from toricbrauer.fans.fan import Fan
from toricbrauer.linalg import FinAbGroup
from toricbrauer.toric.cech import build_cech
from toricbrauer.toric.groups import (
    BrauerGroup,
    TotalH2,
    class_group,
    desing_brauer,
    picard_group,
    relative_brauer,
    units_rank,
)
from toricbrauer.toric.lbasis import BasisProvider, l_basis

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CohomologyReport:
    """Everything computed for one fan."""
    units_rank: int
    class_group: FinAbGroup
    picard: FinAbGroup
    relative_brauer: FinAbGroup
    desing_brauer: BrauerGroup
    total_h2: TotalH2


def cohomological_brauer(f: Fan, provider: BasisProvider = l_basis) -> CohomologyReport:
    """
    Compute the units, class group, Picard group and Brauer groups of a fan.

    Args:
        f: a structurally valid fan
        provider: basis choice for the cone lattices (defaults to saturation bases)

    Returns:
        CohomologyReport with H²(X, G_m) = H²(K/X, G_m) ⊕ H²(X̃, G_m)
    """
    cech = build_cech(f, provider=provider)

    relative = relative_brauer(f, cech)
    desing = desing_brauer(f)
    report = CohomologyReport(
        units_rank=units_rank(f, cech),
        class_group=class_group(f),
        picard=picard_group(f, cech),
        relative_brauer=relative,
        desing_brauer=desing,
        total_h2=TotalH2.direct_sum(relative, desing),
    )
    logger.info("computed report for rank %d fan with %d rays", f.rank, f.n_rays)
    return report
