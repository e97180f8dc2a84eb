"""Text notation for groups: ``Z^a (+) Z/d1 (+) ... (+) (Q/Z)^q``, ``0`` when trivial."""

from __future__ import annotations

from toricbrauer.cli.schemas import ALL_GROUPS
from toricbrauer.fans.validation import Finding
from toricbrauer.linalg import FinAbGroup
from toricbrauer.toric import BrauerGroup, CohomologyReport, TotalH2


def _power(symbol: str, exponent: int) -> list[str]:
    if exponent == 0:
        return []
    if exponent == 1:
        return [symbol]
    if "/" in symbol:
        symbol = f"({symbol})"
    return [f"{symbol}^{exponent}"]


def group_notation(free_rank: int = 0, torsion: tuple[int, ...] = (), divisible_rank: int = 0) -> str:
    factors = _power("Z", free_rank) + [f"Z/{t}" for t in torsion] + _power("Q/Z", divisible_rank)
    return " (+) ".join(factors) if factors else "0"


def format_group(g: FinAbGroup | BrauerGroup | TotalH2) -> str:
    if isinstance(g, FinAbGroup):
        return group_notation(g.free_rank, g.torsion)
    if isinstance(g, BrauerGroup):
        return group_notation(torsion=g.finite, divisible_rank=g.divisible_rank)
    return group_notation(g.free_rank, g.torsion, g.divisible_rank)


def format_report(report: CohomologyReport, groups: tuple[str, ...] = ALL_GROUPS) -> str:
    lines = {
        "units": f"Units rank {report.units_rank}",
        "cl": f"Cl = {format_group(report.class_group)}",
        "pic": f"Pic = {format_group(report.picard)}",
        "relbrauer": f"H2(K/X) = {format_group(report.relative_brauer)}",
        "desingbrauer": f"B(X~) = {format_group(report.desing_brauer)}",
        "h2": f"H2(X) = {format_group(report.total_h2)}",
    }
    return "\n".join(lines[g] for g in ALL_GROUPS if g in groups)


def format_findings(findings: list[Finding]) -> str:
    if not findings:
        return "ok: no findings"
    return "\n".join(str(f) for f in findings)
