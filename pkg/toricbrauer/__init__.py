"""
Toric Brauer
============

Étale cohomology of a toric variety with coefficients in G_m, computed from
its fan by exact integer matrix diagonalization: the units, the divisor
class group, the Picard group and the cohomological Brauer group (split into
its relative part and the Brauer group of a desingularization).
"""

from toricbrauer.fans import Fan, parse_fan, standard_fans
from toricbrauer.toric import CohomologyReport, cohomological_brauer

__all__ = ["CohomologyReport", "Fan", "cohomological_brauer", "parse_fan", "standard_fans"]

__version__ = "0.1.0"
