"""Exact integer linear algebra: Smith normal form, lattices, homology."""

from toricbrauer.linalg.groups import FinAbGroup, cokernel, homology, torsion_chain
from toricbrauer.linalg.matrix import IntMatrix
from toricbrauer.linalg.smith import (
    SmithForm,
    coordinates_in_basis,
    invariant_factors,
    kernel_basis,
    rank,
    saturation_basis,
    smith_normal_form,
)

__all__ = [
    "FinAbGroup",
    "IntMatrix",
    "SmithForm",
    "cokernel",
    "coordinates_in_basis",
    "homology",
    "invariant_factors",
    "kernel_basis",
    "rank",
    "saturation_basis",
    "smith_normal_form",
    "torsion_chain",
]
