"""
Cone Lattices
=============

For a cone σ, ``L(σ)`` is the dual of ``N ∩ R·σ``. We never separate N from
its dual M: a basis of ``L(σ)`` is a basis of the smallest direct summand of
``Z^r`` containing the cone's ray generators, and a functional on it is
written by its values on that basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from toricbrauer.exceptions import InternalInconsistencyError, OutsideSpanError
from toricbrauer.fans.fan import Cone, Fan
from toricbrauer.linalg import IntMatrix, coordinates_in_basis, saturation_basis


@dataclass(frozen=True)
class LBasis:
    """A chosen basis (columns of an ``r × s`` matrix) of the saturated lattice of a cone."""
    cone: Cone
    basis: IntMatrix

    @property
    def rank(self) -> int:
        return self.basis.cols

    @property
    def ambient_rank(self) -> int:
        return self.basis.rows


# Hook type for swapping in another basis choice (tests re-base at random)
BasisProvider = Callable[[Fan, Cone], LBasis]


def l_basis(f: Fan, c: Cone) -> LBasis:
    """Saturation basis of the sublattice spanned by the rays of ``c``."""
    return LBasis(cone=c, basis=saturation_basis(f.cone_matrix(c)))


def restriction_matrix(big: LBasis, small: LBasis) -> IntMatrix:
    """Matrix of the projection ``L(σ) -> L(τ)`` for a face τ of σ.

    If ``C`` holds the coordinates of the τ-basis in the σ-basis, a functional
    with values φ on the σ-basis takes the values ``Cᵀ φ`` on the τ-basis.
    """
    try:
        C = coordinates_in_basis(big.basis, small.basis)
    except OutsideSpanError as e:
        raise InternalInconsistencyError(
            f"cone {list(small.cone.ray_indices)} is not a face of {list(big.cone.ray_indices)}"
        ) from e
    return C.T
