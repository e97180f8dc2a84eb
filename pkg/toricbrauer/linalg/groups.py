"""
Finitely Generated Abelian Groups
=================================

Groups in invariant-factor form ``Z^r ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k`` with
``t_1 | ... | t_k`` and every ``t_i >= 2``, plus the two ways groups arise
from matrices: cokernels and homology of ``Z^l --A--> Z^m --B--> Z^n``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable

from toricbrauer.exceptions import CompositionNonzeroError, ShapeMismatchError
from toricbrauer.linalg.matrix import IntMatrix
from toricbrauer.linalg.smith import (
    coordinates_in_basis,
    kernel_basis,
    smith_normal_form,
)

logger = logging.getLogger(__name__)


def torsion_chain(orders: Iterable[int]) -> tuple[int, ...]:
    """Invariant factors of ``⊕ Z/o`` for the given cyclic orders.

    Orders of 1 contribute nothing; 0 is not allowed (use a free rank).
    """
    orders = [abs(o) for o in orders]
    if any(o == 0 for o in orders):
        raise ValueError("a cyclic summand of order 0 is free, not torsion")
    orders = [o for o in orders if o != 1]
    if not orders:
        return ()
    d = smith_normal_form(IntMatrix.diagonal(orders, len(orders), len(orders))).invariants
    return tuple(x for x in d if x != 1)


@dataclass(frozen=True)
class FinAbGroup:
    """A finitely generated abelian group in invariant-factor normal form.

    Two groups are isomorphic iff they compare equal.
    """
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(t) for t in self.torsion))
        if self.free_rank < 0:
            raise ValueError(f"free rank must be nonnegative, got {self.free_rank}")
        if any(t < 2 for t in self.torsion):
            raise ValueError(f"torsion invariants must be >= 2, got {self.torsion}")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValueError(f"torsion invariants must form a divisibility chain, got {self.torsion}")

    @classmethod
    def from_invariants(cls, invariants: Iterable[int], generators: int) -> FinAbGroup:
        """``Z^generators`` modulo a relation lattice with the given SNF invariants."""
        invariants = tuple(invariants)
        return cls(
            free_rank=generators - len(invariants),
            torsion=tuple(d for d in invariants if d > 1),
        )

    @classmethod
    def from_cyclic(cls, orders: Iterable[int], free_rank: int = 0) -> FinAbGroup:
        """``Z^free_rank ⊕ (⊕ Z/o)`` for arbitrary (not necessarily chained) orders."""
        return cls(free_rank=free_rank, torsion=torsion_chain(orders))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def order(self) -> int | None:
        """Number of elements, or None when infinite."""
        if self.free_rank:
            return None
        result = 1
        for t in self.torsion:
            result *= t
        return result

    def __add__(self, other: FinAbGroup) -> FinAbGroup:
        """Direct sum."""
        if not isinstance(other, FinAbGroup):
            return NotImplemented
        return FinAbGroup.from_cyclic(self.torsion + other.torsion, self.free_rank + other.free_rank)


def cokernel(S: IntMatrix) -> FinAbGroup:
    """``Z^m / colspace(S)`` for an ``m × n`` matrix ``S``."""
    return FinAbGroup.from_invariants(smith_normal_form(S).invariants, S.rows)


def homology(A: IntMatrix, B: IntMatrix) -> FinAbGroup:
    """``ker(B) / im(A)`` for ``A: Z^l -> Z^m`` and ``B: Z^m -> Z^n`` with ``B · A = 0``.

    A basis K of ker(B) is saturated, so the columns of A have integer
    coordinates C in it; the homology is the cokernel of C.
    """
    if B.cols != A.rows:
        raise ShapeMismatchError(f"cannot compose {B.rows}x{B.cols} after {A.rows}x{A.cols}")
    if not (B @ A).is_zero():
        raise CompositionNonzeroError("B · A is not zero")
    K = kernel_basis(B)
    C = coordinates_in_basis(K, A)
    group = cokernel(C)
    logger.debug(
        "homology of %dx%d after %dx%d: kernel rank %d, result %s",
        B.rows, B.cols, A.rows, A.cols, K.cols, group,
    )
    return group
