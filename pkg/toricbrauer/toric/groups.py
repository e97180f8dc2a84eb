"""
Toric Cohomology Groups
=======================

The groups computed from a fan:

1. B(X̃) = H²(X̃, G_m) for an equivariant desingularization X̃
2. the divisor class group Cl(X)
3. the units H⁰(X, G_m) = k* × Z^u (we return u)
4. Pic(X) = H¹(X, G_m) = SF(Δ) / im(M)
5. the relative Brauer group H²(K/X, G_m) = Ȟ¹(Δ, SF) = ker δ¹ / im δ⁰

Functions taking a ``cech`` argument reuse an already assembled complex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from toricbrauer.exceptions import CompositionNonzeroError, InternalInconsistencyError
from toricbrauer.fans.fan import Fan
from toricbrauer.linalg import (
    FinAbGroup,
    IntMatrix,
    cokernel,
    homology,
    invariant_factors,
    rank,
    torsion_chain,
)
from toricbrauer.toric.cech import CechComplex, build_cech
from toricbrauer.toric.lbasis import l_basis


@dataclass(frozen=True)
class BrauerGroup:
    """``(Q/Z)^divisible_rank ⊕ finite``, finite part in invariant-factor form."""
    divisible_rank: int = 0
    finite: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "finite", torsion_chain(self.finite))

    @property
    def is_trivial(self) -> bool:
        return self.divisible_rank == 0 and not self.finite


@dataclass(frozen=True)
class TotalH2:
    """H²(X, G_m) = H²(K/X, G_m) ⊕ H²(X̃, G_m) as ``(Q/Z)^q ⊕ Z^a ⊕ torsion``."""
    divisible_rank: int = 0
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", torsion_chain(self.torsion))

    @classmethod
    def direct_sum(cls, relative: FinAbGroup, desing: BrauerGroup) -> TotalH2:
        return cls(
            divisible_rank=desing.divisible_rank,
            free_rank=relative.free_rank,
            torsion=relative.torsion + desing.finite,
        )

    @property
    def is_trivial(self) -> bool:
        return self.divisible_rank == 0 and self.free_rank == 0 and not self.torsion


def _homology(A: IntMatrix, B: IntMatrix) -> FinAbGroup:
    try:
        return homology(A, B)
    except CompositionNonzeroError as e:
        raise InternalInconsistencyError(str(e)) from e


def class_group(f: Fan) -> FinAbGroup:
    """Cokernel of ``M -> ⊕ Z·ρ_i``, the matrix whose rows are the rays."""
    return cokernel(f.ray_matrix())


def units_rank(f: Fan, cech: Optional[CechComplex] = None) -> int:
    """u with H⁰(X, G_m) = k* × Z^u: the rank of the kernel of φ."""
    cech = cech or build_cech(f)
    return f.rank - rank(cech.phi)


def picard_group(f: Fan, cech: Optional[CechComplex] = None) -> FinAbGroup:
    """Pic(X) = ker δ⁰ / im φ."""
    cech = cech or build_cech(f)
    return _homology(cech.phi, cech.delta0)


def relative_brauer(f: Fan, cech: Optional[CechComplex] = None) -> FinAbGroup:
    """H²(K/X, G_m) = ker δ¹ / im δ⁰."""
    cech = cech or build_cech(f)
    return _homology(cech.delta0, cech.delta1)


def desing_invariants(f: Fan) -> tuple[int, ...]:
    """Invariants a_1, ..., a_r of N / N', N' spanned by the saturated cone lattices."""
    columns = IntMatrix.hstack([l_basis(f, c).basis for c in f.max_cones], rows=f.rank)
    return invariant_factors(columns, pad_to=f.rank)


def desing_brauer(f: Fan) -> BrauerGroup:
    """H²(X̃, G_m) = ⊕_{i=1}^{r-1} Hom(Z/a_i, Q/Z)^{r-i}.

    Hom(Z/a, Q/Z) is 0, Z/a or Q/Z as |a| = 1, |a| > 1 or a = 0.
    """
    a = desing_invariants(f)
    r = f.rank
    divisible = 0
    finite: list[int] = []
    for i in range(1, r):
        a_i, times = a[i - 1], r - i
        if a_i == 0:
            divisible += times
        elif a_i > 1:
            finite.extend([a_i] * times)
    return BrauerGroup(divisible_rank=divisible, finite=tuple(finite))
