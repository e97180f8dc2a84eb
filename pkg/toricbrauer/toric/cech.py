"""
Čech Complex
============

The Čech complex of the presheaf L for the cover of a fan by its maximal
cones σ_1, ..., σ_m:

    ⊕_i L(σ_i) --δ⁰--> ⊕_{i<j} L(σ_ij) --δ¹--> ⊕_{i<j<k} L(σ_ijk)

with (δ⁰f)_ij = f_j|σ_ij − f_i|σ_ij and (δ¹g)_ijk = g_jk − g_ik + g_ij,
every term restricted to the smaller cone. All pairs and triples are used,
including those meeting only in the zero cone (rank-0 blocks).

``phi`` is the map M -> ⊕_i L(σ_i) restricting a character to each cone.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from toricbrauer.exceptions import InternalInconsistencyError
from toricbrauer.fans.fan import Cone, Fan
from toricbrauer.linalg import IntMatrix
from toricbrauer.toric.lbasis import BasisProvider, LBasis, l_basis, restriction_matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CechComplex:
    """Differentials of the Čech complex, one block per cone (pair, triple)."""
    rank: int
    cones: tuple[Cone, ...]
    pair_index: tuple[tuple[int, int], ...]
    triple_index: tuple[tuple[int, int, int], ...]
    c0_bases: tuple[LBasis, ...]
    c1_bases: tuple[LBasis, ...]
    c2_bases: tuple[LBasis, ...]
    delta0: IntMatrix
    delta1: IntMatrix
    phi: IntMatrix

    @property
    def c0_blocks(self) -> tuple[int, ...]:
        return tuple(b.rank for b in self.c0_bases)

    @property
    def c1_blocks(self) -> tuple[int, ...]:
        return tuple(b.rank for b in self.c1_bases)

    @property
    def c2_blocks(self) -> tuple[int, ...]:
        return tuple(b.rank for b in self.c2_bases)

    @property
    def dims(self) -> tuple[int, int, int]:
        return (sum(self.c0_blocks), sum(self.c1_blocks), sum(self.c2_blocks))


def _offsets(blocks: tuple[int, ...]) -> list[int]:
    out = [0]
    for b in blocks:
        out.append(out[-1] + b)
    return out


def build_cech(f: Fan, provider: BasisProvider = l_basis) -> CechComplex:
    """Assemble δ⁰, δ¹ and φ for the fan ``f``.

    ``provider`` picks the basis of each L(σ); any choice gives the same
    cohomology. Raises InternalInconsistencyError when δ¹δ⁰ or δ⁰φ is
    nonzero, which only happens for input that is not a fan.
    """
    started = time.perf_counter()
    cones = f.max_cones
    pairs = tuple(combinations(range(len(cones)), 2))
    triples = tuple(combinations(range(len(cones)), 3))

    cache: dict[Cone, LBasis] = {}

    def basis(c: Cone) -> LBasis:
        if c not in cache:
            cache[c] = provider(f, c)
        return cache[c]

    restrictions: dict[tuple[Cone, Cone], IntMatrix] = {}

    def restrict(big: LBasis, small: LBasis) -> np.ndarray:
        key = (big.cone, small.cone)
        if key not in restrictions:
            restrictions[key] = restriction_matrix(big, small)
        return restrictions[key].array

    zero = basis(Cone())
    meets = {(i, j): cones[i] & cones[j] for i, j in pairs}
    c0 = tuple(basis(c) for c in cones)
    c1 = tuple(basis(meets[pair]) for pair in pairs)
    # a triple meeting in {0} contributes an empty block
    c2 = tuple(
        zero if meets[(i, j)].is_zero else basis(meets[(i, j)] & cones[k])
        for i, j, k in triples
    )

    off0 = _offsets(tuple(b.rank for b in c0))
    off1 = _offsets(tuple(b.rank for b in c1))
    off2 = _offsets(tuple(b.rank for b in c2))

    d0 = np.zeros((off1[-1], off0[-1]), dtype=object)
    for p, (i, j) in enumerate(pairs):
        if c1[p].rank == 0:
            continue
        rows = slice(off1[p], off1[p + 1])
        d0[rows, off0[j]:off0[j + 1]] += restrict(c0[j], c1[p])
        d0[rows, off0[i]:off0[i + 1]] -= restrict(c0[i], c1[p])

    pair_pos = {pair: p for p, pair in enumerate(pairs)}
    d1 = np.zeros((off2[-1], off1[-1]), dtype=object)
    for t, (i, j, k) in enumerate(triples):
        if c2[t].rank == 0:
            continue
        rows = slice(off2[t], off2[t + 1])
        for (a, b), sign in (((j, k), 1), ((i, k), -1), ((i, j), 1)):
            p = pair_pos[(a, b)]
            d1[rows, off1[p]:off1[p + 1]] += sign * restrict(c1[p], c2[t])

    phi = IntMatrix.vstack([b.basis.T for b in c0], cols=f.rank)

    complex_ = CechComplex(
        rank=f.rank,
        cones=cones,
        pair_index=pairs,
        triple_index=triples,
        c0_bases=c0,
        c1_bases=c1,
        c2_bases=c2,
        delta0=IntMatrix._wrap(d0),
        delta1=IntMatrix._wrap(d1),
        phi=phi,
    )

    if not (complex_.delta1 @ complex_.delta0).is_zero():
        raise InternalInconsistencyError("δ¹ · δ⁰ is not zero: the cones do not form a fan")
    if not (complex_.delta0 @ complex_.phi).is_zero():
        raise InternalInconsistencyError("δ⁰ · φ is not zero: restrictions are incompatible")

    logger.debug(
        "Čech complex: %d cones, %d pairs, %d triples, dims %s (%.3fs)",
        len(cones), len(pairs), len(triples), complex_.dims, time.perf_counter() - started,
    )
    return complex_
