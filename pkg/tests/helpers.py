"""Shared test oracles and fan builders."""

from __future__ import annotations

import math
import random
from itertools import combinations

import sympy

from toricbrauer.fans import Fan, standard_fans
from toricbrauer.linalg import FinAbGroup, IntMatrix
from toricbrauer.toric import BrauerGroup, CohomologyReport, LBasis, TotalH2, l_basis


# =============================================================================
# Exact arithmetic oracles (independent of the Smith normal form code)
# =============================================================================

def det(rows: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination (Bareiss)."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def minors_gcd(m: IntMatrix, k: int) -> int:
    """gcd of all k×k minors."""
    rows = m.to_list()
    g = 0
    for ri in combinations(range(m.rows), k):
        for ci in combinations(range(m.cols), k):
            g = math.gcd(g, det([[rows[i][j] for j in ci] for i in ri]))
    return g


def qrank(m: IntMatrix) -> int:
    """Rank over Q."""
    if m.rows == 0 or m.cols == 0:
        return 0
    return sympy.Matrix(m.to_list()).rank()


def qdet(m: IntMatrix) -> int:
    if m.rows == 0:
        return 1
    return int(sympy.Matrix(m.to_list()).det())


# =============================================================================
# Random data
# =============================================================================

def random_matrix(rng: random.Random, rows: int, cols: int, bound: int = 9) -> IntMatrix:
    return IntMatrix([[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)], cols=cols)


def random_unimodular(rng: random.Random, n: int, steps: int | None = None) -> IntMatrix:
    """Product of random elementary matrices."""
    a = [[int(i == j) for j in range(n)] for i in range(n)]
    if n == 0:
        return IntMatrix([], cols=0)
    for _ in range(steps if steps is not None else 3 * n):
        kind = rng.randrange(3)
        i = rng.randrange(n)
        if kind == 0 and n > 1:
            j = rng.choice([x for x in range(n) if x != i])
            q = rng.choice([-2, -1, 1, 2])
            a[i] = [x + q * y for x, y in zip(a[i], a[j])]
        elif kind == 1:
            j = rng.randrange(n)
            a[i], a[j] = a[j], a[i]
        else:
            a[i] = [-x for x in a[i]]
    return IntMatrix(a, cols=n)


def random_plane_fan(rng: random.Random, extra_rays: int) -> Fan:
    """A complete simplicial fan in Z^2: the coordinate rays plus random primitive rays."""
    rays = {(1, 0), (0, 1), (-1, 0), (0, -1)}
    while len(rays) < 4 + extra_rays:
        x, y = rng.randint(-5, 5), rng.randint(-5, 5)
        g = math.gcd(x, y)
        if g:
            rays.add((x // g, y // g))
    ordered = sorted(rays, key=lambda v: math.atan2(v[1], v[0]))
    n = len(ordered)
    return Fan.build(2, ordered, [[i, (i + 1) % n] for i in range(n)])


def product_fan(f: Fan, g: Fan) -> Fan:
    """The product fan in Z^(r+s): cones σ × τ."""
    rays = [r.coords + (0,) * g.rank for r in f.rays] + [(0,) * f.rank + r.coords for r in g.rays]
    n = f.n_rays
    cones = [list(c.ray_indices) + [n + i for i in d.ray_indices] for c in f.max_cones for d in g.max_cones]
    return Fan.build(f.rank + g.rank, rays, cones)


def transform_fan(f: Fan, U: IntMatrix) -> Fan:
    """Apply the lattice automorphism U to every ray."""
    rays = [(U @ IntMatrix.from_columns([r.coords], rows=f.rank)).column(0) for r in f.rays]
    return Fan.build(f.rank, rays, [c.ray_indices for c in f.max_cones])


def relabel_fan(f: Fan, rng: random.Random) -> Fan:
    """Shuffle the ray list and the order of the maximal cones."""
    order = list(range(f.n_rays))
    rng.shuffle(order)
    new_index = {old: new for new, old in enumerate(order)}
    rays = [f.rays[old].coords for old in order]
    cones = [[new_index[i] for i in c] for c in f.max_cones]
    rng.shuffle(cones)
    return Fan.build(f.rank, rays, cones)


def rebasing_provider(rng: random.Random):
    """Basis provider that re-bases every saturation basis by a random unimodular matrix."""
    def provider(f: Fan, c) -> LBasis:
        lb = l_basis(f, c)
        return LBasis(cone=c, basis=lb.basis @ random_unimodular(rng, lb.rank))
    return provider


# =============================================================================
# Golden fans
# =============================================================================

def _report(units, cl, pic, rel=FinAbGroup(), desing=BrauerGroup()) -> CohomologyReport:
    return CohomologyReport(
        units_rank=units,
        class_group=cl,
        picard=pic,
        relative_brauer=rel,
        desing_brauer=desing,
        total_h2=TotalH2.direct_sum(rel, desing),
    )


Z = FinAbGroup(free_rank=1)
Z2 = FinAbGroup(free_rank=2)
ZERO = FinAbGroup()


def cyclic(n: int) -> FinAbGroup:
    return FinAbGroup(torsion=(n,))


# name -> (fan, expected report); values derived by hand in the test modules
GOLDEN: dict[str, tuple[Fan, CohomologyReport]] = {
    "P2": (standard_fans("projective", [2]), _report(0, Z, Z)),
    "P1xP1": (standard_fans("p1xp1"), _report(0, Z2, Z2)),
    "F1": (standard_fans("hirzebruch", [1]), _report(0, Z2, Z2)),
    "F2": (standard_fans("hirzebruch", [2]), _report(0, Z2, Z2)),
    "F3": (standard_fans("hirzebruch", [3]), _report(0, Z2, Z2)),
    "torus1": (standard_fans("torus", [1]), _report(1, ZERO, ZERO)),
    "torus2": (standard_fans("torus", [2]), _report(2, ZERO, ZERO, desing=BrauerGroup(1))),
    "torus3": (standard_fans("torus", [3]), _report(3, ZERO, ZERO, desing=BrauerGroup(3))),
    "A2/mu2": (standard_fans("quotient_cone", [1, 2]), _report(0, cyclic(2), ZERO)),
    "A2/mu3": (standard_fans("quotient_cone", [1, 3]), _report(0, cyclic(3), ZERO)),
    "A2/mu4": (standard_fans("quotient_cone", [1, 4]), _report(0, cyclic(4), ZERO)),
    "A2/mu5": (standard_fans("quotient_cone", [1, 5]), _report(0, cyclic(5), ZERO)),
    "P(1,1,2)": (Fan.build(2, [[1, 0], [0, 1], [-1, -2]], [[0, 1], [1, 2], [0, 2]]), _report(0, Z, Z)),
    "A1xGm": (Fan.build(2, [[1, 0]], [[0]]), _report(1, ZERO, ZERO)),
    "A2": (standard_fans("affine_plane"), _report(0, ZERO, ZERO)),
}


def random_fans(seed: int, planes: int = 70, products: int = 30) -> list[Fan]:
    """Complete plane fans, and their products with the fan of P^1."""
    rng = random.Random(seed)
    p1 = standard_fans("projective", [1])
    fans = [random_plane_fan(rng, rng.randint(0, 3)) for _ in range(planes)]
    fans += [product_fan(random_plane_fan(rng, rng.randint(0, 1)), p1) for _ in range(products)]
    return fans


def sub_fan(f: Fan, rng: random.Random) -> Fan:
    """A proper nonempty subset of the maximal cones, with unused rays dropped.

    Cones of a pure fan never contain each other, so the result is again a fan.
    """
    k = rng.randint(1, max(1, len(f.max_cones) - 1))
    chosen = rng.sample(list(f.max_cones), k)
    used = sorted({i for c in chosen for i in c})
    new_index = {old: new for new, old in enumerate(used)}
    return Fan.build(f.rank, [f.rays[i].coords for i in used], [[new_index[i] for i in c] for c in chosen])
