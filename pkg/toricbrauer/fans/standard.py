"""
Standard Fans
=============

Generators for the fans used as a test corpus and by ``gen``:

- projective r        P^r
- torus r             the torus (G_m)^r, fan {0}
- affine_plane        A^2
- quotient_cone a b   the cone on (1,0), (a,b): A^2 / (Z/b)
- hirzebruch a        the Hirzebruch surface F_a
- weighted w0 w1 w2   the weighted projective plane P(w0, w1, w2)
- p1xp1               P^1 × P^1

Usage:
    from toricbrauer.fans.standard import standard_fans
    fan = standard_fans("projective", [2])
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import Callable, Sequence

from toricbrauer.exceptions import BadParamsError, UnknownGeneratorError
from toricbrauer.fans.fan import Fan
from toricbrauer.linalg import IntMatrix, kernel_basis


def _expect(name: str, params: Sequence[int], count: int) -> None:
    if len(params) != count:
        raise BadParamsError(f"{name} takes {count} parameter(s), got {len(params)}")


def _projective(params: Sequence[int]) -> Fan:
    _expect("projective", params, 1)
    (r,) = params
    if r < 1:
        raise BadParamsError(f"projective space needs dimension >= 1, got {r}")
    rays = [[int(i == j) for j in range(r)] for i in range(r)] + [[-1] * r]
    cones = [list(c) for c in combinations(range(r + 1), r)]
    return Fan.build(r, rays, cones)


def _torus(params: Sequence[int]) -> Fan:
    _expect("torus", params, 1)
    (r,) = params
    if r < 0:
        raise BadParamsError(f"torus rank must be >= 0, got {r}")
    return Fan.build(r, [], [[]])


def _affine_plane(params: Sequence[int]) -> Fan:
    _expect("affine_plane", params, 0)
    return Fan.build(2, [[1, 0], [0, 1]], [[0, 1]])


def _quotient_cone(params: Sequence[int]) -> Fan:
    _expect("quotient_cone", params, 2)
    a, b = params
    if b < 1:
        raise BadParamsError(f"quotient_cone needs b >= 1, got {b}")
    if math.gcd(a, b) != 1:
        raise BadParamsError(f"quotient_cone needs gcd(a, b) = 1, got a={a}, b={b}")
    return Fan.build(2, [[1, 0], [a, b]], [[0, 1]])


def _hirzebruch(params: Sequence[int]) -> Fan:
    _expect("hirzebruch", params, 1)
    (a,) = params
    if a < 0:
        raise BadParamsError(f"hirzebruch needs a >= 0, got {a}")
    rays = [[1, 0], [0, 1], [-1, a], [0, -1]]
    return Fan.build(2, rays, [[0, 1], [1, 2], [2, 3], [0, 3]])


def _weighted(params: Sequence[int]) -> Fan:
    """Rays are the rows of a kernel basis of (w0 w1 w2).

    With pairwise coprime weights these are primitive, satisfy
    sum w_i v_i = 0 and generate Z^2.
    """
    _expect("weighted", params, 3)
    if any(w < 1 for w in params):
        raise BadParamsError(f"weights must be positive, got {list(params)}")
    for u, v in combinations(params, 2):
        if math.gcd(u, v) != 1:
            raise BadParamsError(f"weights must be pairwise coprime, got {list(params)}")
    K = kernel_basis(IntMatrix([list(params)]))
    rays = [list(K.row(i)) for i in range(3)]
    return Fan.build(2, rays, [[0, 1], [1, 2], [0, 2]])


def _p1xp1(params: Sequence[int]) -> Fan:
    _expect("p1xp1", params, 0)
    rays = [[1, 0], [0, 1], [-1, 0], [0, -1]]
    return Fan.build(2, rays, [[0, 1], [1, 2], [2, 3], [0, 3]])


GENERATORS: dict[str, Callable[[Sequence[int]], Fan]] = {
    "projective": _projective,
    "torus": _torus,
    "affine_plane": _affine_plane,
    "quotient_cone": _quotient_cone,
    "hirzebruch": _hirzebruch,
    "weighted": _weighted,
    "p1xp1": _p1xp1,
}


def standard_fans(name: str, params: Sequence[int] = ()) -> Fan:
    """
    Build a standard fan by name.

    Args:
        name: one of the keys of GENERATORS
        params: integer parameters of the generator

    Returns:
        The generated Fan
    """
    try:
        generator = GENERATORS[name]
    except KeyError:
        raise UnknownGeneratorError(
            f"Unknown fan generator: {name} (available: {', '.join(GENERATORS)})"
        ) from None
    return generator([int(p) for p in params])
