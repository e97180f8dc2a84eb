"""
Fans
====

A rational polyhedral fan on ``N_R = R^r`` given by its primitive ray
generators and its maximal cones.

A cone is stored as the set of indices of ALL rays of the fan lying in it.
In a fan two cones meet in a common face, and a face is spanned by the rays
it contains, so intersections are plain set intersections.

These types hold data only; :mod:`toricbrauer.fans.validation` decides
whether a fan is structurally sound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from toricbrauer.exceptions import DuplicateIndexError
from toricbrauer.linalg import IntMatrix, rank, smith_normal_form


@dataclass(frozen=True)
class RayVector:
    """A lattice vector spanning a ray; valid fans use primitive nonzero ones."""
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @property
    def dimension(self) -> int:
        return len(self.coords)

    @property
    def content(self) -> int:
        """gcd of the coordinates (0 for the zero vector)."""
        return math.gcd(*self.coords) if self.coords else 0

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    @property
    def is_primitive(self) -> bool:
        return self.content == 1

    def primitive(self) -> RayVector:
        """The primitive generator of the same ray."""
        g = self.content
        if g == 0:
            raise ValueError("the zero vector spans no ray")
        return RayVector(tuple(c // g for c in self.coords))


@dataclass(frozen=True)
class Cone:
    """A cone of a fan, as a strictly increasing tuple of ray indices.

    The empty tuple is the zero cone ``{0}``.
    """
    ray_indices: tuple[int, ...] = ()

    def __post_init__(self):
        indices = tuple(int(i) for i in self.ray_indices)
        if len(set(indices)) != len(indices):
            raise DuplicateIndexError(f"cone lists a ray twice: {list(indices)}")
        object.__setattr__(self, "ray_indices", tuple(sorted(indices)))

    @property
    def is_zero(self) -> bool:
        return not self.ray_indices

    def __len__(self) -> int:
        return len(self.ray_indices)

    def __iter__(self):
        return iter(self.ray_indices)

    def __and__(self, other: Cone) -> Cone:
        return cone_intersection(self, other)

    def issubset(self, other: Cone) -> bool:
        return set(self.ray_indices) <= set(other.ray_indices)


def cone_intersection(a: Cone, b: Cone) -> Cone:
    """``a ∩ b`` for cones of the same fan."""
    return Cone(tuple(set(a.ray_indices) & set(b.ray_indices)))


@dataclass(frozen=True)
class Fan:
    """A fan in the lattice ``N = Z^rank``."""
    rank: int
    rays: tuple[RayVector, ...] = ()
    max_cones: tuple[Cone, ...] = field(default=(Cone(),))

    def __post_init__(self):
        object.__setattr__(
            self, "rays", tuple(r if isinstance(r, RayVector) else RayVector(tuple(r)) for r in self.rays)
        )
        object.__setattr__(
            self, "max_cones", tuple(c if isinstance(c, Cone) else Cone(tuple(c)) for c in self.max_cones)
        )

    @classmethod
    def build(cls, rank: int, rays: Iterable[Sequence[int]], max_cones: Iterable[Sequence[int]]) -> Fan:
        """Convenience constructor from plain lists."""
        return cls(
            rank=rank,
            rays=tuple(RayVector(tuple(r)) for r in rays),
            max_cones=tuple(Cone(tuple(c)) for c in max_cones),
        )

    @property
    def n_rays(self) -> int:
        return len(self.rays)

    def ray_matrix(self) -> IntMatrix:
        """The ``n × r`` matrix whose rows are the ray generators."""
        return IntMatrix([r.coords for r in self.rays], cols=self.rank)

    def cone_matrix(self, cone: Cone) -> IntMatrix:
        """The ``r × k`` matrix whose columns are the generators of the cone's rays."""
        return IntMatrix.from_columns([self.rays[i].coords for i in cone], rows=self.rank)

    def to_lists(self) -> dict:
        return {
            "rank": self.rank,
            "rays": [list(r.coords) for r in self.rays],
            "max_cones": [list(c.ray_indices) for c in self.max_cones],
        }


# =============================================================================
# Derived fans and cone properties
# =============================================================================

def one_skeleton(f: Fan) -> Fan:
    """The fan ``{0, ρ_1, ..., ρ_n}`` made of the rays of ``f`` alone.

    It has the same class group as ``f``.
    """
    cones = tuple(Cone((i,)) for i in range(f.n_rays)) or (Cone(),)
    return Fan(rank=f.rank, rays=f.rays, max_cones=cones)


def is_simplicial_cone(f: Fan, cone: Cone) -> bool:
    """True when the cone's rays are linearly independent."""
    return rank(f.cone_matrix(cone)) == len(cone)


def is_smooth_cone(f: Fan, cone: Cone) -> bool:
    """True when the cone's rays are part of a basis of ``N``."""
    form = smith_normal_form(f.cone_matrix(cone))
    return form.rank == len(cone) and all(d == 1 for d in form.invariants)


def is_simplicial(f: Fan) -> bool:
    return all(is_simplicial_cone(f, c) for c in f.max_cones)


def is_smooth(f: Fan) -> bool:
    return all(is_smooth_cone(f, c) for c in f.max_cones)
