"""
Smith Normal Form
=================

Diagonalization of integer matrices by unimodular row and column operations,
and the lattice constructions that fall out of it:

- simultaneous bases: the saturation of a column space,
- kernel bases (always saturated),
- coordinates of vectors in a basis of a direct summand.

For ``S`` an ``m × n`` matrix we find unimodular ``X`` (``left``) and ``Y``
(``right``) with ``X S Y = diag(d_1, ..., d_s, 0, ..., 0)`` and
``d_1 | d_2 | ... | d_s``, every ``d_i > 0``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from toricbrauer.config import settings
from toricbrauer.exceptions import (
    InternalInconsistencyError,
    NotSaturatedError,
    OutsideSpanError,
    PaddingError,
    ShapeMismatchError,
)
from toricbrauer.linalg.matrix import IntMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SmithForm:
    """Result of :func:`smith_normal_form`.

    Attributes:
        left: unimodular ``m × m`` matrix X
        right: unimodular ``n × n`` matrix Y
        invariants: d_1 | ... | d_s, all positive
    """
    left: IntMatrix
    right: IntMatrix
    invariants: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariants)

    def diagonal(self) -> IntMatrix:
        """The matrix ``left · S · right``."""
        return IntMatrix.diagonal(self.invariants, self.left.rows, self.right.rows)


# =============================================================================
# Diagonalization
# =============================================================================

class _Reducer:
    """Working state of one diagonalization.

    Keeps ``L · S · R == D`` after every elementary operation.
    """

    def __init__(self, S: IntMatrix):
        self.m, self.n = S.shape
        self.D = S.to_array()
        self.L = np.eye(self.m, dtype=object)
        self.R = np.eye(self.n, dtype=object)

    # Elementary operations, applied to D and mirrored on L or R.

    def swap_rows(self, i: int, k: int) -> None:
        if i != k:
            self.D[[i, k]] = self.D[[k, i]]
            self.L[[i, k]] = self.L[[k, i]]

    def swap_cols(self, j: int, k: int) -> None:
        if j != k:
            self.D[:, [j, k]] = self.D[:, [k, j]]
            self.R[:, [j, k]] = self.R[:, [k, j]]

    def add_row(self, target: int, source: int, q: int) -> None:
        """row[target] += q · row[source]"""
        self.D[target] += q * self.D[source]
        self.L[target] += q * self.L[source]

    def add_col(self, target: int, source: int, q: int) -> None:
        """col[target] += q · col[source]"""
        self.D[:, target] += q * self.D[:, source]
        self.R[:, target] += q * self.R[:, source]

    def negate_row(self, i: int) -> None:
        self.D[i] = -self.D[i]
        self.L[i] = -self.L[i]

    # Pivot handling

    def _min_nonzero(self, block: np.ndarray, row0: int, col0: int) -> tuple[int, int] | None:
        """Position in D of the first smallest nonzero entry of ``block`` (row-major)."""
        magnitudes = np.abs(block)
        cells = np.argwhere(magnitudes != 0)
        if not len(cells):
            return None
        k = int(np.argmin(magnitudes[cells[:, 0], cells[:, 1]]))
        return row0 + int(cells[k, 0]), col0 + int(cells[k, 1])

    def _move_to_pivot(self, t: int, cell: tuple[int, int]) -> None:
        self.swap_rows(t, cell[0])
        self.swap_cols(t, cell[1])

    def _clear_cross(self, t: int) -> bool:
        """Reduce row t and column t modulo the pivot; True if both are now zero."""
        p = self.D[t, t]
        q = self.D[t + 1:, t] // p
        if np.any(q != 0):
            self.D[t + 1:] -= np.outer(q, self.D[t])
            self.L[t + 1:] -= np.outer(q, self.L[t])
        q = self.D[t, t + 1:] // p
        if np.any(q != 0):
            self.D[:, t + 1:] -= np.outer(self.D[:, t], q)
            self.R[:, t + 1:] -= np.outer(self.R[:, t], q)
        return not np.any(self.D[t + 1:, t] != 0) and not np.any(self.D[t, t + 1:] != 0)

    def _non_divisible(self, t: int) -> int | None:
        """A row below t holding an entry the pivot does not divide."""
        rest = self.D[t + 1:, t + 1:] % self.D[t, t]
        rows = np.flatnonzero(np.any(rest != 0, axis=1))
        return t + 1 + int(rows[0]) if len(rows) else None

    def run(self) -> int:
        """Diagonalize in place; returns the rank."""
        t = 0
        while t < min(self.m, self.n):
            pivot = self._min_nonzero(self.D[t:, t:], t, t)
            if pivot is None:
                break
            self._move_to_pivot(t, pivot)
            while True:
                if not self._clear_cross(t):
                    # remainders are smaller than the pivot: promote the smallest
                    below = self._min_nonzero(self.D[t + 1:, t:t + 1], t + 1, t)
                    right = self._min_nonzero(self.D[t:t + 1, t + 1:], t, t + 1)
                    if below is None or (right is not None and abs(self.D[right]) < abs(self.D[below])):
                        below = right
                    self._move_to_pivot(t, below)
                    continue
                offending = self._non_divisible(t)
                if offending is None:
                    break
                # gcd repair: the pivot row picks up an entry it cannot divide
                self.add_row(t, offending, 1)
            if self.D[t, t] < 0:
                self.negate_row(t)
            t += 1
        return t


def smith_normal_form(S: IntMatrix) -> SmithForm:
    """Diagonalize ``S``: ``left · S · right = diag(invariants, 0, ...)``."""
    reducer = _Reducer(S)
    rank = reducer.run()
    invariants = tuple(int(reducer.D[i, i]) for i in range(rank))
    form = SmithForm(
        left=IntMatrix._wrap(reducer.L),
        right=IntMatrix._wrap(reducer.R),
        invariants=invariants,
    )
    if settings.verify_transforms and form.left @ S @ form.right != form.diagonal():
        raise InternalInconsistencyError("Smith decomposition does not reproduce its diagonal")
    logger.debug("SNF of %dx%d matrix: rank %d, invariants %s", S.rows, S.cols, rank, invariants)
    return form


def rank(S: IntMatrix) -> int:
    """Rational rank of ``S``."""
    return smith_normal_form(S).rank


def invariant_factors(S: IntMatrix, pad_to: int) -> tuple[int, ...]:
    """Invariant factors of ``S`` padded with trailing zeros to length ``pad_to``."""
    d = smith_normal_form(S).invariants
    if pad_to < len(d):
        raise PaddingError(f"cannot pad {len(d)} invariant factors to length {pad_to}")
    return d + (0,) * (pad_to - len(d))


# =============================================================================
# Lattice constructions
# =============================================================================

def kernel_basis(S: IntMatrix) -> IntMatrix:
    """Basis of ``ker(S) ∩ Z^n`` as the columns of an ``n × (n - s)`` matrix.

    These are the trailing columns of ``right``; being part of a unimodular
    matrix they span a saturated sublattice.
    """
    form = smith_normal_form(S)
    return form.right.take_columns(range(form.rank, S.cols))


def saturation_basis(S: IntMatrix) -> IntMatrix:
    """Basis of the smallest direct summand of ``Z^m`` containing ``colspace(S)``.

    The columns are ``x_k = (S · right)[:, k] / d_k`` for ``k < s``, i.e. the
    leading columns of ``left^-1``.
    """
    form = smith_normal_form(S)
    SY = (S @ form.right).to_array()
    for k, d in enumerate(form.invariants):
        col = SY[:, k]
        if any(v % d for v in col):
            raise InternalInconsistencyError("column of S·Y not divisible by its invariant factor")
        SY[:, k] = [v // d for v in col]
    return IntMatrix._wrap(SY[:, : form.rank])


def coordinates_in_basis(B: IntMatrix, A: IntMatrix) -> IntMatrix:
    """Solve ``B · C = A`` for ``C``.

    ``B`` must be an ``m × s`` basis of a direct summand (rank ``s`` and all
    invariant factors 1). With ``left · B · right = [I_s; 0]`` we get
    ``C = right · (left · A)[:s]``; the remaining rows of ``left · A`` vanish
    exactly when every column of ``A`` lies in the span of ``B``.
    """
    if A.rows != B.rows:
        raise ShapeMismatchError(f"basis has {B.rows} rows but targets have {A.rows}")
    form = smith_normal_form(B)
    s = B.cols
    if form.rank != s or any(d != 1 for d in form.invariants):
        raise NotSaturatedError(
            f"columns do not form a basis of a direct summand (invariants {form.invariants}, {s} columns)"
        )
    XA = form.left @ A
    if not XA.take_rows(range(s, XA.rows)).is_zero():
        raise OutsideSpanError("some column lies outside the span of the basis")
    return form.right @ XA.take_rows(range(s))
