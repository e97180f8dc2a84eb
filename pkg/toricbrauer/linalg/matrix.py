"""
Integer Matrices
================

Dense matrices of arbitrary-precision integers.

Entries live in a numpy array of ``dtype=object`` holding Python ints, so
products and row operations never overflow. Instances are immutable: the
backing array is flagged read-only and every operation returns a new matrix.
Zero-dimensional shapes (0×n, m×0) are legal everywhere.
"""

from __future__ import annotations

import operator
from typing import Iterable, Sequence

import numpy as np

from toricbrauer.exceptions import ShapeMismatchError


def _as_int(value) -> int:
    """Coerce a matrix entry to a Python int, refusing bools and floats."""
    if isinstance(value, (bool, np.bool_)):
        raise TypeError(f"matrix entries must be integers, got {value!r}")
    try:
        return int(operator.index(value))
    except TypeError:
        raise TypeError(f"matrix entries must be integers, got {value!r}") from None


class IntMatrix:
    """An immutable ``rows × cols`` integer matrix."""

    __slots__ = ("_a",)

    def __init__(self, rows: Iterable[Iterable[int]], cols: int | None = None):
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ShapeMismatchError("cols must be given for a matrix with no rows")
            cols = len(rows[0])
        a = np.zeros((len(rows), cols), dtype=object)
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise ShapeMismatchError(f"row {i} has {len(row)} entries, expected {cols}")
            for j, v in enumerate(row):
                a[i, j] = _as_int(v)
        a.setflags(write=False)
        self._a = a

    # -------------------------------------------------------------------------
    # Constructors
    # -------------------------------------------------------------------------

    @classmethod
    def _wrap(cls, a: np.ndarray) -> IntMatrix:
        """Adopt an object array built by this package (no entry checks)."""
        m = cls.__new__(cls)
        a = np.array(a, dtype=object, copy=True)
        a.setflags(write=False)
        m._a = a
        return m

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
        """Build a matrix whose columns are the given vectors of length ``rows``."""
        a = np.zeros((rows, len(columns)), dtype=object)
        for j, col in enumerate(columns):
            if len(col) != rows:
                raise ShapeMismatchError(f"column {j} has {len(col)} entries, expected {rows}")
            for i, v in enumerate(col):
                a[i, j] = _as_int(v)
        return cls._wrap(a)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls._wrap(np.zeros((rows, cols), dtype=object))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls._wrap(np.eye(n, dtype=object))

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: int, cols: int) -> IntMatrix:
        """``rows × cols`` matrix with ``values`` down the main diagonal."""
        if len(values) > min(rows, cols):
            raise ShapeMismatchError(f"{len(values)} diagonal entries do not fit {rows}x{cols}")
        a = np.zeros((rows, cols), dtype=object)
        for i, v in enumerate(values):
            a[i, i] = _as_int(v)
        return cls._wrap(a)

    @classmethod
    def hstack(cls, blocks: Sequence[IntMatrix], rows: int) -> IntMatrix:
        """Concatenate blocks side by side; ``rows`` fixes the height when empty."""
        for b in blocks:
            if b.rows != rows:
                raise ShapeMismatchError(f"cannot hstack a {b.rows}-row block into {rows} rows")
        if not blocks:
            return cls.zeros(rows, 0)
        return cls._wrap(np.hstack([b._a for b in blocks]))

    @classmethod
    def vstack(cls, blocks: Sequence[IntMatrix], cols: int) -> IntMatrix:
        for b in blocks:
            if b.cols != cols:
                raise ShapeMismatchError(f"cannot vstack a {b.cols}-column block into {cols} columns")
        if not blocks:
            return cls.zeros(0, cols)
        return cls._wrap(np.vstack([b._a for b in blocks]))

    # -------------------------------------------------------------------------
    # Accessors
    # -------------------------------------------------------------------------

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def entries(self) -> tuple[int, ...]:
        """Row-major entries."""
        return tuple(self._a.flat)

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the backing object array."""
        return self._a

    def to_array(self) -> np.ndarray:
        """Writable copy of the backing object array."""
        return self._a.copy()

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self._a]

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(self._a[i])

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self._a[:, j])

    def take_columns(self, indices: Iterable[int]) -> IntMatrix:
        idx = list(indices)
        return IntMatrix._wrap(self._a[:, idx] if idx else np.zeros((self.rows, 0), dtype=object))

    def take_rows(self, indices: Iterable[int]) -> IntMatrix:
        idx = list(indices)
        return IntMatrix._wrap(self._a[idx, :] if idx else np.zeros((0, self.cols), dtype=object))

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self._a[i, j]

    @property
    def T(self) -> IntMatrix:
        return IntMatrix._wrap(self._a.T)

    def is_zero(self) -> bool:
        return not any(self._a.flat)

    # -------------------------------------------------------------------------
    # Arithmetic
    # -------------------------------------------------------------------------

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeMismatchError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        if self.cols == 0:
            return IntMatrix.zeros(self.rows, other.cols)
        return IntMatrix._wrap(np.dot(self._a, other._a))

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeMismatchError(f"cannot add {self.shape} and {other.shape}")
        return IntMatrix._wrap(self._a + other._a)

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeMismatchError(f"cannot subtract {other.shape} from {self.shape}")
        return IntMatrix._wrap(self._a - other._a)

    def __neg__(self) -> IntMatrix:
        return IntMatrix._wrap(-self._a)

    def __rmul__(self, scalar: int) -> IntMatrix:
        return IntMatrix._wrap(self._a * _as_int(scalar))

    # -------------------------------------------------------------------------
    # Value semantics
    # -------------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.shape, self.entries))

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_list()!r}, cols={self.cols})"
