"""Dense square 0/1 matrices over GF(2) stored as integer bitsets.

Each column is one arbitrary-precision Python int (bit i of column j is
entry [i, j]), so a column addition is a single native XOR and the lowest
non-zero row of a column is one ``bit_length`` call.  Row queries scan the
columns, which is cheap enough for the query side; the hot reduction loops
live in :mod:`tripart.kernels`.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence

import numpy as np

__all__ = ["Gf2Matrix", "bits_of", "int_product"]


def bits_of(x: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class Gf2Matrix:
    """Square bit matrix with column-major bitset storage."""

    __slots__ = ("size", "_cols")

    def __init__(self, size: int, columns: Sequence[int] | None = None):
        if size < 0:
            raise ValueError("matrix size must be non-negative")
        self.size = size
        if columns is None:
            self._cols = [0] * size
        else:
            if len(columns) != size:
                raise ValueError(f"expected {size} columns, got {len(columns)}")
            self._cols = list(columns)
            for j, c in enumerate(self._cols):
                if c < 0 or c.bit_length() > size:
                    raise ValueError(f"column {j} has bits outside [0, {size})")

    @classmethod
    def identity(cls, size: int) -> Gf2Matrix:
        return cls(size, [1 << j for j in range(size)])

    def copy(self) -> Gf2Matrix:
        return Gf2Matrix(self.size, self._cols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gf2Matrix):
            return NotImplemented
        return self.size == other.size and self._cols == other._cols

    def __repr__(self) -> str:
        return f"Gf2Matrix(size={self.size}, nnz={self.nnz()})"

    def _check_index(self, i: int) -> None:
        if not 0 <= i < self.size:
            raise IndexError(f"index {i} out of range for size {self.size}")

    def get(self, i: int, j: int) -> int:
        self._check_index(i)
        self._check_index(j)
        return (self._cols[j] >> i) & 1

    def set(self, i: int, j: int, value: int) -> None:
        self._check_index(i)
        self._check_index(j)
        if value & 1:
            self._cols[j] |= 1 << i
        else:
            self._cols[j] &= ~(1 << i)

    def column_bits(self, j: int) -> int:
        self._check_index(j)
        return self._cols[j]

    def set_column(self, j: int, bits: int) -> None:
        self._check_index(j)
        if bits < 0 or bits.bit_length() > self.size:
            raise ValueError(f"column bits outside [0, {self.size})")
        self._cols[j] = bits

    def row_bits(self, i: int) -> int:
        self._check_index(i)
        out = 0
        for j, c in enumerate(self._cols):
            out |= ((c >> i) & 1) << j
        return out

    def column_support(self, j: int) -> frozenset[int]:
        return frozenset(bits_of(self.column_bits(j)))

    def row_support(self, i: int) -> frozenset[int]:
        return frozenset(bits_of(self.row_bits(i)))

    def nnz(self) -> int:
        return sum(c.bit_count() for c in self._cols)

    def col_add(self, src: int, dst: int) -> None:
        """Add (XOR) column ``src`` into column ``dst`` in place."""
        self._check_index(src)
        self._check_index(dst)
        if src == dst:
            raise ValueError("col_add requires src != dst")
        self._cols[dst] ^= self._cols[src]

    def row_add(self, src: int, dst: int) -> None:
        """Add (XOR) row ``src`` into row ``dst`` in place."""
        self._check_index(src)
        self._check_index(dst)
        if src == dst:
            raise ValueError("row_add requires src != dst")
        flip = 1 << dst
        cols = self._cols
        for j in range(self.size):
            if (cols[j] >> src) & 1:
                cols[j] ^= flip

    def low(self, j: int) -> int | None:
        """Row index of the lowest non-zero entry of column ``j``; None if zero."""
        c = self.column_bits(j)
        return c.bit_length() - 1 if c else None

    def left(self, i: int) -> int | None:
        """Column index of the leftmost non-zero entry of row ``i``; None if zero."""
        self._check_index(i)
        for j, c in enumerate(self._cols):
            if (c >> i) & 1:
                return j
        return None

    def is_zero_column(self, j: int) -> bool:
        return self.column_bits(j) == 0

    def is_upper_triangular(self, strict: bool = False) -> bool:
        shift = 0 if strict else 1
        return all(c >> (j + shift) == 0 for j, c in enumerate(self._cols))

    def antitranspose(self) -> Gf2Matrix:
        """Transpose across the minor diagonal: out[a, b] = self[n-1-b, n-1-a]."""
        n = self.size
        out = [0] * n
        for j, c in enumerate(self._cols):
            for i in bits_of(c):
                out[n - 1 - i] |= 1 << (n - 1 - j)
        return Gf2Matrix(n, out)

    def matmul_gf2(self, other: Gf2Matrix) -> Gf2Matrix:
        """GF(2) matrix product ``self @ other``."""
        if self.size != other.size:
            raise ValueError("size mismatch")
        out = [0] * self.size
        for j in range(other.size):
            acc = 0
            for i in bits_of(other._cols[j]):
                acc ^= self._cols[i]
            out[j] = acc
        return Gf2Matrix(self.size, out)

    def to_dense(self) -> np.ndarray:
        """Dense uint8 array copy, entry [i, j] in {0, 1}."""
        arr = np.zeros((self.size, self.size), dtype=np.uint8)
        for j, c in enumerate(self._cols):
            for i in bits_of(c):
                arr[i, j] = 1
        return arr


def int_product(a: Gf2Matrix, b: Gf2Matrix) -> np.ndarray:
    """Ordinary integer matrix product of two 0/1 matrices."""
    if a.size != b.size:
        raise ValueError("size mismatch")
    da = a.to_dense().astype(np.int64)
    db = b.to_dense().astype(np.int64)
    return da @ db
