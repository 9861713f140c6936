"""Independent cross-check routines for the verification suite.

Everything here is written against plain definitions (row echelon form with
pivot search, naive scans, the textbook persistence reduction) and shares no
code with the exhaustive kernels, so agreement between the two routes is
meaningful.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Sequence

import numpy as np

from .gf2 import Gf2Matrix

__all__ = [
    "gf2_rank",
    "gf2_kernel_basis",
    "betti_via_rank",
    "standard_reduce_pairs",
    "direct_row_reduce",
    "randomized_column_reduce",
    "naive_low",
    "naive_left",
    "naive_int_product",
]


def gf2_rank(vectors: Iterable[int], width: int) -> int:
    """GF(2) rank of integer-bitset vectors via row echelon elimination.

    Scans pivot positions left to right, swaps a pivot row up, and clears the
    pivot position from every other row.
    """
    work = [v for v in vectors]
    rank = 0
    top = 0
    for pos in range(width):
        pivot = None
        for r in range(top, len(work)):
            if (work[r] >> pos) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[top], work[pivot] = work[pivot], work[top]
        for r in range(len(work)):
            if r != top and (work[r] >> pos) & 1:
                work[r] ^= work[top]
        top += 1
        rank += 1
        if top == len(work):
            break
    return rank


def gf2_kernel_basis(vectors: Sequence[int]) -> list[int]:
    """Basis of the kernel of the map sending index sets to XORs of vectors.

    Returns combination bitsets c (over vector indices) with
    ``XOR(vectors[i] for i in c) == 0``; one per dependent vector.
    """
    pivots: dict[int, tuple[int, int]] = {}
    out: list[int] = []
    for i, v in enumerate(vectors):
        combo = 1 << i
        while v:
            top = v.bit_length() - 1
            if top not in pivots:
                pivots[top] = (v, combo)
                break
            pv, pc = pivots[top]
            v ^= pv
            combo ^= pc
        if v == 0:
            out.append(combo)
    return out


def betti_via_rank(k) -> dict[int, int]:
    """Reduced Betti numbers as n_p - rank(d_p) - rank(d_{p+1}).

    ``k`` is an OrderedComplex; the per-dimension boundary blocks are taken
    straight from the face bitsets (which include the augmentation row for
    vertices), so this never touches the reduction kernels.
    """
    width = len(k.cells)
    block_rank = {
        p: gf2_rank((k.face_bits[c.id] for c in k.cells if c.dim == p), width)
        for p in range(-1, k.dim + 1)
    }
    return {
        p: k.counts[p] - block_rank.get(p, 0) - block_rank.get(p + 1, 0)
        for p in range(-1, k.dim + 1)
    }


def standard_reduce_pairs(boundary: Gf2Matrix) -> frozenset[tuple[int, int]]:
    """Birth-death pairs from the textbook persistence column reduction.

    Stops working on a column as soon as its low is unclaimed, unlike the
    exhaustive algorithm; the pairs are the same, the matrices are not.
    """
    n = boundary.size
    cols = [boundary.column_bits(j) for j in range(n)]
    owner: dict[int, int] = {}
    pairs = set()
    for j in range(n):
        c = cols[j]
        while c:
            low = c.bit_length() - 1
            if low not in owner:
                break
            c ^= cols[owner[low]]
        cols[j] = c
        if c:
            low = c.bit_length() - 1
            owner[low] = j
            pairs.add((low, j))
    return frozenset(pairs)


def direct_row_reduce(boundary: Gf2Matrix) -> tuple[Gf2Matrix, Gf2Matrix]:
    """Exhaustive bottom-to-top row reduction written directly on rows.

    Reference implementation: rows are bitsets over columns, the leftmost
    set bit of a row is its lowest bit, and candidate rows are re-scanned
    after every XOR.  Returns (reduced, transform) with reduced = transform
    times the input over GF(2).
    """
    n = boundary.size
    rows = [boundary.row_bits(i) for i in range(n)]
    mixes = [1 << i for i in range(n)]
    lefts = [-1] * n

    def left_of(bits: int) -> int:
        return (bits & -bits).bit_length() - 1 if bits else -1

    for i in range(n - 1, -1, -1):
        changed = True
        while changed:
            changed = False
            for ell in range(i + 1, n):
                if rows[ell] and (rows[i] >> left_of(rows[ell])) & 1:
                    rows[i] ^= rows[ell]
                    mixes[i] ^= mixes[ell]
                    changed = True
                    break
        lefts[i] = left_of(rows[i])

    reduced = Gf2Matrix(n)
    transform = Gf2Matrix(n)
    for i in range(n):
        for j in range(n):
            if (rows[i] >> j) & 1:
                reduced.set(i, j, 1)
            if (mixes[i] >> j) & 1:
                transform.set(i, j, 1)
    return reduced, transform


def randomized_column_reduce(
    boundary: Gf2Matrix, rng: random.Random
) -> tuple[Gf2Matrix, Gf2Matrix]:
    """Exhaustive column reduction choosing eligible source columns at random.

    Used to confirm that the reduced pair does not depend on the order in
    which the while-loop candidates are processed.
    """
    n = boundary.size
    cols = [boundary.column_bits(j) for j in range(n)]
    mixes = [1 << j for j in range(n)]
    lows = [-1] * n
    for j in range(n):
        while True:
            eligible = [
                ell
                for ell in range(j)
                if lows[ell] >= 0 and (cols[j] >> lows[ell]) & 1
            ]
            if not eligible:
                break
            ell = rng.choice(eligible)
            cols[j] ^= cols[ell]
            mixes[j] ^= mixes[ell]
        lows[j] = cols[j].bit_length() - 1 if cols[j] else -1
    return Gf2Matrix(n, cols), Gf2Matrix(n, mixes)


def naive_low(dense: np.ndarray, j: int) -> int | None:
    """Lowest non-zero row of column j by linear scan of a dense array."""
    hits = np.nonzero(dense[:, j])[0]
    return int(hits[-1]) if hits.size else None


def naive_left(dense: np.ndarray, i: int) -> int | None:
    """Leftmost non-zero column of row i by linear scan of a dense array."""
    hits = np.nonzero(dense[i, :])[0]
    return int(hits[0]) if hits.size else None


def naive_int_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Triple-loop integer matrix product of 0/1 arrays."""
    n = a.shape[0]
    out = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            total = 0
            for t in range(n):
                total += int(a[i, t]) * int(b[t, j])
            out[i, j] = total
    return out
