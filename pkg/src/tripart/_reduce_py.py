"""Pure-Python exhaustive column reduction over integer bitsets.

Fallback for the compiled kernel in ``tripart._reduce``; both must produce
bit-identical results (asserted by the test suite and the benchmark).
"""

from __future__ import annotations

__all__ = ["exhaustive_reduce_columns", "reduce_one_column"]


def reduce_one_column(
    cols: list[int],
    aux: list[int],
    pivot_of_row: list[int],
    col: int,
    mirror: int,
) -> tuple[int, int, int]:
    """Exhaustively reduce one new column against established pivot columns.

    Scans the set bits of ``col`` from highest to lowest; whenever a bit sits
    in a row owned by an earlier pivot column, that column is XORed in (the
    pivot column has no bits above its own low, so the scan position only
    moves down).  Returns the reduced column, the mirrored combination, and
    the final low (-1 for a zero column).
    """
    low = -1
    scan = col
    while scan:
        b = scan.bit_length() - 1
        src = pivot_of_row[b]
        if src >= 0:
            col ^= cols[src]
            mirror ^= aux[src]
            scan = col & ((1 << b) - 1)
        else:
            if low < 0:
                low = b
            scan &= (1 << b) - 1
    return col, mirror, low


def exhaustive_reduce_columns(cols: list[int], aux: list[int]) -> list[int]:
    """Reduce ``cols`` left to right in place, mirroring every XOR on ``aux``.

    Returns the per-column lows (-1 for zero columns).
    """
    n = len(cols)
    pivot_of_row = [-1] * n
    lows = [-1] * n
    for j in range(n):
        col, mirror, low = reduce_one_column(cols, aux, pivot_of_row, cols[j], aux[j])
        cols[j] = col
        aux[j] = mirror
        lows[j] = low
        if low >= 0:
            pivot_of_row[low] = j
    return lows
