"""Exhaustive column and row reduction of boundary matrices.

Column reduction eliminates left to right and keeps clearing entries in rows
already claimed by earlier pivots, which makes the reduced pair unique; row
reduction works bottom to top and is implemented by running the same column
kernel on the antitranspose.  Birth/death bookkeeping and Betti numbers are
read off the results.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from . import kernels
from .complexes import OrderedComplex
from .gf2 import Gf2Matrix

__all__ = [
    "Label",
    "ColumnReduction",
    "RowReduction",
    "BirthDeathTable",
    "exhaustive_column_reduce",
    "exhaustive_row_reduce",
    "classify",
    "betti_numbers",
    "relative_cohomology_ranks",
    "randomized_row_reduce",
]


class Label(enum.Enum):
    BIRTH = "BIRTH"
    DEATH = "DEATH"


@dataclass(frozen=True)
class ColumnReduction:
    """Result of exhaustive column reduction: reduced = input @ transform."""

    reduced: Gf2Matrix
    transform: Gf2Matrix
    low_of: tuple[int | None, ...]
    pairs: frozenset[tuple[int, int]]

    @property
    def size(self) -> int:
        return self.reduced.size

    def is_birth(self, j: int) -> bool:
        return self.low_of[j] is None


@dataclass(frozen=True)
class RowReduction:
    """Result of exhaustive row reduction: reduced = transform @ input."""

    reduced: Gf2Matrix
    transform: Gf2Matrix
    left_of: tuple[int | None, ...]
    pairs: frozenset[tuple[int, int]]

    @property
    def size(self) -> int:
        return self.reduced.size

    def is_cobirth(self, i: int) -> bool:
        return self.left_of[i] is None


def _require_upper_triangular(d: Gf2Matrix) -> None:
    if not d.is_upper_triangular():
        raise ValueError("reduction input must be upper-triangular")


def exhaustive_column_reduce(d: Gf2Matrix) -> ColumnReduction:
    """Reduce ``d`` by exhaustive left-to-right column additions."""
    _require_upper_triangular(d)
    n = d.size
    cols = [d.column_bits(j) for j in range(n)]
    mixes = [1 << j for j in range(n)]
    lows = kernels.reduce_columns(cols, mixes)
    return ColumnReduction(
        reduced=Gf2Matrix(n, cols),
        transform=Gf2Matrix(n, mixes),
        low_of=tuple(low if low >= 0 else None for low in lows),
        pairs=frozenset((low, j) for j, low in enumerate(lows) if low >= 0),
    )


def exhaustive_row_reduce(d: Gf2Matrix) -> RowReduction:
    """Reduce ``d`` by exhaustive bottom-to-top row additions.

    Runs the column kernel on the antitranspose: reversing both indices maps
    rows to columns, the leftmost entry of a row to the lowest entry of a
    column, and the bottom-to-top sweep to a left-to-right one.
    """
    _require_upper_triangular(d)
    n = d.size
    cr = exhaustive_column_reduce(d.antitranspose())
    lefts = []
    for i in range(n):
        low = cr.low_of[n - 1 - i]
        lefts.append(None if low is None else n - 1 - low)
    return RowReduction(
        reduced=cr.reduced.antitranspose(),
        transform=cr.transform.antitranspose(),
        left_of=tuple(lefts),
        pairs=frozenset((n - 1 - j, n - 1 - i) for i, j in cr.pairs),
    )


def randomized_column_reduce_pair(
    d: Gf2Matrix, rng: random.Random
) -> tuple[Gf2Matrix, Gf2Matrix]:
    """Column reduction with randomly ordered while-loop candidates.

    Reference path for the uniqueness check; see also
    :func:`tripart.oracle.randomized_column_reduce` which it wraps.
    """
    from . import oracle

    _require_upper_triangular(d)
    return oracle.randomized_column_reduce(d, rng)


def randomized_row_reduce(d: Gf2Matrix, rng: random.Random) -> tuple[Gf2Matrix, Gf2Matrix]:
    """Row reduction with randomly ordered candidates, via the antitranspose."""
    reduced, transform = randomized_column_reduce_pair(d.antitranspose(), rng)
    return reduced.antitranspose(), transform.antitranspose()


@dataclass(frozen=True)
class BirthDeathTable:
    """Per-cell birth/death labels and per-dimension counts, both sides."""

    labels: tuple[Label, ...]
    births: dict[int, int]
    deaths: dict[int, int]
    cobirths: dict[int, int]
    codeaths: dict[int, int]


def classify(cr: ColumnReduction, k: OrderedComplex) -> BirthDeathTable:
    """Label each cell BIRTH (zero reduced column) or DEATH and count per dim.

    The cohomology-side counts follow from the pairing: a death in dimension
    p + 1 is a cohomology death in dimension p.
    """
    if cr.size != len(k.cells):
        raise ValueError("reduction and complex sizes differ")
    labels = tuple(
        Label.BIRTH if cr.is_birth(j) else Label.DEATH for j in range(cr.size)
    )
    dims = range(-1, k.dim + 1)
    births = {p: 0 for p in dims}
    deaths = {p: 0 for p in dims}
    for c in k.cells:
        if labels[c.id] is Label.BIRTH:
            births[c.dim] += 1
        else:
            deaths[c.dim] += 1
    codeaths = {p: deaths.get(p + 1, 0) for p in dims}
    cobirths = {p: k.counts[p] - codeaths[p] for p in dims}
    return BirthDeathTable(labels, births, deaths, cobirths, codeaths)


def betti_numbers(k: OrderedComplex) -> dict[int, int]:
    """Reduced Betti numbers for p = -1 .. dim, from column reduction."""
    table = classify(exhaustive_column_reduce(k.boundary_matrix()), k)
    return {
        p: table.births[p] - table.deaths.get(p + 1, 0) for p in range(-1, k.dim + 1)
    }


def relative_cohomology_ranks(k: OrderedComplex) -> dict[int, int]:
    """Reduced cohomology ranks for p = -1 .. dim, from row reduction."""
    rr = exhaustive_row_reduce(k.boundary_matrix())
    dims = range(-1, k.dim + 1)
    codeaths = {p: 0 for p in dims}
    cobirths = {p: 0 for p in dims}
    for c in k.cells:
        if rr.is_cobirth(c.id):
            cobirths[c.dim] += 1
        else:
            codeaths[c.dim] += 1
    return {p: cobirths[p] - codeaths.get(p - 1, 0) for p in dims}


def is_exhaustively_reduced(reduced: Gf2Matrix, low_of: tuple[int | None, ...]) -> bool:
    """No while-loop step applies: no column has a bit in an earlier pivot row."""
    for j in range(reduced.size):
        bits = reduced.column_bits(j)
        for ell in range(j):
            low = low_of[ell]
            if low is not None and (bits >> low) & 1:
                return False
    return True
