"""Tree / cotree / leftover splits of each cell dimension.

The split of the p-cells puts death cells (non-zero reduced columns) in the
tree, cohomology death cells (non-zero reduced rows) in the cotree, and the
rest in the leftover, whose size is the p-th reduced Betti number.  The same
split can be maintained incrementally while cells arrive one at a time, and
the index persistence diagram refines it.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _reduce_py
from .complexes import Cell, OrderedComplex
from .reduction import exhaustive_column_reduce, exhaustive_row_reduce

__all__ = [
    "TriPartition",
    "tri_partition",
    "IncrementalTriPartition",
    "PersistenceDiagram",
    "persistence_diagram",
    "betti_of_prefix",
    "relative_cohomology_rank_of_pair",
    "dump_diagram",
]


@dataclass(frozen=True)
class TriPartition:
    """Disjoint split tree | cotree | leftover of the cells of each dimension."""

    tree: dict[int, frozenset[int]]
    cotree: dict[int, frozenset[int]]
    leftover: dict[int, frozenset[int]]

    def dims(self) -> list[int]:
        return sorted(self.tree)

    def dim_of_cell(self) -> dict[int, int]:
        """Map cell index -> dimension, recovered from the three set families."""
        out: dict[int, int] = {}
        for p in self.tree:
            for part in (self.tree, self.cotree, self.leftover):
                for cell in part[p]:
                    out[cell] = p
        return out


def tri_partition(k: OrderedComplex) -> TriPartition:
    """The unique split induced by the complex ordering."""
    d = k.boundary_matrix()
    cr = exhaustive_column_reduce(d)
    rr = exhaustive_row_reduce(d)
    dims = range(-1, k.dim + 1)
    tree = {p: set() for p in dims}
    cotree = {p: set() for p in dims}
    leftover = {p: set() for p in dims}
    for c in k.cells:
        if cr.low_of[c.id] is not None:
            tree[c.dim].add(c.id)
        elif rr.left_of[c.id] is not None:
            cotree[c.dim].add(c.id)
        else:
            leftover[c.dim].add(c.id)
    return TriPartition(
        tree={p: frozenset(s) for p, s in tree.items()},
        cotree={p: frozenset(s) for p, s in cotree.items()},
        leftover={p: frozenset(s) for p, s in leftover.items()},
    )


class IncrementalTriPartition:
    """Grows a complex one cell at a time, keeping the split in sync.

    The exhaustively reduced columns are maintained in full (a new column is
    reduced against every established pivot), so after ``ell + 1`` additions
    the internal state equals the batch reduction of the length-(ell + 1)
    prefix exactly.  Adding a cell either extends the leftover (zero reduced
    column) or extends the tree and promotes the killed leftover cell of one
    dimension lower into the cotree.
    """

    def __init__(self) -> None:
        self._cols: list[int] = []
        self._mixes: list[int] = []
        self._pivot_of_row: list[int] = []
        self._dims: list[int] = []
        self._tree: dict[int, set[int]] = {}
        self._cotree: dict[int, set[int]] = {}
        self._leftover: dict[int, set[int]] = {}

    @property
    def next_index(self) -> int:
        return len(self._cols)

    def _ensure_dim(self, p: int) -> None:
        for q in range(-1, p + 1):
            self._tree.setdefault(q, set())
            self._cotree.setdefault(q, set())
            self._leftover.setdefault(q, set())

    def add(self, cell: Cell) -> None:
        """Append the next cell of the filtration and update the split."""
        here = self.next_index
        if cell.id != here:
            raise ValueError(f"ordering mismatch: expected cell {here}, got {cell.id}")
        if any(f >= here for f in cell.faces):
            raise ValueError(f"ordering mismatch: cell {here} lists a later face")
        if cell.faces and any(self._dims[f] != cell.dim - 1 for f in cell.faces):
            raise ValueError(f"cell {here} has faces of the wrong dimension")
        self._ensure_dim(cell.dim)
        self._dims.append(cell.dim)
        self._pivot_of_row.append(-1)

        col, mix, low = _reduce_py.reduce_one_column(
            self._cols,
            self._mixes,
            self._pivot_of_row,
            sum(1 << f for f in cell.faces),
            1 << here,
        )
        self._cols.append(col)
        self._mixes.append(mix)
        if low < 0:
            self._leftover[cell.dim].add(here)
        else:
            self._pivot_of_row[low] = here
            self._tree[cell.dim].add(here)
            killed = self._leftover[cell.dim - 1]
            if low not in killed:
                raise AssertionError(
                    f"cell {low} should be a leftover of dimension {cell.dim - 1}"
                )
            killed.discard(low)
            self._cotree[cell.dim - 1].add(low)

    def extend(self, cells) -> None:
        for cell in cells:
            self.add(cell)

    def partition(self) -> TriPartition:
        """Snapshot of the current split."""
        return TriPartition(
            tree={p: frozenset(s) for p, s in self._tree.items()},
            cotree={p: frozenset(s) for p, s in self._cotree.items()},
            leftover={p: frozenset(s) for p, s in self._leftover.items()},
        )


@dataclass(frozen=True)
class PersistenceDiagram:
    """Index persistence diagram: finite (dim, birth, death) points sorted by
    birth, plus essential (dim, birth) points."""

    finite: tuple[tuple[int, int, int], ...]
    essential: tuple[tuple[int, int], ...]


def persistence_diagram(k: OrderedComplex) -> PersistenceDiagram:
    cr = exhaustive_column_reduce(k.boundary_matrix())
    dims = [c.dim for c in k.cells]
    paired_rows = {i for i, _ in cr.pairs}
    finite = sorted((dims[i], i, j) for i, j in cr.pairs)
    essential = sorted(
        (dims[j], j)
        for j in range(len(k.cells))
        if cr.is_birth(j) and j not in paired_rows
    )
    return PersistenceDiagram(finite=tuple(finite), essential=tuple(essential))


def betti_of_prefix(diag: PersistenceDiagram, ell: int, p: int) -> int:
    """Reduced Betti number of the prefix complex K_ell by quadrant counting."""
    if ell < 0:
        raise IndexError(f"prefix index {ell} out of range")
    finite = sum(1 for q, i, j in diag.finite if q == p and i <= ell < j)
    essential = sum(1 for q, i in diag.essential if q == p and i <= ell)
    return finite + essential


def relative_cohomology_rank_of_pair(diag: PersistenceDiagram, ell: int, p: int) -> int:
    """Rank of the reduced relative cohomology of (K, K_ell) in dimension p.

    The same diagram read with axes reversed and birth/death exchanged: a
    finite point spans the same index interval but counts for the dimension
    of its death cell, and essential points count once the birth cell has
    left the prefix.  At ell = -1 this equals the cohomology rank of K.
    """
    if ell < -1:
        raise IndexError(f"pair index {ell} out of range")
    finite = sum(1 for q, i, j in diag.finite if q == p - 1 and i <= ell < j)
    essential = sum(1 for q, i in diag.essential if q == p and ell < i)
    return finite + essential


def dump_diagram(diag: PersistenceDiagram) -> str:
    """Text form: one ``p birth death`` line per point, external indices,
    finite points first, ``inf`` for essential deaths."""
    lines = [f"{p} {i - 1} {j - 1}" for p, i, j in diag.finite]
    lines += [f"{p} {i - 1} inf" for p, i in diag.essential]
    return "\n".join(lines)
