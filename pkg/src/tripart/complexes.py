"""Ordered polyhedral complexes with explicit codimension-1 face lists.

Cells are kept in a monotonic order (every cell after all of its faces).
The empty cell always occupies internal index 0 and is a face of every
vertex; file formats never mention it, so external indices are internal
indices shifted down by one (the empty cell maps to -1).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .gf2 import Gf2Matrix

__all__ = [
    "Cell",
    "ComplexFormatError",
    "OrderedComplex",
    "from_boundary_format",
    "from_simplicial_format",
]

EMPTY_INDEX = 0


class ComplexFormatError(ValueError):
    """Invalid complex description; ``code`` names the violated rule.

    Codes: PARSE, NON_MONOTONIC, DIM_MISMATCH, DDZERO_VIOLATION,
    MISSING_FACE, DUPLICATE_CELL.
    """

    def __init__(self, code: str, message: str, line: int | None = None):
        self.code = code
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{code}: {message}{where}")


@dataclass(frozen=True)
class Cell:
    id: int
    dim: int
    faces: frozenset[int]


def _empty_cell() -> Cell:
    return Cell(id=EMPTY_INDEX, dim=-1, faces=frozenset())


class OrderedComplex:
    """A finite complex as a monotonically ordered cell sequence.

    Attributes:
        cells: the cells, cells[0] being the empty cell.
        dim: maximum cell dimension (-1 if only the empty cell).
        counts: number of cells per dimension, for -1 <= p <= dim.
        face_bits: per cell, its face set as an integer bitset; these are
            exactly the boundary-matrix columns.
    """

    __slots__ = ("cells", "dim", "counts", "face_bits")

    def __init__(self, cells: list[Cell] | tuple[Cell, ...]):
        cells = tuple(cells)
        self.cells = cells
        self._validate()
        self.dim = max(c.dim for c in cells)
        self.counts = {p: 0 for p in range(-1, self.dim + 1)}
        for c in cells:
            self.counts[c.dim] += 1
        self.face_bits = tuple(
            sum(1 << f for f in c.faces) for c in cells
        )

    def _validate(self) -> None:
        cells = self.cells
        if not cells or cells[0].dim != -1 or cells[0].faces:
            raise ValueError("cells[0] must be the empty cell (dim -1, no faces)")
        for pos, c in enumerate(cells):
            if c.id != pos:
                raise ValueError(f"cell at position {pos} has id {c.id}")
            if pos == 0:
                continue
            if c.dim == -1:
                raise ValueError("the empty cell must be unique")
            if not c.faces:
                raise ComplexFormatError(
                    "DIM_MISMATCH", f"cell {pos} of dimension {c.dim} has no faces"
                )
            if c.dim == 0 and c.faces != {EMPTY_INDEX}:
                raise ComplexFormatError(
                    "DIM_MISMATCH", f"vertex {pos} must have exactly the empty cell as face"
                )
            for f in c.faces:
                if not 0 <= f < len(cells):
                    raise ComplexFormatError(
                        "NON_MONOTONIC", f"cell {pos} lists unknown face {f}"
                    )
                if f >= pos:
                    raise ComplexFormatError(
                        "NON_MONOTONIC", f"cell {pos} lists face {f} not preceding it"
                    )
                if cells[f].dim != c.dim - 1:
                    raise ComplexFormatError(
                        "DIM_MISMATCH",
                        f"cell {pos} (dim {c.dim}) lists face {f} of dim {cells[f].dim}",
                    )
        # Boundary-of-boundary must vanish over GF(2): every codimension-2
        # cell is shared by an even number of faces.
        for c in cells:
            if c.dim < 1:
                continue
            acc = 0
            for f in c.faces:
                acc ^= sum(1 << g for g in cells[f].faces)
            if acc:
                raise ComplexFormatError(
                    "DDZERO_VIOLATION",
                    f"boundary of the boundary of cell {c.id} is non-empty",
                )

    def __len__(self) -> int:
        return len(self.cells)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrderedComplex):
            return NotImplemented
        return self.cells == other.cells

    def __repr__(self) -> str:
        sizes = " ".join(f"n{p}={n}" for p, n in sorted(self.counts.items()))
        return f"OrderedComplex(dim={self.dim}, {sizes})"

    def cells_of_dim(self, p: int) -> tuple[int, ...]:
        return tuple(c.id for c in self.cells if c.dim == p)

    def boundary_matrix(self) -> Gf2Matrix:
        """Square incidence matrix; entry [i, j] = 1 iff cell i is a face of cell j."""
        return Gf2Matrix(len(self.cells), list(self.face_bits))

    def reduced_euler_characteristic(self) -> int:
        """Alternating sum of cell counts, the empty cell contributing -1."""
        return sum((1 if p % 2 == 0 else -1) * n for p, n in self.counts.items())

    def prefix(self, ell: int) -> OrderedComplex:
        """The sub-complex of the first ell + 1 cells."""
        if not 0 <= ell < len(self.cells):
            raise IndexError(f"prefix index {ell} out of range")
        return OrderedComplex(self.cells[: ell + 1])

    def reordered(self, order: list[int] | tuple[int, ...]) -> OrderedComplex:
        """The same complex with cells permuted into ``order``.

        ``order[q]`` is the old index of the cell placed at new position q;
        the permutation must keep the order monotonic (validated) and start
        with the empty cell.
        """
        if sorted(order) != list(range(len(self.cells))):
            raise ValueError("order must be a permutation of all cell indices")
        new_of_old = {old: new for new, old in enumerate(order)}
        cells = []
        for new, old in enumerate(order):
            c = self.cells[old]
            cells.append(
                Cell(id=new, dim=c.dim, faces=frozenset(new_of_old[f] for f in c.faces))
            )
        return OrderedComplex(cells)


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def from_boundary_format(text: str) -> OrderedComplex:
    """Parse the boundary format: one ``DIM : FACE*`` line per cell.

    Face indices are 0-based external indices of earlier lines; vertices are
    written ``0 :`` and receive the empty cell as face automatically.
    """
    cells = [_empty_cell()]
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip(raw)
        if not body:
            continue
        if ":" not in body:
            raise ComplexFormatError("PARSE", "expected 'DIM : FACE*'", lineno)
        head, _, tail = body.partition(":")
        try:
            dim = int(head)
        except ValueError:
            raise ComplexFormatError("PARSE", f"bad dimension {head.strip()!r}", lineno)
        if dim < 0:
            raise ComplexFormatError("PARSE", "cell dimension must be >= 0", lineno)
        try:
            ext_faces = [int(tok) for tok in tail.split()]
        except ValueError:
            raise ComplexFormatError("PARSE", "face indices must be integers", lineno)
        if any(f < 0 for f in ext_faces):
            raise ComplexFormatError("PARSE", "face indices must be >= 0", lineno)
        if len(set(ext_faces)) != len(ext_faces):
            raise ComplexFormatError("PARSE", "duplicate face index", lineno)

        ext_id = len(cells) - 1
        if dim == 0:
            if ext_faces:
                raise ComplexFormatError(
                    "DIM_MISMATCH", "a vertex line must not list faces", lineno
                )
            faces = frozenset([EMPTY_INDEX])
        else:
            if not ext_faces:
                raise ComplexFormatError(
                    "DIM_MISMATCH", f"a {dim}-cell needs faces of dimension {dim - 1}", lineno
                )
            for f in ext_faces:
                if f >= ext_id:
                    raise ComplexFormatError(
                        "NON_MONOTONIC", f"face {f} does not precede cell {ext_id}", lineno
                    )
                if cells[f + 1].dim != dim - 1:
                    raise ComplexFormatError(
                        "DIM_MISMATCH",
                        f"face {f} has dimension {cells[f + 1].dim}, expected {dim - 1}",
                        lineno,
                    )
            faces = frozenset(f + 1 for f in ext_faces)
        cells.append(Cell(id=len(cells), dim=dim, faces=faces))
    return OrderedComplex(cells)


def from_simplicial_format(text: str, complete: bool = False) -> OrderedComplex:
    """Parse the simplicial format: one simplex per line as sorted vertex labels.

    With ``complete`` set, missing faces are inserted immediately before
    their first coface (facets of one simplex in lexicographic label order);
    otherwise a missing face is an error.  Re-listing any simplex, including
    one inserted by completion, is an error.
    """
    cells = [_empty_cell()]
    index_of: dict[tuple[int, ...], int] = {}

    def insert(simplex: tuple[int, ...], lineno: int | None) -> None:
        if len(simplex) == 1:
            faces = frozenset([EMPTY_INDEX])
        else:
            face_ids = []
            for drop in range(len(simplex)):
                facet = simplex[:drop] + simplex[drop + 1 :]
                if facet not in index_of:
                    if not complete:
                        raise ComplexFormatError(
                            "MISSING_FACE",
                            f"face {' '.join(map(str, facet))} of {' '.join(map(str, simplex))} not listed",
                            lineno,
                        )
                    insert(facet, lineno)
                face_ids.append(index_of[facet])
            faces = frozenset(face_ids)
        index_of[simplex] = len(cells)
        cells.append(Cell(id=len(cells), dim=len(simplex) - 1, faces=faces))

    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip(raw)
        if not body:
            continue
        try:
            labels = tuple(int(tok) for tok in body.split())
        except ValueError:
            raise ComplexFormatError("PARSE", "vertex labels must be integers", lineno)
        if any(v < 0 for v in labels):
            raise ComplexFormatError("PARSE", "vertex labels must be >= 0", lineno)
        if any(a >= b for a, b in zip(labels, labels[1:])):
            raise ComplexFormatError(
                "PARSE", "vertex labels must be strictly increasing", lineno
            )
        if labels in index_of:
            raise ComplexFormatError(
                "DUPLICATE_CELL", f"simplex {' '.join(map(str, labels))} already present", lineno
            )
        insert(labels, lineno)
    return OrderedComplex(cells)


def simplex_lines(k: OrderedComplex) -> list[str] | None:
    """Render a simplicial complex back to format lines; None if not simplicial.

    A cell is simplicial when its recursive vertex set has dim + 1 elements
    and its faces are exactly the facets; used by the completion idempotence
    check.
    """
    verts: dict[int, tuple[int, ...]] = {}
    labels = 0
    lines: list[str] = []
    for c in k.cells:
        if c.dim == -1:
            continue
        if c.dim == 0:
            verts[c.id] = (labels,)
            labels += 1
            lines.append(str(verts[c.id][0]))
            continue
        merged = sorted({v for f in c.faces for v in verts.get(f, ())})
        if len(merged) != c.dim + 1:
            return None
        expected = {tuple(x for x in merged if x != drop) for drop in merged}
        if {verts.get(f) for f in c.faces} != expected:
            return None
        verts[c.id] = tuple(merged)
        lines.append(" ".join(map(str, merged)))
    return lines


def complete_simplex_text(top_simplices: list[tuple[int, ...]]) -> str:
    """Text for a family of simplices, one per line (helper for generators)."""
    return "\n".join(" ".join(map(str, s)) for s in top_simplices)


def all_faces(simplex: tuple[int, ...]) -> set[tuple[int, ...]]:
    """Every non-empty sub-simplex of ``simplex``."""
    out: set[tuple[int, ...]] = set()
    for r in range(1, len(simplex) + 1):
        out.update(combinations(simplex, r))
    return out
