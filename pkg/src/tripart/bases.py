"""Canonical (co)cycle and (co)chain bases read off the reduction transforms.

Column j of the column-reduction transform stores either the unique cycle
through cell j inside tree-union-{j} (when j is a cotree or leftover cell) or
the unique tree chain whose boundary becomes trivial at j (when j is a tree
cell); row i of the row-reduction transform stores the mirror-image cocycle
or cochain.  The verification routines check all six basis claims and the
integer intersection pattern of the two transforms against independent rank
and enumeration oracles.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import oracle
from .complexes import OrderedComplex
from .gf2 import Gf2Matrix, bits_of, int_product
from .reduction import ColumnReduction, RowReduction
from .reports import Report
from .tripartition import TriPartition

__all__ = [
    "Kind",
    "CanonicalBasisSet",
    "VerifyFailError",
    "extract_bases",
    "verify_cycle_basis",
    "verify_boundary_basis",
    "verify_homology_generators",
    "verify_cobases",
    "intersection_matrix",
    "verify_intersection_patterns",
    "dump_bases",
]


class Kind(enum.Enum):
    CYCLE = "CYCLE"
    CHAIN = "CHAIN"
    COCYCLE = "COCYCLE"
    COCHAIN = "COCHAIN"


class VerifyFailError(Exception):
    """A verified matrix invariant does not hold; carries the witness entry."""

    def __init__(self, message: str, entry: tuple[int, int] | None = None):
        self.entry = entry
        super().__init__(message)


@dataclass(frozen=True)
class CanonicalBasisSet:
    """Per-cell canonical payloads from both reduction transforms.

    ``homology_members[j]`` is the support of transform column j (a cycle for
    cotree/leftover cells, a chain for tree cells); ``cohomology_members[i]``
    is the support of transform row i (a cocycle for tree/leftover cells, a
    cochain for cotree cells).
    """

    homology_kind: tuple[Kind, ...]
    homology_members: tuple[frozenset[int], ...]
    cohomology_kind: tuple[Kind, ...]
    cohomology_members: tuple[frozenset[int], ...]

    @property
    def size(self) -> int:
        return len(self.homology_kind)


def extract_bases(
    cr: ColumnReduction, rr: RowReduction, tp: TriPartition
) -> CanonicalBasisSet:
    """Read the canonical payloads out of the two transforms."""
    n = cr.size
    if rr.size != n:
        raise ValueError("column and row reductions have different sizes")
    dim_of = tp.dim_of_cell()
    if len(dim_of) != n:
        raise ValueError("tri-partition does not cover the reduced complex")
    h_kind = []
    h_members = []
    c_kind = []
    c_members = []
    for j in range(n):
        p = dim_of[j]
        h_kind.append(Kind.CHAIN if j in tp.tree[p] else Kind.CYCLE)
        h_members.append(cr.transform.column_support(j))
        c_kind.append(Kind.COCHAIN if j in tp.cotree[p] else Kind.COCYCLE)
        c_members.append(rr.transform.row_support(j))
    return CanonicalBasisSet(
        homology_kind=tuple(h_kind),
        homology_members=tuple(h_members),
        cohomology_kind=tuple(c_kind),
        cohomology_members=tuple(c_members),
    )


def _bitset(cells: frozenset[int]) -> int:
    return sum(1 << c for c in cells)


def _split(bs: CanonicalBasisSet, k: OrderedComplex, p: int):
    """Tree / cotree / leftover cell ids of dimension p, recovered from kinds."""
    tree, cotree, leftover = [], [], []
    for j in k.cells_of_dim(p):
        is_chain = bs.homology_kind[j] is Kind.CHAIN
        is_cochain = bs.cohomology_kind[j] is Kind.COCHAIN
        if is_chain:
            tree.append(j)
        elif is_cochain:
            cotree.append(j)
        else:
            leftover.append(j)
    return tree, cotree, leftover


def boundary_of(k: OrderedComplex, members: frozenset[int]) -> int:
    """Boundary bitset of a chain: XOR of the face bitsets of its cells."""
    acc = 0
    for c in members:
        acc ^= k.face_bits[c]
    return acc


def coboundary_of(k: OrderedComplex, members: frozenset[int], p: int) -> int:
    """Coboundary bitset of a p-cochain: the (p+1)-cells with an odd number
    of faces in it (transpose action of the incidence)."""
    bits = _bitset(members)
    acc = 0
    for j in k.cells_of_dim(p + 1):
        if (k.face_bits[j] & bits).bit_count() & 1:
            acc |= 1 << j
    return acc


def verify_cycle_basis(bs: CanonicalBasisSet, k: OrderedComplex, p: int) -> Report:
    """The cycles of cotree and leftover p-cells form a basis of the p-cycle space.

    Independence and count are checked by the rank oracle against the
    dimension of the kernel of the boundary block; the span is checked by
    decomposing every kernel-basis cycle as the XOR of the canonical cycles
    of its own cotree/leftover members.
    """
    report = Report(name=f"cycle-basis p={p}")
    width = len(k.cells)
    tree, cotree, leftover = _split(bs, k, p)
    basis_cells = sorted(cotree + leftover)
    vectors = [_bitset(bs.homology_members[j]) for j in basis_cells]
    report.checked += 1
    for j in basis_cells:
        members = bs.homology_members[j]
        if j not in members or not members - {j} <= set(tree):
            report.fail("cycle-payload-containment", [members], f"cell {j}")
        if boundary_of(k, members):
            report.fail("cycle-payload-not-a-cycle", [members], f"cell {j}")

    p_cells = list(k.cells_of_dim(p))
    cycle_rank = len(p_cells) - oracle.gf2_rank(
        (k.face_bits[j] for j in p_cells), width
    )
    if len(vectors) != cycle_rank:
        report.fail("cycle-basis-count", [basis_cells], f"want rank {cycle_rank}")
    if oracle.gf2_rank(vectors, width) != len(vectors):
        report.fail("cycle-basis-independence", [basis_cells])

    # Span: every kernel-basis cycle equals the sum of the canonical cycles
    # of the basis cells it contains.
    payload_of = {j: _bitset(bs.homology_members[j]) for j in basis_cells}
    for combo in oracle.gf2_kernel_basis([k.face_bits[j] for j in p_cells]):
        cycle = 0
        for idx in bits_of(combo):
            cycle |= 1 << p_cells[idx]
        acc = 0
        for j in basis_cells:
            if (cycle >> j) & 1:
                acc ^= payload_of[j]
        report.checked += 1
        if acc != cycle:
            report.fail(
                "cycle-decomposition",
                [frozenset(bits_of(cycle))],
                "not the sum of its canonical cycles",
            )
    return report


def verify_boundary_basis(bs: CanonicalBasisSet, k: OrderedComplex, p: int) -> Report:
    """The chain boundaries of the tree p-cells form a basis of the
    (p-1)-boundary space, and each decomposes into the canonical (p-1)-cycles
    it renders trivial."""
    report = Report(name=f"boundary-basis p={p}")
    width = len(k.cells)
    tree, _, _ = _split(bs, k, p)
    below_tree, below_cotree, below_leftover = _split(bs, k, p - 1)
    birth_cells = set(below_cotree + below_leftover)

    boundaries = []
    for j in sorted(tree):
        members = bs.homology_members[j]
        report.checked += 1
        if j not in members or not members <= set(tree):
            report.fail("chain-payload-containment", [members], f"cell {j}")
        z = boundary_of(k, members)
        if z == 0:
            report.fail("chain-boundary-empty", [members], f"cell {j}")
        boundaries.append(z)
        # The boundary is the sum of the canonical cycles of its birth cells.
        acc = 0
        for i in birth_cells:
            if (z >> i) & 1:
                acc ^= _bitset(bs.homology_members[i])
        if acc != z:
            report.fail(
                "boundary-decomposition",
                [frozenset(bits_of(z))],
                f"cell {j}",
            )

    boundary_rank = oracle.gf2_rank((k.face_bits[j] for j in k.cells_of_dim(p)), width)
    if len(boundaries) != boundary_rank:
        report.fail("boundary-basis-count", [tree], f"want rank {boundary_rank}")
    if oracle.gf2_rank(boundaries, width) != len(boundaries):
        report.fail("boundary-basis-independence", [tree])
    return report


def verify_homology_generators(
    bs: CanonicalBasisSet, k: OrderedComplex, p: int
) -> Report:
    """The cycles of the leftover p-cells generate the reduced homology:
    there are Betti-many of them and none is a sum of the others plus a
    boundary."""
    report = Report(name=f"homology-generators p={p}")
    width = len(k.cells)
    _, _, leftover = _split(bs, k, p)
    above_tree, _, _ = _split(bs, k, p + 1)

    boundary_vectors = [
        boundary_of(k, bs.homology_members[j]) for j in sorted(above_tree)
    ]
    generators = [_bitset(bs.homology_members[j]) for j in sorted(leftover)]
    from .reduction import betti_numbers

    betti = betti_numbers(k).get(p, 0)
    report.checked += 1
    if len(generators) != betti:
        report.fail("generator-count", [leftover], f"want {betti}")
    joint = oracle.gf2_rank(boundary_vectors + generators, width)
    if joint != len(boundary_vectors) + len(generators):
        report.fail("generators-dependent-modulo-boundaries", [leftover])
    return report


def verify_cobases(bs: CanonicalBasisSet, k: OrderedComplex, p: int) -> Report:
    """The three cohomology-side claims in dimension p.

    Cocycles of tree and leftover p-cells form a basis of the p-cocycle
    space; cocycles of leftover cells generate the reduced cohomology; the
    cochain coboundaries of the cotree p-cells form a basis of the
    (p+1)-coboundary space.
    """
    report = Report(name=f"cobases p={p}")
    width = len(k.cells)
    tree, cotree, leftover = _split(bs, k, p)
    p_cells = list(k.cells_of_dim(p))
    coface_bits = {
        i: coboundary_of(k, frozenset([i]), p) for i in p_cells
    }

    # Cocycle basis over tree + leftover cells.
    basis_cells = sorted(tree + leftover)
    vectors = []
    for i in basis_cells:
        members = bs.cohomology_members[i]
        report.checked += 1
        if i not in members or not members - {i} <= set(cotree):
            report.fail("cocycle-payload-containment", [members], f"cell {i}")
        if coboundary_of(k, members, p):
            report.fail("cocycle-payload-not-a-cocycle", [members], f"cell {i}")
        vectors.append(_bitset(members))
    cocycle_rank = len(p_cells) - oracle.gf2_rank(
        [coface_bits[i] for i in p_cells], width
    )
    if len(vectors) != cocycle_rank:
        report.fail("cocycle-basis-count", [basis_cells], f"want rank {cocycle_rank}")
    if oracle.gf2_rank(vectors, width) != len(vectors):
        report.fail("cocycle-basis-independence", [basis_cells])

    # Span of the cocycle space, via kernel basis of the coboundary map.
    payload_of = {i: _bitset(bs.cohomology_members[i]) for i in basis_cells}
    for combo in oracle.gf2_kernel_basis([coface_bits[i] for i in p_cells]):
        cocycle = 0
        for idx in bits_of(combo):
            cocycle |= 1 << p_cells[idx]
        acc = 0
        for i in basis_cells:
            if (cocycle >> i) & 1:
                acc ^= payload_of[i]
        report.checked += 1
        if acc != cocycle:
            report.fail(
                "cocycle-decomposition",
                [frozenset(bits_of(cocycle))],
                "not the sum of its canonical cocycles",
            )

    # Cohomology generators over the leftover cells.
    from .reduction import relative_cohomology_ranks

    corank = relative_cohomology_ranks(k).get(p, 0)
    generators = [payload_of[i] for i in sorted(leftover)]
    above_tree, _, above_leftover = _split(bs, k, p + 1)
    coboundaries = []
    for i in sorted(cotree):
        members = bs.cohomology_members[i]
        report.checked += 1
        if i not in members or not members <= set(cotree):
            report.fail("cochain-payload-containment", [members], f"cell {i}")
        cob = coboundary_of(k, members, p)
        if cob == 0:
            report.fail("cochain-coboundary-empty", [members], f"cell {i}")
        coboundaries.append(cob)
        # Mirror decomposition into the canonical (p+1)-cocycles of the
        # cohomology-birth cells in its support.
        acc = 0
        for t in above_tree + above_leftover:
            if (cob >> t) & 1:
                acc ^= _bitset(bs.cohomology_members[t])
        if acc != cob:
            report.fail(
                "coboundary-decomposition", [frozenset(bits_of(cob))], f"cell {i}"
            )
    if len(generators) != corank:
        report.fail("cogenerator-count", [leftover], f"want {corank}")
    if oracle.gf2_rank(coboundaries + generators, width) != len(coboundaries) + len(
        generators
    ):
        report.fail("cogenerators-dependent-modulo-coboundaries", [leftover])

    # Coboundary basis of the (p+1)-coboundary space.
    cob_rank = oracle.gf2_rank(
        (k.face_bits[j] for j in k.cells_of_dim(p + 1)), width
    )
    if len(coboundaries) != cob_rank:
        report.fail("coboundary-basis-count", [cotree], f"want rank {cob_rank}")
    if oracle.gf2_rank(coboundaries, width) != len(coboundaries):
        report.fail("coboundary-basis-independence", [cotree])
    return report


def intersection_matrix(cr: ColumnReduction, rr: RowReduction) -> np.ndarray:
    """Integer product of the row transform with the column transform.

    Raises VerifyFailError unless the result is unit upper-triangular with
    every entry in {0, 1, 2}.
    """
    if cr.size != rr.size:
        raise ValueError("column and row reductions have different sizes")
    vu = int_product(rr.transform, cr.transform)
    n = cr.size
    for i in range(n):
        if vu[i, i] != 1:
            raise VerifyFailError(f"diagonal entry [{i},{i}] = {vu[i, i]}", (i, i))
    if np.any(np.tril(vu, -1)):
        i, j = map(int, np.argwhere(np.tril(vu, -1))[0])
        raise VerifyFailError(f"entry [{i},{j}] below the diagonal", (i, j))
    bad = np.argwhere((vu < 0) | (vu > 2))
    if bad.size:
        i, j = map(int, bad[0])
        raise VerifyFailError(f"entry [{i},{j}] = {vu[i, j]} outside {{0,1,2}}", (i, j))
    return vu


def verify_intersection_patterns(
    vu: np.ndarray, bs: CanonicalBasisSet, k: OrderedComplex, strict_crossings: bool = False
) -> Report:
    """Entrywise check of the intersection pattern of the two transforms.

    By default every off-diagonal entry must equal the number of payload
    memberships it collects: one if the row cell lies in the column cell's
    cycle-or-chain and it is a tree cell, plus one if the column cell lies in
    the row cell's cocycle-or-cochain and it is a cotree cell; in particular
    the leftover-by-leftover block is the identity.  With ``strict_crossings``
    the two memberships of a tree-by-cotree pair are additionally required to
    agree, forcing those entries to 0 or 2.  The strict form fails on
    complexes where a leftover cycle shares cells with a tree cell's cycle
    (the membership can then be one-sided), so it is off by default.
    """
    name = "intersection-patterns-strict" if strict_crossings else "intersection-patterns"
    report = Report(name=name)
    dims = {c.id: c.dim for c in k.cells}
    n = len(k.cells)
    splits = {p: _split(bs, k, p) for p in range(-1, k.dim + 1)}
    for i in range(n):
        for j in range(n):
            got = int(vu[i, j])
            if i == j:
                want = 1
            elif dims[i] != dims[j]:
                want = 0
            else:
                tree, cotree, leftover = splits[dims[i]]
                tree_s, cotree_s = set(tree), set(cotree)
                leftover_s = set(leftover)
                in_cycle = i in tree_s and i in bs.homology_members[j]
                in_cocycle = j in cotree_s and j in bs.cohomology_members[i]
                if i in tree_s and j in cotree_s:
                    if strict_crossings:
                        if in_cycle != in_cocycle:
                            report.fail(
                                "two-crossings-mismatch",
                                [{i}, {j}],
                                f"containments disagree at [{i},{j}]",
                            )
                        want = 2 if in_cycle else 0
                    else:
                        want = int(in_cycle) + int(in_cocycle)
                else:
                    # At most one side can contribute outside tree-by-cotree.
                    want = int(in_cycle) + int(in_cocycle)
                if i in leftover_s and j in leftover_s and got != 0:
                    report.fail(
                        "leftover-block-not-identity", [{i}, {j}], f"entry {got}"
                    )
            report.checked += 1
            if got != want:
                report.fail(
                    "pattern-entry", [{i}, {j}], f"entry [{i},{j}] = {got}, want {want}"
                )
    return report


def dump_bases(bs: CanonicalBasisSet, k: OrderedComplex) -> str:
    """Text dump: one line per cell and side, external indices ascending."""
    lines = []
    for j in range(bs.size):
        members = " ".join(str(c - 1) for c in sorted(bs.homology_members[j]))
        lines.append(f"{j - 1} {bs.homology_kind[j].value}: {members}")
    for i in range(bs.size):
        members = " ".join(str(c - 1) for c in sorted(bs.cohomology_members[i]))
        lines.append(f"{i - 1} {bs.cohomology_kind[i].value}: {members}")
    return "\n".join(lines)
