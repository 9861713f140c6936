"""Brute-force matroid checks for the tree, cotree, and leftover families.

Trees (edge sets spanning no cycle) and cotrees (spanning no cocycle) are
enumerated through a rank oracle; leftover families are collected by running
the tri-partition over every ordering of the p-cells and closing the result
downward.  The exchange property is then checked pair by pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import factorial

from . import oracle
from .complexes import OrderedComplex
from .reports import Report
from .tripartition import tri_partition

__all__ = [
    "CapExceededError",
    "SetFamily",
    "enumerate_trees",
    "enumerate_cotrees",
    "enumerate_leftovers",
    "check_matroid",
]


class CapExceededError(ValueError):
    """Enumeration would exceed the configured cap."""


@dataclass(frozen=True)
class SetFamily:
    """A downward-closed family of subsets of a ground set."""

    ground: frozenset[int]
    members: frozenset[frozenset[int]]
    closed_downward: bool = False

    def maximal_members(self) -> list[frozenset[int]]:
        return [
            f
            for f in self.members
            if not any(f < g for g in self.members)
        ]

    def rank(self) -> int:
        return max((len(f) for f in self.members), default=0)


def _grow_family(ground: list[int], independent) -> frozenset[frozenset[int]]:
    """All independent subsets, grown one element at a time.

    Independence is downward closed, so every independent set is reachable
    by adding elements in increasing order to a smaller independent set.
    """
    members = {frozenset()}
    frontier = [()]
    while frontier:
        nxt = []
        for base in frontier:
            start = ground.index(base[-1]) + 1 if base else 0
            for e in ground[start:]:
                candidate = base + (e,)
                if independent(candidate):
                    members.add(frozenset(candidate))
                    nxt.append(candidate)
        frontier = nxt
    return frozenset(members)


def enumerate_trees(k: OrderedComplex, p: int, cap: int = 16) -> SetFamily:
    """All p-cell subsets containing no non-empty cycle (independent columns)."""
    cells = list(k.cells_of_dim(p))
    if len(cells) > cap:
        raise CapExceededError(f"{len(cells)} {p}-cells exceed cap {cap}")
    width = len(k.cells)

    def independent(subset) -> bool:
        vectors = [k.face_bits[c] for c in subset]
        return oracle.gf2_rank(vectors, width) == len(vectors)

    return SetFamily(frozenset(cells), _grow_family(cells, independent))


def enumerate_cotrees(k: OrderedComplex, p: int, cap: int = 16) -> SetFamily:
    """All p-cell subsets containing no non-empty cocycle (independent rows)."""
    cells = list(k.cells_of_dim(p))
    if len(cells) > cap:
        raise CapExceededError(f"{len(cells)} {p}-cells exceed cap {cap}")
    width = len(k.cells)
    coface_bits = {
        c: sum(1 << j for j in k.cells_of_dim(p + 1) if (k.face_bits[j] >> c) & 1)
        for c in cells
    }

    def independent(subset) -> bool:
        vectors = [coface_bits[c] for c in subset]
        return oracle.gf2_rank(vectors, width) == len(vectors)

    return SetFamily(frozenset(cells), _grow_family(cells, independent))


def enumerate_leftovers(
    k: OrderedComplex, p: int, ordering_cap: int = 5040
) -> SetFamily:
    """Leftover sets over all orderings of the p-cells, closed downward.

    Cells of other dimensions stay in a fixed dimension-sorted arrangement;
    the leftover in dimension p only depends on the relative order of the
    p-cells.  Tri-partitions only produce maximal leftovers, so the family is
    closed downward before use (matroid independence is subset-closed).
    """
    cells = list(k.cells_of_dim(p))
    if factorial(len(cells)) > ordering_cap:
        raise CapExceededError(
            f"{len(cells)}! orderings of the {p}-cells exceed cap {ordering_cap}"
        )
    by_dim = sorted(range(len(k.cells)), key=lambda i: (k.cells[i].dim, i))
    slots = [pos for pos, old in enumerate(by_dim) if k.cells[old].dim == p]

    collected: set[frozenset[int]] = set()
    for perm in permutations(cells):
        order = list(by_dim)
        for pos, cell in zip(slots, perm):
            order[pos] = cell
        shuffled = k.reordered(order)
        tp = tri_partition(shuffled)
        collected.add(frozenset(order[i] for i in tp.leftover[p]))

    members = set(collected)
    queue = list(collected)
    while queue:
        s = queue.pop()
        for e in s:
            smaller = s - {e}
            if smaller not in members:
                members.add(smaller)
                queue.append(smaller)
    closed = members != collected
    return SetFamily(frozenset(cells), frozenset(members), closed_downward=closed)


def check_matroid(family: SetFamily) -> Report:
    """Exchange property over all member pairs, plus equal maximal cardinality."""
    report = Report(name="matroid-exchange")
    if family.closed_downward:
        report.notes.append("family was closed downward before the check")
    members = sorted(family.members, key=lambda f: (len(f), sorted(f)))
    if frozenset() not in family.members:
        report.fail("missing-empty-set")
    for big in members:
        for small in members:
            if len(small) >= len(big):
                continue
            report.checked += 1
            if not any(small | {e} in family.members for e in big - small):
                report.fail("exchange", [big, small])
    maximal_sizes = {len(f) for f in family.maximal_members()}
    report.checked += 1
    if len(maximal_sizes) > 1:
        report.fail(
            "maximal-cardinality",
            [],
            f"maximal member sizes {sorted(maximal_sizes)}",
        )
    return report
