"""Seeded random complexes and random monotonic orderings.

A random complex is built by sampling every possible simplex of dimension
up to three with probability one half, conditioned on all of its facets
being present, over at most twelve vertices; validity then holds by
construction, and the Betti profiles vary widely.
"""

from __future__ import annotations

import random
from itertools import combinations

from .complexes import OrderedComplex, from_simplicial_format

__all__ = ["random_complex", "random_monotonic_order", "shuffled_complex"]


def random_complex(
    rng: random.Random, max_vertices: int = 12, max_dim: int = 3
) -> OrderedComplex:
    """Sample a simplicial complex; may be empty (just the empty cell)."""
    labels = range(rng.randint(1, max_vertices))
    chosen: set[tuple[int, ...]] = set()
    lines: list[str] = []
    for size in range(1, max_dim + 2):
        for simplex in combinations(labels, size):
            facets = list(combinations(simplex, size - 1)) if size > 1 else []
            if all(f in chosen for f in facets) and rng.random() < 0.5:
                chosen.add(simplex)
                lines.append(" ".join(map(str, simplex)))
    return from_simplicial_format("\n".join(lines))


def random_monotonic_order(k: OrderedComplex, rng: random.Random) -> list[int]:
    """A uniform-ish random topological order of the cells (faces first)."""
    n = len(k.cells)
    missing = [len(k.cells[i].faces) for i in range(n)]
    ready = [i for i in range(n) if missing[i] == 0]
    cofaces: dict[int, list[int]] = {i: [] for i in range(n)}
    for c in k.cells:
        for f in c.faces:
            cofaces[f].append(c.id)
    order = []
    while ready:
        pick = rng.randrange(len(ready))
        ready[pick], ready[-1] = ready[-1], ready[pick]
        cell = ready.pop()
        order.append(cell)
        for cf in cofaces[cell]:
            missing[cf] -= 1
            if missing[cf] == 0:
                ready.append(cf)
    return order


def shuffled_complex(
    k: OrderedComplex, rng: random.Random
) -> tuple[OrderedComplex, list[int]]:
    """The complex under a random monotonic reordering, plus the order used."""
    order = random_monotonic_order(k, rng)
    return k.reordered(order), order
