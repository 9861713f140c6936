"""Set-family enumeration and the exchange property."""

import pytest

from tripart import datasets
from tripart.matroid import (
    CapExceededError,
    SetFamily,
    check_matroid,
    enumerate_cotrees,
    enumerate_leftovers,
    enumerate_trees,
)


class TestEnumerateTrees:
    def test_triangle_graph_spanning_trees(self):
        k = datasets.load("triangle_graph")
        family = enumerate_trees(k, 1)
        maximal = {frozenset(m) for m in family.maximal_members()}
        edges = k.cells_of_dim(1)
        want = {frozenset(edges) - {e} for e in edges}
        assert maximal == want

    def test_point_vertex_family(self):
        k = datasets.load("point")
        family = enumerate_trees(k, 0)
        assert family.members == {frozenset(), frozenset({1})}

    def test_annulus_exceeds_cap(self):
        with pytest.raises(CapExceededError):
            enumerate_trees(datasets.load("annulus"), 1)

    def test_annulus_tree_rank_via_oracle(self):
        # Too many edges to enumerate; the maximal size is the block rank.
        from tripart import oracle

        k = datasets.load("annulus")
        block = [k.face_bits[c] for c in k.cells_of_dim(1)]
        assert oracle.gf2_rank(block, len(k.cells)) == 15


class TestEnumerateCotrees:
    def test_triangle_graph_cotree_rank(self):
        # With no 2-cells every edge subset is vacuously a cocycle, so only
        # the empty set is a cotree; the coface-row rank oracle agrees.
        from tripart import oracle
        from tripart.bases import coboundary_of

        k = datasets.load("triangle_graph")
        family = enumerate_cotrees(k, 1)
        rows = [coboundary_of(k, frozenset([c]), 1) for c in k.cells_of_dim(1)]
        assert oracle.gf2_rank(rows, len(k.cells)) == 0
        assert family.members == {frozenset()}
        assert family.rank() == 0

    def test_empty_dimension(self):
        k = datasets.load("point")
        family = enumerate_cotrees(k, 3)
        assert family.members == {frozenset()}

    def test_wheel_exceeds_cap(self):
        # 32 edges cannot be enumerated; the stated maximal cotree size 16 is
        # covered by the tri-partition acceptance checks instead.
        with pytest.raises(CapExceededError):
            enumerate_cotrees(datasets.load("wheel"), 1)


class TestEnumerateLeftovers:
    def test_wheel_like_acyclic_dimension_gives_empty_family(self):
        k = datasets.load("tetrahedron_boundary")
        family = enumerate_leftovers(k, 1)  # dim-1 homology is trivial
        assert family.members == {frozenset()}

    def test_triangle_graph_singletons(self):
        k = datasets.load("triangle_graph")
        family = enumerate_leftovers(k, 1)
        maximal = {frozenset(m) for m in family.maximal_members()}
        assert maximal == {frozenset({e}) for e in k.cells_of_dim(1)}

    def test_cap(self):
        k = datasets.load("triangle_graph")
        with pytest.raises(CapExceededError):
            enumerate_leftovers(k, 1, ordering_cap=2)

    def test_closure_flag(self):
        k = datasets.load("annulus_coarse")
        family = enumerate_leftovers(k, 1)
        assert frozenset() in family.members


class TestCheckMatroid:
    def test_triangle_trees_pass(self):
        k = datasets.load("triangle_graph")
        assert check_matroid(enumerate_trees(k, 1)).passed

    def test_constructed_counterexample(self):
        family = SetFamily(
            ground=frozenset({0, 1, 2}),
            members=frozenset(
                {
                    frozenset(),
                    frozenset({0}),
                    frozenset({1}),
                    frozenset({0, 1}),
                    frozenset({2}),
                }
            ),
        )
        report = check_matroid(family)
        assert not report.passed
        assert any(f.check == "exchange" for f in report.failures)
        witness = next(f for f in report.failures if f.check == "exchange")
        assert witness.witnesses == ((0, 1), (2,))

    def test_leftover_family_is_uniform_matroid(self):
        k = datasets.load("triangle_graph")
        family = enumerate_leftovers(k, 1)
        report = check_matroid(family)
        assert report.passed
        assert family.rank() == 1

    def test_all_small_bundled_families(self):
        from tripart.reduction import (
            betti_numbers,
            classify,
            exhaustive_column_reduce,
        )

        for name in (
            "triangle_graph",
            "tetrahedron_boundary",
            "annulus_coarse",
            "two_component_graph",
        ):
            k = datasets.load(name)
            table = classify(exhaustive_column_reduce(k.boundary_matrix()), k)
            betti = betti_numbers(k)
            for p in range(0, k.dim + 1):
                if k.counts[p] > 7:
                    continue
                trees = enumerate_trees(k, p)
                cotrees = enumerate_cotrees(k, p)
                leftovers = enumerate_leftovers(k, p)
                assert check_matroid(trees).passed
                assert check_matroid(cotrees).passed
                assert check_matroid(leftovers).passed
                assert trees.rank() == table.deaths[p]
                assert cotrees.rank() == table.codeaths[p]
                assert leftovers.rank() == betti[p]
