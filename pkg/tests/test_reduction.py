"""Reduction algebra: frozen hand-worked matrices, duality, and oracles."""

import random

import pytest

from tripart import datasets, generate, oracle
from tripart.complexes import from_simplicial_format
from tripart.gf2 import Gf2Matrix
from tripart.reduction import (
    Label,
    betti_numbers,
    classify,
    exhaustive_column_reduce,
    exhaustive_row_reduce,
    is_exhaustively_reduced,
    randomized_column_reduce_pair,
    randomized_row_reduce,
    relative_cohomology_ranks,
)

HOLLOW_TRIANGLE = "0\n1\n2\n0 1\n0 2\n1 2\n"


class TestColumnReduce:
    def test_zero_matrix(self):
        cr = exhaustive_column_reduce(Gf2Matrix(4))
        assert cr.reduced.nnz() == 0
        assert cr.transform == Gf2Matrix.identity(4)
        assert cr.pairs == frozenset()

    def test_hollow_triangle_frozen(self):
        # Worked by hand: cells are empty(0), v0..v2 (1..3), e01(4), e02(5),
        # e12(6).  The two early edges keep their columns, the closing edge
        # reduces to zero and its transform column holds all three edges.
        k = from_simplicial_format(HOLLOW_TRIANGLE)
        cr = exhaustive_column_reduce(k.boundary_matrix())
        supports = [sorted(cr.reduced.column_support(j)) for j in range(7)]
        assert supports == [[], [0], [], [], [1, 2], [1, 3], []]
        mixes = [sorted(cr.transform.column_support(j)) for j in range(7)]
        assert mixes == [[0], [1], [1, 2], [1, 3], [4], [5], [4, 5, 6]]
        assert cr.low_of == (None, 0, None, None, 2, 3, None)
        assert cr.pairs == {(0, 1), (2, 4), (3, 5)}

    def test_annulus_edge_columns(self):
        k = datasets.load("annulus")
        cr = exhaustive_column_reduce(k.boundary_matrix())
        nonzero_edges = [j for j in k.cells_of_dim(1) if not cr.is_birth(j)]
        assert len(nonzero_edges) == 15

    def test_requires_upper_triangular(self):
        m = Gf2Matrix(2)
        m.set(1, 0, 1)
        with pytest.raises(ValueError):
            exhaustive_column_reduce(m)

    def test_reduction_relation_and_exhaustiveness(self):
        for name in datasets.names():
            k = datasets.load(name)
            d = k.boundary_matrix()
            cr = exhaustive_column_reduce(d)
            assert cr.reduced == d.matmul_gf2(cr.transform)
            assert cr.transform.is_upper_triangular()
            assert all(cr.transform.get(j, j) == 1 for j in range(d.size))
            assert is_exhaustively_reduced(cr.reduced, cr.low_of)
            lows = [low for low in cr.low_of if low is not None]
            assert len(lows) == len(set(lows))


class TestRowReduce:
    def test_zero_matrix(self):
        rr = exhaustive_row_reduce(Gf2Matrix(3))
        assert rr.reduced.nnz() == 0
        assert rr.transform == Gf2Matrix.identity(3)

    def test_hollow_triangle_frozen(self):
        # Worked by hand with the bottom-to-top sweep directly.
        k = from_simplicial_format(HOLLOW_TRIANGLE)
        rr = exhaustive_row_reduce(k.boundary_matrix())
        rows = [sorted(rr.reduced.row_support(i)) for i in range(7)]
        assert rows == [[1, 2, 3], [], [4, 6], [5, 6], [], [], []]
        mixes = [sorted(rr.transform.row_support(i)) for i in range(7)]
        assert mixes == [[0], [1, 2, 3], [2], [3], [4], [5], [6]]
        assert rr.left_of == (1, None, 4, 5, None, None, None)

    def test_annulus_edge_rows(self):
        k = datasets.load("annulus")
        rr = exhaustive_row_reduce(k.boundary_matrix())
        nonzero_edges = [i for i in k.cells_of_dim(1) if not rr.is_cobirth(i)]
        assert len(nonzero_edges) == 8

    def test_matches_direct_row_sweep(self):
        for name in ("triangle_graph", "annulus_coarse", "tetrahedron_boundary"):
            k = datasets.load(name)
            d = k.boundary_matrix()
            rr = exhaustive_row_reduce(d)
            q, v = oracle.direct_row_reduce(d)
            assert rr.reduced == q
            assert rr.transform == v
            assert rr.reduced == rr.transform.matmul_gf2(d)


class TestPairingDuality:
    def test_low_pairs_equal_left_pairs(self):
        for seed in range(15):
            k = generate.random_complex(random.Random(seed))
            d = k.boundary_matrix()
            assert exhaustive_column_reduce(d).pairs == exhaustive_row_reduce(d).pairs

    def test_pairs_match_standard_reduction(self):
        for seed in range(15):
            k = generate.random_complex(random.Random(1000 + seed))
            d = k.boundary_matrix()
            assert exhaustive_column_reduce(d).pairs == oracle.standard_reduce_pairs(d)


class TestClassify:
    def test_empty_cell_is_birth_first_vertex_is_death(self):
        k = datasets.load("point")
        table = classify(exhaustive_column_reduce(k.boundary_matrix()), k)
        assert table.labels[0] is Label.BIRTH
        assert table.labels[1] is Label.DEATH

    def test_annulus_edge_counts(self):
        k = datasets.load("annulus")
        table = classify(exhaustive_column_reduce(k.boundary_matrix()), k)
        assert table.deaths[1] == 15
        assert table.births[1] == 9

    def test_counts_partition_cells(self):
        for name in datasets.names():
            k = datasets.load(name)
            table = classify(exhaustive_column_reduce(k.boundary_matrix()), k)
            for p in range(-1, k.dim + 1):
                assert table.births[p] + table.deaths[p] == k.counts[p]
                assert table.cobirths[p] + table.codeaths[p] == k.counts[p]


class TestBettiNumbers:
    def test_empty_complex(self):
        k = from_simplicial_format("")
        assert betti_numbers(k) == {-1: 1}
        assert relative_cohomology_ranks(k) == {-1: 1}

    def test_point_is_acyclic(self):
        k = datasets.load("point")
        assert betti_numbers(k) == {-1: 0, 0: 0}
        assert relative_cohomology_ranks(k) == {-1: 0, 0: 0}

    def test_annulus(self):
        assert betti_numbers(datasets.load("annulus")) == {-1: 0, 0: 0, 1: 1, 2: 0}

    def test_tetrahedron_boundary_is_a_sphere(self):
        assert betti_numbers(datasets.load("tetrahedron_boundary")) == {
            -1: 0,
            0: 0,
            1: 0,
            2: 1,
        }

    def test_homology_equals_cohomology(self):
        for seed in range(20):
            k = generate.random_complex(random.Random(2000 + seed))
            assert betti_numbers(k) == relative_cohomology_ranks(k)

    def test_matches_rank_oracle(self):
        for seed in range(20):
            k = generate.random_complex(random.Random(3000 + seed))
            assert betti_numbers(k) == oracle.betti_via_rank(k)

    def test_order_invariance(self):
        for seed in range(8):
            rng = random.Random(4000 + seed)
            k = generate.random_complex(rng)
            betti = betti_numbers(k)
            shuffled, _ = generate.shuffled_complex(k, rng)
            assert betti_numbers(shuffled) == betti


class TestUniqueness:
    def test_randomized_candidate_orders(self):
        for seed in range(6):
            rng = random.Random(5000 + seed)
            k = generate.random_complex(rng)
            d = k.boundary_matrix()
            cr = exhaustive_column_reduce(d)
            rr = exhaustive_row_reduce(d)
            for run in range(5):
                r2, u2 = randomized_column_reduce_pair(d, random.Random(seed * 1000 + run))
                assert (r2, u2) == (cr.reduced, cr.transform)
                q2, v2 = randomized_row_reduce(d, random.Random(seed * 1000 + run))
                assert (q2, v2) == (rr.reduced, rr.transform)
