"""Canonical payload extraction, the six basis claims, and intersections."""

import random
from itertools import chain, combinations

import numpy as np
import pytest

from tripart import datasets, generate
from tripart.bases import (
    Kind,
    VerifyFailError,
    boundary_of,
    coboundary_of,
    dump_bases,
    extract_bases,
    intersection_matrix,
    verify_boundary_basis,
    verify_cobases,
    verify_cycle_basis,
    verify_homology_generators,
    verify_intersection_patterns,
)
from tripart.complexes import from_simplicial_format
from tripart.gf2 import Gf2Matrix
from tripart.reduction import exhaustive_column_reduce, exhaustive_row_reduce
from tripart.tripartition import tri_partition

HOLLOW_TRIANGLE = "0\n1\n2\n0 1\n0 2\n1 2\n"


def full_setup(k):
    d = k.boundary_matrix()
    cr = exhaustive_column_reduce(d)
    rr = exhaustive_row_reduce(d)
    tp = tri_partition(k)
    return cr, rr, tp, extract_bases(cr, rr, tp)


def subsets(xs):
    return chain.from_iterable(combinations(xs, r) for r in range(len(xs) + 1))


class TestExtract:
    def test_hollow_triangle_closing_edge_cycle(self):
        k = from_simplicial_format(HOLLOW_TRIANGLE)
        _, _, tp, bs = full_setup(k)
        assert 6 in tp.leftover[1]
        assert bs.homology_kind[6] is Kind.CYCLE
        assert bs.homology_members[6] == {4, 5, 6}  # all three edges

    def test_point_vertex_chain(self):
        k = datasets.load("point")
        _, _, tp, bs = full_setup(k)
        assert 1 in tp.tree[0]
        assert bs.homology_kind[1] is Kind.CHAIN
        assert bs.homology_members[1] == {1}
        assert boundary_of(k, bs.homology_members[1]) == 1  # bit of the empty cell

    def test_annulus_unused_edge_payloads(self):
        k = datasets.load("annulus")
        _, _, tp, bs = full_setup(k)
        (edge,) = tp.leftover[1]
        cycle = bs.homology_members[edge]
        cocycle = bs.cohomology_members[edge]
        assert edge in cycle and edge in cocycle
        assert cycle - {edge} <= tp.tree[1]
        assert cocycle - {edge} <= tp.cotree[1]
        assert boundary_of(k, cycle) == 0
        assert coboundary_of(k, cocycle, 1) == 0

    def test_size_mismatch_rejected(self):
        k1 = datasets.load("point")
        k2 = datasets.load("triangle_graph")
        cr1, rr1, tp1, _ = full_setup(k1)
        _, rr2, _, _ = full_setup(k2)
        with pytest.raises(ValueError):
            extract_bases(cr1, rr2, tp1)


class TestSixBasisClaims:
    @pytest.mark.parametrize("name", datasets.names())
    def test_all_reports_pass(self, name):
        k = datasets.load(name)
        _, _, _, bs = full_setup(k)
        for p in range(-1, k.dim + 1):
            for verify in (
                verify_cycle_basis,
                verify_boundary_basis,
                verify_homology_generators,
                verify_cobases,
            ):
                report = verify(bs, k, p)
                assert report.passed, report.render()

    def test_cycle_basis_rank_above_dimension(self):
        k = datasets.load("point")
        _, _, _, bs = full_setup(k)
        report = verify_cycle_basis(bs, k, 5)
        assert report.passed

    def test_annulus_cycle_basis_rank(self):
        k = datasets.load("annulus")
        _, _, tp, _ = full_setup(k)
        # 24 edges minus the 15 independent boundary columns leaves rank 9.
        assert len(tp.cotree[1]) + len(tp.leftover[1]) == 9

    def test_wheel_has_no_dim1_generators(self):
        k = datasets.load("wheel")
        _, _, tp, bs = full_setup(k)
        assert tp.leftover[1] == frozenset()
        assert verify_homology_generators(bs, k, 1).passed

    def test_empty_complex_generator(self):
        k = from_simplicial_format("")
        _, _, tp, bs = full_setup(k)
        assert tp.leftover[-1] == {0}
        assert verify_homology_generators(bs, k, -1).passed


class TestCanonicalUniqueness:
    def test_unique_cycle_through_each_basis_cell(self):
        for name in ("triangle_graph", "annulus_coarse", "tetrahedron_boundary"):
            k = datasets.load(name)
            _, _, tp, bs = full_setup(k)
            for p in range(0, k.dim + 1):
                tree = sorted(tp.tree[p])
                for j in sorted(tp.cotree[p] | tp.leftover[p]):
                    found = [
                        set(s) | {j}
                        for s in subsets(tree)
                        if boundary_of(k, frozenset(s) | {j}) == 0
                    ]
                    assert found == [set(bs.homology_members[j])]


class TestIntersectionMatrix:
    def test_unit_upper_triangular(self):
        for name in datasets.names():
            k = datasets.load(name)
            cr, rr, _, _ = full_setup(k)
            vu = intersection_matrix(cr, rr)
            assert np.array_equal(np.diag(vu), np.ones(len(k.cells), dtype=np.int64))
            assert not np.any(np.tril(vu, -1))
            assert vu.min() >= 0 and vu.max() <= 2

    def test_membership_rule_everywhere(self):
        for name in datasets.names():
            k = datasets.load(name)
            cr, rr, _, bs = full_setup(k)
            vu = intersection_matrix(cr, rr)
            report = verify_intersection_patterns(vu, bs, k)
            assert report.passed, report.render()

    def test_leftover_block_is_identity(self):
        for seed in range(8):
            k = generate.random_complex(random.Random(11000 + seed))
            cr, rr, tp, _ = full_setup(k)
            vu = intersection_matrix(cr, rr)
            for p in range(-1, k.dim + 1):
                left = sorted(tp.leftover[p])
                for i in left:
                    for j in left:
                        assert vu[i, j] == (1 if i == j else 0)

    def test_invalid_matrix_rejected(self):
        k = datasets.load("point")
        cr, rr, _, _ = full_setup(k)
        broken = exhaustive_column_reduce(Gf2Matrix(2))
        bad = type(cr)(
            reduced=cr.reduced,
            transform=Gf2Matrix(2),  # zero diagonal
            low_of=cr.low_of,
            pairs=cr.pairs,
        )
        with pytest.raises(VerifyFailError):
            intersection_matrix(bad, rr)
        assert broken.transform == Gf2Matrix.identity(2)

    def test_strict_crossing_counterexample_two_segments(self):
        # Two disjoint segments: the tree vertex lies in the cotree vertex's
        # canonical cycle, but not the other way around, giving entry 1 on a
        # tree-by-cotree pair.  The membership rule accounts for it; the
        # strict rule reports exactly this pair.
        k = from_simplicial_format("0\n1\n2\n3\n0 1\n2 3\n")
        cr, rr, tp, bs = full_setup(k)
        assert tp.tree[0] == {1} and tp.cotree[0] == {2, 4} and tp.leftover[0] == {3}
        vu = intersection_matrix(cr, rr)
        assert vu[1, 4] == 1
        assert verify_intersection_patterns(vu, bs, k).passed
        strict = verify_intersection_patterns(vu, bs, k, strict_crossings=True)
        assert not strict.passed
        witnessed = {f.witnesses for f in strict.failures}
        assert ((1,), (4,)) in witnessed

    def test_annulus_strict_crossing_violations_frozen(self):
        # Derived by direct cocycle construction: the canonical cocycle of
        # each of the seven tree inner-ring edges contains the cotree
        # outer-ring edge, whose own canonical cycle (the outer ring) misses
        # them; seven one-sided pairs.
        k = datasets.load("annulus")
        cr, rr, _, bs = full_setup(k)
        vu = intersection_matrix(cr, rr)
        strict = verify_intersection_patterns(vu, bs, k, strict_crossings=True)
        pairs = {
            f.witnesses
            for f in strict.failures
            if f.check == "two-crossings-mismatch"
        }
        assert pairs == {((i,), (32,)) for i in range(17, 24)}


class TestDump:
    def test_dump_lines_external_indices(self):
        k = datasets.load("point")
        _, _, _, bs = full_setup(k)
        lines = dump_bases(bs, k).splitlines()
        assert lines == [
            "-1 CYCLE: -1",
            "0 CHAIN: 0",
            "-1 COCHAIN: -1",
            "0 COCYCLE: 0",
        ]
