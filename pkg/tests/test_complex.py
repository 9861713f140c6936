"""Complex parsing, validation, and structural invariants."""

import random

import pytest

from tripart import datasets, generate
from tripart.complexes import (
    ComplexFormatError,
    from_boundary_format,
    from_simplicial_format,
    simplex_lines,
)
from tripart.reduction import betti_numbers

HOLLOW_TRIANGLE = "0\n1\n2\n0 1\n0 2\n1 2\n"


def code_of(excinfo):
    return excinfo.value.code


class TestBoundaryFormat:
    def test_single_edge(self):
        k = from_boundary_format("0 :\n0 :\n1 : 0 1\n")
        assert len(k.cells) == 4
        assert k.cells[3].faces == {1, 2}

    def test_annulus_counts(self):
        k = datasets.load("annulus")
        assert len(k.cells) == 49
        assert k.counts == {-1: 1, 0: 16, 1: 24, 2: 8}

    def test_edge_before_vertex_is_non_monotonic(self):
        with pytest.raises(ComplexFormatError) as err:
            from_boundary_format("0 :\n1 : 0 2\n0 :\n")
        assert code_of(err) == "NON_MONOTONIC"

    def test_face_dimension_mismatch(self):
        with pytest.raises(ComplexFormatError) as err:
            from_boundary_format("0 :\n0 :\n1 : 0 1\n2 : 0 2\n")
        assert code_of(err) == "DIM_MISMATCH"

    def test_ddzero_violation(self):
        # A 2-cell bounded by a single edge: its vertices appear once each.
        with pytest.raises(ComplexFormatError) as err:
            from_boundary_format("0 :\n0 :\n1 : 0 1\n2 : 2\n")
        assert code_of(err) == "DDZERO_VIOLATION"

    def test_parse_errors(self):
        for text in ("nonsense\n", "x :\n", "0 : y\n", "-1 :\n", "1 : -2\n", "1 : 0 0\n"):
            with pytest.raises(ComplexFormatError) as err:
                from_boundary_format("0 :\n" + text)
            assert code_of(err) == "PARSE"

    def test_positive_dim_cell_needs_faces(self):
        with pytest.raises(ComplexFormatError) as err:
            from_boundary_format("0 :\n1 :\n")
        assert code_of(err) == "DIM_MISMATCH"

    def test_comments_and_blanks(self):
        k = from_boundary_format("# a point\n\n0 :  # the vertex\n")
        assert len(k.cells) == 2


class TestSimplicialFormat:
    def test_hollow_triangle(self):
        k = from_simplicial_format(HOLLOW_TRIANGLE)
        assert len(k.cells) == 7
        assert k.counts == {-1: 1, 0: 3, 1: 3}

    def test_completion_of_a_bare_triangle(self):
        k = from_simplicial_format("0 1 2\n", complete=True)
        assert len(k.cells) == 8
        assert k.counts == {-1: 1, 0: 3, 1: 3, 2: 1}

    def test_missing_face_without_complete(self):
        with pytest.raises(ComplexFormatError) as err:
            from_simplicial_format("0 1 2\n")
        assert code_of(err) == "MISSING_FACE"

    def test_duplicate_cell(self):
        with pytest.raises(ComplexFormatError) as err:
            from_simplicial_format("0\n0\n")
        assert code_of(err) == "DUPLICATE_CELL"

    def test_unsorted_labels_rejected(self):
        with pytest.raises(ComplexFormatError) as err:
            from_simplicial_format("1 0\n")
        assert code_of(err) == "PARSE"

    def test_completion_idempotent(self):
        k = from_simplicial_format("0 1 2\n2 3\n", complete=True)
        lines = simplex_lines(k)
        again = from_simplicial_format("\n".join(lines), complete=True)
        assert simplex_lines(again) == lines
        assert again == k

    def test_empty_text_gives_empty_complex(self):
        k = from_simplicial_format("")
        assert len(k.cells) == 1
        assert k.dim == -1


class TestBoundaryMatrix:
    def test_single_vertex(self):
        k = from_simplicial_format("0\n")
        d = k.boundary_matrix()
        assert d.size == 2
        assert d.get(0, 1) == 1 and d.nnz() == 1

    def test_hollow_triangle_column_counts(self):
        k = from_simplicial_format(HOLLOW_TRIANGLE)
        d = k.boundary_matrix()
        for j in (1, 2, 3):
            assert len(d.column_support(j)) == 1
        for j in (4, 5, 6):
            assert len(d.column_support(j)) == 2

    def test_annulus_matrix(self):
        k = datasets.load("annulus")
        d = k.boundary_matrix()
        assert d.size == 49
        assert d.is_upper_triangular(strict=True)
        for j in k.cells_of_dim(2):
            assert len(d.column_support(j)) == 4

    def test_boundary_squares_to_zero_on_random_complexes(self):
        for seed in range(10):
            k = generate.random_complex(random.Random(seed))
            d = k.boundary_matrix()
            assert d.matmul_gf2(d).nnz() == 0


class TestEulerCharacteristic:
    def test_empty_complex(self):
        assert from_simplicial_format("").reduced_euler_characteristic() == -1

    def test_point(self):
        assert datasets.load("point").reduced_euler_characteristic() == 0

    def test_annulus(self):
        k = datasets.load("annulus")
        assert k.reduced_euler_characteristic() == -1 + 16 - 24 + 8 == -1

    def test_matches_alternating_betti_sum(self):
        for name in datasets.names():
            k = datasets.load(name)
            betti = betti_numbers(k)
            total = sum((1 if p % 2 == 0 else -1) * b for p, b in betti.items())
            assert k.reduced_euler_characteristic() == total


class TestPrefix:
    def test_first_prefix_is_empty_complex(self):
        k = datasets.load("annulus")
        assert len(k.prefix(0).cells) == 1

    def test_full_prefix_is_identity(self):
        k = datasets.load("annulus")
        assert k.prefix(len(k.cells) - 1) == k

    def test_annulus_prefix_at_last_vertex(self):
        k = datasets.load("annulus")
        sub = k.prefix(16)
        assert len(sub.cells) == 17
        assert sub.dim == 0

    def test_out_of_range(self):
        k = datasets.load("point")
        with pytest.raises(IndexError):
            k.prefix(2)


class TestReordered:
    def test_roundtrip_identity(self):
        k = datasets.load("triangle_graph")
        assert k.reordered(list(range(len(k.cells)))) == k

    def test_random_monotonic_orders_validate(self):
        k = datasets.load("tetrahedron_boundary")
        for seed in range(5):
            shuffled, order = generate.shuffled_complex(k, random.Random(seed))
            assert sorted(order) == list(range(len(k.cells)))

    def test_non_monotonic_order_rejected(self):
        k = datasets.load("point")  # cells: empty, vertex
        with pytest.raises((ComplexFormatError, ValueError)):
            k.reordered([1, 0])
