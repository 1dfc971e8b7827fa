"""Exact linear algebra: canonical subspaces, rref, nullspace, scalar text."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nillab.errors import ContainmentError, DimensionMismatch
from nillab.linalg import (
    Matrix,
    Subspace,
    nullspace,
    rref,
    scalar_from_str,
    scalar_to_str,
    span,
)

F = Fraction


class TestScalarText:
    def test_denominator_omitted_when_one(self):
        assert scalar_to_str(F(-3)) == "-3"
        assert scalar_to_str(F(7, 2)) == "7/2"
        assert scalar_to_str(F(-14, 4)) == "-7/2"

    def test_parse_inverse(self):
        assert scalar_from_str("7/2") == F(7, 2)
        assert scalar_from_str("-3") == F(-3)

    @settings(max_examples=200, deadline=None)
    @given(num=st.integers(-10**18, 10**18), den=st.integers(1, 10**12))
    def test_round_trip_lossless(self, num, den):
        x = F(num, den)
        assert scalar_from_str(scalar_to_str(x)) == x


class TestMatrix:
    def test_shape_validation(self):
        with pytest.raises(DimensionMismatch):
            Matrix([[1, 2], [3]])

    def test_mul_shape_validation(self):
        with pytest.raises(DimensionMismatch):
            Matrix([[1, 2]]) * Matrix([[1, 2]])

    def test_arithmetic(self):
        a = Matrix([[1, 2], [3, 4]])
        b = Matrix([[0, 1], [1, 0]])
        assert (a * b).data == ((2, 1), (4, 3))
        assert (a + b).data == ((1, 3), (4, 4))
        assert (a - a).is_zero()
        assert (-a).data == ((-1, -2), (-3, -4))
        assert a.transpose().data == ((1, 3), (2, 4))

    def test_strictly_upper(self):
        assert Matrix([[0, 5], [0, 0]]).is_strictly_upper()
        assert not Matrix([[1, 5], [0, 0]]).is_strictly_upper()
        assert not Matrix([[0, 0], [5, 0]]).is_strictly_upper()


class TestRref:
    def test_identity_fixed(self):
        eye = Matrix.identity(3)
        got, piv = rref(eye)
        assert got == eye
        assert piv == (0, 1, 2)

    def test_zero_matrix(self):
        z = Matrix.zero(2, 3)
        got, piv = rref(z)
        assert got == z
        assert piv == ()

    def test_dependent_rows(self):
        got, piv = rref(Matrix([[2, 4], [1, 2]]))
        assert got == Matrix([[1, 2], [0, 0]])
        assert piv == (0,)

    def test_rational_entries(self):
        got, piv = rref(Matrix([[F(1, 2), F(1, 3)], [F(3, 2), 1]]))
        assert piv == (0,)
        assert got.data[0] == (1, F(2, 3))


class TestNullspace:
    def test_identity_has_zero_kernel(self):
        assert nullspace(Matrix.identity(4)).dim == 0

    def test_zero_matrix_has_full_kernel(self):
        ns = nullspace(Matrix.zero(2, 3))
        assert ns == Subspace.full(3)

    def test_single_equation(self):
        ns = nullspace(Matrix([[1, 2]]))
        assert ns.dim == 1
        assert ns == span([(-2, 1)])
        assert ns.contains((-2, 1))

    @settings(max_examples=40, deadline=None)
    @given(
        rows=st.lists(
            st.lists(st.integers(-9, 9), min_size=4, max_size=4),
            min_size=1,
            max_size=6,
        )
    )
    def test_rank_nullity_and_annihilation(self, rows):
        mat = Matrix(rows)
        _, piv = rref(mat)
        ns = nullspace(mat)
        assert len(piv) + ns.dim == mat.cols
        for vec in ns.basis:
            for row in mat.data:
                assert sum(a * b for a, b in zip(row, vec)) == 0


class TestSpan:
    def test_empty_needs_ambient(self):
        assert span([], ambient=3).dim == 0
        with pytest.raises(DimensionMismatch):
            span([])

    def test_dependent_pair(self):
        s = span([(1, 0), (2, 0)])
        assert s.dim == 1
        assert s.basis == ((1, 0),)

    def test_hand_reduced_example(self):
        s = span([(1, 1, 0), (0, 1, 1)])
        assert s.dim == 2
        assert s.basis == ((1, 0, -1), (0, 1, 1))

    def test_ragged_vectors_rejected(self):
        with pytest.raises(DimensionMismatch):
            span([(1, 0), (1, 0, 0)])

    def test_idempotent_on_basis(self):
        s = span([(2, 4, 1), (1, 1, 1), (3, 5, 2)])
        assert span(s.basis) == s

    @settings(max_examples=60, deadline=None)
    @given(
        vecs=st.lists(
            st.lists(st.integers(-8, 8), min_size=3, max_size=3),
            min_size=1,
            max_size=4,
        ),
        perm=st.randoms(use_true_random=False),
        scale=st.integers(1, 7),
    )
    def test_canonical_under_permutation_and_scaling(self, vecs, perm, scale):
        base = span(vecs, ambient=3)
        shuffled = list(vecs)
        perm.shuffle(shuffled)
        rescaled = [[scale * x for x in shuffled[0]]] + shuffled[1:]
        assert span(rescaled, ambient=3) == base


class TestSubspaceOps:
    def test_contains(self):
        s = span([(1, 0)])
        assert not s.contains((0, 1))
        assert s.contains((5, 0))
        assert s.contains((F(1, 2), 0))

    def test_sum_spans_both(self):
        s = span([(1, 0)]).sum(span([(0, 1)]))
        assert s == Subspace.full(2)

    def test_codim(self):
        line = span([(1, 0, 0)])
        assert line.codim_in(Subspace.full(3)) == 2

    def test_codim_requires_containment(self):
        with pytest.raises(ContainmentError):
            span([(1, 1)]).codim_in(span([(1, 0)]))

    def test_reduce_mod_zeroes_pivot_columns(self):
        s = span([(1, 0, 2)])
        red = s.reduce_mod((3, 1, 1))
        assert red[0] == 0
        assert red == (0, 1, -5)

    @settings(max_examples=60, deadline=None)
    @given(
        a=st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), max_size=3),
        b=st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), max_size=3),
    )
    def test_sum_dim_bounds_with_intersection(self, a, b):
        sa, sb = span(a, ambient=4), span(b, ambient=4)
        total = sa.sum(sb)
        assert total.dim <= sa.dim + sb.dim
        # equality exactly when the intersection is trivial
        inter_dim = sa.dim + sb.dim - total.dim
        assert (total.dim == sa.dim + sb.dim) == (inter_dim == 0)
        assert sa.is_subspace_of(total) and sb.is_subspace_of(total)
