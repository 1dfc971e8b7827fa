"""Lie engine: brackets, closures, tensors, series, derivations."""

from fractions import Fraction

import pytest

from nillab.errors import (
    DimensionMismatch,
    InvalidGenerator,
    NotASubalgebra,
)
from nillab.lie import (
    MatrixLieAlgebra,
    StructureTensor,
    center,
    derivation_algebra,
    derived_series,
    flatten_strict_upper,
    full_upper_nilpotent,
    generate_subalgebra,
    generators_count,
    is_characteristically_nilpotent,
    is_derivation,
    jacobi_check,
    jordan_block,
    lower_central_series,
    mat_bracket,
    nilpotency,
    restrict_to_subalgebra,
    structure_tensor,
    unflatten_strict_upper,
    upper_central_series,
)
from nillab.linalg import Matrix, Subspace, span


def unit(m, i, j):
    rows = [[0] * m for _ in range(m)]
    rows[i][j] = 1
    return Matrix(rows)


HEISENBERG = StructureTensor(3, {(0, 1): (0, 0, 1)})
ABELIAN2 = StructureTensor(2, {})
# [e1, e2] = e2: solvable but not nilpotent
AFFINE = StructureTensor(2, {(0, 1): (0, 1)})


class TestMatBracket:
    def test_self_bracket_is_zero(self):
        a = Matrix([[0, 3, 1], [0, 0, -2], [0, 0, 0]])
        assert mat_bracket(a, a).is_zero()

    def test_matrix_units(self):
        assert mat_bracket(unit(3, 0, 1), unit(3, 1, 2)) == unit(3, 0, 2)

    def test_jordan_with_unit_via_products(self):
        j = jordan_block(3)
        e12 = unit(3, 0, 1)
        direct = j * e12 - e12 * j
        assert mat_bracket(j, e12) == direct
        assert direct == -unit(3, 0, 2)

    def test_order_mismatch(self):
        with pytest.raises(DimensionMismatch):
            mat_bracket(Matrix.zero(2, 2), Matrix.zero(3, 3))


class TestJordanBlock:
    def test_smallest_orders(self):
        assert jordan_block(1).is_zero()
        assert jordan_block(2) == Matrix([[0, 1], [0, 0]])

    def test_nilpotency_index_via_powers(self):
        j = jordan_block(4)
        p = j
        for _ in range(2):
            p = p * j
        assert p == unit(4, 0, 3)  # J^3
        assert (p * j).is_zero()  # J^4

    def test_invalid_order(self):
        with pytest.raises(ValueError):
            jordan_block(0)


class TestFullUpperNilpotent:
    def test_smallest_cases(self):
        n2 = full_upper_nilpotent(2)
        assert n2.dim == 1
        assert structure_tensor(n2).table == {}
        n3 = full_upper_nilpotent(3)
        assert n3.dim == 3
        assert nilpotency(structure_tensor(n3)) == (True, 2)

    def test_invalid_order(self):
        with pytest.raises(ValueError):
            full_upper_nilpotent(1)

    @pytest.mark.parametrize("m", range(2, 11))
    def test_dim_class_center_family(self, m):
        alg = full_upper_nilpotent(m)
        assert alg.dim == m * (m - 1) // 2
        tensor = structure_tensor(alg)
        assert nilpotency(tensor) == (True, m - 1)
        assert center(tensor).dim == 1

    def test_basis_is_matrix_units_in_flattening_order(self):
        alg = full_upper_nilpotent(3)
        assert alg.basis == (unit(3, 0, 1), unit(3, 0, 2), unit(3, 1, 2))


class TestGenerateSubalgebra:
    def test_zero_generator(self):
        assert generate_subalgebra([Matrix.zero(3, 3)]).dim == 0

    def test_two_noncommuting_span_all_of_order_three(self):
        alg = generate_subalgebra([unit(3, 0, 1), unit(3, 1, 2)])
        assert alg.dim == 3
        assert alg.coords == full_upper_nilpotent(3).coords

    def test_rejects_non_upper(self):
        with pytest.raises(InvalidGenerator):
            generate_subalgebra([Matrix.identity(2)])

    def test_rejects_mixed_orders(self):
        with pytest.raises(DimensionMismatch):
            generate_subalgebra([Matrix.zero(2, 2), Matrix.zero(3, 3)])

    def test_closure_soundness_exhaustive(self):
        y = Matrix([[0, 2, -1, 3], [0, 0, 5, 1], [0, 0, 0, -2], [0, 0, 0, 0]])
        alg = generate_subalgebra([jordan_block(4), y])
        for a in alg.basis:
            for b in alg.basis:
                w = mat_bracket(a, b)
                assert alg.coords.contains(flatten_strict_upper(w))

    def test_rational_generators_allowed(self):
        y = Matrix([[0, Fraction(1, 2)], [0, 0]])
        assert generate_subalgebra([y]).dim == 1


class TestStructureTensor:
    def test_commuting_units_give_zero_tensor(self):
        alg = generate_subalgebra([unit(4, 0, 1), unit(4, 2, 3)])
        assert alg.dim == 2
        assert structure_tensor(alg).table == {}

    def test_order_three_single_family(self):
        tensor = structure_tensor(full_upper_nilpotent(3))
        # basis E12, E13, E23: only [E12, E23] = E13 is nonzero
        assert set(tensor.table) == {(0, 2)}
        assert tensor.table[(0, 2)] == (0, 1, 0)

    def test_fidelity_reconstructs_matrix_brackets(self):
        y = Matrix([[0, 1, 4], [0, 0, -3], [0, 0, 0]])
        alg = generate_subalgebra([jordan_block(3), y])
        tensor = structure_tensor(alg)
        basis = alg.basis
        for i in range(alg.dim):
            for j in range(alg.dim):
                coords = tensor.bracket_basis(i, j)
                rebuilt = Matrix.zero(3, 3)
                for k, c in enumerate(coords):
                    if c:
                        rebuilt = rebuilt + basis[k] * c
                assert rebuilt == mat_bracket(basis[i], basis[j])

    def test_antisymmetry_of_lookup(self):
        t = HEISENBERG
        assert t.bracket_basis(1, 0) == (0, 0, -1)
        assert t.bracket_basis(1, 1) == (0, 0, 0)

    def test_bracket_vectors_bilinear(self):
        t = HEISENBERG
        assert t.bracket((1, 0, 0), (0, 1, 0)) == (0, 0, 1)
        assert t.bracket((0, 1, 0), (1, 0, 0)) == (0, 0, -1)
        assert t.bracket((2, 3, 0), (4, 5, 0)) == (0, 0, -2)


class TestJacobi:
    def test_zero_tensor(self):
        assert jacobi_check(StructureTensor(3, {}))

    def test_closure_tensors_satisfy_jacobi(self):
        y = Matrix([[0, 1, 2, 1], [0, 0, 1, -1], [0, 0, 0, 3], [0, 0, 0, 0]])
        alg = generate_subalgebra([jordan_block(4), y])
        assert jacobi_check(structure_tensor(alg))

    def test_violating_tensor_detected(self):
        # [e1,e2] = e1 and [e1,e3] = e2 leave [[e1,e2],e3] + cyclic = e2 != 0
        bad = StructureTensor(3, {(0, 1): (1, 0, 0), (0, 2): (0, 1, 0)})
        assert not jacobi_check(bad)


class TestSeries:
    def test_abelian_lower(self):
        rep = lower_central_series(StructureTensor(3, {}))
        assert rep.dims == (3, 0)
        assert rep.terminated

    def test_abelian_upper(self):
        rep = upper_central_series(StructureTensor(3, {}))
        assert rep.dims == (0, 3)

    def test_abelian_derived(self):
        rep = derived_series(StructureTensor(3, {}))
        assert rep.dims == (3, 0)

    def test_heisenberg_series(self):
        assert lower_central_series(HEISENBERG).dims == (3, 1, 0)
        assert upper_central_series(HEISENBERG).dims == (0, 1, 3)
        assert derived_series(HEISENBERG).dims == (3, 1, 0)

    def test_non_nilpotent_stabilizes(self):
        rep = lower_central_series(AFFINE)
        assert rep.dims == (2, 1)
        assert rep.terminated

    def test_series_dims_match_term_dims(self):
        rep = lower_central_series(structure_tensor(full_upper_nilpotent(5)))
        assert rep.dims == tuple(t.dim for t in rep.terms)
        assert rep.dims == (10, 6, 3, 1, 0)

    def test_consistency_between_series(self):
        tensor = structure_tensor(full_upper_nilpotent(5))
        low = lower_central_series(tensor)
        der = derived_series(tensor)
        up = upper_central_series(tensor)
        assert low.terms[1] == der.terms[1]
        assert up.terms[1] == center(tensor)


class TestCenterAndNilpotency:
    def test_abelian_center_is_everything(self):
        assert center(ABELIAN2).dim == 2

    def test_nilpotency_of_abelian_line(self):
        assert nilpotency(StructureTensor(1, {})) == (True, 1)

    def test_non_nilpotent(self):
        assert nilpotency(AFFINE) == (False, None)

    def test_empty_tensor(self):
        assert nilpotency(StructureTensor(0, {})) == (True, 0)


class TestDerivations:
    def test_abelian_plane_has_full_matrix_algebra(self):
        der = derivation_algebra(ABELIAN2)
        assert der.dim == 4
        assert not nilpotency(der.tensor).is_nilpotent

    def test_heisenberg_dimension_matches_parameterization(self):
        # free choices: the 3x2 block on the first two basis vectors; the
        # action on the bracket is then forced, so the dimension is 6
        der = derivation_algebra(HEISENBERG)
        assert der.dim == 6
        for d in der.der_basis:
            assert is_derivation(HEISENBERG, d)
            # forced relation: D e3 = (D11 + D22) e3
            assert d.data[0][2] == 0
            assert d.data[1][2] == 0
            assert d.data[2][2] == d.data[0][0] + d.data[1][1]

    def test_derivation_tensor_satisfies_jacobi(self):
        der = derivation_algebra(HEISENBERG)
        assert jacobi_check(der.tensor)

    def test_is_derivation_rejects_non_derivation(self):
        # the identity map is not a derivation of a nonabelian algebra
        assert not is_derivation(HEISENBERG, Matrix.identity(3))

    def test_empty_tensor_has_empty_derivations(self):
        der = derivation_algebra(StructureTensor(0, {}))
        assert der.dim == 0

    def test_char_nilpotency_of_abelian_plane(self):
        verdict = is_characteristically_nilpotent(ABELIAN2)
        assert verdict == (False, 4, False)

    def test_char_nilpotency_of_abelian_line_degenerate(self):
        # raw verdict by the definition: a 1-dim derivation algebra is
        # abelian, hence nilpotent, while its only generator is not a
        # nilpotent operator
        verdict = is_characteristically_nilpotent(StructureTensor(1, {}))
        assert verdict.verdict is True
        assert verdict.der_dim == 1
        assert verdict.operators_nilpotent is False

    def test_heisenberg_not_characteristically_nilpotent(self):
        verdict = is_characteristically_nilpotent(HEISENBERG)
        assert verdict.verdict is False
        assert verdict.der_dim == 6


class TestRestrict:
    def test_zero_subspace(self):
        t = restrict_to_subalgebra(HEISENBERG, Subspace.zero(3))
        assert t.n == 0

    def test_full_subspace_is_identity(self):
        t = restrict_to_subalgebra(HEISENBERG, Subspace.full(3))
        assert t == HEISENBERG

    def test_commutant_of_heisenberg(self):
        c2 = lower_central_series(HEISENBERG).terms[1]
        t = restrict_to_subalgebra(HEISENBERG, c2)
        assert t.n == 1
        assert t.table == {}

    def test_non_closed_subspace_rejected(self):
        # span{e1, e2} is not closed in the Heisenberg algebra
        with pytest.raises(NotASubalgebra):
            restrict_to_subalgebra(HEISENBERG, span([(1, 0, 0), (0, 1, 0)]))

    def test_ambient_mismatch(self):
        with pytest.raises(DimensionMismatch):
            restrict_to_subalgebra(HEISENBERG, Subspace.zero(4))


class TestGeneratorsCount:
    def test_abelian(self):
        assert generators_count(StructureTensor(3, {})) == 3

    def test_heisenberg(self):
        assert generators_count(HEISENBERG) == 2

    def test_requires_nilpotent(self):
        with pytest.raises(ValueError):
            generators_count(AFFINE)


class TestFlattening:
    def test_round_trip(self):
        y = Matrix([[0, 1, 2], [0, 0, 3], [0, 0, 0]])
        assert unflatten_strict_upper(flatten_strict_upper(y), 3) == y

    def test_flatten_rejects_lower_entries(self):
        with pytest.raises(InvalidGenerator):
            flatten_strict_upper(Matrix([[0, 0], [1, 0]]))

    def test_adapted_basis_flattens_to_echelon_rows(self):
        y = Matrix([[0, 1, 4], [0, 0, -3], [0, 0, 0]])
        alg = generate_subalgebra([jordan_block(3), y])
        for mat, row in zip(alg.basis, alg.coords.basis):
            assert flatten_strict_upper(mat) == row
