"""Tests for representation module."""

from fractions import Fraction

import pytest

from modlie.catalog import builtin, builtin_with_embedding, lie_counterexample_matrices
from modlie.errors import (
    BadDimensionError,
    HomomorphismViolationError,
    IncompleteSplitError,
    NotInvariantError,
    UnsupportedFieldError,
)
from modlie.field import FieldSpec
from modlie.linalg import Matrix, Subspace, basis_vector
from modlie.representation import (
    adjoint_rep,
    check_representation,
    common_eigenvector,
    direct_sum,
    find_complement,
    invariant_subspaces,
    irreducible_submodules,
    is_completely_reducible,
    is_semisimple_module,
    ladder_check,
    sl2_sym_power,
    standard_rep,
    submodule_generated,
    sym_power,
    triangularize,
    trivial_rep,
    weight_decomposition,
)

F3 = FieldSpec.prime(3)
Q = FieldSpec.rationals()


@pytest.fixture
def sym3_f3():
    return sl2_sym_power(3, F3)


class TestConstruction:
    """Tests for validated representations."""

    def test_standard_and_adjoint(self) -> None:
        algebra, embedding = builtin_with_embedding("sl2", Q)
        assert embedding is not None
        assert standard_rep(algebra, embedding).module_dim == 2
        assert adjoint_rep(algebra).module_dim == 3

    def test_homomorphism_violation(self) -> None:
        sl2 = builtin("sl2", Q)
        mats = [Matrix.unit(Q, 2, 0, 1), Matrix.unit(Q, 2, 1, 0), Matrix.identity(Q, 2)]
        with pytest.raises(HomomorphismViolationError) as excinfo:
            check_representation(sl2, mats)
        assert excinfo.value.labels == ("e", "f")
        assert excinfo.value.difference == Matrix.diag(Q, [Q(0), Q(2)])

    def test_direct_sum_with_trivial(self) -> None:
        algebra, embedding = builtin_with_embedding("sl2", F3)
        assert embedding is not None
        total = direct_sum(standard_rep(algebra, embedding), trivial_rep(algebra, 1))
        assert total.module_dim == 3
        assert check_representation(algebra, total.mats).module_dim == 3

    def test_sym_power_needs_plane(self) -> None:
        with pytest.raises(BadDimensionError):
            sym_power(adjoint_rep(builtin("sl2", Q)), 2)

    def test_matrix_of(self) -> None:
        rep = sl2_sym_power(1)
        sl2 = rep.algebra
        assert rep.matrix_of(sl2.vector({"e": 1, "f": 1})) == Matrix.from_rows(Q, [[0, 1], [1, 0]])


class TestWeights:
    """Tests for symmetric powers of the standard sl2 module."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_weights_over_rationals(self, n: int) -> None:
        rep = sl2_sym_power(n)
        found = weight_decomposition(rep, rep.algebra.basis(2))
        assert found.weights == tuple(Fraction(n - 2 * k) for k in range(n, -1, -1))
        assert all(d == 1 for d in found.dims)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_ladder(self, n: int) -> None:
        assert ladder_check(n)

    def test_weights_collapse_mod_three(self, sym3_f3) -> None:
        found = weight_decomposition(sym3_f3, sym3_f3.algebra.basis(2))
        assert found.weights == (0, 1, 2)
        assert found.dims == (2, 1, 1)

    def test_incomplete_split(self) -> None:
        rep = sl2_sym_power(1)
        rotation = rep.algebra.vector({"e": 1, "f": -1})
        with pytest.raises(IncompleteSplitError) as excinfo:
            weight_decomposition(rep, rotation)
        assert excinfo.value.missing_dim == 2
        assert excinfo.value.found.weights == ()


class TestSubmodules:
    """Tests for invariant subspaces and complements."""

    def test_sym3_over_f3_counts(self, sym3_f3) -> None:
        found = invariant_subspaces(sym3_f3)
        assert len(found) == 7
        assert [s.dim for s in found] == [0, 1, 1, 1, 1, 2, 4]

    def test_sym3_over_f3_has_no_complement(self, sym3_f3) -> None:
        ends = Subspace.span(F3, 4, [basis_vector(F3, 4, 0), basis_vector(F3, 4, 3)])
        assert sym3_f3.is_invariant(ends)
        assert find_complement(sym3_f3, ends) is None
        assert not is_completely_reducible(sym3_f3)

    def test_irreducibles_do_not_span(self, sym3_f3) -> None:
        assert len(irreducible_submodules(sym3_f3)) == 4
        assert not is_semisimple_module(sym3_f3)

    def test_generated_submodule(self, sym3_f3) -> None:
        assert submodule_generated(sym3_f3, [basis_vector(F3, 4, 1)]).dim == 4
        assert submodule_generated(sym3_f3, [basis_vector(F3, 4, 0)]).dim == 1

    def test_complement_needs_invariant_subspace(self, sym3_f3) -> None:
        with pytest.raises(NotInvariantError):
            find_complement(sym3_f3, Subspace.span(F3, 4, [basis_vector(F3, 4, 1)]))

    def test_trivial_complements(self, sym3_f3) -> None:
        assert find_complement(sym3_f3, Subspace.zero(F3, 4)) == Subspace.full(F3, 4)
        assert find_complement(sym3_f3, Subspace.full(F3, 4)) == Subspace.zero(F3, 4)

    def test_standard_module_is_irreducible(self) -> None:
        algebra, embedding = builtin_with_embedding("sl2", F3)
        assert embedding is not None
        rep = standard_rep(algebra, embedding)
        assert len(invariant_subspaces(rep)) == 2
        assert is_completely_reducible(rep)

    def test_rationals_unsupported(self) -> None:
        with pytest.raises(UnsupportedFieldError):
            invariant_subspaces(sl2_sym_power(2))


class TestFlags:
    """Tests for common eigenvectors and simultaneous triangularization."""

    def test_borel_common_eigenvector(self) -> None:
        e = Matrix.unit(Q, 2, 0, 1)
        h = Matrix.diag(Q, [Q(1), Q(-1)])
        found = common_eigenvector([e, h])
        assert found is not None
        vector, eigenvalues = found
        assert vector == (1, 0)
        assert eigenvalues == [0, 1]

    def test_borel_triangularizes(self) -> None:
        e = Matrix.unit(Q, 2, 0, 1)
        h = Matrix.diag(Q, [Q(1), Q(-1)])
        p = triangularize([e, h])
        assert p is not None
        for m in (e, h):
            assert (p.inverse() @ m @ p).is_upper_triangular()

    def test_cyclic_pair_has_no_common_eigenvector(self) -> None:
        x, y = lie_counterexample_matrices(F3)
        assert common_eigenvector([x, y]) is None
        assert triangularize([x, y]) is None
