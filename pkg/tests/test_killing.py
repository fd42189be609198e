"""Tests for killing module."""

import pytest

from modlie.catalog import builtin, builtin_with_embedding
from modlie.field import FieldSpec
from modlie.killing import (
    BilinearForm,
    associativity_check,
    cartan_semisimplicity,
    cartan_statements,
    is_nondegenerate,
    killing_form,
    killing_radical,
    trace_form,
)
from modlie.linalg import Matrix
from modlie.representation import adjoint_rep, standard_rep

F2 = FieldSpec.prime(2)
F3 = FieldSpec.prime(3)
F5 = FieldSpec.prime(5)
Q = FieldSpec.rationals()


class TestKillingForm:
    """Tests for gram matrices and their radicals."""

    def test_sl2_over_rationals(self) -> None:
        form = killing_form(builtin("sl2", Q))
        assert form.gram == Matrix.from_rows(Q, [[0, 4, 0], [4, 0, 0], [0, 0, 8]])
        assert form.is_symmetric
        assert is_nondegenerate(form)
        assert killing_radical(form).is_zero

    def test_fsl2_form_vanishes(self) -> None:
        form = killing_form(builtin("fsl2", F2))
        assert form.gram.is_zero
        assert killing_radical(form).dim == 3
        assert not is_nondegenerate(form)

    def test_aff2_form(self) -> None:
        aff2 = builtin("aff2", Q)
        form = killing_form(aff2)
        assert form.gram == Matrix.from_rows(Q, [[1, 0], [0, 0]])
        assert killing_radical(form).contains(aff2.basis(1))

    def test_evaluation(self) -> None:
        sl2 = builtin("sl2", Q)
        form = killing_form(sl2)
        assert form(sl2.basis(0), sl2.basis(1)) == 4
        assert form(sl2.basis(2), sl2.basis(2)) == 8

    def test_trace_form_of_standard_rep(self) -> None:
        algebra, embedding = builtin_with_embedding("sl2", Q)
        assert embedding is not None
        form = trace_form(standard_rep(algebra, embedding))
        assert form.gram == Matrix.from_rows(Q, [[0, 1, 0], [1, 0, 0], [0, 0, 2]])
        assert form.label == "trace"


class TestAssociativity:
    """Tests for associativity_check."""

    @pytest.mark.parametrize(("name", "spec"), [("sl2", Q), ("gl", F3), ("heisenberg", F5), ("fsl2", F2)])
    def test_killing_form_is_invariant(self, name: str, spec: FieldSpec) -> None:
        assert associativity_check(killing_form(builtin(name, spec)))

    def test_identity_gram_is_not_invariant(self) -> None:
        sl2 = builtin("sl2", Q)
        form = BilinearForm(Matrix.identity(Q, 3), sl2)
        assert not associativity_check(form)


class TestCartan:
    """Tests for both Cartan criteria."""

    def test_solvable_aff2(self) -> None:
        algebra, embedding = builtin_with_embedding("aff2", F3)
        assert embedding is not None
        result = cartan_statements(algebra, standard_rep(algebra, embedding))
        assert result.stmt1
        assert result.stmt2
        assert result.solvable
        assert result.consistent

    def test_sl2_over_rationals_consistent(self) -> None:
        sl2 = builtin("sl2", Q)
        result = cartan_statements(sl2, adjoint_rep(sl2))
        assert (result.stmt1, result.stmt2, result.solvable) == (False, False, False)
        assert result.consistent

    def test_fsl2_breaks_solvability_criterion(self) -> None:
        fsl2 = builtin("fsl2", F2)
        result = cartan_statements(fsl2, adjoint_rep(fsl2))
        assert result.stmt1
        assert result.stmt2
        assert not result.solvable
        assert not result.consistent

    def test_fsl2_breaks_semisimplicity_criterion(self) -> None:
        result = cartan_semisimplicity(builtin("fsl2", F2))
        assert result.semisimple
        assert not result.nondegenerate
        assert not result.equivalent

    def test_sl2_over_f5_agrees(self) -> None:
        result = cartan_semisimplicity(builtin("sl2", F5))
        assert result == (True, True, True)
