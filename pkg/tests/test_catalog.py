"""Tests for catalog module."""

import logging

import pytest

from modlie.catalog import (
    BUILTIN_NAMES,
    builtin,
    builtin_with_embedding,
    lie_counterexample_matrices,
)
from modlie.errors import BadParametersError
from modlie.field import FieldSpec
from modlie.liealg import bracket

F2 = FieldSpec.prime(2)
F3 = FieldSpec.prime(3)
Q = FieldSpec.rationals()


class TestBuiltin:
    """Tests for the built-in algebras."""

    def test_names(self) -> None:
        assert set(BUILTIN_NAMES) == {"gl", "sl", "sl2", "fsl2", "heisenberg", "aff2", "lie51"}

    @pytest.mark.parametrize(
        ("name", "n", "dim"),
        [("gl", 2, 4), ("gl", 3, 9), ("sl", 2, 3), ("sl", 3, 8), ("sl2", None, 3), ("heisenberg", None, 3)],
    )
    def test_dimensions(self, name: str, n: int | None, dim: int) -> None:
        assert builtin(name, Q, n).dim == dim

    def test_labels(self) -> None:
        assert builtin("gl", Q).labels == ("e11", "e12", "e21", "e22")
        assert builtin("sl", Q, 3).labels[-2:] == ("h1", "h2")
        assert builtin("sl2", Q).labels == ("e", "f", "h")

    def test_heisenberg_bracket(self) -> None:
        heis = builtin("heisenberg", Q)
        assert bracket(heis, heis.basis(0), heis.basis(1)) == heis.basis(2)

    def test_aff2_bracket(self) -> None:
        aff2 = builtin("aff2", F3)
        assert bracket(aff2, aff2.basis(0), aff2.basis(1)) == aff2.basis(1)

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_lie51_bracket(self, p: int) -> None:
        algebra = builtin("lie51", FieldSpec.prime(p))
        x, y = algebra.basis(0), algebra.basis(1)
        assert bracket(algebra, x, y) == x

    def test_counterexample_matrices(self) -> None:
        x, y = lie_counterexample_matrices(F3)
        assert x.commutator(y) == x
        assert x.power(3) == x.power(0)

    def test_counterexample_needs_prime_field(self) -> None:
        with pytest.raises(BadParametersError):
            lie_counterexample_matrices(Q)

    def test_embedding_present_for_linear_algebras(self) -> None:
        _, embedding = builtin_with_embedding("sl2", F3)
        assert embedding is not None
        assert embedding.size == 2
        _, none = builtin_with_embedding("fsl2", F2)
        assert none is None


class TestBadParameters:
    """Tests for rejected catalog requests."""

    def test_fsl2_needs_characteristic_two(self) -> None:
        with pytest.raises(BadParametersError, match="characteristic 2"):
            builtin("fsl2", F3)

    def test_unknown_name(self) -> None:
        with pytest.raises(BadParametersError, match="unknown catalog algebra"):
            builtin("e8", Q)

    def test_matrix_sizes(self) -> None:
        with pytest.raises(BadParametersError):
            builtin("gl", Q, 0)
        with pytest.raises(BadParametersError):
            builtin("sl", Q, 1)

    def test_sl2_in_characteristic_two_warns(self, caplog: pytest.LogCaptureFixture) -> None:
        with caplog.at_level(logging.WARNING, logger="modlie"):
            algebra = builtin("sl2", F2)
        assert "fsl2" in caplog.text
        h, e = algebra.basis(2), algebra.basis(0)
        assert bracket(algebra, h, e) == (0, 0, 0)
