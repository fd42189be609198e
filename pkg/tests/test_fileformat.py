"""Tests for fileformat module."""

import pytest

from modlie.catalog import BUILTIN_NAMES, builtin
from modlie.errors import AlgebraFileParseError, JacobiViolationError
from modlie.field import FieldSpec
from modlie.fileformat import (
    emit_algebra_file,
    load_matrix_list,
    parse_algebra_file,
    parse_rhs,
    read_algebra_file,
)

F2 = FieldSpec.prime(2)
F5 = FieldSpec.prime(5)
Q = FieldSpec.rationals()

SL2_F5 = """\
# sl2 over F_5
algebra sl2
field F 5
basis e f h
bracket e f = h
bracket h e = 2*e
bracket h f = -2*f   # trailing comment
"""


class TestParse:
    """Tests for algebra file parsing."""

    def test_sl2(self) -> None:
        parsed = read_algebra_file(SL2_F5)
        assert parsed.name == "sl2"
        assert parsed.algebra == builtin("sl2", F5)

    def test_rhs_terms(self) -> None:
        assert parse_rhs(Q, "2*e - f + 1/2*h") == {"e": 2, "f": -1, "h": Q.parse_scalar("1/2")}
        assert parse_rhs(Q, "0") == {}
        assert parse_rhs(F5, "e + e") == {"e": 2}

    def test_abelian_when_no_brackets(self) -> None:
        algebra = parse_algebra_file("algebra a\nfield Q\nbasis x y\n")
        assert all(all(c == 0 for c in v) for row in algebra.structure for v in row)

    @pytest.mark.parametrize(
        ("text", "line", "message"),
        [
            ("algebra a\nfield F 4\nbasis x\n", 2, "prime"),
            ("algebra a\nfield R\nbasis x\n", 2, "expected 'field Q'"),
            ("algebra a\nfield Q\nbasis x x\n", 3, "duplicate"),
            ("algebra a\nfield Q\nbasis x y\nbracket x z = y\n", 4, "unknown basis label 'z'"),
            ("algebra a\nfield Q\nbasis x y\nbracket x y = 2*w\n", 4, "unknown basis label 'w'"),
            ("algebra a\nfield Q\nbasis x y\nbracket x y = y\nbracket y x = y\n", 5, "listed twice"),
            ("algebra a\nfield Q\nbasis x y\nbracket x x = y\n", 4, "self-bracket"),
            ("algebra a\nfield Q\nbasis x y\nbracket x y = y y\n", 4, "missing '+' or '-'"),
            ("algebra a\nbracket x y = y\n", 2, "must precede"),
            ("algebra a\nfield Q\nbasis x y\nfrobnicate\n", 4, "unknown keyword"),
            ("algebra a\nfield Q\n", 3, "needs 'algebra'"),
            ("algebra a\nfield F 3\nbasis x y\nbracket x y = 1/3*y\n", 4, "division by zero"),
        ],
    )
    def test_errors_carry_line_numbers(self, text: str, line: int, message: str) -> None:
        with pytest.raises(AlgebraFileParseError) as excinfo:
            read_algebra_file(text)
        assert excinfo.value.line == line
        assert message in excinfo.value.message

    def test_jacobi_checked(self) -> None:
        text = "algebra bad\nfield Q\nbasis a b c\nbracket a b = c\nbracket b c = a\nbracket c a = c\n"
        with pytest.raises(JacobiViolationError):
            parse_algebra_file(text)


class TestEmit:
    """Tests for emit_algebra_file."""

    @pytest.mark.parametrize("name", BUILTIN_NAMES)
    def test_catalog_round_trip(self, name: str) -> None:
        spec = F2 if name == "fsl2" else FieldSpec.prime(3)
        algebra = builtin(name, spec)
        assert parse_algebra_file(emit_algebra_file(algebra, name)) == algebra

    def test_rationals_round_trip(self) -> None:
        algebra = builtin("sl", Q, 3)
        text = emit_algebra_file(algebra, "sl3")
        assert text.startswith("algebra sl3\nfield Q\n")
        assert parse_algebra_file(text) == algebra


class TestMatrixList:
    """Tests for load_matrix_list."""

    def test_standard_sl2(self) -> None:
        sl2 = builtin("sl2", F5)
        text = "module 2\nmatrix e\n0 1\n0 0\nmatrix f\n0 0\n1 0\nmatrix h\n1 0\n0 -1\n"
        mats, module_dim = load_matrix_list(text, sl2)
        assert module_dim == 2
        assert mats[2].to_lists() == [["1", "0"], ["0", "4"]]

    def test_module_dim_inferred(self) -> None:
        aff2 = builtin("aff2", Q)
        mats, module_dim = load_matrix_list("matrix x\n0 1\n0 0\nmatrix h\n1 0\n0 0\n", aff2)
        assert module_dim == 2
        assert [m.to_lists()[0] for m in mats] == [["1", "0"], ["0", "1"]]

    @pytest.mark.parametrize(
        ("text", "message"),
        [
            ("matrix e\n0 1\n0 0\nmatrix f\n0 0\n1 0\n", "no matrix for h"),
            ("matrix e\n0 1\n0 0\nmatrix e\n0 1\n0 0\n", "given twice"),
            ("matrix q\n0\n", "unknown basis label"),
            ("0 1\n", "must follow"),
            ("module 2\nmatrix e\n0 1 0\n", "expected 2 rows"),
            ("module 2\nmatrix e\n0 1\nmatrix f\n0 0\n1 0\nmatrix h\n1 0\n0 1\n", "matrix has 1 rows"),
        ],
    )
    def test_errors(self, text: str, message: str) -> None:
        with pytest.raises(AlgebraFileParseError, match=message):
            load_matrix_list(text, builtin("sl2", Q))
