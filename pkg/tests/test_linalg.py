"""Tests for linalg module."""

import random
from fractions import Fraction

import pytest
import sympy

from modlie.errors import CapExceededError, DimensionMismatchError, NotInvertibleError, NotSquareError
from modlie.field import FieldSpec
from modlie.linalg import (
    Matrix,
    Subspace,
    basis_vector,
    char_poly,
    eigenspace,
    eigenvalues_in_field,
    enumerate_subspaces,
    evaluate_at_matrix,
    gaussian_binomial,
    kernel,
    min_poly,
    rank,
    rref,
    solve_linear,
    subspace_count,
)
from modlie.poly import Polynomial

F2 = FieldSpec.prime(2)
F3 = FieldSpec.prime(3)
F5 = FieldSpec.prime(5)
Q = FieldSpec.rationals()


def _random_matrix(rng: random.Random, spec: FieldSpec, n: int) -> Matrix:
    if spec.is_prime_field:
        return Matrix.from_rows(spec, [[rng.randrange(spec.characteristic) for _ in range(n)] for _ in range(n)])
    return Matrix.from_rows(spec, [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)])


def _random_shape(rng: random.Random, spec: FieldSpec) -> Matrix:
    rows, cols = rng.randint(1, 5), rng.randint(1, 5)
    if spec.is_prime_field:
        return Matrix.from_rows(spec, [[rng.randrange(spec.characteristic) for _ in range(cols)] for _ in range(rows)])
    return Matrix.from_rows(spec, [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)])


class TestMatrix:
    """Tests for Matrix arithmetic."""

    def test_product_and_commutator(self) -> None:
        e = Matrix.unit(Q, 2, 0, 1)
        f = Matrix.unit(Q, 2, 1, 0)
        assert e.commutator(f) == Matrix.diag(Q, [Q(1), Q(-1)])

    def test_power(self) -> None:
        nilpotent = Matrix.from_rows(F5, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
        assert not nilpotent.power(2).is_zero
        assert nilpotent.power(3).is_zero
        assert nilpotent.power(0) == Matrix.identity(F5, 3)

    def test_shape_errors(self) -> None:
        a = Matrix.zeros(Q, 2, 3)
        with pytest.raises(DimensionMismatchError):
            a @ a
        with pytest.raises(NotSquareError):
            a.trace()

    def test_inverse(self) -> None:
        a = Matrix.from_rows(F5, [[1, 2], [3, 4]])
        assert a @ a.inverse() == Matrix.identity(F5, 2)
        with pytest.raises(NotInvertibleError):
            Matrix.from_rows(F5, [[1, 2], [2, 4]]).inverse()

    def test_entries_coerced(self) -> None:
        m = Matrix.from_rows(F3, [[4, -1], ["1/2", 0]])
        assert m.to_lists() == [["1", "2"], ["2", "0"]]


class TestEchelon:
    """Tests for rref, rank, kernel and solve_linear."""

    def test_rref_is_canonical(self) -> None:
        m = Matrix.from_rows(Q, [[2, 4, 2], [1, 2, 3]])
        reduced, r, pivots = rref(m)
        assert r == 2
        assert pivots == (0, 2)
        assert reduced == Matrix.from_rows(Q, [[1, 2, 0], [0, 0, 1]])

    @pytest.mark.parametrize("spec", [F2, F3, F5, Q], ids=lambda s: s.label)
    def test_rref_is_idempotent(self, spec: FieldSpec) -> None:
        rng = random.Random(17)
        for _ in range(500):
            m = _random_shape(rng, spec)
            once = rref(m)
            assert rref(once.matrix) == once
            assert once.rank == rank(m)

    def test_kernel_dimension(self) -> None:
        rng = random.Random(7)
        for spec in (F2, F3, Q):
            for _ in range(20):
                m = _random_matrix(rng, spec, 4)
                null = kernel(m)
                assert null.dim + rank(m) == 4
                assert all(all(x == 0 for x in m.apply(v)) for v in null.vectors)

    def test_solve_free_variables_zero(self) -> None:
        a = Matrix.from_rows(Q, [[1, 1]])
        assert solve_linear(a, [Q(3)]) == (Q(3), Q(0))

    def test_solve_inconsistent(self) -> None:
        a = Matrix.from_rows(F2, [[1, 1], [1, 1]])
        assert solve_linear(a, [1, 0]) is None


class TestPolynomialsOfMatrices:
    """Tests for char_poly and min_poly."""

    def test_char_poly_matches_sympy(self) -> None:
        rng = random.Random(11)
        x = sympy.Symbol("x")
        for _ in range(25):
            m = _random_matrix(rng, Q, rng.randint(1, 5))
            expected = sympy.Matrix(m.rows, m.cols, [int(v) for v in m.flatten()]).charpoly(x).all_coeffs()
            assert char_poly(m) == Polynomial.of(Q, [Fraction(int(c)) for c in reversed(expected)])

    def test_cayley_hamilton_and_min_poly_divides(self) -> None:
        rng = random.Random(13)
        for spec in (F2, F3, F5, Q):
            for _ in range(60):
                m = _random_matrix(rng, spec, rng.randint(1, 5))
                chi, mu = char_poly(m), min_poly(m)
                assert evaluate_at_matrix(chi, m).is_zero
                assert evaluate_at_matrix(mu, m).is_zero
                assert (chi % mu).is_zero
                assert mu.lead == spec.one

    def test_min_poly_of_scalar_matrix(self) -> None:
        m = Matrix.identity(F5, 3).scale(2)
        assert min_poly(m) == Polynomial.from_ints(F5, [-2, 1])


class TestEigen:
    """Tests for eigenvalue search."""

    def test_rotation_has_no_rational_eigenvalues(self) -> None:
        rotation = Matrix.from_rows(Q, [[0, -1], [1, 0]])
        assert eigenvalues_in_field(rotation) == []

    def test_rational_eigenvalues_sorted(self) -> None:
        m = Matrix.from_rows(Q, [[3, 1], [0, "1/2"]])
        assert eigenvalues_in_field(m) == [Fraction(1, 2), Fraction(3)]

    @pytest.mark.parametrize("spec", [F2, F3, F5, FieldSpec.prime(7), Q], ids=lambda s: s.label)
    def test_eigenspaces_match_roots(self, spec: FieldSpec) -> None:
        rng = random.Random(19)
        for _ in range(50):
            m = _random_matrix(rng, spec, rng.randint(1, 5))
            roots = eigenvalues_in_field(m)
            assert all(eigenspace(m, lam).dim > 0 for lam in roots)
            if spec.is_prime_field:
                others = [a for a in spec.elements() if a not in roots]
            else:
                others = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(20)]
                others = [a for a in others if a not in roots]
            assert all(eigenspace(m, a).is_zero for a in others)

    def test_eigenspace(self) -> None:
        m = Matrix.diag(F3, [1, 1, 2])
        assert eigenspace(m, 1) == Subspace.span(F3, 3, [basis_vector(F3, 3, 0), basis_vector(F3, 3, 1)])


class TestSubspace:
    """Tests for Subspace algebra."""

    def test_span_canonical(self) -> None:
        a = Subspace.span(Q, 3, [(Q(1), Q(1), Q(0)), (Q(0), Q(1), Q(1))])
        b = Subspace.span(Q, 3, [(Q(1), Q(2), Q(1)), (Q(1), Q(0), Q(-1))])
        assert a == b

    def test_sum_and_intersection(self) -> None:
        x = Subspace.span(F5, 3, [basis_vector(F5, 3, 0), basis_vector(F5, 3, 1)])
        y = Subspace.span(F5, 3, [basis_vector(F5, 3, 1), basis_vector(F5, 3, 2)])
        assert (x + y) == Subspace.full(F5, 3)
        assert x.intersect(y) == Subspace.span(F5, 3, [basis_vector(F5, 3, 1)])

    def test_reduce_and_contains(self) -> None:
        s = Subspace.span(F3, 2, [(1, 1)])
        assert s.contains((2, 2))
        assert not s.contains((1, 0))
        assert s.reduce((1, 2)) == (0, 1)


class TestEnumeration:
    """Tests for subspace enumeration."""

    def test_gaussian_binomial(self) -> None:
        assert gaussian_binomial(4, 2, 3) == 130
        assert subspace_count(3, 4) == 212
        assert subspace_count(2, 3) == 16

    @pytest.mark.parametrize(
        ("p", "n"),
        [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (3, 4), (5, 1), (5, 2), (5, 3)],
    )
    def test_counts_match_gaussian_binomials(self, p: int, n: int) -> None:
        spec = FieldSpec.prime(p)
        found = list(enumerate_subspaces(spec, n))
        assert len(found) == subspace_count(p, n)
        assert len(set(found)) == len(found)

    def test_ordered_by_dimension(self) -> None:
        dims = [s.dim for s in enumerate_subspaces(F2, 3)]
        assert dims == sorted(dims)

    def test_cap_checked_eagerly(self) -> None:
        with pytest.raises(CapExceededError) as excinfo:
            enumerate_subspaces(F3, 4, cap=10)
        assert excinfo.value.count == 212
        assert excinfo.value.cap == 10
