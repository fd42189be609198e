"""Exact matrices and subspaces over a FieldSpec.

Everything here is immutable and pure. Vectors are tuples of field elements and
matrices act on column vectors, so ``m.apply(v)`` is m * v and the j-th column of a
linear map's matrix is the image of the j-th basis vector.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import TYPE_CHECKING, NamedTuple

from .errors import (
    CapExceededError,
    DimensionMismatchError,
    NotInvertibleError,
    NotSquareError,
    UnsupportedFieldError,
)
from .poly import Polynomial

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator, Sequence

    from .field import FieldElement, FieldSpec

logger = logging.getLogger(__name__)

Vector = tuple["FieldElement", ...]

DEFAULT_ENUMERATION_CAP = 1_000_000


@dataclass(frozen=True)
class Matrix:
    """A rows x cols matrix of field elements stored row-major."""

    rows: int
    cols: int
    entries: tuple[tuple[FieldElement, ...], ...]
    spec: FieldSpec

    def __post_init__(self) -> None:
        """Check the grid matches the declared shape."""
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatchError((self.rows, self.cols), "ragged entries", "matrix")

    # --- Constructors ---

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows: Iterable[Iterable[int | Fraction | str]]) -> Matrix:
        """Build from nested rows, coercing every entry into the field."""
        grid = tuple(tuple(spec(x) for x in row) for row in rows)
        cols = len(grid[0]) if grid else 0
        return cls(len(grid), cols, grid, spec)

    @classmethod
    def from_columns(cls, spec: FieldSpec, n_rows: int, columns: Sequence[Vector]) -> Matrix:
        """Build from column vectors of length ``n_rows``."""
        grid = tuple(tuple(col[i] for col in columns) for i in range(n_rows))
        return cls(n_rows, len(columns), grid, spec)

    @classmethod
    def zeros(cls, spec: FieldSpec, rows: int, cols: int | None = None) -> Matrix:
        """The zero matrix (square when ``cols`` is omitted)."""
        cols = rows if cols is None else cols
        return cls(rows, cols, tuple((spec.zero,) * cols for _ in range(rows)), spec)

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> Matrix:
        """The n x n identity."""
        return cls.diag(spec, [spec.one] * n)

    @classmethod
    def diag(cls, spec: FieldSpec, values: Sequence[FieldElement]) -> Matrix:
        """Diagonal matrix with the given (already coerced) entries."""
        n = len(values)
        grid = tuple(tuple(values[i] if i == j else spec.zero for j in range(n)) for i in range(n))
        return cls(n, n, grid, spec)

    @classmethod
    def unit(cls, spec: FieldSpec, n: int, i: int, j: int) -> Matrix:
        """The matrix unit e_ij (0-based) of size n."""
        grid = tuple(
            tuple(spec.one if (r, c) == (i, j) else spec.zero for c in range(n)) for r in range(n)
        )
        return cls(n, n, grid, spec)

    # --- Access ---

    def __getitem__(self, index: tuple[int, int]) -> FieldElement:
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        """The i-th row."""
        return self.entries[i]

    def column(self, j: int) -> Vector:
        """The j-th column."""
        return tuple(r[j] for r in self.entries)

    @property
    def is_square(self) -> bool:
        """Whether rows == cols."""
        return self.rows == self.cols

    @property
    def is_zero(self) -> bool:
        """Whether every entry is zero."""
        return all(x == 0 for r in self.entries for x in r)

    def require_square(self) -> None:
        """Raise :class:`NotSquareError` unless the matrix is square."""
        if not self.is_square:
            raise NotSquareError(self.rows, self.cols)

    def flatten(self) -> Vector:
        """Row-major entries as one vector."""
        return tuple(x for r in self.entries for x in r)

    # --- Arithmetic ---

    def _same_shape(self, other: Matrix) -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchError((self.rows, self.cols), (other.rows, other.cols))

    def __add__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        f = self.spec
        grid = tuple(
            tuple(f.add(a, b) for a, b in zip(ra, rb, strict=True))
            for ra, rb in zip(self.entries, other.entries, strict=True)
        )
        return Matrix(self.rows, self.cols, grid, f)

    def __sub__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        f = self.spec
        grid = tuple(
            tuple(f.sub(a, b) for a, b in zip(ra, rb, strict=True))
            for ra, rb in zip(self.entries, other.entries, strict=True)
        )
        return Matrix(self.rows, self.cols, grid, f)

    def __neg__(self) -> Matrix:
        return self.scale(self.spec.neg(self.spec.one))

    def scale(self, c: FieldElement) -> Matrix:
        """c * self."""
        f = self.spec
        return Matrix(
            self.rows, self.cols, tuple(tuple(f.mul(c, x) for x in r) for r in self.entries), f
        )

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise DimensionMismatchError(self.cols, other.rows, "matrix product")
        f = self.spec
        other_cols = [other.column(j) for j in range(other.cols)]
        grid = []
        for r in self.entries:
            out_row = []
            for col in other_cols:
                acc = f.zero
                for a, b in zip(r, col, strict=True):
                    if a != 0 and b != 0:
                        acc = f.add(acc, f.mul(a, b))
                out_row.append(acc)
            grid.append(tuple(out_row))
        return Matrix(self.rows, other.cols, tuple(grid), f)

    def commutator(self, other: Matrix) -> Matrix:
        """[self, other] = self*other - other*self."""
        return self @ other - other @ self

    def power(self, k: int) -> Matrix:
        """self ** k for k >= 0 by repeated squaring."""
        self.require_square()
        result = Matrix.identity(self.spec, self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def apply(self, v: Sequence[FieldElement]) -> Vector:
        """Matrix-vector product self * v."""
        if len(v) != self.cols:
            raise DimensionMismatchError(self.cols, len(v), "matrix-vector product")
        f = self.spec
        out = []
        for r in self.entries:
            acc = f.zero
            for a, b in zip(r, v, strict=True):
                if a != 0 and b != 0:
                    acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        return tuple(out)

    def trace(self) -> FieldElement:
        """Sum of the diagonal."""
        self.require_square()
        f = self.spec
        acc = f.zero
        for i in range(self.rows):
            acc = f.add(acc, self.entries[i][i])
        return acc

    def transpose(self) -> Matrix:
        """The transpose."""
        return Matrix.from_columns(self.spec, self.cols, self.entries)

    def is_upper_triangular(self) -> bool:
        """Whether every entry below the diagonal is zero."""
        return all(self.entries[i][j] == 0 for i in range(self.rows) for j in range(min(i, self.cols)))

    def inverse(self) -> Matrix:
        """Inverse of a square matrix via RREF of [self | I]."""
        self.require_square()
        n = self.rows
        ident = Matrix.identity(self.spec, n)
        augmented = Matrix(
            n, 2 * n, tuple(a + b for a, b in zip(self.entries, ident.entries, strict=True)), self.spec
        )
        reduced, rank, _ = rref(augmented)
        if rank < n or any(reduced[i, i] != 1 for i in range(n)):
            msg = "matrix is singular"
            raise NotInvertibleError(msg)
        return Matrix(n, n, tuple(r[n:] for r in reduced.entries), self.spec)

    # --- Display ---

    def format(self) -> str:
        """Bracketed rows in field-element syntax."""
        f = self.spec
        return "[" + ", ".join("[" + ", ".join(f.format(x) for x in r) + "]" for r in self.entries) + "]"

    def to_lists(self) -> list[list[str]]:
        """Entries rendered as strings, for JSON reports."""
        return [[self.spec.format(x) for x in r] for r in self.entries]

    def __str__(self) -> str:
        return self.format()


# --- Vectors ---


def zero_vector(spec: FieldSpec, n: int) -> Vector:
    """The zero vector of length n."""
    return (spec.zero,) * n


def basis_vector(spec: FieldSpec, n: int, i: int) -> Vector:
    """The i-th standard basis vector of length n."""
    return tuple(spec.one if k == i else spec.zero for k in range(n))


def vec_add(spec: FieldSpec, u: Sequence[FieldElement], v: Sequence[FieldElement]) -> Vector:
    """u + v."""
    return tuple(spec.add(a, b) for a, b in zip(u, v, strict=True))


def vec_sub(spec: FieldSpec, u: Sequence[FieldElement], v: Sequence[FieldElement]) -> Vector:
    """u - v."""
    return tuple(spec.sub(a, b) for a, b in zip(u, v, strict=True))


def vec_scale(spec: FieldSpec, c: FieldElement, v: Sequence[FieldElement]) -> Vector:
    """c * v."""
    return tuple(spec.mul(c, a) for a in v)


def linear_combination(
    spec: FieldSpec, coeffs: Sequence[FieldElement], vectors: Sequence[Sequence[FieldElement]], n: int
) -> Vector:
    """sum_i coeffs[i] * vectors[i] in F^n."""
    out = list(zero_vector(spec, n))
    for c, v in zip(coeffs, vectors, strict=True):
        if c == 0:
            continue
        for k, x in enumerate(v):
            if x != 0:
                out[k] = spec.add(out[k], spec.mul(c, x))
    return tuple(out)


def is_zero_vector(v: Sequence[FieldElement]) -> bool:
    """Whether every coordinate is zero."""
    return all(x == 0 for x in v)


def format_vector(spec: FieldSpec, v: Sequence[FieldElement]) -> list[str]:
    """Coordinates rendered as strings, for JSON reports."""
    return [spec.format(x) for x in v]


# --- Echelon forms ---


class RrefResult(NamedTuple):
    """Reduced row-echelon form with its rank and pivot columns."""

    matrix: Matrix
    rank: int
    pivots: tuple[int, ...]


def _rref_rows(
    spec: FieldSpec, rows: list[list[FieldElement]], cols: int
) -> tuple[list[list[FieldElement]], tuple[int, ...]]:
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == len(rows):
            break
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = spec.inv(rows[r][c])
        rows[r] = [spec.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            factor = rows[i][c]
            if i != r and factor != 0:
                rows[i] = [spec.sub(a, spec.mul(factor, b)) for a, b in zip(rows[i], rows[r], strict=True)]
        pivots.append(c)
        r += 1
    return rows, tuple(pivots)


def rref(m: Matrix) -> RrefResult:
    """The unique reduced row-echelon form of ``m`` over its field."""
    rows, pivots = _rref_rows(m.spec, [list(r) for r in m.entries], m.cols)
    reduced = Matrix(m.rows, m.cols, tuple(tuple(r) for r in rows), m.spec)
    return RrefResult(reduced, len(pivots), pivots)


def rank(m: Matrix) -> int:
    """Rank of ``m``."""
    return rref(m).rank


def kernel(m: Matrix) -> Subspace:
    """Null space {v : m v = 0} as a canonical Subspace."""
    reduced, _, pivots = rref(m)
    spec, n = m.spec, m.cols
    free = [c for c in range(n) if c not in pivots]
    vectors = []
    for fc in free:
        v = list(zero_vector(spec, n))
        v[fc] = spec.one
        for r, pc in enumerate(pivots):
            v[pc] = spec.neg(reduced[r, fc])
        vectors.append(tuple(v))
    return Subspace.span(spec, n, vectors)


def solve_linear(a: Matrix, b: Sequence[FieldElement]) -> Vector | None:
    """Some x with a x = b (free variables pinned to 0), or None if inconsistent."""
    if len(b) != a.rows:
        raise DimensionMismatchError(a.rows, len(b), "right-hand side")
    spec = a.spec
    rows = [[*row, rhs] for row, rhs in zip(a.entries, b, strict=True)]
    reduced, pivots = _rref_rows(spec, rows, a.cols + 1)
    if pivots and pivots[-1] == a.cols:
        return None
    x = list(zero_vector(spec, a.cols))
    for r, c in enumerate(pivots):
        x[c] = reduced[r][a.cols]
    return tuple(x)


# --- Polynomials of matrices ---


def char_poly(m: Matrix) -> Polynomial:
    """det(X*I - m) by Berkowitz's division-free algorithm (valid in any characteristic)."""
    m.require_square()
    spec = m.spec
    n = m.rows
    # vector holds the coefficients of the trailing principal submatrix, highest degree first
    vector: list[FieldElement] = [spec.one]
    for k in range(n - 1, -1, -1):
        a = m[k, k]
        row = [m[k, j] for j in range(k + 1, n)]
        col = [m[i, k] for i in range(k + 1, n)]
        sub = [[m[i, j] for j in range(k + 1, n)] for i in range(k + 1, n)]
        size = n - k
        # first column of the Toeplitz matrix: 1, -a, -R C, -R A C, ..., -R A^(size-2) C
        toeplitz = [spec.one, spec.neg(a)]
        power_col = col
        for _ in range(size - 1):
            toeplitz.append(spec.neg(_dot(spec, row, power_col)))
            power_col = [_dot(spec, r, power_col) for r in sub]
        vector = [
            _dot(spec, [toeplitz[i - j] for j in range(min(i + 1, len(vector)))], vector[: i + 1])
            for i in range(size + 1)
        ]
    return Polynomial.of(spec, reversed(vector))


def _dot(spec: FieldSpec, u: Sequence[FieldElement], v: Sequence[FieldElement]) -> FieldElement:
    acc = spec.zero
    for a, b in zip(u, v, strict=False):
        if a != 0 and b != 0:
            acc = spec.add(acc, spec.mul(a, b))
    return acc


def evaluate_at_matrix(f: Polynomial, m: Matrix) -> Matrix:
    """f(m) by Horner's rule."""
    m.require_square()
    ident = Matrix.identity(m.spec, m.rows)
    acc = Matrix.zeros(m.spec, m.rows)
    for c in reversed(f.coeffs):
        acc = acc @ m + ident.scale(c)
    return acc


def min_poly(m: Matrix) -> Polynomial:
    """Monic minimal polynomial: first linear dependency among I, m, m^2, ..."""
    m.require_square()
    spec, n = m.spec, m.rows
    powers = [Matrix.identity(spec, n).flatten()]
    current = Matrix.identity(spec, n)
    for k in range(1, n + 1):
        current = current @ m
        target = current.flatten()
        system = Matrix.from_columns(spec, n * n, powers)
        coeffs = solve_linear(system, tuple(spec.neg(x) for x in target))
        if coeffs is not None:
            return Polynomial.of(spec, [*coeffs, spec.one])
        powers.append(target)
    # Cayley-Hamilton guarantees a dependency by degree n
    msg = "no minimal polynomial found within degree n"
    raise AssertionError(msg)


# --- Eigenvalues ---


def eigenvalues_in_field(m: Matrix) -> list[FieldElement]:
    """Roots of char_poly(m) lying in the base field, ascending.

    Extension-field eigenvalues are never reported: over Q a rotation has none.
    """
    m.require_square()
    return roots_in_field(char_poly(m))


def roots_in_field(f: Polynomial) -> list[FieldElement]:
    """Distinct roots of a nonzero polynomial inside its base field, ascending."""
    spec = f.spec
    if f.degree <= 0:
        return []
    if spec.is_prime_field:
        return [a for a in spec.elements() if f(a) == 0]
    return _rational_roots(f)


def _rational_roots(f: Polynomial) -> list[FieldElement]:
    # Lazy import: sympy is only needed for the rational-root candidate search.
    from sympy import divisors  # noqa: PLC0415

    spec = f.spec
    denominators = lcm(*(Fraction(c).denominator for c in f.coeffs))
    ints = [int(Fraction(c) * denominators) for c in f.coeffs]
    roots: set[Fraction] = set()
    low = 0
    while ints[low] == 0:
        low += 1
    if low:
        roots.add(Fraction(0))
    trimmed = ints[low:]
    if len(trimmed) > 1:
        for d in divisors(abs(trimmed[0])):
            for e in divisors(abs(trimmed[-1])):
                for candidate in (Fraction(d, e), Fraction(-d, e)):
                    if candidate not in roots and f(candidate) == 0:
                        roots.add(candidate)
    return sorted((spec(r) for r in roots), key=spec.sort_key)


def eigenspace(m: Matrix, lam: FieldElement) -> Subspace:
    """kernel(m - lam I); zero unless lam is an eigenvalue."""
    m.require_square()
    return kernel(m - Matrix.identity(m.spec, m.rows).scale(lam))


# --- Subspaces ---


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^n held by its canonical RREF basis (one basis vector per row)."""

    ambient_dim: int
    basis: Matrix

    @classmethod
    def span(cls, spec: FieldSpec, ambient_dim: int, vectors: Iterable[Sequence[FieldElement]]) -> Subspace:
        """Span of the given vectors, put into canonical form."""
        rows = [list(v) for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise DimensionMismatchError(ambient_dim, len(v), "vector")
        reduced, pivots = _rref_rows(spec, rows, ambient_dim)
        kept = tuple(tuple(r) for r in reduced[: len(pivots)])
        return cls(ambient_dim, Matrix(len(kept), ambient_dim, kept, spec))

    @classmethod
    def zero(cls, spec: FieldSpec, ambient_dim: int) -> Subspace:
        """The zero subspace."""
        return cls(ambient_dim, Matrix(0, ambient_dim, (), spec))

    @classmethod
    def full(cls, spec: FieldSpec, ambient_dim: int) -> Subspace:
        """The whole space F^n."""
        return cls(ambient_dim, Matrix.identity(spec, ambient_dim))

    @property
    def spec(self) -> FieldSpec:
        """The coefficient field."""
        return self.basis.spec

    @property
    def dim(self) -> int:
        """Dimension."""
        return self.basis.rows

    @property
    def vectors(self) -> tuple[Vector, ...]:
        """The RREF basis vectors."""
        return self.basis.entries

    @property
    def pivots(self) -> tuple[int, ...]:
        """Pivot column of each basis row."""
        return tuple(next(j for j, x in enumerate(r) if x != 0) for r in self.vectors)

    @property
    def free_columns(self) -> tuple[int, ...]:
        """Coordinates that are not pivots; their unit vectors span a complement."""
        pivots = set(self.pivots)
        return tuple(j for j in range(self.ambient_dim) if j not in pivots)

    @property
    def is_zero(self) -> bool:
        """Whether this is the zero subspace."""
        return self.dim == 0

    def reduce(self, v: Sequence[FieldElement]) -> Vector:
        """v minus its component along the basis; zero on every pivot column."""
        f = self.spec
        out = list(v)
        for row, c in zip(self.vectors, self.pivots, strict=True):
            factor = out[c]
            if factor != 0:
                out = [f.sub(a, f.mul(factor, b)) for a, b in zip(out, row, strict=True)]
        return tuple(out)

    def contains(self, v: Sequence[FieldElement]) -> bool:
        """Whether v lies in the subspace."""
        return is_zero_vector(self.reduce(v))

    def coordinates(self, v: Sequence[FieldElement]) -> Vector:
        """Coordinates of a member vector in the RREF basis."""
        return tuple(v[c] for c in self.pivots)

    def is_subspace_of(self, other: Subspace) -> bool:
        """Whether self is contained in other."""
        return all(other.contains(v) for v in self.vectors)

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace.span(self.spec, self.ambient_dim, [*self.vectors, *other.vectors])

    def intersect(self, other: Subspace) -> Subspace:
        """self ∩ other via the kernel of [U | -W]."""
        f, n = self.spec, self.ambient_dim
        if self.is_zero or other.is_zero:
            return Subspace.zero(f, n)
        columns = [*self.vectors, *(vec_scale(f, f.neg(f.one), w) for w in other.vectors)]
        null = kernel(Matrix.from_columns(f, n, columns))
        k = self.dim
        return Subspace.span(
            f, n, (linear_combination(f, v[:k], self.vectors, n) for v in null.vectors)
        )

    def format(self) -> str:
        """RREF basis rendered as bracketed rows."""
        return self.basis.format()

    def to_lists(self) -> list[list[str]]:
        """RREF basis rows as strings, for JSON reports."""
        return self.basis.to_lists()


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def subspace_count(q: int, n: int, dim: int | None = None) -> int:
    """Number of subspaces of F_q^n (of one dimension when ``dim`` is given)."""
    if dim is not None:
        return gaussian_binomial(n, dim, q)
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def enumerate_subspaces(
    spec: FieldSpec,
    ambient_dim: int,
    dim: int | None = None,
    *,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Iterator[Subspace]:
    """Every subspace of F_p^n exactly once, ordered by dimension, pivots, free entries.

    The cap is checked eagerly, before the first subspace is produced.
    """
    if not spec.is_prime_field:
        raise UnsupportedFieldError("subspace enumeration", spec.label)
    count = subspace_count(spec.characteristic, ambient_dim, dim)
    if count > cap:
        raise CapExceededError(count, cap)
    logger.debug("enumerating %d subspaces of %s^%d", count, spec.label, ambient_dim)
    dims = range(ambient_dim + 1) if dim is None else [dim]
    return _enumerate(spec, ambient_dim, dims)


def _enumerate(spec: FieldSpec, n: int, dims: Iterable[int]) -> Iterator[Subspace]:
    values = list(spec.elements())
    for k in dims:
        if not 0 <= k <= n:
            continue
        for pivots in itertools.combinations(range(n), k):
            pivot_set = set(pivots)
            free = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pivot_set]
            for assignment in itertools.product(values, repeat=len(free)):
                grid = [[spec.zero] * n for _ in range(k)]
                for r, pc in enumerate(pivots):
                    grid[r][pc] = spec.one
                for (r, c), value in zip(free, assignment, strict=True):
                    grid[r][c] = value
                yield Subspace(n, Matrix(k, n, tuple(tuple(r) for r in grid), spec))
