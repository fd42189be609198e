"""Structure-constant Lie algebras: construction, brackets, ad, series, ideals, radical.

A LieAlgebra stores c[i][j] = [b_i, b_j] as a coordinate vector. Every subspace
computed here (series terms, ideals, radical, center) lives in the same ambient
coordinate space F^dim.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING

from .errors import (
    AntisymmetryViolationError,
    DimensionMismatchError,
    DuplicateLabelError,
    JacobiViolationError,
    NotAnIdealError,
    NotClosedError,
    NotIndependentError,
    UnsupportedFieldError,
)
from .linalg import (
    DEFAULT_ENUMERATION_CAP,
    Matrix,
    Subspace,
    Vector,
    basis_vector,
    enumerate_subspaces,
    is_zero_vector,
    kernel,
    solve_linear,
    vec_add,
    zero_vector,
)

if TYPE_CHECKING:
    from collections.abc import Mapping, Sequence

    from .field import FieldElement, FieldSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LieAlgebra:
    """A finite-dimensional Lie algebra given by structure constants in a fixed basis."""

    spec: FieldSpec
    labels: tuple[str, ...]
    structure: tuple[tuple[Vector, ...], ...]

    @property
    def dim(self) -> int:
        """Dimension."""
        return len(self.labels)

    def constant(self, i: int, j: int, k: int) -> FieldElement:
        """c_ij^k, the b_k coordinate of [b_i, b_j]."""
        return self.structure[i][j][k]

    def basis(self, i: int) -> Vector:
        """The i-th basis vector."""
        return basis_vector(self.spec, self.dim, i)

    def index(self, label: str) -> int:
        """Position of a basis label."""
        try:
            return self.labels.index(label)
        except ValueError:
            msg = f"unknown basis label {label!r}"
            raise KeyError(msg) from None

    def vector(self, coeffs: Mapping[str, int | FieldElement]) -> Vector:
        """Coordinate vector of sum coeffs[label] * b_label."""
        out = list(zero_vector(self.spec, self.dim))
        for label, c in coeffs.items():
            k = self.index(label)
            out[k] = self.spec.add(out[k], self.spec(c))
        return tuple(out)

    @cached_property
    def ad_basis(self) -> tuple[Matrix, ...]:
        """ad(b_i) for every basis element (column j holds [b_i, b_j])."""
        f, n = self.spec, self.dim
        return tuple(Matrix.from_columns(f, n, self.structure[i]) for i in range(n))

    def format_vector(self, v: Sequence[FieldElement]) -> str:
        """Render a coordinate vector as a signed combination of labels."""
        return format_combination(self.spec, self.labels, v)


def format_combination(spec: FieldSpec, labels: Sequence[str], v: Sequence[FieldElement]) -> str:
    """``2*e - f + h`` style rendering; ``0`` for the zero vector."""
    terms = []
    for label, c in zip(labels, v, strict=True):
        if c == 0:
            continue
        text = spec.format(c)
        negative = text.startswith("-")
        magnitude = text.lstrip("-")
        term = label if magnitude == "1" else f"{magnitude}*{label}"
        terms.append(("-" if negative else "+", term))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, term in terms[1:]:
        out += f" {sign} {term}"
    return out


@dataclass(frozen=True)
class MatrixEmbedding:
    """Matrices spanning a linear Lie algebra, one per basis element."""

    matrices: tuple[Matrix, ...]

    @property
    def size(self) -> int:
        """Side length of the matrices."""
        return self.matrices[0].rows

    def to_matrix(self, v: Sequence[FieldElement]) -> Matrix:
        """sum_i v_i * matrices[i]."""
        spec = self.matrices[0].spec
        acc = Matrix.zeros(spec, self.size)
        for c, m in zip(v, self.matrices, strict=True):
            if c != 0:
                acc = acc + m.scale(c)
        return acc

    def coordinates(self, m: Matrix) -> Vector | None:
        """Coordinates of ``m`` in the spanning matrices, or None if outside the span."""
        spec = m.spec
        system = Matrix.from_columns(spec, self.size**2, [b.flatten() for b in self.matrices])
        return solve_linear(system, m.flatten())


@dataclass(frozen=True)
class SubalgebraView:
    """A subalgebra given by its carrier subspace and the induced structure constants."""

    parent: LieAlgebra
    carrier: Subspace
    induced: LieAlgebra = field(compare=False)

    def lift(self, coords: Sequence[FieldElement]) -> Vector:
        """Parent coordinates of an element given in carrier coordinates."""
        acc = zero_vector(self.parent.spec, self.parent.dim)
        for c, v in zip(coords, self.carrier.vectors, strict=True):
            if c != 0:
                acc = vec_add(self.parent.spec, acc, tuple(self.parent.spec.mul(c, x) for x in v))
        return acc


# --- Construction ---


def from_structure_constants(
    spec: FieldSpec,
    labels: Sequence[str],
    structure: Sequence[Sequence[Sequence[FieldElement]]],
) -> LieAlgebra:
    """Build a LieAlgebra from a full tensor, validating antisymmetry and Jacobi."""
    _check_labels(labels)
    n = len(labels)
    tensor = tuple(tuple(tuple(structure[i][j]) for j in range(n)) for i in range(n))
    for i in range(n):
        for j in range(n):
            if len(tensor[i][j]) != n:
                raise DimensionMismatchError(n, len(tensor[i][j]), "structure constants")
    algebra = LieAlgebra(spec, tuple(labels), tensor)
    _check_antisymmetry(algebra)
    _check_jacobi(algebra)
    return algebra


def new_lie_algebra(
    spec: FieldSpec,
    labels: Sequence[str],
    bracket_table: Mapping[tuple[str, str], Mapping[str, int | FieldElement]],
) -> LieAlgebra:
    """Build a Lie algebra from brackets of label pairs; unlisted pairs are 0.

    Listing (a, b) fills (b, a) with the negation. Listing both must agree up to sign.
    """
    _check_labels(labels)
    n = len(labels)
    index = {label: k for k, label in enumerate(labels)}
    tensor: list[list[Vector | None]] = [[None] * n for _ in range(n)]
    zero = zero_vector(spec, n)
    for (a, b), rhs in bracket_table.items():
        i, j = _label_index(index, a), _label_index(index, b)
        v = list(zero)
        for label, c in rhs.items():
            k = _label_index(index, label)
            v[k] = spec.add(v[k], spec(c))
        value = tuple(v)
        if i == j:
            if not is_zero_vector(value):
                raise AntisymmetryViolationError(i, j, (a, b))
            continue
        negated = tuple(spec.neg(x) for x in value)
        for (r, s), expected in (((i, j), value), ((j, i), negated)):
            if tensor[r][s] is not None and tensor[r][s] != expected:
                raise AntisymmetryViolationError(i, j, (a, b))
            tensor[r][s] = expected
    full = [[tensor[i][j] if tensor[i][j] is not None else zero for j in range(n)] for i in range(n)]
    return from_structure_constants(spec, labels, full)


def _label_index(index: Mapping[str, int], label: str) -> int:
    if label not in index:
        msg = f"unknown basis label {label!r}"
        raise KeyError(msg)
    return index[label]


def _check_labels(labels: Sequence[str]) -> None:
    seen: set[str] = set()
    for label in labels:
        if label in seen:
            raise DuplicateLabelError(label)
        seen.add(label)


def _check_antisymmetry(algebra: LieAlgebra) -> None:
    spec, n = algebra.spec, algebra.dim
    for i in range(n):
        if not is_zero_vector(algebra.structure[i][i]):
            raise AntisymmetryViolationError(i, i, (algebra.labels[i], algebra.labels[i]))
        for j in range(i + 1, n):
            total = vec_add(spec, algebra.structure[i][j], algebra.structure[j][i])
            if not is_zero_vector(total):
                raise AntisymmetryViolationError(i, j, (algebra.labels[i], algebra.labels[j]))


def _check_jacobi(algebra: LieAlgebra) -> None:
    # with antisymmetry in place, triples with a repeated index vanish identically
    n = algebra.dim
    for i, j, k in itertools.combinations(range(n), 3):
        bi, bj, bk = algebra.basis(i), algebra.basis(j), algebra.basis(k)
        total = bracket(algebra, bracket(algebra, bi, bj), bk)
        total = vec_add(algebra.spec, total, bracket(algebra, bracket(algebra, bj, bk), bi))
        total = vec_add(algebra.spec, total, bracket(algebra, bracket(algebra, bk, bi), bj))
        if not is_zero_vector(total):
            labels = (algebra.labels[i], algebra.labels[j], algebra.labels[k])
            raise JacobiViolationError(i, j, k, labels)


def jacobi_holds(algebra: LieAlgebra) -> bool:
    """Whether the Jacobi identity holds on every basis triple (exhaustive)."""
    spec, n = algebra.spec, algebra.dim
    for i, j, k in itertools.product(range(n), repeat=3):
        bi, bj, bk = algebra.basis(i), algebra.basis(j), algebra.basis(k)
        total = bracket(algebra, bracket(algebra, bi, bj), bk)
        total = vec_add(spec, total, bracket(algebra, bracket(algebra, bj, bk), bi))
        total = vec_add(spec, total, bracket(algebra, bracket(algebra, bk, bi), bj))
        if not is_zero_vector(total):
            return False
    return True


def commutator_algebra_of_matrices(
    mats: Sequence[Matrix],
    labels: Sequence[str],
) -> tuple[LieAlgebra, MatrixEmbedding]:
    """The Lie algebra spanned by matrices under [X, Y] = XY - YX."""
    if not mats:
        msg = "need at least one matrix"
        raise ValueError(msg)
    if len(labels) != len(mats):
        raise DimensionMismatchError(len(mats), len(labels), "labels")
    spec, size = mats[0].spec, mats[0].rows
    for m in mats:
        m.require_square()
        if m.rows != size:
            raise DimensionMismatchError(size, m.rows, "matrix size")
    flat = [m.flatten() for m in mats]
    if Subspace.span(spec, size * size, flat).dim != len(mats):
        msg = "matrices are linearly dependent"
        raise NotIndependentError(msg)
    system = Matrix.from_columns(spec, size * size, flat)
    n = len(mats)
    tensor: list[list[Vector]] = [[zero_vector(spec, n)] * n for _ in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        coords = solve_linear(system, mats[i].commutator(mats[j]).flatten())
        if coords is None:
            msg = f"[{labels[i]}, {labels[j]}] leaves the span"
            raise NotClosedError((i, j), msg)
        tensor[i][j] = coords
        tensor[j][i] = tuple(spec.neg(x) for x in coords)
    return from_structure_constants(spec, labels, tensor), MatrixEmbedding(tuple(mats))


# --- Brackets ---


def bracket(algebra: LieAlgebra, u: Sequence[FieldElement], v: Sequence[FieldElement]) -> Vector:
    """Bilinear extension of the structure constants."""
    n = algebra.dim
    if len(u) != n or len(v) != n:
        raise DimensionMismatchError(n, (len(u), len(v)), "bracket operands")
    spec = algebra.spec
    out = [spec.zero] * n
    for i, a in enumerate(u):
        if a == 0:
            continue
        row = algebra.structure[i]
        for j, b in enumerate(v):
            if b == 0:
                continue
            ab = spec.mul(a, b)
            for k, c in enumerate(row[j]):
                if c != 0:
                    out[k] = spec.add(out[k], spec.mul(ab, c))
    return tuple(out)


def ad(algebra: LieAlgebra, x: Sequence[FieldElement]) -> Matrix:
    """Matrix of a -> [x, a] in the algebra's basis."""
    if len(x) != algebra.dim:
        raise DimensionMismatchError(algebra.dim, len(x), "ad operand")
    acc = Matrix.zeros(algebra.spec, algebra.dim)
    for c, m in zip(x, algebra.ad_basis, strict=True):
        if c != 0:
            acc = acc + m.scale(c)
    return acc


def bracket_span(algebra: LieAlgebra, u: Subspace, w: Subspace) -> Subspace:
    """[U, W] = span of brackets of basis vectors."""
    vectors = [bracket(algebra, a, b) for a in u.vectors for b in w.vectors]
    return Subspace.span(algebra.spec, algebra.dim, vectors)


def full_space(algebra: LieAlgebra) -> Subspace:
    """L itself as a subspace."""
    return Subspace.full(algebra.spec, algebra.dim)


def derived_algebra(algebra: LieAlgebra) -> Subspace:
    """[L, L]."""
    whole = full_space(algebra)
    return bracket_span(algebra, whole, whole)


def is_abelian(algebra: LieAlgebra) -> bool:
    """Whether every bracket vanishes."""
    return all(is_zero_vector(v) for row in algebra.structure for v in row)


# --- Series ---


def _series(algebra: LieAlgebra, start: Subspace, *, central: bool) -> list[Subspace]:
    series = [start]
    if start.is_zero:
        return series
    whole = full_space(algebra)
    current = start
    while True:
        nxt = bracket_span(algebra, whole if central else current, current)
        series.append(nxt)
        if nxt == current or nxt.is_zero:
            return series
        current = nxt


def derived_series(algebra: LieAlgebra, start: Subspace | None = None) -> list[Subspace]:
    """L ⊇ [L, L] ⊇ ...; stops at 0 or at the first term equal to its predecessor."""
    return _series(algebra, start or full_space(algebra), central=False)


def lower_central_series(algebra: LieAlgebra) -> list[Subspace]:
    """L^1 = L, L^(m+1) = [L, L^m], with the same stopping rule."""
    return _series(algebra, full_space(algebra), central=True)


def is_solvable(algebra: LieAlgebra) -> bool:
    """Whether the derived series reaches 0."""
    return derived_series(algebra)[-1].is_zero


def is_solvable_subspace(algebra: LieAlgebra, s: Subspace) -> bool:
    """Whether the subalgebra carried by ``s`` is solvable."""
    return derived_series(algebra, s)[-1].is_zero


def is_nilpotent(algebra: LieAlgebra) -> bool:
    """Whether the lower central series reaches 0."""
    return lower_central_series(algebra)[-1].is_zero


# --- Ideals and subalgebras ---


def is_subalgebra(algebra: LieAlgebra, s: Subspace) -> bool:
    """Whether ``s`` is closed under the bracket."""
    return all(s.contains(bracket(algebra, u, v)) for u, v in itertools.combinations(s.vectors, 2))


def is_ideal(algebra: LieAlgebra, s: Subspace) -> bool:
    """Whether [b_i, s] ⊆ s for every basis element b_i."""
    return all(
        s.contains(bracket(algebra, algebra.basis(i), v))
        for i in range(algebra.dim)
        for v in s.vectors
    )


def ideals(algebra: LieAlgebra, *, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Subspace]:
    """Every ideal, by filtering the enumeration of all subspaces (F_p only)."""
    if not algebra.spec.is_prime_field:
        raise UnsupportedFieldError("ideal enumeration", algebra.spec.label)
    return [s for s in enumerate_subspaces(algebra.spec, algebra.dim, cap=cap) if is_ideal(algebra, s)]


def _carrier_labels(algebra: LieAlgebra, s: Subspace) -> list[str]:
    labels = []
    for k, v in enumerate(s.vectors):
        nonzero = [j for j, x in enumerate(v) if x != 0]
        if len(nonzero) == 1 and v[nonzero[0]] == algebra.spec.one:
            labels.append(algebra.labels[nonzero[0]])
        else:
            labels.append(f"v{k + 1}")
    return labels if len(set(labels)) == len(labels) else [f"v{k + 1}" for k in range(s.dim)]


def restrict_to(algebra: LieAlgebra, s: Subspace) -> SubalgebraView:
    """The subalgebra carried by ``s`` with constants re-expressed in its RREF basis."""
    vectors = s.vectors
    k = len(vectors)
    tensor: list[list[Vector]] = [[zero_vector(algebra.spec, k)] * k for _ in range(k)]
    for a in range(k):
        for b in range(k):
            value = bracket(algebra, vectors[a], vectors[b])
            if not s.contains(value):
                raise NotClosedError((a, b))
            tensor[a][b] = s.coordinates(value)
    induced = from_structure_constants(algebra.spec, _carrier_labels(algebra, s), tensor)
    return SubalgebraView(algebra, s, induced)


def quotient(algebra: LieAlgebra, ideal: Subspace) -> LieAlgebra:
    """L / I on the coset representatives of the non-pivot coordinates of I."""
    if not is_ideal(algebra, ideal):
        msg = "subspace is not an ideal"
        raise NotAnIdealError(msg)
    free = ideal.free_columns
    k = len(free)
    tensor: list[list[Vector]] = [[zero_vector(algebra.spec, k)] * k for _ in range(k)]
    for a, i in enumerate(free):
        for b, j in enumerate(free):
            reduced = ideal.reduce(algebra.structure[i][j])
            tensor[a][b] = tuple(reduced[c] for c in free)
    return from_structure_constants(algebra.spec, [algebra.labels[i] for i in free], tensor)


def centralizer(algebra: LieAlgebra, s: Subspace) -> Subspace:
    """{x : [x, s] = 0}."""
    if s.is_zero:
        return full_space(algebra)
    stacked = [row for v in s.vectors for row in ad(algebra, v).entries]
    # [x, v] = -ad(v) x, so x is central for s iff every ad(v) kills it
    return kernel(Matrix(len(stacked), algebra.dim, tuple(stacked), algebra.spec))


def center(algebra: LieAlgebra) -> Subspace:
    """Z(L) = intersection of the kernels of ad(b_i)."""
    return centralizer(algebra, full_space(algebra))


# --- Radical and simplicity ---


def radical(algebra: LieAlgebra, *, cap: int = DEFAULT_ENUMERATION_CAP) -> Subspace:
    """The maximal solvable ideal.

    Over F_p: the largest solvable ideal among all enumerated ideals, which must
    contain every other solvable ideal. Over Q: the Killing-orthogonal complement of
    [L, L].
    """
    spec = algebra.spec
    if not spec.is_prime_field:
        # Lazy import: killing depends on this module.
        from .killing import killing_form  # noqa: PLC0415

        gram = killing_form(algebra).gram
        derived = derived_algebra(algebra)
        if derived.is_zero:
            return full_space(algebra)
        return kernel(Matrix(derived.dim, algebra.dim, derived.vectors, spec) @ gram)
    solvable = [s for s in ideals(algebra, cap=cap) if is_solvable_subspace(algebra, s)]
    largest = max(solvable, key=lambda s: s.dim)
    for other in solvable:
        if not other.is_subspace_of(largest):
            msg = "largest solvable ideal does not contain every solvable ideal"
            raise AssertionError(msg)
    logger.debug("radical of dim %d among %d solvable ideals", largest.dim, len(solvable))
    return largest


def is_semisimple(algebra: LieAlgebra, *, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    """Whether rad(L) = 0."""
    return radical(algebra, cap=cap).is_zero


def is_simple(algebra: LieAlgebra, *, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    """Non-abelian with no ideals besides 0 and L."""
    if is_abelian(algebra):
        return False
    return len(ideals(algebra, cap=cap)) == 2  # noqa: PLR2004
