"""Representations of Lie algebras: validation, submodules, complements, weights, flags."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .catalog import builtin_with_embedding
from .errors import (
    BadDimensionError,
    DimensionMismatchError,
    HomomorphismViolationError,
    IncompleteSplitError,
    InvalidRepresentationError,
    NotInvariantError,
)
from .field import FieldSpec
from .linalg import (
    DEFAULT_ENUMERATION_CAP,
    Matrix,
    Subspace,
    Vector,
    basis_vector,
    char_poly,
    eigenspace,
    eigenvalues_in_field,
    enumerate_subspaces,
    is_zero_vector,
    vec_scale,
)
from .poly import root_multiplicity

if TYPE_CHECKING:
    from collections.abc import Sequence

    from .field import FieldElement
    from .liealg import LieAlgebra, MatrixEmbedding

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Representation:
    """A homomorphism L -> gl(V) given by the image of every basis element."""

    algebra: LieAlgebra
    module_dim: int
    mats: tuple[Matrix, ...]

    @property
    def spec(self) -> FieldSpec:
        """The coefficient field."""
        return self.algebra.spec

    def matrix_of(self, v: Sequence[FieldElement]) -> Matrix:
        """rho(v) = sum_k v_k rho(b_k)."""
        if len(v) != self.algebra.dim:
            raise DimensionMismatchError(self.algebra.dim, len(v), "algebra element")
        acc = Matrix.zeros(self.spec, self.module_dim)
        for c, m in zip(v, self.mats, strict=True):
            if c != 0:
                acc = acc + m.scale(c)
        return acc

    def is_invariant(self, s: Subspace) -> bool:
        """Whether every rho(b_k) maps ``s`` into itself."""
        return all(s.contains(m.apply(v)) for m in self.mats for v in s.vectors)


@dataclass(frozen=True)
class WeightDecomposition:
    """Eigenvalues of rho(h) in the base field with their eigenspaces."""

    weights: tuple[FieldElement, ...]
    spaces: tuple[Subspace, ...]

    @property
    def dims(self) -> tuple[int, ...]:
        """Dimension of each weight space."""
        return tuple(s.dim for s in self.spaces)


# --- Construction ---


def check_representation(
    algebra: LieAlgebra,
    mats: Sequence[Matrix],
    module_dim: int | None = None,
) -> Representation:
    """Validate rho([b_i, b_j]) = [rho(b_i), rho(b_j)] on every basis pair."""
    if len(mats) != algebra.dim:
        raise DimensionMismatchError(algebra.dim, len(mats), "representation matrices")
    if module_dim is None:
        if not mats:
            msg = "module dimension is required for a zero-dimensional algebra"
            raise InvalidRepresentationError(msg)
        module_dim = mats[0].rows
    for m in mats:
        m.require_square()
        if m.rows != module_dim:
            raise DimensionMismatchError(module_dim, m.rows, "representation matrix size")
        if m.spec != algebra.spec:
            msg = f"matrix over {m.spec.label} for an algebra over {algebra.spec.label}"
            raise InvalidRepresentationError(msg)
    rep = Representation(algebra, module_dim, tuple(mats))
    for i, j in itertools.combinations(range(algebra.dim), 2):
        difference = rep.matrix_of(algebra.structure[i][j]) - mats[i].commutator(mats[j])
        if not difference.is_zero:
            raise HomomorphismViolationError((i, j), (algebra.labels[i], algebra.labels[j]), difference)
    return rep


def adjoint_rep(algebra: LieAlgebra) -> Representation:
    """b_j -> ad(b_j); valid exactly because of the Jacobi identity."""
    return check_representation(algebra, algebra.ad_basis, algebra.dim)


def trivial_rep(algebra: LieAlgebra, module_dim: int) -> Representation:
    """Every basis element acts by zero."""
    zero = Matrix.zeros(algebra.spec, module_dim)
    return Representation(algebra, module_dim, (zero,) * algebra.dim)


def standard_rep(algebra: LieAlgebra, embedding: MatrixEmbedding) -> Representation:
    """The defining matrices of a linear Lie algebra acting on column vectors."""
    return check_representation(algebra, embedding.matrices)


def direct_sum(first: Representation, second: Representation) -> Representation:
    """Block-diagonal action on V (+) W."""
    if first.algebra != second.algebra:
        msg = "direct sum of representations of different algebras"
        raise InvalidRepresentationError(msg)
    spec = first.spec
    m, k = first.module_dim, second.module_dim
    mats = []
    for a, b in zip(first.mats, second.mats, strict=True):
        top = tuple(row + (spec.zero,) * k for row in a.entries)
        bottom = tuple((spec.zero,) * m + row for row in b.entries)
        mats.append(Matrix(m + k, m + k, top + bottom, spec))
    return Representation(first.algebra, m + k, tuple(mats))


def sym_power(rep: Representation, n: int) -> Representation:
    """Sym^n of a 2-dimensional module on the monomials x^n, x^(n-1) y, ..., y^n.

    Each rho(b) acts as the derivation extending its action on x and y, so e = e12
    acts as x d/dy and f = e21 as y d/dx.
    """
    if rep.module_dim != 2:  # noqa: PLR2004
        msg = f"symmetric powers need a 2-dimensional module, got {rep.module_dim}"
        raise BadDimensionError(msg)
    if n < 1:
        msg = f"symmetric power degree must be at least 1, got {n}"
        raise BadDimensionError(msg)
    spec = rep.spec
    mats = []
    for a in rep.mats:
        grid = [[spec.zero] * (n + 1) for _ in range(n + 1)]
        for k in range(n + 1):
            px, py = spec.from_int(n - k), spec.from_int(k)
            grid[k][k] = spec.add(spec.mul(px, a[0, 0]), spec.mul(py, a[1, 1]))
            if k < n:
                grid[k + 1][k] = spec.add(grid[k + 1][k], spec.mul(px, a[1, 0]))
            if k > 0:
                grid[k - 1][k] = spec.add(grid[k - 1][k], spec.mul(py, a[0, 1]))
        mats.append(Matrix(n + 1, n + 1, tuple(tuple(r) for r in grid), spec))
    return check_representation(rep.algebra, mats, n + 1)


# --- Submodules ---


def submodule_generated(rep: Representation, vectors: Sequence[Sequence[FieldElement]]) -> Subspace:
    """Smallest invariant subspace containing ``vectors``."""
    current = Subspace.span(rep.spec, rep.module_dim, vectors)
    while True:
        images = [m.apply(v) for m in rep.mats for v in current.vectors]
        grown = current + Subspace.span(rep.spec, rep.module_dim, images)
        if grown.dim == current.dim:
            return current
        current = grown


def invariant_subspaces(rep: Representation, *, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Subspace]:
    """Every invariant subspace, in enumeration order (F_p only)."""
    found = [s for s in enumerate_subspaces(rep.spec, rep.module_dim, cap=cap) if rep.is_invariant(s)]
    logger.debug("%d invariant subspaces in a %d-dimensional module", len(found), rep.module_dim)
    return found


def find_complement(
    rep: Representation,
    u: Subspace,
    *,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Subspace | None:
    """The first invariant W in enumeration order with U (+) W = V, or None."""
    if not rep.is_invariant(u):
        msg = "subspace is not invariant"
        raise NotInvariantError(msg)
    spec, m = rep.spec, rep.module_dim
    if u.is_zero:
        return Subspace.full(spec, m)
    if u.dim == m:
        return Subspace.zero(spec, m)
    for w in enumerate_subspaces(spec, m, m - u.dim, cap=cap):
        if rep.is_invariant(w) and u.intersect(w).is_zero:
            return w
    return None


def is_completely_reducible(rep: Representation, *, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    """Whether every invariant subspace has an invariant complement."""
    invariant = invariant_subspaces(rep, cap=cap)
    m = rep.module_dim
    for u in invariant:
        if not any(w.dim == m - u.dim and u.intersect(w).is_zero for w in invariant):
            logger.debug("no complement for invariant subspace %s", u.format())
            return False
    return True


def irreducible_submodules(rep: Representation, *, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Subspace]:
    """Minimal nonzero invariant subspaces."""
    nonzero = [s for s in invariant_subspaces(rep, cap=cap) if not s.is_zero]
    return [
        s for s in nonzero if not any(t.dim < s.dim and t.is_subspace_of(s) for t in nonzero)
    ]


def is_semisimple_module(rep: Representation, *, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    """Whether V is the sum of its irreducible submodules."""
    total = Subspace.zero(rep.spec, rep.module_dim)
    for s in irreducible_submodules(rep, cap=cap):
        total = total + s
    return total.dim == rep.module_dim


# --- Weights ---


def weight_decomposition(rep: Representation, h: Sequence[FieldElement]) -> WeightDecomposition:
    """Eigenvalues of rho(h) with their eigenspaces.

    Raises :class:`IncompleteSplitError` carrying the in-field part when the
    characteristic polynomial of rho(h) does not split over the base field.
    """
    action = rep.matrix_of(h)
    weights = eigenvalues_in_field(action)
    found = WeightDecomposition(tuple(weights), tuple(eigenspace(action, w) for w in weights))
    poly = char_poly(action)
    covered = sum(root_multiplicity(poly, w) for w in weights)
    if covered < rep.module_dim:
        raise IncompleteSplitError(found, rep.module_dim - covered)
    return found


def sl2_sym_power(n: int, spec: FieldSpec | None = None) -> Representation:
    """Sym^n of the standard sl2 module (rationals unless another field is given)."""
    field = FieldSpec.rationals() if spec is None else spec
    algebra, embedding = builtin_with_embedding("sl2", field)
    if embedding is None:
        msg = "sl2 is expected to come with its defining matrices"
        raise AssertionError(msg)
    return sym_power(standard_rep(algebra, embedding), n)


def ladder_check(n: int) -> bool:
    """e(f^k v) = k(n-k+1) f^(k-1) v for k = 1..n on v = x^n, f^(n+1) v = 0, and e, f shift weights by +2, -2."""
    rep = sl2_sym_power(n)
    spec = rep.spec
    e, f, h = rep.mats
    v = basis_vector(spec, n + 1, 0)
    chain = [v]
    for _ in range(n + 1):
        chain.append(f.apply(chain[-1]))
    for k in range(1, n + 1):
        expected = vec_scale(spec, spec.from_int(k * (n - k + 1)), chain[k - 1])
        if e.apply(chain[k]) != expected:
            return False
    if not is_zero_vector(chain[n + 1]):
        return False
    for k in range(n + 1):
        monomial = basis_vector(spec, n + 1, k)
        weight = spec.from_int(n - 2 * k)
        for raising, shift in ((e, 2), (f, -2)):
            moved = raising.apply(monomial)
            target = vec_scale(spec, spec.add(weight, spec.from_int(shift)), moved)
            if h.apply(moved) != target:
                return False
    return True


# --- Common eigenvectors and flags ---


def _check_same_size(mats: Sequence[Matrix]) -> int:
    if not mats:
        msg = "need at least one matrix"
        raise ValueError(msg)
    size = mats[0].rows
    for m in mats:
        m.require_square()
        if m.rows != size:
            raise DimensionMismatchError(size, m.rows, "matrix size")
    return size


def _common_in(
    space: Subspace, mats: Sequence[Matrix], eigenvalues: tuple[FieldElement, ...]
) -> tuple[Vector, list[FieldElement]] | None:
    if not mats:
        return space.vectors[0], list(eigenvalues)
    first, rest = mats[0], mats[1:]
    for lam in eigenvalues_in_field(first):
        narrowed = space.intersect(eigenspace(first, lam))
        if narrowed.is_zero:
            continue
        found = _common_in(narrowed, rest, (*eigenvalues, lam))
        if found is not None:
            return found
    return None


def common_eigenvector(mats: Sequence[Matrix]) -> tuple[Vector, list[FieldElement]] | None:
    """Some v != 0 and in-field eigenvalues with mats[j] v = lambda_j v, or None."""
    size = _check_same_size(mats)
    return _common_in(Subspace.full(mats[0].spec, size), mats, ())


def _induced_on_quotient(m: Matrix, flag: Subspace) -> Matrix:
    free = flag.free_columns
    columns = []
    for c in free:
        reduced = flag.reduce(m.column(c))
        columns.append(tuple(reduced[r] for r in free))
    return Matrix.from_columns(m.spec, len(free), columns)


def triangularize(mats: Sequence[Matrix]) -> Matrix | None:
    """Invertible P with P^-1 m P upper triangular for every m, or None.

    Builds a flag by taking a common eigenvector on V / U for the current invariant U.
    """
    size = _check_same_size(mats)
    spec = mats[0].spec
    flag = Subspace.zero(spec, size)
    chosen: list[Vector] = []
    while flag.dim < size:
        induced = [_induced_on_quotient(m, flag) for m in mats]
        found = common_eigenvector(induced)
        if found is None:
            logger.debug("no common eigenvector on a quotient of dimension %d", size - flag.dim)
            return None
        lifted = [spec.zero] * size
        for value, c in zip(found[0], flag.free_columns, strict=True):
            lifted[c] = value
        chosen.append(tuple(lifted))
        flag = Subspace.span(spec, size, chosen)
    return Matrix.from_columns(spec, size, chosen)
