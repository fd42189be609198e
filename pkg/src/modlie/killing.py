"""Killing and trace forms, their radicals, and both Cartan criteria."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, NamedTuple

from .errors import InvalidRepresentationError
from .linalg import DEFAULT_ENUMERATION_CAP, Matrix, kernel, rank, vec_add
from .liealg import derived_algebra, is_semisimple, is_solvable

if TYPE_CHECKING:
    from collections.abc import Sequence

    from .field import FieldElement
    from .liealg import LieAlgebra
    from .linalg import Subspace
    from .representation import Representation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BilinearForm:
    """A symmetric bilinear form on a Lie algebra, stored as its gram matrix."""

    gram: Matrix
    algebra: LieAlgebra
    label: str = "kappa"

    def __call__(self, u: Sequence[FieldElement], v: Sequence[FieldElement]) -> FieldElement:
        """u^T gram v."""
        return _dot(self.algebra, u, self.gram.apply(v))

    @property
    def is_symmetric(self) -> bool:
        """Whether gram equals its transpose."""
        return self.gram == self.gram.transpose()


def _dot(algebra: LieAlgebra, u: Sequence[FieldElement], v: Sequence[FieldElement]) -> FieldElement:
    spec = algebra.spec
    acc = spec.zero
    for a, b in zip(u, v, strict=True):
        if a != 0 and b != 0:
            acc = spec.add(acc, spec.mul(a, b))
    return acc


def _gram_of(algebra: LieAlgebra, mats: Sequence[Matrix], label: str) -> BilinearForm:
    spec, n = algebra.spec, algebra.dim
    grid = [[spec.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            value = (mats[i] @ mats[j]).trace()
            grid[i][j] = grid[j][i] = value
    return BilinearForm(Matrix(n, n, tuple(tuple(r) for r in grid), spec), algebra, label)


def killing_form(algebra: LieAlgebra) -> BilinearForm:
    """kappa(b_i, b_j) = tr(ad b_i . ad b_j)."""
    return _gram_of(algebra, algebra.ad_basis, "kappa")


def trace_form(rep: Representation) -> BilinearForm:
    """(b_i, b_j) -> tr(rho(b_i) rho(b_j)) for a representation rho."""
    if len(rep.mats) != rep.algebra.dim:
        msg = f"representation has {len(rep.mats)} matrices for a {rep.algebra.dim}-dimensional algebra"
        raise InvalidRepresentationError(msg)
    return _gram_of(rep.algebra, rep.mats, "trace")


def killing_radical(form: BilinearForm) -> Subspace:
    """{x : form(x, y) = 0 for all y} = kernel of the gram matrix."""
    return kernel(form.gram)


def is_nondegenerate(form: BilinearForm) -> bool:
    """Whether the gram matrix has full rank."""
    return rank(form.gram) == form.algebra.dim


def associativity_check(form: BilinearForm) -> bool:
    """form([b_i, b_j], b_k) == form(b_i, [b_j, b_k]) on every basis triple."""
    algebra = form.algebra
    n = algebra.dim
    for i, j, k in itertools.product(range(n), repeat=3):
        left = form(algebra.structure[i][j], algebra.basis(k))
        right = form(algebra.basis(i), algebra.structure[j][k])
        if left != right:
            logger.debug("associativity fails on (%d, %d, %d)", i, j, k)
            return False
    return True


# --- Cartan's criteria ---


class CartanStatements(NamedTuple):
    """The two trace conditions of Cartan's solvability criterion and the truth."""

    stmt1: bool
    stmt2: bool
    solvable: bool
    consistent: bool


class CartanSemisimplicity(NamedTuple):
    """Both sides of the semisimplicity criterion."""

    semisimple: bool
    nondegenerate: bool
    equivalent: bool


def cartan_statements(algebra: LieAlgebra, rep: Representation) -> CartanStatements:
    """Evaluate tr(rho(L) rho([L,L])) = 0 and tr(rho(a)^2) = 0 on [L,L] against solvability.

    The square-trace condition is tested on a basis of [L,L] and every pairwise sum of
    basis vectors: in characteristic 2 the quadratic form is not determined by its
    values on a basis.
    """
    if rep.algebra != algebra or len(rep.mats) != algebra.dim:
        msg = "representation belongs to a different algebra"
        raise InvalidRepresentationError(msg)
    spec = algebra.spec
    vectors = list(derived_algebra(algebra).vectors)
    derived = [rep.matrix_of(v) for v in vectors]
    stmt1 = all((a @ b).trace() == 0 for a in rep.mats for b in derived)
    candidates = vectors + [vec_add(spec, u, w) for u, w in itertools.combinations(vectors, 2)]
    stmt2 = True
    for v in candidates:
        m = rep.matrix_of(v)
        if (m @ m).trace() != 0:
            stmt2 = False
            break
    solvable = is_solvable(algebra)
    consistent = stmt1 == stmt2 == solvable
    logger.debug("cartan: stmt1=%s stmt2=%s solvable=%s", stmt1, stmt2, solvable)
    return CartanStatements(stmt1, stmt2, solvable, consistent)


def cartan_semisimplicity(
    algebra: LieAlgebra, *, cap: int = DEFAULT_ENUMERATION_CAP
) -> CartanSemisimplicity:
    """Semisimplicity (radical zero) next to non-degeneracy of the Killing form."""
    semisimple = is_semisimple(algebra, cap=cap)
    nondegenerate = is_nondegenerate(killing_form(algebra))
    return CartanSemisimplicity(semisimple, nondegenerate, semisimple == nondegenerate)
