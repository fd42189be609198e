"""Built-in catalog: gl(n), sl(n), sl2, fsl2, the Heisenberg algebra, aff2 and the
two-matrix algebra S from the characteristic-p failure of Lie's theorem."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Literal, get_args

from .errors import BadParametersError
from .linalg import Matrix
from .liealg import LieAlgebra, MatrixEmbedding, commutator_algebra_of_matrices, new_lie_algebra

if TYPE_CHECKING:
    from .field import FieldSpec

logger = logging.getLogger(__name__)

BuiltinName = Literal["gl", "sl", "sl2", "fsl2", "heisenberg", "aff2", "lie51"]

BUILTIN_NAMES: tuple[str, ...] = get_args(BuiltinName)

DEFAULT_MATRIX_SIZE = 2


def gl_matrices(spec: FieldSpec, n: int) -> tuple[list[Matrix], list[str]]:
    """Matrix units e_ij in row-major order, labelled ``e11``, ``e12``, ..."""
    mats, labels = [], []
    for i in range(n):
        for j in range(n):
            mats.append(Matrix.unit(spec, n, i, j))
            labels.append(f"e{i + 1}{j + 1}")
    return mats, labels


def sl_matrices(spec: FieldSpec, n: int) -> tuple[list[Matrix], list[str]]:
    """Off-diagonal units e_ij, then h_i = e_ii - e_(i+1)(i+1)."""
    mats, labels = [], []
    for i in range(n):
        for j in range(n):
            if i != j:
                mats.append(Matrix.unit(spec, n, i, j))
                labels.append(f"e{i + 1}{j + 1}")
    for i in range(n - 1):
        mats.append(Matrix.unit(spec, n, i, i) - Matrix.unit(spec, n, i + 1, i + 1))
        labels.append(f"h{i + 1}")
    return mats, labels


def sl2_matrices(spec: FieldSpec) -> list[Matrix]:
    """e = e12, f = e21, h = e11 - e22."""
    return [
        Matrix.from_rows(spec, [[0, 1], [0, 0]]),
        Matrix.from_rows(spec, [[0, 0], [1, 0]]),
        Matrix.from_rows(spec, [[1, 0], [0, -1]]),
    ]


def lie_counterexample_matrices(spec: FieldSpec) -> tuple[Matrix, Matrix]:
    """The p x p cyclic shift x and y = diag(0, 1, ..., p-1); [x, y] = x over F_p."""
    if not spec.is_prime_field:
        msg = "the cyclic counterexample needs a prime field"
        raise BadParametersError(msg)
    p = spec.characteristic
    x = Matrix.from_rows(spec, [[1 if j == (i + 1) % p else 0 for j in range(p)] for i in range(p)])
    y = Matrix.diag(spec, [spec.from_int(i) for i in range(p)])
    return x, y


def builtin_with_embedding(
    name: str,
    spec: FieldSpec,
    n: int | None = None,
) -> tuple[LieAlgebra, MatrixEmbedding | None]:
    """A catalog algebra together with its defining matrices when it has them."""
    size = DEFAULT_MATRIX_SIZE if n is None else n
    if name == "gl":
        if size < 1:
            msg = f"gl needs n >= 1, got {size}"
            raise BadParametersError(msg)
        mats, labels = gl_matrices(spec, size)
        return commutator_algebra_of_matrices(mats, labels)
    if name == "sl":
        if size < 2:  # noqa: PLR2004
            msg = f"sl needs n >= 2, got {size}"
            raise BadParametersError(msg)
        mats, labels = sl_matrices(spec, size)
        return commutator_algebra_of_matrices(mats, labels)
    if name == "sl2":
        if spec.characteristic == 2:  # noqa: PLR2004
            logger.warning("sl2 over F_2: [h,e] and [h,f] collapse to 0; fsl2 is the char-2 analogue")
        return commutator_algebra_of_matrices(sl2_matrices(spec), ["e", "f", "h"])
    if name == "fsl2":
        if spec.characteristic != 2:  # noqa: PLR2004
            msg = f"fsl2 is defined in characteristic 2 only, not over {spec.label}"
            raise BadParametersError(msg)
        table = {("h", "e"): {"e": 1}, ("h", "f"): {"f": -1}, ("e", "f"): {"h": 1}}
        return new_lie_algebra(spec, ["e", "f", "h"], table), None
    if name == "heisenberg":
        mats = [Matrix.unit(spec, 3, 0, 1), Matrix.unit(spec, 3, 1, 2), Matrix.unit(spec, 3, 0, 2)]
        return commutator_algebra_of_matrices(mats, ["x", "y", "z"])
    if name == "aff2":
        return commutator_algebra_of_matrices(
            [Matrix.unit(spec, 2, 0, 0), Matrix.unit(spec, 2, 0, 1)], ["h", "x"]
        )
    if name == "lie51":
        return commutator_algebra_of_matrices(list(lie_counterexample_matrices(spec)), ["x", "y"])
    msg = f"unknown catalog algebra {name!r} (choose from {', '.join(BUILTIN_NAMES)})"
    raise BadParametersError(msg)


def builtin(name: str, spec: FieldSpec, n: int | None = None) -> LieAlgebra:
    """A catalog algebra with its conventional basis labels."""
    return builtin_with_embedding(name, spec, n)[0]
