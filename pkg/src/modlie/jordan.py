"""Jordan-Chevalley decomposition over perfect fields and diagonalisability tests.

Over F_p and Q every square matrix splits as a = s + n with s semisimple (squarefree
minimal polynomial), n nilpotent and sn = ns. The semisimple part is found by Newton
iteration on the squarefree part g of the minimal polynomial::

    s <- s - g(s) v(s)      where u g + v g' = 1

Each step squares the nilpotency of g(s), so the loop ends after about log2(dim) steps.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .linalg import Matrix, Vector, evaluate_at_matrix, min_poly, roots_in_field, solve_linear
from .poly import Polynomial, divide_out_roots, is_squarefree, poly_xgcd, squarefree_part

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class JordanPair:
    """Semisimple and nilpotent parts of ``source``."""

    s: Matrix
    n: Matrix
    source: Matrix


def chevalley_decompose(a: Matrix) -> JordanPair:
    """Split ``a`` into commuting semisimple and nilpotent parts."""
    a.require_square()
    g = squarefree_part(min_poly(a))
    _, _, v = poly_xgcd(g, g.derivative())
    s = a
    steps = 0
    limit = a.rows.bit_length() + 2
    while True:
        residue = evaluate_at_matrix(g, s)
        if residue.is_zero:
            break
        if steps >= limit:
            msg = f"Newton iteration did not converge after {steps} steps"
            raise AssertionError(msg)
        s = s - residue @ evaluate_at_matrix(v, s)
        steps += 1
    logger.debug("jordan-chevalley: %d Newton steps for a %dx%d matrix", steps, a.rows, a.rows)
    return JordanPair(s, a - s, a)


def is_semisimple_matrix(a: Matrix) -> bool:
    """Whether the minimal polynomial is squarefree."""
    a.require_square()
    return is_squarefree(min_poly(a))


def is_diagonalisable_over_base(a: Matrix) -> bool:
    """Whether the minimal polynomial splits into distinct linear factors over the base field."""
    a.require_square()
    m = min_poly(a)
    if not is_squarefree(m):
        return False
    return divide_out_roots(m, roots_in_field(m)).degree == 0


def is_nilpotent_matrix(a: Matrix) -> bool:
    """Whether a^dim = 0."""
    a.require_square()
    return a.power(a.rows).is_zero


def as_polynomial_in(a: Matrix, s: Matrix) -> Polynomial | None:
    """Some f of degree < deg min_poly(a) with f(a) = s, or None if s is not a polynomial in a."""
    a.require_square()
    spec, size = a.spec, a.rows
    degree = min_poly(a).degree
    powers: list[Vector] = []
    current = Matrix.identity(spec, size)
    for _ in range(degree):
        powers.append(current.flatten())
        current = current @ a
    coeffs = solve_linear(Matrix.from_columns(spec, size * size, powers), s.flatten())
    return None if coeffs is None else Polynomial.of(spec, coeffs)


def companion_matrix(f: Polynomial) -> Matrix:
    """Companion matrix of a monic polynomial: ones below the diagonal, -coeffs in the last column."""
    spec, d = f.spec, f.degree
    monic = f.monic()
    grid = [[spec.zero] * d for _ in range(d)]
    for i in range(1, d):
        grid[i][i - 1] = spec.one
    for i in range(d):
        grid[i][d - 1] = spec.neg(monic.coeff(i))
    return Matrix(d, d, tuple(tuple(r) for r in grid), spec)
