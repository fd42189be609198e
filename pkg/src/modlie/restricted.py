"""Restricted structures: Jacobson's s_i terms, p-mappings and their axioms.

A p-mapping x -> x^[p] on a Lie algebra over F_p satisfies

1. ad(x^[p]) = (ad x)^p
2. (a x)^[p] = a^p x^[p]
3. (x + y)^[p] = x^[p] + y^[p] + sum_i s_i(x, y)

where i * s_i(x, y) is the X^(i-1) coefficient of (ad(x X + y))^(p-1)(x) computed in
L tensor F[X]. A mapping is stored by its values on the basis and extended with 2 and 3.
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass
from math import comb
from typing import TYPE_CHECKING, NamedTuple

from .errors import (
    BadPredicateError,
    CapExceededError,
    DimensionMismatchError,
    UnsupportedFieldError,
)
from .killing import is_nondegenerate, killing_form
from .linalg import (
    DEFAULT_ENUMERATION_CAP,
    Matrix,
    Vector,
    is_zero_vector,
    kernel,
    solve_linear,
    vec_add,
    vec_scale,
    vec_sub,
    zero_vector,
)
from .liealg import LieAlgebra, ad, bracket, center, format_combination

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

    from .field import FieldElement, FieldSpec
    from .liealg import MatrixEmbedding

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = 100


@dataclass(frozen=True)
class PMapping:
    """A p-mapping given by the image of every basis element."""

    algebra: LieAlgebra
    basis_images: tuple[Vector, ...]


@dataclass(frozen=True)
class SiTable:
    """s_1(a, b), ..., s_(p-1)(a, b)."""

    a: Vector
    b: Vector
    entries: tuple[Vector, ...]

    def total(self, spec: FieldSpec) -> Vector:
        """sum_i s_i(a, b)."""
        acc = zero_vector(spec, len(self.a))
        for s in self.entries:
            acc = vec_add(spec, acc, s)
        return acc


class Obstruction(NamedTuple):
    """Why no p-mapping exists: (ad b_j)^p is not ad of any element."""

    index: int
    label: str
    unmatched: Matrix


class PMappingCheck(NamedTuple):
    """Outcome of checking the three axioms; ``axiom`` is None when all pass."""

    passed: bool
    axiom: int | None
    witness: str


class SolutionSpace(NamedTuple):
    """Solutions of ad(y) = (ad b_j)^p form cosets of the center."""

    center_dim: int
    unique: bool
    killing_nondegenerate: bool


def _require_prime(spec: FieldSpec, operation: str) -> int:
    if not spec.is_prime_field:
        raise UnsupportedFieldError(operation, spec.label)
    return spec.characteristic


# --- Associative identity ---


def ad_power_identity_check(mats: Sequence[Matrix], m: int) -> bool:
    """(ad x)^m (y) == sum_i (-1)^(m-i) C(m, i) x^i y x^(m-i) for every ordered pair."""
    if not mats:
        return True
    size = mats[0].rows
    for x in mats:
        x.require_square()
        if x.rows != size:
            raise DimensionMismatchError(size, x.rows, "matrix size")
    spec = mats[0].spec
    for x, y in itertools.product(mats, repeat=2):
        direct = y
        for _ in range(m):
            direct = x.commutator(direct)
        expanded = Matrix.zeros(spec, size)
        for i in range(m + 1):
            sign = 1 if (m - i) % 2 == 0 else -1
            term = x.power(i) @ y @ x.power(m - i)
            expanded = expanded + term.scale(spec.from_int(sign * comb(m, i)))
        if direct != expanded:
            return False
    return True


# --- Jacobson's s_i ---


def jacobson_si(algebra: LieAlgebra, a: Sequence[FieldElement], b: Sequence[FieldElement]) -> SiTable:
    """Expand (ad(a X + b))^(p-1)(a) by degree in X and divide the X^(i-1) part by i."""
    spec = algebra.spec
    p = _require_prime(spec, "Jacobson s_i")
    n = algebra.dim
    if len(a) != n or len(b) != n:
        raise DimensionMismatchError(n, (len(a), len(b)), "s_i operands")
    # element of L tensor F[X] as {degree: coefficient vector}
    current: dict[int, Vector] = {0: tuple(a)}
    for _ in range(p - 1):
        nxt: dict[int, Vector] = {}
        for degree, v in current.items():
            for shift, left in ((1, a), (0, b)):
                term = bracket(algebra, left, v)
                if is_zero_vector(term):
                    continue
                key = degree + shift
                nxt[key] = vec_add(spec, nxt[key], term) if key in nxt else term
        current = nxt
    zero = zero_vector(spec, n)
    entries = tuple(
        vec_scale(spec, spec.inv(spec.from_int(i)), current.get(i - 1, zero)) for i in range(1, p)
    )
    return SiTable(tuple(a), tuple(b), entries)


# --- Finding p-mappings ---


def _ad_system(algebra: LieAlgebra) -> Matrix:
    n = algebra.dim
    return Matrix.from_columns(algebra.spec, n * n, [m.flatten() for m in algebra.ad_basis])


def _basis_image(algebra: LieAlgebra, system: Matrix, j: int) -> tuple[Vector | None, Matrix]:
    target = algebra.ad_basis[j].power(algebra.spec.characteristic)
    return solve_linear(system, target.flatten()), target


def find_p_mapping(algebra: LieAlgebra) -> PMapping | None:
    """Solve ad(y_j) = (ad b_j)^p for every basis element; None if some system is inconsistent.

    Free variables are set to zero, so the choice is deterministic for a fixed basis.
    """
    _require_prime(algebra.spec, "p-mapping search")
    system = _ad_system(algebra)
    images = []
    for j in range(algebra.dim):
        image, _ = _basis_image(algebra, system, j)
        if image is None:
            logger.debug("no p-th power image for %s", algebra.labels[j])
            return None
        images.append(image)
    return PMapping(algebra, tuple(images))


def p_mapping_obstruction(algebra: LieAlgebra) -> Obstruction | None:
    """The first basis element whose (ad b_j)^p is not inner, or None if a p-mapping exists."""
    _require_prime(algebra.spec, "p-mapping search")
    system = _ad_system(algebra)
    for j in range(algebra.dim):
        image, target = _basis_image(algebra, system, j)
        if image is None:
            return Obstruction(j, algebra.labels[j], target)
    return None


def basis_image_candidates(
    algebra: LieAlgebra, j: int, *, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[Vector]:
    """Every y in L with ad(y) = (ad b_j)^p, by scanning all p^dim elements."""
    spec = algebra.spec
    p = _require_prime(spec, "p-th power image scan")
    count = p**algebra.dim
    if count > cap:
        raise CapExceededError(count, cap)
    target = algebra.ad_basis[j].power(p)
    return [
        y
        for y in itertools.product(spec.elements(), repeat=algebra.dim)
        if ad(algebra, y) == target
    ]


def pth_power_mapping(algebra: LieAlgebra, embedding: MatrixEmbedding) -> PMapping | None:
    """The matrix p-th power map read back in the algebra basis, if every b_j^p stays inside."""
    _require_prime(algebra.spec, "p-th power map")
    p = algebra.spec.characteristic
    images = []
    for m in embedding.matrices:
        coords = embedding.coordinates(m.power(p))
        if coords is None:
            return None
        images.append(coords)
    return PMapping(algebra, tuple(images))


# --- Evaluating ---


def evaluate_p_mapping(
    pm: PMapping,
    v: Sequence[FieldElement],
    order: Sequence[int] | None = None,
) -> Vector:
    """v^[p] by folding axiom 3 over the terms a_j b_j, in ascending basis index by default."""
    algebra = pm.algebra
    spec, n = algebra.spec, algebra.dim
    if len(v) != n:
        raise DimensionMismatchError(n, len(v), "p-mapping argument")
    p = spec.characteristic
    indices = range(n) if order is None else order
    acc_vec: Vector | None = None
    acc_img = zero_vector(spec, n)
    for j in indices:
        alpha = v[j]
        if alpha == 0:
            continue
        term = vec_scale(spec, alpha, algebra.basis(j))
        term_img = vec_scale(spec, spec.power(alpha, p), pm.basis_images[j])
        if acc_vec is None:
            acc_vec, acc_img = term, term_img
            continue
        correction = jacobson_si(algebra, acc_vec, term).total(spec)
        acc_img = vec_add(spec, vec_add(spec, acc_img, term_img), correction)
        acc_vec = vec_add(spec, acc_vec, term)
    return acc_img


def _random_vector(rng: random.Random, spec: FieldSpec, n: int) -> Vector:
    return tuple(spec.from_int(rng.randrange(spec.characteristic)) for _ in range(n))


def verify_p_mapping(pm: PMapping, *, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> PMappingCheck:
    """Check the three axioms and report the first violation.

    Axiom 1 on every basis element, axiom 2 on every basis element and scalar,
    axiom 3 on every basis pair and ``samples`` random pairs.
    """
    algebra = pm.algebra
    spec, n = algebra.spec, algebra.dim
    p = _require_prime(spec, "p-mapping verification")
    label = algebra.format_vector
    for j in range(n):
        if ad(algebra, pm.basis_images[j]) != algebra.ad_basis[j].power(p):
            return PMappingCheck(False, 1, algebra.labels[j])
    for j in range(n):
        for alpha in spec.elements():
            scaled = vec_scale(spec, alpha, algebra.basis(j))
            expected = vec_scale(spec, spec.power(alpha, p), pm.basis_images[j])
            if evaluate_p_mapping(pm, scaled) != expected:
                return PMappingCheck(False, 2, f"{spec.format(alpha)}*{algebra.labels[j]}")
    rng = random.Random(seed)
    pairs = [(algebra.basis(i), algebra.basis(j)) for i, j in itertools.product(range(n), repeat=2)]
    pairs += [(_random_vector(rng, spec, n), _random_vector(rng, spec, n)) for _ in range(samples)]
    for a, b in pairs:
        lhs = evaluate_p_mapping(pm, vec_add(spec, a, b))
        rhs = vec_add(spec, evaluate_p_mapping(pm, a), evaluate_p_mapping(pm, b))
        rhs = vec_add(spec, rhs, jacobson_si(algebra, a, b).total(spec))
        if lhs != rhs:
            return PMappingCheck(False, 3, f"({label(a)}, {label(b)})")
    return PMappingCheck(True, None, "")


def p_mapping_solution_space(algebra: LieAlgebra) -> SolutionSpace:
    """Solutions of each basis system differ by the kernel of y -> ad y, which is the center.

    A non-degenerate Killing form has a zero center, so it forces a unique p-mapping.
    """
    _require_prime(algebra.spec, "p-mapping solution space")
    homogeneous = kernel(_ad_system(algebra))
    if homogeneous != center(algebra):
        msg = f"kernel of ad has dimension {homogeneous.dim} but the center has dimension {center(algebra).dim}"
        raise AssertionError(msg)
    nondegenerate = is_nondegenerate(killing_form(algebra))
    unique = homogeneous.is_zero
    if nondegenerate and not unique:
        msg = "non-degenerate Killing form with a nonzero center"
        raise AssertionError(msg)
    logger.debug("p-mapping solutions are cosets of a %d-dimensional center", homogeneous.dim)
    return SolutionSpace(homogeneous.dim, unique, nondegenerate)


def p_mapping_to_table(pm: PMapping) -> dict[str, str]:
    """Basis images as ``{label: rhs}`` in algebra-file syntax."""
    algebra = pm.algebra
    return {
        label: format_combination(algebra.spec, algebra.labels, image)
        for label, image in zip(algebra.labels, pm.basis_images, strict=True)
    }


# --- Predicates ---


def pth_power_closure_check(mats: Sequence[Matrix], predicate: str) -> bool:
    """Whether x -> x^p keeps the matrices inside gl (always) or sl (trace zero stays trace zero)."""
    if predicate not in ("gl", "sl"):
        msg = f"unknown closure predicate {predicate!r} (expected gl or sl)"
        raise BadPredicateError(msg)
    for m in mats:
        m.require_square()
        p = _require_prime(m.spec, "p-th power closure")
        if predicate == "sl" and m.trace() == 0 and m.power(p).trace() != 0:
            return False
    return True


def table_map(algebra: LieAlgebra, images: Sequence[Sequence[FieldElement]]) -> Callable[[Vector], Vector]:
    """The additive extension v -> sum_j v_j * images[j] of a basis-image table."""
    spec, n = algebra.spec, algebra.dim

    def apply(v: Vector) -> Vector:
        acc = zero_vector(spec, n)
        for c, image in zip(v, images, strict=True):
            if c != 0:
                acc = vec_add(spec, acc, vec_scale(spec, c, image))
        return acc

    return apply


def is_p_semilinear(
    algebra: LieAlgebra,
    mapping: Callable[[Vector], Vector] | Sequence[Sequence[FieldElement]],
    *,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
) -> bool:
    """f(a + b) = f(a) + f(b) on sampled pairs and f(alpha a) = alpha^p f(a) for all basis a, alpha.

    A basis-image table is extended additively first.
    """
    spec, n = algebra.spec, algebra.dim
    p = _require_prime(spec, "p-semilinearity")
    f = mapping if callable(mapping) else table_map(algebra, mapping)
    for j in range(n):
        base = f(algebra.basis(j))
        for alpha in spec.elements():
            if f(vec_scale(spec, alpha, algebra.basis(j))) != vec_scale(spec, spec.power(alpha, p), base):
                return False
    rng = random.Random(seed)
    for _ in range(samples):
        a, b = _random_vector(rng, spec, n), _random_vector(rng, spec, n)
        if not is_zero_vector(vec_sub(spec, f(vec_add(spec, a, b)), vec_add(spec, f(a), f(b)))):
            return False
    return True
