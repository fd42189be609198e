"""Univariate polynomials over a FieldSpec, lowest-degree coefficient first."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import ZeroPolynomialError

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from .field import FieldElement, FieldSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Polynomial:
    """A polynomial sum_i coeffs[i] * X^i; the zero polynomial has no coefficients."""

    coeffs: tuple[FieldElement, ...]
    spec: FieldSpec

    @classmethod
    def of(cls, spec: FieldSpec, coeffs: Iterable[FieldElement]) -> Polynomial:
        """Build a polynomial, trimming trailing zero coefficients."""
        values = list(coeffs)
        while values and values[-1] == 0:
            values.pop()
        return cls(tuple(values), spec)

    @classmethod
    def from_ints(cls, spec: FieldSpec, coeffs: Iterable[int]) -> Polynomial:
        """Build from integer coefficients mapped into the field."""
        return cls.of(spec, (spec.from_int(c) for c in coeffs))

    @classmethod
    def constant(cls, spec: FieldSpec, c: FieldElement) -> Polynomial:
        """The constant polynomial c."""
        return cls.of(spec, [c])

    @classmethod
    def x(cls, spec: FieldSpec) -> Polynomial:
        """The indeterminate X."""
        return cls.of(spec, [spec.zero, spec.one])

    @classmethod
    def from_roots(cls, spec: FieldSpec, roots: Iterable[FieldElement]) -> Polynomial:
        """prod (X - r) over the given roots (with repetition)."""
        result = cls.constant(spec, spec.one)
        for r in roots:
            result = result * cls.of(spec, [spec.neg(r), spec.one])
        return result

    # --- Shape ---

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        """Whether this is the zero polynomial."""
        return not self.coeffs

    @property
    def lead(self) -> FieldElement:
        """Leading coefficient."""
        if self.is_zero:
            raise ZeroPolynomialError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> FieldElement:
        """Coefficient of X^i (zero beyond the degree)."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.spec.zero

    def monic(self) -> Polynomial:
        """Scale so the leading coefficient is 1."""
        return self.scale(self.spec.inv(self.lead))

    # --- Arithmetic ---

    def __add__(self, other: Polynomial) -> Polynomial:
        f = self.spec
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial.of(f, (f.add(self.coeff(i), other.coeff(i)) for i in range(n)))

    def __sub__(self, other: Polynomial) -> Polynomial:
        f = self.spec
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial.of(f, (f.sub(self.coeff(i), other.coeff(i)) for i in range(n)))

    def __neg__(self) -> Polynomial:
        return self.scale(self.spec.neg(self.spec.one))

    def __mul__(self, other: Polynomial) -> Polynomial:
        f = self.spec
        if self.is_zero or other.is_zero:
            return Polynomial((), f)
        out = [f.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Polynomial.of(f, out)

    def scale(self, c: FieldElement) -> Polynomial:
        """c * self."""
        return Polynomial.of(self.spec, (self.spec.mul(c, a) for a in self.coeffs))

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        if other.is_zero:
            raise ZeroPolynomialError("polynomial division by zero")
        f = self.spec
        rem = list(self.coeffs)
        quot = [f.zero] * max(len(rem) - len(other.coeffs) + 1, 0)
        inv_lead = f.inv(other.lead)
        for shift in range(len(quot) - 1, -1, -1):
            c = f.mul(rem[shift + other.degree], inv_lead)
            quot[shift] = c
            if c == 0:
                continue
            for i, b in enumerate(other.coeffs):
                rem[shift + i] = f.sub(rem[shift + i], f.mul(c, b))
        return Polynomial.of(f, quot), Polynomial.of(f, rem[: max(other.degree, 0)])

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[1]

    def divides(self, other: Polynomial) -> bool:
        """Whether self | other."""
        return (other % self).is_zero

    def derivative(self) -> Polynomial:
        """Formal derivative."""
        f = self.spec
        return Polynomial.of(f, (f.mul(f.from_int(i), a) for i, a in enumerate(self.coeffs) if i))

    def __call__(self, x: FieldElement) -> FieldElement:
        """Evaluate at a scalar by Horner's rule."""
        f = self.spec
        acc = f.zero
        for a in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), a)
        return acc

    # --- Display ---

    def format(self, var: str = "x") -> str:
        """Human-readable form, highest degree first."""
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            text = self.spec.format(c)
            power = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if not power:
                terms.append(text)
            elif text == "1":
                terms.append(power)
            elif text == "-1":
                terms.append(f"-{power}")
            else:
                terms.append(f"{text}*{power}")
        return " + ".join(terms).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.format()


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by Euclid; gcd(0, 0) = 0."""
    while not b.is_zero:
        a, b = b, a % b
    return a if a.is_zero else a.monic()


def poly_xgcd(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Return (g, u, v) with u*a + v*b = g and g the monic gcd."""
    f = a.spec
    zero, one = Polynomial((), f), Polynomial.constant(f, f.one)
    r0, r1 = a, b
    u0, u1 = one, zero
    v0, v1 = zero, one
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero:
        return r0, u0, v0
    inv_lead = f.inv(r0.lead)
    return r0.scale(inv_lead), u0.scale(inv_lead), v0.scale(inv_lead)


def poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic least common multiple of nonzero polynomials."""
    return ((a * b) // poly_gcd(a, b)).monic()


def squarefree_part(f: Polynomial) -> Polynomial:
    """Monic product of the distinct irreducible factors of ``f``.

    Works in characteristic p too: when f' = 0, f = h(X^p) and the p-th roots of the
    F_p coefficients are the coefficients themselves, so we recurse on h.
    """
    if f.is_zero:
        raise ZeroPolynomialError("squarefree part of the zero polynomial")
    return _radical(f.monic())


def _radical(f: Polynomial) -> Polynomial:
    spec = f.spec
    if f.degree <= 0:
        return Polynomial.constant(spec, spec.one)
    df = f.derivative()
    if df.is_zero:
        p = spec.characteristic
        logger.debug("f' = 0 for degree %d over %s; taking the p-th root", f.degree, spec.label)
        return _radical(Polynomial.of(spec, f.coeffs[::p]))
    g = poly_gcd(f, df)
    # factors with multiplicity divisible by p survive only in g
    return poly_lcm(f // g, _radical(g))


def is_squarefree(f: Polynomial) -> bool:
    """Whether gcd(f, f') = 1 (no repeated factor in any extension)."""
    if f.is_zero:
        raise ZeroPolynomialError("squarefree test of the zero polynomial")
    return poly_gcd(f, f.derivative()).degree == 0


def root_multiplicity(f: Polynomial, root: FieldElement) -> int:
    """Multiplicity of ``root`` as a root of the nonzero polynomial ``f``."""
    if f.is_zero:
        raise ZeroPolynomialError("root multiplicity in the zero polynomial")
    linear = Polynomial.of(f.spec, [f.spec.neg(root), f.spec.one])
    count = 0
    while f.degree > 0:
        q, r = divmod(f, linear)
        if not r.is_zero:
            break
        f, count = q, count + 1
    return count


def divide_out_roots(f: Polynomial, roots: Sequence[FieldElement]) -> Polynomial:
    """Divide ``f`` once by (X - r) for each listed root."""
    for r in roots:
        f = f // Polynomial.of(f.spec, [f.spec.neg(r), f.spec.one])
    return f
