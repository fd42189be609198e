"""Exception hierarchy shared by every modlie module.

Each error keeps its witness (indices, pairs, matrices, line numbers) as attributes
so the CLI and the scenario runner can put it into a report instead of a traceback.
"""

from __future__ import annotations

from typing import Any


# Process exit codes shared by every command
EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class ModlieError(Exception):
    """Base class for all modlie errors."""


# --- Scalars ---


class FieldDivisionByZeroError(ModlieError, ZeroDivisionError):
    """Raised when dividing by (or inverting) zero in a field."""

    def __init__(self, field: str) -> None:
        """Record the field in which the division happened."""
        self.field = field
        super().__init__(f"division by zero in {field}")


class MixedFieldsError(ModlieError):
    """Raised when an operand does not belong to the field it is used in."""

    def __init__(self, field: str, value: object) -> None:
        """Record the field and the foreign value."""
        self.field = field
        self.value = value
        super().__init__(f"{value!r} is not an element of {field}")


class UnsupportedFieldError(ModlieError):
    """Raised when an operation needs a prime field (or rationals) and gets the other."""

    def __init__(self, operation: str, field: str) -> None:
        """Record the operation and the offending field."""
        self.operation = operation
        self.field = field
        super().__init__(f"{operation} is not supported over {field}")


# --- Linear algebra ---


class DimensionMismatchError(ModlieError):
    """Raised when operand shapes do not fit together."""

    def __init__(self, expected: object, got: object, context: str = "") -> None:
        """Record the expected and actual shapes."""
        self.expected = expected
        self.got = got
        where = f"{context}: " if context else ""
        super().__init__(f"{where}expected {expected}, got {got}")


class NotSquareError(ModlieError):
    """Raised when a square matrix is required."""

    def __init__(self, rows: int, cols: int) -> None:
        """Record the offending shape."""
        self.rows = rows
        self.cols = cols
        super().__init__(f"matrix must be square, got {rows}x{cols}")


class NotInvertibleError(ModlieError):
    """Raised when inverting a singular matrix."""


class ZeroPolynomialError(ModlieError):
    """Raised when an operation needs a nonzero polynomial."""


class CapExceededError(ModlieError):
    """Raised when a subspace enumeration would exceed the configured cap."""

    def __init__(self, count: int, cap: int) -> None:
        """Record the required enumeration size and the cap."""
        self.count = count
        self.cap = cap
        super().__init__(f"subspace enumeration needs {count} subspaces, cap is {cap}")


# --- Lie algebras ---


class JacobiViolationError(ModlieError):
    """Raised when the Jacobi identity fails on a basis triple."""

    def __init__(self, i: int, j: int, k: int, labels: tuple[str, str, str]) -> None:
        """Record the witnessing basis triple."""
        self.witness = (i, j, k)
        self.labels = labels
        super().__init__(f"Jacobi identity fails on ({', '.join(labels)})")


class AntisymmetryViolationError(ModlieError):
    """Raised when a bracket table is not antisymmetric."""

    def __init__(self, i: int, j: int, labels: tuple[str, str]) -> None:
        """Record the witnessing basis pair."""
        self.witness = (i, j)
        self.labels = labels
        super().__init__(f"bracket is not antisymmetric on ({', '.join(labels)})")


class DuplicateLabelError(ModlieError):
    """Raised when two basis elements share a label."""

    def __init__(self, label: str) -> None:
        """Record the repeated label."""
        self.label = label
        super().__init__(f"duplicate basis label {label!r}")


class NotClosedError(ModlieError):
    """Raised when a span is not closed under the bracket."""

    def __init__(self, witness: tuple[int, int], message: str = "") -> None:
        """Record the pair of spanning elements whose bracket leaves the span."""
        self.witness = witness
        super().__init__(message or f"span is not closed: bracket of pair {witness} leaves it")


class NotIndependentError(ModlieError):
    """Raised when spanning matrices or vectors are linearly dependent."""


class NotAnIdealError(ModlieError):
    """Raised when a quotient is requested by a subspace that is not an ideal."""


class BadParametersError(ModlieError):
    """Raised for catalog requests that do not make sense (e.g. fsl2 over F_3)."""


# --- Representations ---


class HomomorphismViolationError(ModlieError):
    """Raised when matrices do not satisfy rho([a, b]) = [rho(a), rho(b)]."""

    def __init__(self, pair: tuple[int, int], labels: tuple[str, str], difference: Any) -> None:
        """Record the basis pair and the nonzero difference matrix."""
        self.pair = pair
        self.labels = labels
        self.difference = difference
        super().__init__(f"representation law fails on pair ({', '.join(labels)})")


class InvalidRepresentationError(ModlieError):
    """Raised when a representation does not belong to the algebra it is used with."""


class IncompleteSplitError(ModlieError):
    """Raised when some eigenvalues of the weight operator lie outside the base field."""

    def __init__(self, found: Any, missing_dim: int) -> None:
        """Record the in-field part of the decomposition."""
        self.found = found
        self.missing_dim = missing_dim
        super().__init__(
            f"weight operator does not split over the base field ({missing_dim} dimensions missing)"
        )


class NotInvariantError(ModlieError):
    """Raised when a subspace is required to be invariant and is not."""


class BadDimensionError(ModlieError):
    """Raised when a construction needs a specific module dimension."""


class BadPredicateError(ModlieError):
    """Raised for an unknown p-th power closure predicate."""


# --- Files ---


class AlgebraFileParseError(ModlieError):
    """Raised for malformed algebra or matrix-list files."""

    def __init__(self, line: int, message: str) -> None:
        """Record the 1-based line number and the problem."""
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")
