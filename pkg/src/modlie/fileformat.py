"""Text formats: algebra definitions and matrix lists.

An algebra file::

    # sl2 over F_5
    algebra sl2
    field F 5
    basis e f h
    bracket e f = h
    bracket h e = 2*e
    bracket h f = -2*f

Unlisted pairs bracket to 0. A matrix-list file gives one matrix per basis label::

    module 2
    matrix e
    0 1
    0 0
    ...
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import AlgebraFileParseError
from .field import FieldSpec
from .linalg import Matrix
from .liealg import LieAlgebra, format_combination, new_lie_algebra

if TYPE_CHECKING:
    from .field import FieldElement

_IDENT = r"[A-Za-z_][A-Za-z0-9_]*"
_IDENT_RE = re.compile(rf"^{_IDENT}$")
_TERM_RE = re.compile(rf"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?({_IDENT})\s*")


@dataclass(frozen=True)
class AlgebraFile:
    """A parsed algebra file."""

    name: str
    algebra: LieAlgebra


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((number, line))
    return out


def _parse_field(number: int, words: list[str]) -> FieldSpec:
    if words == ["Q"]:
        return FieldSpec.rationals()
    if len(words) == 2 and words[0] == "F" and words[1].isdigit():  # noqa: PLR2004
        try:
            return FieldSpec.prime(int(words[1]))
        except ValueError as exc:
            raise AlgebraFileParseError(number, str(exc)) from None
    raise AlgebraFileParseError(number, "expected 'field Q' or 'field F <p>'")


def parse_rhs(spec: FieldSpec, text: str, number: int = 0) -> dict[str, FieldElement]:
    """Parse ``0`` or signed terms like ``2*e - f + 1/2*h`` into {label: coefficient}."""
    text = text.strip()
    if text == "0":
        return {}
    terms: dict[str, FieldElement] = {}
    pos = 0
    while pos < len(text):
        match = _TERM_RE.match(text, pos)
        if match is None or match.end() == pos:
            raise AlgebraFileParseError(number, f"cannot parse bracket value near {text[pos:]!r}")
        sign, coeff, label = match.groups()
        if sign is None and pos > 0:
            raise AlgebraFileParseError(number, f"missing '+' or '-' before {label!r}")
        try:
            value = spec.parse_scalar(f"{sign or ''}{coeff or '1'}")
        except (ValueError, ZeroDivisionError) as exc:
            raise AlgebraFileParseError(number, str(exc)) from None
        terms[label] = spec.add(terms.get(label, spec.zero), value)
        pos = match.end()
    if not terms:
        raise AlgebraFileParseError(number, "empty bracket value")
    return terms


def read_algebra_file(text: str) -> AlgebraFile:
    """Parse an algebra file and build the (Jacobi-checked) algebra."""
    name: str | None = None
    spec: FieldSpec | None = None
    labels: list[str] | None = None
    table: dict[tuple[str, str], dict[str, FieldElement]] = {}
    last = 0
    for number, line in _content_lines(text):
        last = number
        keyword, _, rest = line.partition(" ")
        words = rest.split()
        if keyword == "algebra":
            if len(words) != 1:
                raise AlgebraFileParseError(number, "expected 'algebra <name>'")
            name = words[0]
        elif keyword == "field":
            spec = _parse_field(number, words)
        elif keyword == "basis":
            if not words or any(not _IDENT_RE.match(w) for w in words):
                raise AlgebraFileParseError(number, "basis labels must be identifiers")
            if len(set(words)) != len(words):
                raise AlgebraFileParseError(number, "duplicate basis label")
            labels = words
        elif keyword == "bracket":
            if spec is None or labels is None:
                raise AlgebraFileParseError(number, "'field' and 'basis' must precede brackets")
            lhs, eq, rhs = rest.partition("=")
            pair = lhs.split()
            if not eq or len(pair) != 2:  # noqa: PLR2004
                raise AlgebraFileParseError(number, "expected 'bracket <a> <b> = <value>'")
            a, b = pair
            for label in (a, b):
                if label not in labels:
                    raise AlgebraFileParseError(number, f"unknown basis label {label!r}")
            value = parse_rhs(spec, rhs, number)
            for label in value:
                if label not in labels:
                    raise AlgebraFileParseError(number, f"unknown basis label {label!r}")
            if a == b:
                if any(c != 0 for c in value.values()):
                    raise AlgebraFileParseError(number, f"self-bracket [{a}, {a}] must be 0")
                continue
            if (a, b) in table or (b, a) in table:
                raise AlgebraFileParseError(number, f"bracket of {a} and {b} is listed twice")
            table[a, b] = value
        else:
            raise AlgebraFileParseError(number, f"unknown keyword {keyword!r}")
    if name is None or spec is None or labels is None:
        raise AlgebraFileParseError(last + 1, "file needs 'algebra', 'field' and 'basis' lines")
    return AlgebraFile(name, new_lie_algebra(spec, labels, table))


def parse_algebra_file(text: str) -> LieAlgebra:
    """Parse an algebra file into a validated LieAlgebra."""
    return read_algebra_file(text).algebra


def emit_algebra_file(algebra: LieAlgebra, name: str) -> str:
    """Render ``algebra`` so that parsing the text gives back identical structure constants."""
    spec = algebra.spec
    field = f"F {spec.characteristic}" if spec.is_prime_field else "Q"
    lines = [f"algebra {name}", f"field {field}", "basis " + " ".join(algebra.labels)]
    for i in range(algebra.dim):
        for j in range(i + 1, algebra.dim):
            value = algebra.structure[i][j]
            if any(c != 0 for c in value):
                rhs = format_combination(spec, algebra.labels, value)
                lines.append(f"bracket {algebra.labels[i]} {algebra.labels[j]} = {rhs}")
    return "\n".join(lines) + "\n"


def load_matrix_list(text: str, algebra: LieAlgebra) -> tuple[list[Matrix], int]:
    """Parse one matrix per basis label; returns the matrices in basis order and the module dimension."""
    spec = algebra.spec
    module_dim: int | None = None
    blocks: dict[str, list[list[FieldElement]]] = {}
    current: list[list[FieldElement]] | None = None
    last = 0
    for number, line in _content_lines(text):
        last = number
        keyword, _, rest = line.partition(" ")
        if keyword == "module":
            if blocks or not rest.strip().isdigit() or int(rest) < 1:
                raise AlgebraFileParseError(number, "expected 'module <m>' before any matrix")
            module_dim = int(rest)
        elif keyword == "matrix":
            label = rest.strip()
            if label not in algebra.labels:
                raise AlgebraFileParseError(number, f"unknown basis label {label!r}")
            if label in blocks:
                raise AlgebraFileParseError(number, f"matrix for {label!r} given twice")
            _close_block(current, module_dim, number)
            current = blocks[label] = []
        else:
            if current is None:
                raise AlgebraFileParseError(number, "matrix rows must follow 'matrix <label>'")
            try:
                row = [spec.parse_scalar(word) for word in line.split()]
            except (ValueError, ZeroDivisionError) as exc:
                raise AlgebraFileParseError(number, str(exc)) from None
            if module_dim is None:
                module_dim = len(row)
            if len(row) != module_dim or len(current) >= module_dim:
                raise AlgebraFileParseError(number, f"expected {module_dim} rows of {module_dim} entries")
            current.append(row)
    _close_block(current, module_dim, last + 1)
    missing = [label for label in algebra.labels if label not in blocks]
    if missing:
        raise AlgebraFileParseError(last + 1, f"no matrix for {', '.join(missing)}")
    if module_dim is None:
        raise AlgebraFileParseError(last + 1, "empty matrix list")
    mats = [
        Matrix(module_dim, module_dim, tuple(tuple(r) for r in blocks[label]), spec)
        for label in algebra.labels
    ]
    return mats, module_dim


def _close_block(rows: list[list[FieldElement]] | None, module_dim: int | None, number: int) -> None:
    if rows is not None and len(rows) != module_dim:
        raise AlgebraFileParseError(number, f"matrix has {len(rows)} rows, expected {module_dim}")
