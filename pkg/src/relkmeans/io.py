"""Reading and writing the plain-text distance matrix format.

Input layout::

    name of object 1
    ...
    name of object n
    //
    d11;d12;...;d1n
    ...
    dn1;dn2;...;dnn

Fields are semicolon separated, use ``.`` as decimal separator and may be
padded with spaces. The matrix holds distances, not squared distances.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .errors import FieldParseError, FormatError, ShapeError, ValidationError

SEPARATOR_LINE = "//"
ASYMMETRY_RTOL = 1e-9
DIAGONAL_ATOL = 1e-12

_NUMBER = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")


@dataclass(frozen=True)
class NamedDataset:
    names: list
    distances: np.ndarray

    @property
    def n(self):
        return len(self.names)


def _lines(text):
    if hasattr(text, "read"):
        text = text.read()
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if text.startswith("﻿"):
        text = text[1:]
    return text.replace("\r\n", "\n").split("\n")


def _parse_field(field, line, column):
    field = field.strip()
    if not _NUMBER.fullmatch(field):
        raise FieldParseError(f"cannot parse {field!r} as a number", line, column)
    return float(field)


def parse_input(text) -> NamedDataset:
    """Parse names, the ``//`` separator and the distance matrix.

    ``text`` may be a string, bytes or a readable file object. The matrix is
    checked for negative entries, asymmetry beyond a relative ``1e-9`` and
    diagonal entries above ``1e-12``; it is then averaged with its transpose
    and its diagonal set to exactly zero.
    """
    lines = _lines(text)

    try:
        separator_line = lines.index(SEPARATOR_LINE) + 1
    except ValueError:
        raise FormatError(f"missing {SEPARATOR_LINE!r} line after the object names") from None
    names = lines[: separator_line - 1]
    for number, name in enumerate(names, start=1):
        if not name.strip():
            raise FormatError("blank line where an object name was expected", number)

    n = len(names)
    if n < 2:
        raise FormatError(f"need at least 2 objects, found {n}", separator_line)

    rows = lines[separator_line:]
    while rows and not rows[-1].strip():
        rows.pop()
    if len(rows) != n:
        raise ShapeError(
            f"expected {n} matrix rows, found {len(rows)}",
            separator_line + min(len(rows), n) + 1,
        )

    D = np.empty((n, n))
    for i, row in enumerate(rows):
        line = separator_line + 1 + i
        fields = row.split(";")
        if len(fields) != n:
            raise ShapeError(f"row {i + 1} has {len(fields)} fields, expected {n}", line)
        for j, field in enumerate(fields):
            D[i, j] = _parse_field(field, line, j + 1)

    _validate(D, separator_line)
    D = 0.5 * (D + D.T)
    np.fill_diagonal(D, 0.0)
    return NamedDataset(names=names, distances=D)


def _validate(D, separator_line):
    negative = np.argwhere(D < 0)
    if negative.size:
        i, j = negative[0]
        raise ValidationError(
            f"negative distance {D[i, j]!r} at ({i + 1}, {j + 1})", separator_line + 1 + i, j + 1
        )
    diagonal = np.flatnonzero(np.abs(np.diagonal(D)) > DIAGONAL_ATOL)
    if diagonal.size:
        i = diagonal[0]
        raise ValidationError(
            f"nonzero diagonal entry {D[i, i]!r} at ({i + 1}, {i + 1})", separator_line + 1 + i, i + 1
        )
    scale = np.maximum(1.0, np.maximum(np.abs(D), np.abs(D.T)))
    asymmetric = np.argwhere(np.abs(D - D.T) > ASYMMETRY_RTOL * scale)
    if asymmetric.size:
        i, j = asymmetric[0]
        raise ValidationError(
            f"asymmetric entries ({i + 1}, {j + 1})={D[i, j]!r} and ({j + 1}, {i + 1})={D[j, i]!r}",
            separator_line + 1 + i,
            j + 1,
        )


def read_input(path) -> NamedDataset:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_input(fh.read())


def square_distances(dataset: NamedDataset) -> np.ndarray:
    """Squared distance matrix ``A`` with ``A[i, j] = d[i, j] ** 2``."""
    D = dataset.distances
    return D * D


def format_input(names, distances) -> str:
    """Inverse of :func:`parse_input`; floats are written with ``repr`` so the
    matrix survives a round trip exactly."""
    D = np.asarray(distances, dtype=np.float64)
    out = [f"{name}\n" for name in names]
    out.append(SEPARATOR_LINE + "\n")
    for row in D:
        out.append(";".join(repr(float(x)) for x in row) + "\n")
    return "".join(out)


def renumber_first_appearance(labels):
    mapping = {}
    return [mapping.setdefault(int(label), len(mapping)) for label in labels]


def write_output(names, outcome) -> str:
    """Result file: a ``# value=...; attempts=...`` header, then ``name;cluster``
    per object in input order, clusters numbered by first appearance."""
    labels = outcome.best.labels
    if len(names) != len(labels):
        raise ValueError(f"{len(names)} names for {len(labels)} labels")
    out = [f"# value={float(outcome.best_value)!r}; attempts={outcome.attempts_executed}\n"]
    for name, label in zip(names, renumber_first_appearance(labels)):
        out.append(f"{name};{label}\n")
    return "".join(out)
