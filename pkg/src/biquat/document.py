"""Plain-text matrix documents written by ``biquat gen``.

Layout::

    group: su3-lie
    basis_order: e1,e2,e3,e0
    params:
      alpha: 0.5
      a1: 1
    matrix:
      [re, im] [re, im] [re, im] [re, im]
      ...

Numbers use ``%.17g`` so every finite double survives a round trip.
"""
from __future__ import annotations

import io
from dataclasses import dataclass, field

import numpy as np

__all__ = ["MatrixDocument", "format_number", "format_document", "parse_document", "format_csv"]

BASIS_ORDER = "e1,e2,e3,e0"


@dataclass
class MatrixDocument:
    group: str
    params: dict[str, float]
    matrix: np.ndarray
    basis_order: str = BASIS_ORDER
    extra: dict[str, str] = field(default_factory=dict)


def format_number(x: float) -> str:
    return "%.17g" % x


def format_document(doc: MatrixDocument) -> str:
    out = io.StringIO()
    out.write(f"group: {doc.group}\n")
    out.write(f"basis_order: {doc.basis_order}\n")
    out.write("params:\n")
    for k, v in doc.params.items():
        out.write(f"  {k}: {format_number(v)}\n")
    out.write("matrix:\n")
    for row in np.asarray(doc.matrix):
        cells = " ".join(
            f"[{format_number(z.real)}, {format_number(z.imag)}]" for z in row
        )
        out.write(f"  {cells}\n")
    return out.getvalue()


def parse_document(text: str) -> MatrixDocument:
    group = basis = None
    params: dict[str, float] = {}
    rows: list[list[complex]] = []
    section = None
    for line in text.splitlines():
        if not line.strip():
            continue
        if not line.startswith(" "):
            key, _, value = line.partition(":")
            value = value.strip()
            if key == "group":
                group = value
            elif key == "basis_order":
                basis = value
            elif key in ("params", "matrix"):
                section = key
            else:
                raise ValueError(f"unknown key {key!r}")
            continue
        body = line.strip()
        if section == "params":
            k, _, v = body.partition(":")
            params[k.strip()] = float(v)
        elif section == "matrix":
            cells = body.strip("[]").split("] [")
            row = []
            for cell in cells:
                re_s, im_s = cell.split(",")
                row.append(complex(float(re_s), float(im_s)))
            rows.append(row)
        else:
            raise ValueError(f"unexpected indented line {line!r}")
    if group is None or basis is None or not rows:
        raise ValueError("incomplete matrix document")
    return MatrixDocument(group, params, np.array(rows, dtype=np.complex128), basis)


def format_csv(doc: MatrixDocument) -> str:
    """One line per entry, row-major: ``row,col,re,im``."""
    out = io.StringIO()
    out.write("row,col,re,im\n")
    m = np.asarray(doc.matrix)
    for i in range(m.shape[0]):
        for j in range(m.shape[1]):
            z = m[i, j]
            out.write(f"{i},{j},{format_number(z.real)},{format_number(z.imag)}\n")
    return out.getvalue()
