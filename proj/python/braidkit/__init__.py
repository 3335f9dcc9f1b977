"""Exact computations with braidings, braided bialgebras and their primitives.

Documents may be given as dicts, JSON strings or paths to JSON files; they use
the same schemas as the ``braidkit`` command-line tool.
"""

from __future__ import annotations

import json
import os
from typing import Any, Union

from . import _braidkit
from ._braidkit import (
    BadDegree,
    BraidkitError,
    FieldMismatch,
    NotPrime,
    ParseError,
    ShapeError,
    SpecViolation,
    __version__,
)

Document = Union[dict, str, os.PathLike]

__all__ = [
    "BadDegree",
    "BraidkitError",
    "FieldMismatch",
    "NotPrime",
    "ParseError",
    "ShapeError",
    "SpecViolation",
    "__version__",
    "block_braiding",
    "check_bialgebra",
    "check_yang_baxter",
    "primitive_dims",
    "primitives",
    "run",
]


def _text(doc: Document) -> str:
    if isinstance(doc, dict):
        return json.dumps(doc)
    if isinstance(doc, os.PathLike) or (isinstance(doc, str) and not doc.lstrip().startswith("{")):
        with open(doc, encoding="utf-8") as fh:
            return fh.read()
    return doc


def run(*args: str) -> tuple[int, dict[str, Any] | None, str]:
    """Run a CLI invocation in process. The report is parsed when present."""
    code, out, err = _braidkit.run([str(a) for a in args])
    return code, (json.loads(out) if out.strip() else None), err


def check_yang_baxter(doc: Document, field: str | None = None) -> dict[str, bool]:
    return json.loads(_braidkit.check_yang_baxter(_text(doc), field))


def check_bialgebra(doc: Document, field: str | None = None) -> dict[str, bool]:
    return json.loads(_braidkit.check_bialgebra(_text(doc), field))


def block_braiding(doc: Document, m: int, n: int, field: str | None = None) -> list[list[str]]:
    """Matrix of the braiding V^{⊗m} ⊗ V^{⊗n} → V^{⊗n} ⊗ V^{⊗m}, entries as strings."""
    return _braidkit.block_braiding(_text(doc), m, n, field)


def primitive_dims(doc: Document, degree: int, field: str | None = None) -> list[int]:
    """Dimensions of the primitive subspaces of T(V) in degrees 1..degree."""
    return _braidkit.primitive_dims(_text(doc), degree, field)


def primitives(doc: Document, field: str | None = None) -> tuple[list[list[str]], list[list[str]]]:
    """Basis of the primitives of a bialgebra and the braiding restricted to them."""
    return _braidkit.primitives(_text(doc), field)
