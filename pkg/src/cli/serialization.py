"""
Map files and ψ files.

A map file is a UTF-8 JSON document

    {"m": 3, "n": 2, "matrices": [[["1", "0", …], …], …],
     "metadata": {"name": "hopf", "description": "…"}}

with every entry a scalar literal. Emission is canonical (sorted keys, two
space indent, canonical rationals) so emit → parse → emit is byte-identical.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import numpy as np
from pydantic import BaseModel, ValidationError

from ..errors import ParseError
from ..quadmap import QuadraticSphericalMap
from ..scalar import EXACT, Scalar, ScalarBackend, format_scalar, parse_scalar

ScalarLiteral = Union[str, Dict[str, str]]


class MapMetadata(BaseModel):
    name: Optional[str] = None
    description: Optional[str] = None


class MapFile(BaseModel):
    m: int
    n: int
    matrices: List[List[List[ScalarLiteral]]]
    metadata: Optional[MapMetadata] = None


class PsiFile(BaseModel):
    """Factorization output: ψ into S^{n−1}(r) and the codomain rotation."""
    m: int
    n: int
    radius_sq: Any
    matrices: List[List[List[Any]]]
    rotation: List[List[Any]]
    metadata: Optional[MapMetadata] = None


def encode_scalar(value: Scalar, backend: ScalarBackend) -> Any:
    """Canonical literal in exact mode, a plain float in float mode."""
    if backend.is_exact:
        return format_scalar(value)
    return float(value)


def encode_matrix(matrix: np.ndarray, backend: ScalarBackend) -> List[List[Any]]:
    return [[encode_scalar(x, backend) for x in row] for row in matrix]


def dumps(document: BaseModel) -> str:
    payload = document.model_dump(mode="json", exclude_none=True)
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# ── map files ───────────────────────────────────────────────────
def parse_map_file(text: str) -> MapFile:
    """Parse and shape-check a map file; entries are checked by map_file_matrices.

    Raises:
        ParseError: invalid JSON, missing fields or wrong shapes
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    try:
        document = MapFile.model_validate(raw)
    except ValidationError as exc:
        raise ParseError(f"invalid map file: {exc.errors()[0]['msg']}") from exc

    size = document.m + 1
    if document.m < 0 or document.n < 0:
        raise ParseError("m and n must be nonnegative")
    if len(document.matrices) != document.n + 1:
        raise ParseError(f"expected {document.n + 1} matrices, found {len(document.matrices)}")
    for index, matrix in enumerate(document.matrices):
        if len(matrix) != size or any(len(row) != size for row in matrix):
            raise ParseError(f"matrix {index + 1} is not {size}×{size}")
    return document


def map_file_matrices(document: MapFile, backend: ScalarBackend = EXACT) -> List[np.ndarray]:
    """Scalar literals to backend arrays (literals are always parsed exactly)."""
    matrices = []
    for matrix in document.matrices:
        exact = EXACT.array([[parse_scalar(x) for x in row] for row in matrix])
        matrices.append(exact if backend.is_exact else backend.convert(exact))
    return matrices


def load_map_file(path: Union[str, Path], backend: ScalarBackend = EXACT) -> tuple:
    """Read a map file from disk.

    Returns:
        (matrices, name) with name taken from metadata when present

    Raises:
        ParseError: unreadable file or malformed content
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    document = parse_map_file(text)
    name = document.metadata.name if document.metadata else None
    return map_file_matrices(document, backend), name


def map_file_from_map(qmap: QuadraticSphericalMap, description: Optional[str] = None) -> MapFile:
    """Map files are exact; a float map is rejected."""
    if not qmap.backend.is_exact:
        raise ParseError("map files hold exact literals; emit from the exact backend")
    metadata = None
    if qmap.name is not None or description:
        metadata = MapMetadata(name=qmap.name, description=description or None)
    return MapFile(
        m=qmap.m,
        n=qmap.n,
        matrices=[encode_matrix(a, qmap.backend) for a in qmap.matrices],
        metadata=metadata,
    )


def emit_map(qmap: QuadraticSphericalMap, description: Optional[str] = None) -> str:
    return dumps(map_file_from_map(qmap, description))


def write_text(path: Union[str, Path], text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot write {path}: {exc}") from exc


# ── ψ files ─────────────────────────────────────────────────────
def psi_file(result, name: Optional[str] = None) -> PsiFile:
    """Serialize a FactorizationResult."""
    backend = result.rotated.backend
    return PsiFile(
        m=result.rotated.m,
        n=result.rotated.n - 1,
        radius_sq=encode_scalar(result.radius_sq, backend),
        matrices=[encode_matrix(a, backend) for a in result.psi_matrices],
        rotation=encode_matrix(result.rotation, backend),
        metadata=MapMetadata(name=f"psi({name})") if name else None,
    )


def parse_psi_file(text: str, backend: ScalarBackend = EXACT) -> tuple:
    """Returns (psi matrices, radius_sq, rotation) in the given backend."""
    try:
        document = PsiFile.model_validate(json.loads(text))
    except (json.JSONDecodeError, ValidationError) as exc:
        raise ParseError(f"invalid ψ file: {exc}") from exc

    def scalar(literal: Any) -> Scalar:
        if isinstance(literal, (int, float)) and not isinstance(literal, bool):
            if backend.is_exact:
                raise ParseError("float literal in an exact ψ file")
            return float(literal)
        return backend.coerce(parse_scalar(literal))

    def matrix(rows) -> np.ndarray:
        return backend.array([[scalar(x) for x in row] for row in rows])

    return (
        [matrix(rows) for rows in document.matrices],
        scalar(document.radius_sq),
        matrix(document.rotation),
    )

