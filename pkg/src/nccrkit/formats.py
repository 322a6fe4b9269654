"""
JSON file formats.

Cone files::

    {"dim": 3, "rays": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}

Dimer files::

    {"vertices": [{"id": "b", "color": "black"}, ...],
     "edges": [{"id": "e0", "black": "b", "white": "w", "shift": [0, 0]}, ...],
     "rotations": {"b": ["e0", ...], ...}}

Rotations list each vertex's edges counterclockwise.  Errors name the line
and column for malformed JSON and the field path for schema problems.
"""
from __future__ import annotations

import json
from pathlib import Path

from .dimer import DimerModel, validate_dimer
from .toric import ConeData, validate_cone


class InputError(ValueError):
    """Unreadable or malformed input file."""


def _load(path) -> object:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"{path}: cannot read file: {exc.strerror or exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from None


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_cone(data, source: str = "<cone>") -> ConeData:
    if not isinstance(data, dict):
        raise InputError(f"{source}: top level must be an object with 'dim' and 'rays'")
    for key in ("dim", "rays"):
        if key not in data:
            raise InputError(f"{source}: missing field '{key}'")
    dim, rays = data["dim"], data["rays"]
    if not _is_int(dim) or dim < 1:
        raise InputError(f"{source}: field 'dim' must be a positive integer, got {dim!r}")
    if not isinstance(rays, list) or not rays:
        raise InputError(f"{source}: field 'rays' must be a nonempty list")
    for i, ray in enumerate(rays):
        if not isinstance(ray, list):
            raise InputError(f"{source}: rays[{i}] must be a list of integers")
        for j, x in enumerate(ray):
            if not _is_int(x):
                raise InputError(f"{source}: rays[{i}][{j}] must be an integer, got {x!r}")
    return validate_cone([tuple(r) for r in rays], dim)


def read_cone(path) -> ConeData:
    return parse_cone(_load(path), str(path))


def cone_to_json(C: ConeData) -> dict:
    return {"dim": C.dim, "rays": [list(r) for r in C.rays]}


def read_dimer(path) -> DimerModel:
    data = _load(path)
    if not isinstance(data, dict):
        raise InputError(f"{path}: top level must be an object with vertices, edges and rotations")
    return validate_dimer(data)


def write_json(path, data) -> None:
    Path(path).write_text(json.dumps(data, indent=1) + "\n")
