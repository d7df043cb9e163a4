"""Reading and writing algebra files.

An algebra file is a single JSON document:

    {
      "format_version": 1,
      "name": "aff1",
      "kind": "lie",
      "dim": 2,
      "ops": {"bracket": [[["0", "0"], ["1", "0"]], [["-1", "0"], ["0", "0"]]]},
      "maps": {"R": [["0", "1"], ["0", "0"]]},
      "forms": {},
      "tensors": {},
      "module": {"shape": "lie", "dim": 2, "actions": {"rho": [...]}},
      "provenance": "where the example comes from and how it was checked"
    }

Scalars are exact rationals written as "p/q" strings (JSON integers are accepted on
input). Only "format_version", "kind", "dim" and "ops" are required.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from errors import AlgebraError, FormatError
from models import (
    BilinearForm,
    Bimodule,
    BimoduleShape,
    Kind,
    LinearMap,
    MultiAlgebra,
    OpTensor,
    TensorPair,
    to_fraction,
)

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
CORPUS_PREFIX = "corpus:"

REQUIRED_FIELDS = ("format_version", "kind", "dim", "ops")
OPTIONAL_FIELDS = ("name", "maps", "forms", "tensors", "module", "provenance")
MODULE_FIELDS = ("shape", "dim", "actions", "name")


@dataclass(frozen=True)
class ModuleBlock:
    """Bimodule actions stored without their base algebra."""

    shape: BimoduleShape
    dim: int
    actions: dict[str, np.ndarray]
    name: str = ""

    def over(self, base: MultiAlgebra) -> Bimodule:
        return Bimodule(base, self.dim, self.actions, self.shape, self.name)


@dataclass
class AlgebraFile:
    algebra: MultiAlgebra
    maps: dict[str, LinearMap] = field(default_factory=dict)
    forms: dict[str, BilinearForm] = field(default_factory=dict)
    tensors: dict[str, TensorPair] = field(default_factory=dict)
    module: ModuleBlock | None = None
    provenance: str = ""
    source: str = ""

    def get_map(self, name: str) -> LinearMap:
        return _lookup(self.maps, name, "map", self.source)

    def get_form(self, name: str) -> BilinearForm:
        return _lookup(self.forms, name, "form", self.source)

    def get_tensor(self, name: str) -> TensorPair:
        return _lookup(self.tensors, name, "tensor", self.source)


def _lookup(table: dict[str, Any], name: str, what: str, source: str) -> Any:
    if name not in table:
        known = ", ".join(table) or "none"
        raise FormatError(f"no {what} named '{name}' (available: {known})", source)
    return table[name]


# --- Parsing ---


class _Collector:
    """Accumulates field diagnostics so a file reports every problem at once."""

    def __init__(self, source: str):
        self.source = source
        self.errors: list[str] = []

    def error(self, path: str, message: str) -> None:
        self.errors.append(f"{path}: {message}")

    def raise_if_any(self) -> None:
        if self.errors:
            raise FormatError(self.errors, self.source)


def _scalar(value: Any, path: str, errors: _Collector) -> Any:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        errors.error(path, f"expected a rational string like \"p/q\", got {value!r}")
        return None
    try:
        return to_fraction(value)
    except (ValueError, TypeError) as e:
        errors.error(path, str(e))
        return None


def _array(value: Any, shape: tuple[int, ...], path: str, errors: _Collector) -> np.ndarray | None:
    """Nested lists of the given shape, converted entry by entry."""
    if not shape:
        return _scalar(value, path, errors)
    if not isinstance(value, list) or len(value) != shape[0]:
        got = f"length {len(value)}" if isinstance(value, list) else type(value).__name__
        errors.error(path, f"expected a list of length {shape[0]}, got {got}")
        return None
    arr = np.empty(shape, dtype=object)
    ok = True
    for i, item in enumerate(value):
        sub = _array(item, shape[1:], f"{path}[{i}]", errors)
        if sub is None:
            ok = False
        else:
            arr[i] = sub
    return arr if ok else None


def _square(value: Any, path: str, errors: _Collector) -> np.ndarray | None:
    n = len(value) if isinstance(value, list) else 0
    return _array(value, (n, n), path, errors)


def _matrix(value: Any, path: str, errors: _Collector) -> np.ndarray | None:
    rows = len(value) if isinstance(value, list) else 0
    cols = len(value[0]) if rows and isinstance(value[0], list) else 0
    return _array(value, (rows, cols), path, errors)


def _table(data: dict[str, Any], key: str, errors: _Collector) -> dict[str, Any]:
    table = data.get(key, {})
    if not isinstance(table, dict):
        errors.error(key, "expected an object")
        return {}
    return table


def _module(raw: Any, base_dim: int, errors: _Collector) -> ModuleBlock | None:
    if not isinstance(raw, dict):
        errors.error("module", "expected an object")
        return None
    for key in raw:
        if key not in MODULE_FIELDS:
            errors.error(f"module.{key}", "unknown field")
    try:
        shape = BimoduleShape(raw.get("shape"))
    except ValueError:
        errors.error("module.shape", f"expected one of {', '.join(s.value for s in BimoduleShape)}")
        return None
    dim = raw.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
        errors.error("module.dim", "expected a non-negative integer")
        return None
    actions_raw = raw.get("actions", {})
    if not isinstance(actions_raw, dict):
        errors.error("module.actions", "expected an object")
        return None
    actions = {}
    for name in shape.action_names:
        if name not in actions_raw:
            errors.error(f"module.actions.{name}", "missing")
            continue
        arr = _array(actions_raw[name], (base_dim, dim, dim), f"module.actions.{name}", errors)
        if arr is not None:
            actions[name] = arr
    for name in actions_raw:
        if name not in shape.action_names:
            errors.error(f"module.actions.{name}", f"not an action of a {shape.value} bimodule")
    if len(actions) != len(shape.action_names):
        return None
    return ModuleBlock(shape, dim, actions, str(raw.get("name", "")))


def parse_document(data: Any, source: str = "") -> AlgebraFile:
    """Validate a decoded document and build the algebra file it describes."""
    errors = _Collector(source)
    if not isinstance(data, dict):
        raise FormatError("top level must be an object", source)
    for key in REQUIRED_FIELDS:
        if key not in data:
            errors.error(key, "missing")
    for key in data:
        if key not in REQUIRED_FIELDS and key not in OPTIONAL_FIELDS:
            errors.error(key, "unknown field")
    errors.raise_if_any()

    if data["format_version"] != FORMAT_VERSION:
        raise FormatError(f"format_version: unsupported version {data['format_version']!r}", source)
    dim = data["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
        raise FormatError("dim: expected a non-negative integer", source)
    try:
        kind = Kind.parse(data["kind"]) if isinstance(data["kind"], str) else None
    except AlgebraError as e:
        raise FormatError(f"kind: {e}", source) from None
    if kind is None:
        raise FormatError("kind: expected a string", source)

    ops = {}
    for op_name, value in _table(data, "ops", errors).items():
        arr = _array(value, (dim, dim, dim), f"ops.{op_name}", errors)
        if arr is not None:
            ops[op_name] = arr
    if kind is not Kind.RAW:
        for missing in set(kind.op_names) - set(data["ops"] if isinstance(data["ops"], dict) else ()):
            errors.error(f"ops.{missing}", f"missing (a {kind.value} algebra needs {', '.join(kind.op_names)})")
        for extra in set(ops) - set(kind.op_names):
            errors.error(f"ops.{extra}", f"not an operation of a {kind.value} algebra")

    maps = {}
    for name, value in _table(data, "maps", errors).items():
        arr = _matrix(value, f"maps.{name}", errors)
        if arr is not None:
            maps[name] = LinearMap(arr)
    forms = {}
    for name, value in _table(data, "forms", errors).items():
        arr = _square(value, f"forms.{name}", errors)
        if arr is not None:
            if arr.shape[0] != dim:
                errors.error(f"forms.{name}", f"expected a {dim}x{dim} matrix")
            else:
                forms[name] = BilinearForm(arr)
    tensors = {}
    for name, value in _table(data, "tensors", errors).items():
        arr = _square(value, f"tensors.{name}", errors)
        if arr is not None:
            if arr.shape[0] != dim:
                errors.error(f"tensors.{name}", f"expected a {dim}x{dim} matrix")
            else:
                tensors[name] = TensorPair(arr)
    module = _module(data["module"], dim, errors) if "module" in data else None
    provenance = data.get("provenance", "")
    if not isinstance(provenance, str):
        errors.error("provenance", "expected a string")
    name = data.get("name", "")
    if not isinstance(name, str):
        errors.error("name", "expected a string")
    errors.raise_if_any()

    algebra = MultiAlgebra(dim, {n: OpTensor(arr) for n, arr in ops.items()}, kind, name)
    return AlgebraFile(algebra, maps, forms, tensors, module, provenance, source)


def load_algebra_file(source: str | Path) -> AlgebraFile:
    text = str(source)
    if text.startswith(CORPUS_PREFIX):
        from corpus import load_example

        return load_example(text[len(CORPUS_PREFIX):])
    path = Path(text)
    try:
        with open(path) as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise FormatError(f"line {e.lineno}, column {e.colno}: {e.msg}", str(path)) from None
    except OSError as e:
        raise FormatError(e.strerror or str(e), str(path)) from None
    result = parse_document(data, str(path))
    logger.debug("Loaded %s from %s", result.algebra.label, path)
    return result


# --- Writing ---


def _encode(value: Any) -> Any:
    if isinstance(value, np.ndarray):
        return [_encode(v) for v in value]
    return str(value)


def to_document(af: AlgebraFile) -> dict[str, Any]:
    alg = af.algebra
    names = alg.op_names if alg.kind is not Kind.RAW else tuple(sorted(alg.op_names))
    data: dict[str, Any] = {
        "format_version": FORMAT_VERSION,
        "name": alg.name,
        "kind": alg.kind.value,
        "dim": alg.dim,
        "ops": {name: _encode(alg.op(name).coeffs) for name in names},
    }
    if af.maps:
        data["maps"] = {name: _encode(m.entries) for name, m in af.maps.items()}
    if af.forms:
        data["forms"] = {name: _encode(b.entries) for name, b in af.forms.items()}
    if af.tensors:
        data["tensors"] = {name: _encode(r.entries) for name, r in af.tensors.items()}
    if af.module is not None:
        data["module"] = {
            "shape": af.module.shape.value,
            "dim": af.module.dim,
            "actions": {name: _encode(a) for name, a in af.module.actions.items()},
            "name": af.module.name,
        }
    if af.provenance:
        data["provenance"] = af.provenance
    return data


def write_algebra_file(af: AlgebraFile | MultiAlgebra, path: str | Path) -> None:
    if isinstance(af, MultiAlgebra):
        af = AlgebraFile(af)
    path = Path(path)
    data = to_document(af)
    # Atomic write
    with tempfile.NamedTemporaryFile(
        mode="w", dir=path.parent, suffix=".tmp", delete=False
    ) as tmp:
        json.dump(data, tmp, indent=2, ensure_ascii=False)
        tmp.write("\n")
        tmp_path = tmp.name
    os.replace(tmp_path, path)
    logger.debug("Wrote %s to %s", af.algebra.label, path)
