"""JSON descriptors for matroids and graphs, with strict validation.

Errors carry a JSON-pointer to the offending location, e.g.
``/parts/1/ground/3: duplicate element id 'a'``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .core import (
    Matroid,
    contract,
    direct_sum,
    dual,
    make_circuit_matroid,
    make_free,
    make_graphic,
    make_loops,
    make_uniform,
    restrict,
)


class SchemaError(ValueError):
    def __init__(self, pointer: str, message: str):
        self.pointer = pointer or "/"
        super().__init__(f"{self.pointer}: {message}")


_FIELDS = {
    "uniform": {"type", "k", "ground"},
    "circuit": {"type", "ground"},
    "free": {"type", "ground"},
    "loops": {"type", "ground"},
    "graphic": {"type", "vertices", "edges"},
    "dual": {"type", "of"},
    "sum": {"type", "parts"},
    "restrict": {"type", "of", "set"},
    "contract": {"type", "of", "set"},
    "union": {"type", "parts"},
    "mk": {"type", "of", "k"},
}


def _expect(cond: bool, ptr: str, msg: str) -> None:
    if not cond:
        raise SchemaError(ptr, msg)


def _check_fields(d: Any, ptr: str, allowed: set[str]) -> None:
    _expect(isinstance(d, dict), ptr, "expected an object")
    for key in d:
        _expect(key in allowed, f"{ptr}/{key}", "unknown field")
    for key in allowed:
        _expect(key in d, ptr, f"missing field {key!r}")


def _ids(value: Any, ptr: str) -> list[str]:
    _expect(isinstance(value, list), ptr, "expected a list of element ids")
    seen = set()
    for i, e in enumerate(value):
        _expect(isinstance(e, str) and e != "" and not any(c.isspace() for c in e),
                f"{ptr}/{i}", f"invalid element id {e!r}")
        _expect(e not in seen, f"{ptr}/{i}", f"duplicate element id {e!r}")
        seen.add(e)
    return list(value)


def _int(value: Any, ptr: str) -> int:
    _expect(isinstance(value, int) and not isinstance(value, bool) and value >= 0,
            ptr, "expected a nonnegative integer")
    return value


def parse_graph(d: Any, ptr: str = "") -> tuple[list[str], list[list[str]]]:
    _check_fields(d, ptr, {"vertices", "edges"} | ({"type"} if isinstance(d, dict) and "type" in d else set()))
    vertices = _ids(d["vertices"], f"{ptr}/vertices")
    _expect(isinstance(d["edges"], list), f"{ptr}/edges", "expected a list of edges")
    seen: set[str] = set()
    vs = set(vertices)
    edges = []
    for i, e in enumerate(d["edges"]):
        p = f"{ptr}/edges/{i}"
        _expect(isinstance(e, list) and len(e) == 3 and all(isinstance(x, str) for x in e),
                p, "edge must be [id, endpoint, endpoint]")
        _expect(e[0] not in seen, f"{p}/0", f"duplicate element id {e[0]!r}")
        _ids([e[0]], f"{p}/0")
        for j in (1, 2):
            _expect(e[j] in vs, f"{p}/{j}", f"unknown endpoint {e[j]!r}")
        seen.add(e[0])
        edges.append(list(e))
    return vertices, edges


def matroid_from_descriptor(d: Any, ptr: str = "") -> Matroid:
    _expect(isinstance(d, dict), ptr, "expected an object")
    kind = d.get("type")
    _expect(kind in _FIELDS, f"{ptr}/type", f"unknown matroid type {kind!r}")
    _check_fields(d, ptr, _FIELDS[kind])
    if kind == "uniform":
        return make_uniform(_int(d["k"], f"{ptr}/k"), _ids(d["ground"], f"{ptr}/ground"))
    if kind == "circuit":
        ground = _ids(d["ground"], f"{ptr}/ground")
        _expect(len(ground) >= 1, f"{ptr}/ground", "circuit matroid needs a nonempty ground set")
        return make_circuit_matroid(ground)
    if kind == "free":
        return make_free(_ids(d["ground"], f"{ptr}/ground"))
    if kind == "loops":
        return make_loops(_ids(d["ground"], f"{ptr}/ground"))
    if kind == "graphic":
        vertices, edges = parse_graph(d, ptr)
        return make_graphic(vertices, edges)
    if kind == "dual":
        return dual(matroid_from_descriptor(d["of"], f"{ptr}/of"))
    if kind in ("sum", "union"):
        _expect(isinstance(d["parts"], list) and d["parts"], f"{ptr}/parts", "expected a nonempty list")
        parts = [matroid_from_descriptor(p, f"{ptr}/parts/{i}") for i, p in enumerate(d["parts"])]
        if kind == "sum":
            try:
                return direct_sum(parts)
            except ValueError as exc:
                raise SchemaError(f"{ptr}/parts", str(exc)) from None
        from .union import k_fold_matroid

        try:
            return k_fold_matroid(parts)
        except ValueError as exc:
            raise SchemaError(f"{ptr}/parts", str(exc)) from None
    if kind in ("restrict", "contract"):
        inner = matroid_from_descriptor(d["of"], f"{ptr}/of")
        names = _ids(d["set"], f"{ptr}/set")
        for i, e in enumerate(names):
            _expect(e in inner.ground, f"{ptr}/set/{i}", f"element {e!r} not in ground set")
        X = inner.ground.mask(names)
        return restrict(inner, X) if kind == "restrict" else contract(inner, X)
    if kind == "mk":
        from .infinitary import make_Mk

        inner = matroid_from_descriptor(d["of"], f"{ptr}/of")
        k = _int(d["k"], f"{ptr}/k")
        try:
            return make_Mk(inner, k)
        except ValueError as exc:
            raise SchemaError(f"{ptr}/k", str(exc)) from None
    raise AssertionError(kind)  # pragma: no cover


def load_json(path: str | Path) -> Any:
    path = Path(path)
    if not path.exists():
        raise SchemaError("", f"file not found: {path}")
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError("", f"malformed JSON in {path}: {exc}") from None


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
