"""JSON loading with schema validation, and canonical serialisation."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

import jsonschema

from .graph import Graph
from .hoffman import HoffmanError, HoffmanGraph
from .representation import ReducedRep
from .signed import EdgeSignedGraph

SCHEMAS = ("graph", "signed_graph", "hoffman_graph", "representation")


class InputError(ValueError):
    """Unreadable, malformed or schema-invalid input."""


@lru_cache(maxsize=None)
def schema(name: str) -> dict:
    if name not in SCHEMAS:
        raise KeyError(name)
    text = resources.files("hoffman").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def validate(data, name: str) -> None:
    try:
        jsonschema.validate(data, schema(name))
    except jsonschema.ValidationError as exc:
        raise InputError(f"not a valid {name.replace('_', ' ')}: {exc.message}") from None


def read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    if not text.strip():
        raise InputError(f"{path} is empty")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not JSON: {exc.msg} (line {exc.lineno})") from None


def hoffman_from_data(data) -> HoffmanGraph:
    """Accept a Hoffman-graph object, or a plain graph object read as all-slim."""
    if isinstance(data, dict) and isinstance(data.get("graph"), dict) and "slim" not in data:
        data = data["graph"]  # a catalog document
    if isinstance(data, dict) and "slim" in data:
        validate(data, "hoffman_graph")
        try:
            return HoffmanGraph.from_dict(data)
        except HoffmanError as exc:
            raise InputError(str(exc)) from None
    if isinstance(data, dict) and "n" in data:
        validate(data, "graph")
        try:
            g = Graph(int(data["n"]), tuple(tuple(e) for e in data["edges"]))
        except ValueError as exc:
            raise InputError(str(exc)) from None
        return HoffmanGraph.build(range(g.n), (), g.edges)
    raise InputError("expected a Hoffman graph {slim, fat, edges} or a graph {n, edges}")


def load_hoffman(path: str) -> HoffmanGraph:
    return hoffman_from_data(read_json(path))


def load_representation(path: str) -> ReducedRep:
    data = read_json(path)
    validate(data, "representation")
    try:
        return ReducedRep.from_dict(data)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def load_signed(path: str) -> EdgeSignedGraph:
    data = read_json(path)
    validate(data, "signed_graph")
    try:
        return EdgeSignedGraph.from_json(json.dumps(data))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def canonical_hoffman_dict(h: HoffmanGraph) -> dict:
    """Integer-labelled dict with sorted vertex lists and edges."""
    d = h.to_dict()
    return {"slim": sorted(d["slim"]), "fat": sorted(d["fat"]), "edges": d["edges"]}


def _flat(obj) -> bool:
    return isinstance(obj, list) and all(not isinstance(x, (list, dict)) for x in obj)


def _format(obj, depth: int) -> str:
    pad = "  " * (depth + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_format(v, depth + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * depth + "}"
    if isinstance(obj, list) and obj and not _flat(obj):
        if all(_flat(x) for x in obj):
            inner = ", ".join(_format(x, depth + 1) for x in obj)
            if len(inner) <= 100:
                return "[" + inner + "]"
        items = [pad + _format(x, depth + 1) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + "  " * depth + "]"
    return json.dumps(obj, separators=(", ", ": "))


def dumps(obj) -> str:
    """The one JSON layout used for output: nested objects indented, flat lists inline."""
    return _format(obj, 0) + "\n"
