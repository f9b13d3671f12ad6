"""JSON formats for graphs, complexes, ideals, Betti tables and certificates.

Every document is a JSON object with a "type" tag. Readers validate
structure and ranges and raise ValueError on anything malformed; the CLI
maps that to its invalid-input exit code. Vertices are 1-based labels in
files, exactly as in the API.
"""

from __future__ import annotations

import json

from .betti import BettiTable
from .bitsets import labels_of, mask_of
from .complexes import SimplicialComplex, from_facets
from .graphs import Graph, from_edges
from .ideals import SqFreeIdeal, make_ideal


def _require(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


def _as_object(data, expected_type: str) -> dict:
    _require(isinstance(data, dict), f"expected a JSON object for {expected_type}")
    tag = data.get("type", expected_type)
    _require(tag == expected_type, f"expected type {expected_type!r}, got {tag!r}")
    return data


def _int_field(data: dict, name: str) -> int:
    v = data.get(name)
    _require(isinstance(v, int) and not isinstance(v, bool), f"{name} must be an integer")
    return v


def _label_lists(data: dict, name: str) -> list[list[int]]:
    v = data.get(name)
    _require(isinstance(v, list), f"{name} must be a list")
    for item in v:
        _require(isinstance(item, list), f"{name} entries must be lists of vertices")
        for x in item:
            _require(
                isinstance(x, int) and not isinstance(x, bool),
                f"{name} entries must contain integers",
            )
    return v


def graph_to_json(g: Graph) -> dict:
    return {"type": "graph", "n": g.n, "edges": [list(e) for e in g.edges()]}


def graph_from_json(data) -> Graph:
    obj = _as_object(data, "graph")
    n = _int_field(obj, "n")
    edges = _label_lists(obj, "edges")
    for e in edges:
        _require(len(e) == 2, "each edge must have exactly two endpoints")
    return from_edges(n, [tuple(e) for e in edges])


def complex_to_json(delta: SimplicialComplex) -> dict:
    return {
        "type": "complex",
        "ground_n": delta.ground_n,
        "facets": [list(f) for f in delta.facets()],
    }


def complex_from_json(data) -> SimplicialComplex:
    obj = _as_object(data, "complex")
    n = _int_field(obj, "ground_n")
    facets = _label_lists(obj, "facets")
    return from_facets(n, [tuple(f) for f in facets])


def ideal_to_json(ideal: SqFreeIdeal) -> dict:
    return {
        "type": "ideal",
        "ring_n": ideal.ring_n,
        "generators": [list(g) for g in ideal.generators()],
    }


def ideal_from_json(data) -> SqFreeIdeal:
    obj = _as_object(data, "ideal")
    n = _int_field(obj, "ring_n")
    gens = _label_lists(obj, "generators")
    return make_ideal(n, [tuple(g) for g in gens])


def betti_to_json(table: BettiTable) -> dict:
    return {
        "type": "betti_table",
        "subject": table.subject,
        "char": table.char,
        "entries": [[i, j, v] for i, j, v in table.rows()],
    }


def shelling_order_to_json(delta: SimplicialComplex, order) -> dict:
    """Certificate as indices into the complex's canonical facet list."""
    masks = [mask_of(f, delta.ground_n) for f in order]
    index = {m: i for i, m in enumerate(delta.facet_masks)}
    _require(
        sorted(masks) == list(delta.facet_masks),
        "order is not a permutation of the facet list",
    )
    return {"type": "shelling_order", "facet_indices": [index[m] for m in masks]}


def shelling_order_from_json(delta: SimplicialComplex, data) -> list[tuple[int, ...]]:
    """Accepts facet indices (canonical) or explicit facet vertex lists."""
    obj = _as_object(data, "shelling_order")
    if "facet_indices" in obj:
        idx = obj["facet_indices"]
        _require(isinstance(idx, list), "facet_indices must be a list")
        s = len(delta.facet_masks)
        for i in idx:
            _require(
                isinstance(i, int) and not isinstance(i, bool) and 0 <= i < s,
                f"facet index out of range 0..{s - 1}",
            )
        return [labels_of(delta.facet_masks[i]) for i in idx]
    facets = _label_lists(obj, "facets")
    return [tuple(f) for f in facets]


def load_document(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path} is not valid JSON: {exc}") from exc
    _require(isinstance(data, dict), f"{path} must hold a JSON object")
    return data


def dump_canonical(payload: dict) -> str:
    """Stable serialization: sorted keys, no whitespace jitter."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))
