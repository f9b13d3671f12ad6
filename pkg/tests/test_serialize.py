import json
import random

import pytest

from vdreg import (
    betti_table,
    betti_to_json,
    complex_from_json,
    complex_to_json,
    counterexample8,
    dump_canonical,
    edge_ideal,
    find_shelling,
    graph_from_json,
    graph_to_json,
    ideal_from_json,
    ideal_to_json,
    independence_complex,
    load_document,
    make_ideal,
    shelling_order_from_json,
    shelling_order_to_json,
    verify_shelling,
)
from test_graphs import random_graph


def test_graph_round_trip():
    g = counterexample8()
    doc = graph_to_json(g)
    assert doc["type"] == "graph" and doc["n"] == 8
    back = graph_from_json(doc)
    assert back.n == g.n and back.edges() == g.edges()


def test_graph_round_trip_random():
    rng = random.Random(11)
    for _ in range(20):
        g = random_graph(rng, 7)
        back = graph_from_json(graph_to_json(g))
        assert back.edges() == g.edges()


def test_graph_from_json_rejects_bad_documents():
    with pytest.raises(ValueError):
        graph_from_json([1, 2])
    with pytest.raises(ValueError):
        graph_from_json({"type": "complex", "n": 2, "edges": []})
    with pytest.raises(ValueError):
        graph_from_json({"type": "graph", "n": "two", "edges": []})
    with pytest.raises(ValueError):
        graph_from_json({"type": "graph", "n": 3, "edges": [[1, 2, 3]]})
    with pytest.raises(ValueError):
        graph_from_json({"type": "graph", "n": 3, "edges": [[1, True]]})
    with pytest.raises(ValueError):
        graph_from_json({"type": "graph", "n": 3, "edges": [[0, 1]]})


def test_complex_round_trip():
    delta = independence_complex(counterexample8())
    back = complex_from_json(complex_to_json(delta))
    assert back.ground_n == delta.ground_n
    assert back.facet_masks == delta.facet_masks


def test_complex_from_json_reduces_to_maximal_faces():
    doc = {"type": "complex", "ground_n": 3, "facets": [[1, 2], [1]]}
    delta = complex_from_json(doc)
    assert tuple(delta.facets()) == ((1, 2),)
    with pytest.raises(ValueError):
        complex_from_json({"type": "complex", "ground_n": 2, "facets": "no"})


def test_ideal_round_trip():
    ideal = edge_ideal(counterexample8())
    back = ideal_from_json(ideal_to_json(ideal))
    assert back.ring_n == ideal.ring_n
    assert back.generators() == ideal.generators()
    zero = make_ideal(3, [])
    assert ideal_from_json(ideal_to_json(zero)).is_zero


def test_betti_to_json_shape():
    table = betti_table(edge_ideal(counterexample8()), "quotient", 2)
    doc = betti_to_json(table)
    assert doc["type"] == "betti_table"
    assert doc["subject"] == "quotient" and doc["char"] == 2
    assert [0, 0, 1] in doc["entries"]
    for row in doc["entries"]:
        assert len(row) == 3 and all(isinstance(x, int) for x in row)
    # rows are sorted by (i, j)
    keys = [(i, j) for i, j, _ in doc["entries"]]
    assert keys == sorted(keys)


def test_shelling_order_round_trip():
    delta = independence_complex(counterexample8())
    search = find_shelling(delta)
    assert search.status == "shellable"
    order = search.order_facets()
    doc = shelling_order_to_json(delta, order)
    assert doc["type"] == "shelling_order"
    assert sorted(doc["facet_indices"]) == list(range(len(delta.facet_masks)))
    back = shelling_order_from_json(delta, doc)
    assert back == order
    assert verify_shelling(delta, back)


def test_shelling_order_facets_variant():
    delta = independence_complex(counterexample8())
    order = find_shelling(delta).order_facets()
    doc = {"type": "shelling_order", "facets": [list(f) for f in order]}
    assert shelling_order_from_json(delta, doc) == order


def test_shelling_order_rejects_non_permutations():
    delta = independence_complex(counterexample8())
    order = find_shelling(delta).order_facets()
    with pytest.raises(ValueError):
        shelling_order_to_json(delta, order[:-1])
    with pytest.raises(ValueError):
        shelling_order_from_json(delta, {"type": "shelling_order", "facet_indices": [0, 999]})
    with pytest.raises(ValueError):
        shelling_order_from_json(delta, {"type": "shelling_order", "facet_indices": [0, False]})


def test_load_document(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps(graph_to_json(counterexample8())))
    doc = load_document(str(path))
    assert graph_from_json(doc).n == 8
    with pytest.raises(ValueError):
        load_document(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ValueError):
        load_document(str(bad))
    arr = tmp_path / "arr.json"
    arr.write_text("[1,2,3]")
    with pytest.raises(ValueError):
        load_document(str(arr))


def test_dump_canonical_is_stable():
    a = dump_canonical({"b": 1, "a": [2, {"d": 3, "c": 4}]})
    b = dump_canonical({"a": [2, {"c": 4, "d": 3}], "b": 1})
    assert a == b
    assert " " not in a
