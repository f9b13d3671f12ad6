import random

import pytest

from vdreg.betti import (
    MAX_BETTI_RING,
    betti_table,
    has_linear_resolution,
    is_componentwise_linear,
    is_sequentially_cm,
    regularity,
)
from vdreg.complexes import from_facets
from vdreg.graphs import circulant, from_edges
from vdreg.homology import DEFAULT_CHARS
from vdreg.ideals import alexander_dual, edge_ideal, make_ideal, stanley_reisner_ideal

from oracles import naive_betti_table
from test_graphs import random_graph
from test_ideals import random_ideal


def test_quotient_betti_vs_oracle():
    rng = random.Random(21)
    for _ in range(25):
        n = rng.randint(1, 6)
        g = random_graph(rng, n)
        ideal = edge_ideal(g)
        if ideal.is_zero:
            continue
        for p in DEFAULT_CHARS:
            got = betti_table(ideal, "quotient", p)
            want = naive_betti_table(n, ideal.generators(), p)
            assert got.entries == want, g.edges()


def test_random_ideal_betti_vs_oracle():
    rng = random.Random(22)
    for _ in range(25):
        n = rng.randint(1, 6)
        ideal = random_ideal(rng, n)
        if ideal.is_unit:
            continue
        for p in (2, 3):
            got = betti_table(ideal, "quotient", p)
            want = naive_betti_table(n, ideal.generators(), p)
            assert got.entries == want, ideal.generators()


def test_ideal_subject_is_shifted_quotient():
    rng = random.Random(23)
    for _ in range(25):
        n = rng.randint(2, 6)
        ideal = random_ideal(rng, n)
        if ideal.is_unit or ideal.is_zero:
            continue
        quo = betti_table(ideal, "quotient", 2)
        idl = betti_table(ideal, "ideal", 2)
        shifted = {
            (i - 1, j): v for (i, j), v in quo.entries.items() if i >= 1
        }
        assert idl.entries == shifted
        assert idl.regularity() == quo.regularity() + 1


def test_zero_ideal_quotient():
    table = betti_table(make_ideal(3, []), "quotient", 2)
    assert table.entries == {(0, 0): 1}
    with pytest.raises(ValueError):
        betti_table(make_ideal(3, [()]), "quotient", 2)
    # the zero ideal itself is the zero module: empty table, no regularity
    empty = betti_table(make_ideal(3, []), "ideal", 2)
    assert empty.entries == {}
    with pytest.raises(ValueError):
        empty.regularity()


def test_ring_size_cap():
    big = edge_ideal(circulant(17, (1,)))
    with pytest.raises(ValueError):
        betti_table(big, "quotient", 2)
    assert MAX_BETTI_RING == 16


def test_koszul_complete_intersection():
    # (x1x3, x2x4): Koszul resolution, betas 1,2,1 on the quotient
    ideal = make_ideal(4, [(1, 3), (2, 4)])
    t = betti_table(ideal, "quotient", 2)
    assert t.entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}
    assert t.regularity() == 2
    assert t.projective_dimension() == 2


def test_linear_resolution():
    # triangle edge ideal: complement is chordal, resolution is linear
    k3 = edge_ideal(from_edges(3, [(1, 2), (2, 3), (1, 3)]))
    assert has_linear_resolution(k3, 2)
    # two disjoint edges: Koszul tail breaks linearity
    ci = make_ideal(4, [(1, 3), (2, 4)])
    assert not has_linear_resolution(ci, 2)
    with pytest.raises(ValueError):
        has_linear_resolution(make_ideal(3, [(1,), (2, 3)]), 2)  # mixed degrees


def test_componentwise_linear():
    ci = make_ideal(4, [(1, 3), (2, 4)])
    assert not is_componentwise_linear(ci, 2)
    k3 = edge_ideal(from_edges(3, [(1, 2), (2, 3), (1, 3)]))
    assert is_componentwise_linear(k3, 2)
    mixed = make_ideal(3, [(1,), (2, 3)])
    assert is_componentwise_linear(mixed, 2)


def test_componentwise_linear_methods_agree():
    rng = random.Random(24)
    for _ in range(30):
        n = rng.randint(1, 6)
        ideal = random_ideal(rng, n)
        if ideal.is_unit:
            continue
        for p in (2,):
            assert is_componentwise_linear(ideal, p, method="auto") == (
                is_componentwise_linear(ideal, p, method="full")
            ), ideal.generators()


def test_sequentially_cm_small_graphs():
    c4 = from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    c5 = circulant(5, (1,))
    p4 = from_edges(4, [(1, 2), (2, 3), (3, 4)])
    for p in DEFAULT_CHARS:
        assert not is_sequentially_cm(c4, p)
        assert is_sequentially_cm(c5, p)
        assert is_sequentially_cm(p4, p)
    with pytest.raises(ValueError):
        is_sequentially_cm(from_edges(3, []), 2)


def test_seqcm_equals_dual_componentwise_linear():
    rng = random.Random(25)
    for _ in range(20):
        n = rng.randint(2, 6)
        g = random_graph(rng, n)
        if not g.edge_count():
            continue
        dual = alexander_dual(edge_ideal(g))
        assert is_sequentially_cm(g, 2) == is_componentwise_linear(dual, 2)


def test_char_dependent_regularity():
    # Stanley-Reisner ideal of the 6-vertex projective plane
    rp2 = from_facets(
        6,
        [
            (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
            (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6),
        ],
    )
    ideal = stanley_reisner_ideal(rp2)
    assert regularity(ideal, "quotient", 2) == 3
    assert regularity(ideal, "quotient", 32003) == 2
    t2 = betti_table(ideal, "quotient", 2)
    t0 = betti_table(ideal, "quotient", 32003)
    assert t2.entries != t0.entries
