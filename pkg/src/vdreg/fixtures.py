"""Bundled counterexample graphs and their reference data.

Two hand-built graphs ship with the package. The 8-vertex one is
sequentially Cohen-Macaulay with height-4 edge ideal on 2*4 vertices, yet
has no degree-1 vertex and has regularity 2 against induced matching number
1. The 26-vertex one joins ten extra vertices onto a 13-vertex subset of the
circulant C_16(1,4,8); it is sequentially Cohen-Macaulay with height 13 but
not vertex decomposable. The facet table below lists the 81 facets of its
independence complex, big facet first. The listed order itself fails the
shelling condition (first failure at position 11), but the facet set is
shellable: find_shelling produces a verified order. Dropping the big facet
gives the 80 facets of Ind(C_16(1,4,8)).
"""

from __future__ import annotations

from .graphs import Graph, circulant, from_edges

# Join base inside the circulant core: exactly the vertices adjacent to each
# of 17..26 in the 26-vertex graph.
JOIN_BASE = (1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 13, 15, 16)

EDGES8 = (
    (1, 5), (1, 6), (1, 7), (1, 8),
    (2, 5), (2, 6), (2, 7), (2, 8),
    (3, 6), (3, 7),
    (4, 6), (4, 8),
    (7, 8),
)

# Reference invariants for the 8-vertex graph.
PRIMES8 = (
    (5, 6, 7, 8),
    (1, 2, 3, 4, 7),
    (1, 2, 3, 4, 8),
    (1, 2, 3, 6, 8),
    (1, 2, 4, 6, 7),
    (1, 2, 6, 7, 8),
)
HEIGHT8 = 4
REG_QUOTIENT8 = 2
REG_DUAL8 = 5
MATCHING8 = 1

HEIGHT26 = 13
PRIME_COUNT26 = 81

# The 81 facets of the 26-vertex independence complex, as bundled.
FACETS26 = (
    (9, 11, 14, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26),
    (9, 11, 14, 16),
    (5, 11, 14, 16),
    (7, 9, 14, 16),
    (3, 9, 14, 16),
    (5, 7, 14, 16),
    (3, 5, 14, 16),
    (6, 9, 11, 16),
    (5, 7, 10, 16),
    (2, 5, 11, 16),
    (2, 9, 11, 16),
    (2, 7, 13, 16),
    (7, 10, 13, 16),
    (2, 11, 13, 16),
    (6, 11, 13, 16),
    (3, 5, 10, 16),
    (3, 10, 13, 16),
    (3, 6, 13, 16),
    (2, 7, 9, 16),
    (3, 6, 9, 16),
    (2, 5, 7, 16),
    (7, 9, 12, 14),
    (1, 4, 10, 15),
    (1, 8, 10, 15),
    (5, 8, 10, 15),
    (1, 10, 12, 15),
    (4, 10, 13, 15),
    (8, 10, 13, 15),
    (5, 10, 12, 15),
    (3, 9, 12, 14),
    (3, 8, 10, 13),
    (3, 5, 8, 14),
    (5, 8, 11, 14),
    (6, 8, 11, 13),
    (6, 8, 13, 15),
    (4, 6, 13, 15),
    (2, 8, 13, 15),
    (2, 8, 11, 13),
    (1, 4, 6, 15),
    (4, 6, 9, 15),
    (6, 9, 12, 15),
    (1, 6, 12, 15),
    (1, 6, 8, 15),
    (2, 4, 13, 15),
    (2, 9, 12, 15),
    (2, 4, 9, 15),
    (4, 6, 11, 13),
    (4, 9, 11, 14),
    (4, 7, 9, 14),
    (2, 4, 11, 13),
    (5, 7, 10, 12),
    (1, 3, 8, 14),
    (1, 8, 11, 14),
    (1, 3, 12, 14),
    (1, 7, 12, 14),
    (1, 7, 10, 12),
    (3, 6, 8, 13),
    (5, 7, 12, 14),
    (3, 5, 12, 14),
    (3, 5, 10, 12),
    (1, 3, 10, 12),
    (2, 7, 9, 12),
    (3, 6, 9, 12),
    (2, 5, 7, 12),
    (2, 5, 8, 11),
    (1, 6, 8, 11),
    (2, 4, 9, 11),
    (4, 6, 9, 11),
    (1, 3, 6, 12),
    (2, 5, 8, 15),
    (2, 5, 12, 15),
    (1, 4, 6, 11),
    (1, 4, 11, 14),
    (1, 4, 7, 14),
    (3, 5, 8, 10),
    (1, 3, 8, 10),
    (1, 4, 7, 10),
    (4, 7, 10, 13),
    (1, 3, 6, 8),
    (2, 4, 7, 9),
    (2, 4, 7, 13),
)


def counterexample8() -> Graph:
    """The 8-vertex, 13-edge bundled counterexample graph."""
    return from_edges(8, EDGES8)


def circulant_core() -> Graph:
    """C_16(1,4,8): the circulant core of the 26-vertex counterexample."""
    return circulant(16, (1, 4, 8))


def counterexample26() -> Graph:
    """The 26-vertex counterexample: C_16(1,4,8) plus ten vertices each
    joined to every vertex of JOIN_BASE."""
    edges = list(circulant_core().edges())
    for v in range(17, 27):
        edges.extend((u, v) for u in JOIN_BASE)
    return from_edges(26, edges)


def counterexample26_shelling_order() -> list[tuple[int, ...]]:
    """All 81 facets of Ind(counterexample26()) in the bundled order.

    verify_shelling rejects this particular order; use find_shelling on the
    complex to obtain a certified one.
    """
    return [tuple(f) for f in FACETS26]


def core_shelling_order() -> list[tuple[int, ...]]:
    """The tail of the bundled order: the 80 facets of Ind(C_16(1,4,8))."""
    return [tuple(f) for f in FACETS26[1:]]
