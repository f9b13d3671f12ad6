"""Square-free monomial ideals and their combinatorial duals.

A square-free monomial is stored as the bitmask of its support; an ideal is
the antichain of its minimal generator supports inside K[x_1..x_ring_n].
Alexander duality, primary decomposition and the Stanley-Reisner translation
all reduce to one primitive: enumerating the minimal transversals of a
hypergraph of supports.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bitsets import antichain_min, iter_bits, labels_of, mask_of
from .complexes import SimplicialComplex, from_facet_masks
from .graphs import Graph


@dataclass(frozen=True)
class SqFreeIdeal:
    """Minimal generating supports of a square-free monomial ideal.

    gens == () is the zero ideal; gens == (0,) is the unit ideal (generated
    by the empty product 1).
    """

    ring_n: int
    gen_masks: tuple[int, ...]

    def __post_init__(self):
        full = (1 << self.ring_n) - 1
        ms = self.gen_masks
        if any(m & ~full for m in ms):
            raise ValueError("generator support leaves the ring variables")
        if list(ms) != sorted(set(ms)):
            raise ValueError("generators must be deduplicated and sorted")
        for i, a in enumerate(ms):
            for b in ms[i + 1 :]:
                if a & b == a or a & b == b:
                    raise ValueError("generators must be minimal (antichain)")

    @property
    def is_zero(self) -> bool:
        return not self.gen_masks

    @property
    def is_unit(self) -> bool:
        return self.gen_masks == (0,)

    def generators(self) -> list[tuple[int, ...]]:
        return [labels_of(m) for m in self.gen_masks]

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.gen_masks]


@dataclass(frozen=True)
class PrimeList:
    """Minimal monomial primes, each stored as its variable-set mask."""

    ring_n: int
    prime_masks: tuple[int, ...]

    def primes(self) -> list[tuple[int, ...]]:
        return [labels_of(m) for m in self.prime_masks]

    def __len__(self) -> int:
        return len(self.prime_masks)


def make_ideal(ring_n: int, supports) -> SqFreeIdeal:
    """Ideal generated by the given supports (1-based labels); minimalized."""
    masks = [mask_of(s, ring_n) for s in supports]
    return SqFreeIdeal(ring_n, tuple(antichain_min(masks)))


def edge_ideal(g: Graph) -> SqFreeIdeal:
    """One degree-2 generator x_i x_j per edge of the graph."""
    gens = sorted(
        (1 << (u - 1)) | (1 << (v - 1)) for u, v in g.edges()
    )
    return SqFreeIdeal(g.n, tuple(gens))


def minimal_transversal_masks(edges, n: int) -> list[int]:
    """All minimal hitting sets of the given edge masks, ascending.

    Exact recursive branching: each node picks the uncovered edge with the
    fewest allowed vertices and branches on its vertices, banning the
    alternatives already tried at that node so no set is generated twice.
    Leaves are kept only if irredundant (every chosen vertex has a private
    edge), which for covers is the same as minimality.

    An empty edge can never be hit: the result is empty. With no edges the
    empty set is the unique minimal transversal.
    """
    edge_list = sorted(set(edges))
    if any(e == 0 for e in edge_list):
        return []
    out: list[int] = []

    def irredundant(chosen: int) -> bool:
        for v in iter_bits(chosen):
            if not any(e & chosen == 1 << v for e in edge_list):
                return False
        return True

    def rec(chosen: int, banned: int):
        best_e = 0
        best_avail = -1
        for e in edge_list:
            if e & chosen:
                continue
            avail = e & ~banned
            if avail == 0:
                return
            c = avail.bit_count()
            if best_avail < 0 or c < best_avail:
                best_e, best_avail = avail, c
                if c == 1:
                    break
        if best_avail < 0:
            if irredundant(chosen):
                out.append(chosen)
            return
        tried = 0
        for v in iter_bits(best_e):
            rec(chosen | (1 << v), banned | tried)
            tried |= 1 << v
    rec(0, 0)
    out.sort()
    return out


def stanley_reisner_ideal(delta: SimplicialComplex) -> SqFreeIdeal:
    """Ideal of minimal non-faces of the complex.

    F is a non-face exactly when it meets the complement of every facet, so
    the minimal non-faces are the minimal transversals of those complements.
    """
    full = (1 << delta.ground_n) - 1
    gens = minimal_transversal_masks(
        [full & ~t for t in delta.facet_masks], delta.ground_n
    )
    return SqFreeIdeal(delta.ground_n, tuple(gens))


def complex_of_ideal(ideal: SqFreeIdeal) -> SimplicialComplex:
    """The unique complex whose Stanley-Reisner ideal is the given one.

    Faces are the sets containing no generator support; facets are the
    complements of the minimal transversals of the generator supports.
    """
    if ideal.is_unit:
        raise ValueError("the unit ideal is not a Stanley-Reisner ideal")
    full = (1 << ideal.ring_n) - 1
    if ideal.is_zero:
        return SimplicialComplex(ideal.ring_n, (full,))
    covers = minimal_transversal_masks(ideal.gen_masks, ideal.ring_n)
    return from_facet_masks(ideal.ring_n, [full & ~c for c in covers])


def alexander_dual(ideal: SqFreeIdeal) -> SqFreeIdeal:
    """Dual ideal: generated by the minimal transversals of the generator supports."""
    if ideal.is_zero:
        raise ValueError("the zero ideal has no Alexander dual here")
    gens = minimal_transversal_masks(ideal.gen_masks, ideal.ring_n)
    return SqFreeIdeal(ideal.ring_n, tuple(gens))


def minimal_primes(ideal: SqFreeIdeal) -> PrimeList:
    """Minimal monomial primes; for edge ideals these are the minimal vertex covers."""
    if ideal.is_zero:
        raise ValueError("the zero ideal has no minimal primes here")
    if ideal.is_unit:
        raise ValueError("the unit ideal is not proper")
    return PrimeList(
        ideal.ring_n,
        tuple(minimal_transversal_masks(ideal.gen_masks, ideal.ring_n)),
    )


def height(ideal: SqFreeIdeal) -> int:
    """Smallest cardinality of a minimal prime."""
    return min(m.bit_count() for m in minimal_primes(ideal).prime_masks)


def squarefree_component(ideal: SqFreeIdeal, degree: int) -> SqFreeIdeal:
    """Ideal generated by the square-free degree-d monomials lying in the ideal."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    n = ideal.ring_n
    found: set[int] = set()
    for g in ideal.gen_masks:
        k = g.bit_count()
        if k > degree:
            continue
        if k == degree:
            found.add(g)
            continue
        rest = [b for b in range(n) if not g >> b & 1]
        for extra in combinations(rest, degree - k):
            m = g
            for b in extra:
                m |= 1 << b
            found.add(m)
    return SqFreeIdeal(n, tuple(sorted(found)))
