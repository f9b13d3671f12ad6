"""Simplicial complexes stored as facet antichains over a ground set.

Two degenerate values are kept distinct on purpose: the void complex (no
faces at all, empty facet list) and the irrelevant complex {emptyset} (a
single empty facet). The distinction changes reduced homology and therefore
every Betti number built on top of it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bitsets import antichain_max, labels_of, mask_of, submasks
from .graphs import Graph, mis_masks


@dataclass(frozen=True)
class SimplicialComplex:
    """Facet list over ground set x_1..x_ground_n; facets form an antichain."""

    ground_n: int
    facet_masks: tuple[int, ...]

    def __post_init__(self):
        full = (1 << self.ground_n) - 1
        ms = self.facet_masks
        if any(m & ~full for m in ms):
            raise ValueError("facet leaves the ground set")
        if list(ms) != sorted(set(ms)):
            raise ValueError("facets must be deduplicated and sorted")
        for i, a in enumerate(ms):
            for b in ms[i + 1 :]:
                if a & b == a or a & b == b:
                    raise ValueError("facets must form an antichain")

    @property
    def is_void(self) -> bool:
        return not self.facet_masks

    @property
    def is_irrelevant(self) -> bool:
        return self.facet_masks == (0,)

    @property
    def dimension(self) -> int | float:
        """Max facet cardinality minus 1; -1 for {emptyset}, -inf for void."""
        if self.is_void:
            return -math.inf
        return max(m.bit_count() for m in self.facet_masks) - 1

    def facets(self) -> list[tuple[int, ...]]:
        return [labels_of(m) for m in self.facet_masks]

    def has_face(self, mask: int) -> bool:
        return any(mask & f == mask for f in self.facet_masks)

    def vertices_mask(self) -> int:
        m = 0
        for f in self.facet_masks:
            m |= f
        return m


def from_facets(ground_n: int, faces) -> SimplicialComplex:
    """Complex generated by the given faces (1-based label collections).

    Inclusion-maximal inputs become the facets; an empty input list gives the
    void complex, [()] gives the irrelevant complex.
    """
    masks = [mask_of(f, ground_n) for f in faces]
    return SimplicialComplex(ground_n, tuple(antichain_max(masks)))


def from_facet_masks(ground_n: int, masks) -> SimplicialComplex:
    return SimplicialComplex(ground_n, tuple(antichain_max(masks)))


def independence_complex(g: Graph) -> SimplicialComplex:
    """Ind(G): faces are the independent vertex sets of G."""
    return SimplicialComplex(g.n, tuple(mis_masks(g.adj, g.full_mask)))


def _face_mask(delta: SimplicialComplex, face) -> int:
    return mask_of(face, delta.ground_n)


def link(delta: SimplicialComplex, face) -> SimplicialComplex:
    """lk(F): faces A disjoint from F with A union F a face."""
    f = _face_mask(delta, face)
    if not delta.has_face(f):
        raise ValueError(f"{tuple(face)} is not a face")
    return from_facet_masks(
        delta.ground_n, [t & ~f for t in delta.facet_masks if t & f == f]
    )


def deletion(delta: SimplicialComplex, face) -> SimplicialComplex:
    """del(F): faces disjoint from F. Deleting vertices outside the complex is the identity."""
    f = _face_mask(delta, face)
    return from_facet_masks(delta.ground_n, [t & ~f for t in delta.facet_masks])


def induced_subcomplex(delta: SimplicialComplex, vertices) -> SimplicialComplex:
    """Restriction to a vertex subset W: faces of delta contained in W."""
    w = mask_of(vertices, delta.ground_n)
    return restrict_mask(delta, w)


def restrict_mask(delta: SimplicialComplex, w: int) -> SimplicialComplex:
    """Mask-level restriction; same ground set, faces inside w only."""
    return from_facet_masks(delta.ground_n, [t & w for t in delta.facet_masks])


@dataclass(frozen=True)
class ComplexStats:
    dimension: int | float
    is_pure: bool
    is_simplex: bool
    facet_count: int
    f_vector: tuple[int, ...]


def all_face_masks(delta: SimplicialComplex) -> list[int]:
    """Every face as a mask, sorted by (cardinality, mask). Empty for void."""
    seen: set[int] = set()
    for f in delta.facet_masks:
        seen.update(submasks(f))
    return sorted(seen, key=lambda m: (m.bit_count(), m))


def all_faces(delta: SimplicialComplex) -> list[tuple[int, ...]]:
    """Every face of the complex, including () unless the complex is void."""
    return [labels_of(m) for m in all_face_masks(delta)]


def complex_stats(delta: SimplicialComplex) -> ComplexStats:
    """Dimension, purity, f-vector (counts by dimension, starting at the empty face)."""
    if delta.is_void:
        return ComplexStats(-math.inf, True, False, 0, ())
    sizes = [m.bit_count() for m in delta.facet_masks]
    by_card: dict[int, int] = {}
    for m in all_face_masks(delta):
        c = m.bit_count()
        by_card[c] = by_card.get(c, 0) + 1
    fvec = tuple(by_card.get(c, 0) for c in range(max(sizes) + 1))
    return ComplexStats(
        dimension=max(sizes) - 1,
        is_pure=len(set(sizes)) == 1,
        is_simplex=len(delta.facet_masks) == 1,
        facet_count=len(delta.facet_masks),
        f_vector=fvec,
    )
