"""Shelling order verification and backtracking search.

The non-pure definition is used throughout: an order F_1..F_s is a shelling
when for all i < j there are x in F_j \\ F_i and k < j with F_j \\ F_k = {x}.
Equivalently, writing D_j for the set of vertices x with F_j \\ F_k = {x} for
some k < j, every earlier facet must miss F_j somewhere inside D_j.

The search only tries orders whose facet dimensions never increase; every
shellable complex admits such a shelling (any shelling can be rearranged by
dimension without breaking the condition), so exhausting this restricted
space still proves non-shellability.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitsets import iter_bits, mask_of
from .complexes import SimplicialComplex
from .decomp import MAX_CM_GROUND, cm_witness

DEFAULT_FACET_CAP = 100


def _appendable(g: int, placed: list[int]) -> bool:
    if not placed:
        return True
    d = 0
    for f in placed:
        diff = g & ~f
        if diff.bit_count() == 1:
            d |= diff
    if d == 0:
        return False
    return all(g & ~f & d for f in placed)


def verify_shelling(delta: SimplicialComplex, order) -> bool:
    """Check one proposed shelling order; the order must list every facet once."""
    masks = [mask_of(f, delta.ground_n) for f in order]
    if sorted(masks) != sorted(delta.facet_masks):
        raise ValueError("order is not a permutation of the facet list")
    for j in range(1, len(masks)):
        if not _appendable(masks[j], masks[:j]):
            return False
    return True


@dataclass(frozen=True)
class ShellingSearch:
    """Outcome of find_shelling: a witness order, a proof of absence, or a bail-out."""

    status: str  # "shellable" | "not_shellable" | "inconclusive"
    order: tuple[int, ...] | None  # facet masks in shelling order
    expanded: int
    reason: str | None = None

    def order_facets(self) -> list[tuple[int, ...]] | None:
        from .bitsets import labels_of

        if self.order is None:
            return None
        return [labels_of(m) for m in self.order]


def find_shelling(
    delta: SimplicialComplex,
    facet_cap: int = DEFAULT_FACET_CAP,
    state_budget: int | None = None,
    screen: bool = True,
) -> ShellingSearch:
    """Search for a shelling order, trying facets in non-increasing dimension.

    Failed placed-sets are memoized: appendability of a facet depends only on
    the set of facets already placed, never on their order, so a set that
    failed once can be skipped everywhere. The search is exhaustive within
    the dimension restriction; "not_shellable" is therefore a proof, while
    cap or budget overruns give "inconclusive".

    Pure complexes get a homological screen before the search: a pure
    shellable complex is Cohen-Macaulay over every field, so a Reisner
    violation over F_2 already proves non-shellability. Some pure
    non-shellable complexes (the vertex deletions of the bundled circulant
    core among them) defeat the plain backtracking within any realistic
    budget but fall to this screen instantly.
    """
    facs = list(delta.facet_masks)
    s = len(facs)
    if s <= 1:
        return ShellingSearch("shellable", tuple(facs), 0)
    if s > facet_cap:
        return ShellingSearch(
            "inconclusive", None, 0, f"facet count {s} exceeds cap {facet_cap}"
        )
    if screen and delta.ground_n <= MAX_CM_GROUND:
        sizes0 = {m.bit_count() for m in facs}
        if len(sizes0) == 1:
            witness = cm_witness(delta, 2)
            if witness is not None:
                return ShellingSearch(
                    "not_shellable",
                    None,
                    0,
                    "pure but not Cohen-Macaulay over F_2: "
                    f"link of {witness['face']} has homology in degree "
                    f"{witness['degree']} below dimension {witness['link_dim']}",
                )
    sizes = [m.bit_count() for m in facs]
    failed: set[int] = set()
    placed_masks: list[int] = []
    order_idx: list[int] = []
    expanded = 0
    budget_hit = False

    def rec(unplaced: int) -> bool:
        nonlocal expanded, budget_hit
        if unplaced == 0:
            return True
        if unplaced in failed:
            return False
        if state_budget is not None and expanded >= state_budget:
            budget_hit = True
            return False
        expanded += 1
        top = max(sizes[i] for i in iter_bits(unplaced))
        for i in iter_bits(unplaced):
            if sizes[i] != top:
                continue
            if not _appendable(facs[i], placed_masks):
                continue
            placed_masks.append(facs[i])
            order_idx.append(i)
            if rec(unplaced & ~(1 << i)):
                return True
            placed_masks.pop()
            order_idx.pop()
            if budget_hit:
                return False
        failed.add(unplaced)
        return False

    found = rec((1 << s) - 1)
    if found:
        return ShellingSearch(
            "shellable", tuple(facs[i] for i in order_idx), expanded
        )
    if budget_hit:
        return ShellingSearch(
            "inconclusive", None, expanded, f"state budget {state_budget} exhausted"
        )
    return ShellingSearch("not_shellable", None, expanded)
