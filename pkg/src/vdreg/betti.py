"""Graded Betti numbers of square-free monomial ideals via Hochster's formula.

beta_{i,j}(R/I) is the sum over the weight-j vertex subsets W of the reduced
homology dimension of the restricted complex in degree j-i-1. Everything is
exact linear algebra over a chosen prime field, so tables are reported per
characteristic; restriction subsets grow as 2^n, hence the ring-size cap.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import restrict_mask
from .homology import check_prime, reduced_homology_dims
from .ideals import SqFreeIdeal, alexander_dual, complex_of_ideal, edge_ideal
from .graphs import Graph

MAX_BETTI_RING = 16


@dataclass(frozen=True)
class BettiTable:
    subject: str
    char: int
    entries: dict[tuple[int, int], int] = field(compare=False)

    def beta(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def regularity(self) -> int:
        if not self.entries:
            raise ValueError("the zero module has no regularity")
        return max(j - i for i, j in self.entries)

    def projective_dimension(self) -> int:
        if not self.entries:
            raise ValueError("the zero module has no projective dimension")
        return max(i for i, _ in self.entries)

    def rows(self) -> list[tuple[int, int, int]]:
        return [(i, j, v) for (i, j), v in sorted(self.entries.items())]


def _check_subject(subject: str) -> str:
    if subject not in ("quotient", "ideal"):
        raise ValueError(f"subject must be 'quotient' or 'ideal', got {subject!r}")
    return subject


def betti_table(
    ideal: SqFreeIdeal, subject: str = "quotient", char: int = 2
) -> BettiTable:
    """Every nonzero beta_{i,j} of R/I or of I over F_char."""
    _check_subject(subject)
    check_prime(char)
    if ideal.is_unit:
        raise ValueError("the unit ideal has no Betti table here")
    n = ideal.ring_n
    if n > MAX_BETTI_RING:
        raise ValueError(
            f"Betti tables enumerate 2^n vertex subsets; n={n} exceeds {MAX_BETTI_RING}"
        )
    quotient: dict[tuple[int, int], int] = {}
    if ideal.is_zero:
        quotient[(0, 0)] = 1
    else:
        delta = complex_of_ideal(ideal)
        for w in range(1 << n):
            sub = restrict_mask(delta, w)
            j = w.bit_count()
            for d, h in reduced_homology_dims(sub, char).items():
                if h:
                    key = (j - d - 1, j)
                    quotient[key] = quotient.get(key, 0) + h
    if subject == "quotient":
        return BettiTable("quotient", char, quotient)
    shifted = {(i - 1, j): v for (i, j), v in quotient.items() if i >= 1}
    return BettiTable("ideal", char, shifted)


def regularity(ideal: SqFreeIdeal, subject: str = "quotient", char: int = 2) -> int:
    """Castelnuovo-Mumford regularity read off the Betti table."""
    return betti_table(ideal, subject, char).regularity()


def has_linear_resolution(ideal: SqFreeIdeal, char: int = 2) -> bool:
    """For an ideal generated in one degree d: is reg(I) equal to d?"""
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("linear resolution needs a nonzero proper ideal")
    degs = set(ideal.degrees())
    if len(degs) != 1:
        raise ValueError(f"generators in degrees {sorted(degs)}; need a single degree")
    return regularity(ideal, "ideal", char) == next(iter(degs))


def is_componentwise_linear(
    ideal: SqFreeIdeal, char: int = 2, method: str = "auto"
) -> bool:
    """Does every square-free degree component have a linear resolution?

    method='full' tests each component in degrees mindeg..ring_n directly.
    method='auto' first checks the components strictly below the top
    generator degree d_m; if they are linear and reg(I) == d_m the answer is
    yes, otherwise it falls back to scanning the remaining components.
    """
    from .ideals import squarefree_component

    if ideal.is_zero or ideal.is_unit:
        raise ValueError("componentwise linearity needs a nonzero proper ideal")
    if method not in ("auto", "full"):
        raise ValueError(f"unknown method {method!r}")
    degs = ideal.degrees()
    lo, hi = min(degs), max(degs)

    def component_linear(i: int) -> bool:
        comp = squarefree_component(ideal, i)
        return comp.is_zero or has_linear_resolution(comp, char)

    start = lo
    if method == "auto":
        for i in range(lo, hi):
            if not component_linear(i):
                return False
        if regularity(ideal, "ideal", char) == hi:
            return True
        start = hi
    return all(component_linear(i) for i in range(start, ideal.ring_n + 1))


def is_sequentially_cm(g: Graph, char: int = 2) -> bool:
    """Is R/I(G) sequentially Cohen-Macaulay over F_char?

    Decided through duality: the quotient is sequentially CM exactly when
    the Alexander dual of the edge ideal is componentwise linear.
    """
    ideal = edge_ideal(g)
    if ideal.is_zero:
        raise ValueError("edgeless graph: the edge ideal is zero")
    if g.n > MAX_BETTI_RING:
        raise ValueError(
            f"n={g.n} exceeds {MAX_BETTI_RING}; use the shelling route for larger graphs"
        )
    return is_componentwise_linear(alexander_dual(ideal), char)
