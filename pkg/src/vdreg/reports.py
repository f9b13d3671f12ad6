"""End-to-end reports on the bundled counterexamples and the random hunter.

A Report is a deterministic JSON document: subject, invariant map (per
characteristic where a field matters), certificates, divergences, status,
and tool version. Wall-clock timing is kept out of the canonical payload so
two runs with the same seed and version serialize byte-identically.
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field

from . import __version__
from .betti import betti_table, is_sequentially_cm, regularity
from .bitsets import mask_of
from .complexes import complex_stats, independence_complex
from .decomp import (
    is_vertex_decomposable,
    refute_vd_counterexample26,
    replay_vd_trace,
)
from .fixtures import (
    HEIGHT8,
    HEIGHT26,
    MATCHING8,
    PRIME_COUNT26,
    PRIMES8,
    REG_DUAL8,
    REG_QUOTIENT8,
    circulant_core,
    counterexample8,
    counterexample26,
    counterexample26_shelling_order,
    JOIN_BASE,
)
from .graphs import Graph, graph_stats, induced_matching_number
from .homology import DEFAULT_CHARS
from .ideals import alexander_dual, edge_ideal, height, minimal_primes
from .serialize import (
    betti_to_json,
    dump_canonical,
    graph_to_json,
    shelling_order_to_json,
)
from .shelling import find_shelling, verify_shelling

log = logging.getLogger("vdreg")


@dataclass
class Report:
    subject: str
    status: str
    chars: tuple[int, ...]
    invariants: dict
    certificates: dict = field(default_factory=dict)
    divergences: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    elapsed: float = 0.0
    version: str = __version__

    def payload(self, include_timing: bool = False) -> dict:
        out = {
            "type": "report",
            "subject": self.subject,
            "status": self.status,
            "version": self.version,
            "chars": list(self.chars),
            "invariants": self.invariants,
            "certificates": self.certificates,
            "divergences": self.divergences,
            "failures": self.failures,
        }
        if include_timing:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        return out

    def to_json(self, include_timing: bool = False) -> str:
        return dump_canonical(self.payload(include_timing))


class _Checks:
    """Collects invariant values and compares them against pinned targets."""

    def __init__(self):
        self.invariants: dict = {}
        self.failures: list[str] = []

    def put(self, name: str, value):
        self.invariants[name] = value

    def expect(self, name: str, value, target):
        self.invariants[name] = value
        if value != target:
            self.failures.append(name)


def report_counterexample1() -> Report:
    """Invariants of the bundled 8-vertex graph, checked against its
    reference values over both default characteristics."""
    t0 = time.monotonic()
    g = counterexample8()
    ideal = edge_ideal(g)
    dual = alexander_dual(ideal)
    c = _Checks()
    certificates: dict = {"graph": graph_to_json(g)}

    c.expect("edge_count", g.edge_count(), 13)
    c.expect("height", height(ideal), HEIGHT8)
    primes = minimal_primes(ideal)
    c.expect("minimal_primes", sorted(primes.primes()), sorted(PRIMES8))
    c.expect("alexander_dual_gens", sorted(dual.generators()), sorted(PRIMES8))
    c.expect("induced_matching_number", induced_matching_number(g), MATCHING8)
    stats = graph_stats(g)
    c.expect("has_degree_one_vertex", stats.has_degree_one_vertex, False)
    c.expect("isolated_vertices", list(stats.isolated_vertices), [])

    tables = {}
    for p in DEFAULT_CHARS:
        quo = betti_table(ideal, "quotient", p)
        dua = betti_table(dual, "ideal", p)
        c.expect(f"reg_quotient[char={p}]", quo.regularity(), REG_QUOTIENT8)
        c.expect(f"reg_dual[char={p}]", dua.regularity(), REG_DUAL8)
        c.expect(f"sequentially_cm[char={p}]", is_sequentially_cm(g, p), True)
        tables[p] = (quo, dua)
        certificates[f"betti_quotient_char{p}"] = betti_to_json(quo)
        certificates[f"betti_dual_char{p}"] = betti_to_json(dua)
    p0, p1 = DEFAULT_CHARS
    c.expect(
        "betti_chars_agree",
        tables[p0][0].entries == tables[p1][0].entries
        and tables[p0][1].entries == tables[p1][1].entries,
        True,
    )

    return Report(
        subject="counterexample-8",
        status="FAILED" if c.failures else "PASSED",
        chars=DEFAULT_CHARS,
        invariants=c.invariants,
        certificates=certificates,
        failures=c.failures,
        elapsed=time.monotonic() - t0,
    )


def report_counterexample2() -> Report:
    """Invariants of the bundled 26-vertex graph: facet table, shelling,
    height and prime structure, and the vertex-decomposability refutation.

    The facet-table order bundled with the fixture is checked by
    verify_shelling; it does not satisfy the shelling condition (first
    failure at position 11), so the shellability of the complex is certified
    by an independently found order instead and the discrepancy is recorded
    under divergences rather than failures.
    """
    t0 = time.monotonic()
    g = counterexample26()
    core = circulant_core()
    ideal = edge_ideal(g)
    c = _Checks()
    certificates: dict = {"graph": graph_to_json(g)}
    divergences: list[str] = []

    ind = independence_complex(g)
    listed = counterexample26_shelling_order()
    listed_masks = sorted(mask_of(f, 26) for f in listed)
    c.expect("facet_count", len(ind.facet_masks), 81)
    c.expect("facet_set_matches_table", listed_masks == list(ind.facet_masks), True)

    listed_ok = verify_shelling(ind, listed)
    c.put("listed_order_is_shelling", listed_ok)
    if not listed_ok:
        divergences.append(
            "bundled facet-table order rejected by verify_shelling; "
            "shellability certified by the found order below"
        )
    search = find_shelling(ind)
    c.expect("find_shelling_status", search.status, "shellable")
    if search.order is not None:
        c.expect("found_order_verified", verify_shelling(ind, search.order_facets()), True)
        certificates["shelling_order"] = shelling_order_to_json(ind, search.order_facets())
    c.expect(
        "sequentially_cm_via_shelling",
        search.status == "shellable",
        True,
    )

    c.expect("height", height(ideal), HEIGHT26)
    primes = minimal_primes(ideal)
    c.expect("prime_count", len(primes), PRIME_COUNT26)
    top = mask_of(range(17, 27), 26)
    core_primes = minimal_primes(edge_ideal(core)).prime_masks
    predicted = sorted({p | top for p in core_primes} | {mask_of(JOIN_BASE, 26)})
    c.expect("prime_structure_matches", predicted == list(primes.prime_masks), True)

    core_ind = independence_complex(core)
    cst = complex_stats(core_ind)
    c.expect("core_facet_count", cst.facet_count, 80)
    c.expect("core_pure", cst.is_pure, True)
    c.expect("core_dimension", cst.dimension, 3)
    core_search = find_shelling(core_ind)
    c.expect("core_shellable", core_search.status, "shellable")
    core_vd = is_vertex_decomposable(core)
    c.expect("core_vertex_decomposable", core_vd.verdict, False)
    c.expect("core_vd_trace_replays", replay_vd_trace(core, core_vd.trace), False)

    refutation = refute_vd_counterexample26(g)
    c.expect("vertex_decomposable", refutation["verdict"], False)
    c.expect(
        "refutation_reasons_complete",
        all(r["justification"] != "none" for r in refutation["per_vertex"].values()),
        True,
    )
    certificates["vd_refutation"] = refutation

    return Report(
        subject="counterexample-26",
        status="FAILED" if c.failures else "PASSED",
        chars=DEFAULT_CHARS,
        invariants=c.invariants,
        certificates=certificates,
        divergences=divergences,
        failures=c.failures,
        elapsed=time.monotonic() - t0,
    )


@dataclass(frozen=True)
class HuntConfig:
    """Random search for counterexamples to the three open statements about
    sequentially Cohen-Macaulay graphs on an even vertex count n with edge
    ideal of height n/2: (1) a degree-1 vertex exists, (2) the graph is
    vertex decomposable, (3) reg(R/I) equals the induced matching number."""

    n: int
    samples: int
    seed: int
    model: str = "gnp"
    edge_probability: float = 0.35
    vd_budget: int = 50_000

    def __post_init__(self):
        if self.n < 4 or self.n % 2:
            raise ValueError("n must be even and at least 4")
        if self.n > 12:
            raise ValueError("full-invariant hunting is capped at n = 12")
        if self.samples < 0:
            raise ValueError("samples must be nonnegative")
        if self.model not in ("gnp", "tree"):
            raise ValueError(f"unknown model {self.model!r}")
        if not 0.0 <= self.edge_probability <= 1.0:
            raise ValueError("edge_probability must lie in [0, 1]")


def _random_graph(cfg: HuntConfig, rng: random.Random) -> Graph:
    from .graphs import from_edges

    n = cfg.n
    if cfg.model == "tree":
        if n == 1:
            return from_edges(1, [])
        seq = [rng.randrange(1, n + 1) for _ in range(n - 2)]
        return from_edges(n, _pruefer_edges(n, seq))
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < cfg.edge_probability
    ]
    return from_edges(n, edges)


def _pruefer_edges(n: int, seq: list[int]) -> list[tuple[int, int]]:
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    edges = []
    used = set()
    for v in seq:
        leaf = min(u for u in range(1, n + 1) if degree[u] == 1 and u not in used)
        edges.append((leaf, v))
        used.add(leaf)
        degree[leaf] -= 1
        degree[v] -= 1
    last = [u for u in range(1, n + 1) if degree[u] == 1 and u not in used]
    edges.append((last[0], last[1]))
    return edges


def hunt(cfg: HuntConfig, inject=()):
    """Yield a violator Report for each sampled graph that passes the
    height/seq-CM filter yet falsifies one of the three statements.

    `inject` prepends explicit graphs to the sample stream (a replay and
    testing hook); random samples are drawn per-index from seeded streams so
    the output is deterministic for a fixed config.
    """
    stream = [(f"inject:{k}", g) for k, g in enumerate(inject)]
    stream += [
        (f"sample:{i}", _random_graph(cfg, random.Random(f"{cfg.seed}/{i}")))
        for i in range(cfg.samples)
    ]
    for sample_id, g in stream:
        report = _evaluate_candidate(cfg, sample_id, g)
        if report is not None:
            yield report


def _evaluate_candidate(cfg: HuntConfig, sample_id: str, g: Graph) -> Report | None:
    t0 = time.monotonic()
    stats = graph_stats(g)
    if stats.isolated_vertices:
        return None
    ideal = edge_ideal(g)
    if ideal.is_zero:
        return None
    if height(ideal) != g.n // 2:
        return None
    if not all(is_sequentially_cm(g, p) for p in DEFAULT_CHARS):
        return None

    invariants: dict = {
        "n": g.n,
        "edge_count": g.edge_count(),
        "height": g.n // 2,
        "sequentially_cm": True,
    }
    certificates: dict = {"graph": graph_to_json(g)}
    a = induced_matching_number(g)
    invariants["induced_matching_number"] = a
    invariants["has_degree_one_vertex"] = stats.has_degree_one_vertex
    statement1 = stats.has_degree_one_vertex

    statement3 = True
    for p in DEFAULT_CHARS:
        reg = regularity(ideal, "quotient", p)
        invariants[f"reg_quotient[char={p}]"] = reg
        if reg != a:
            statement3 = False
        certificates[f"betti_quotient_char{p}"] = betti_to_json(
            betti_table(ideal, "quotient", p)
        )

    vd = is_vertex_decomposable(g, budget=cfg.vd_budget)
    if vd.verdict is None:
        log.info("hunt %s: vertex decomposability inconclusive, skipped", sample_id)
        invariants["vertex_decomposable"] = None
    else:
        invariants["vertex_decomposable"] = vd.verdict
        certificates["vd_trace"] = vd.trace
    statement2 = vd.verdict

    violated = []
    if not statement1:
        violated.append("degree_one_vertex")
    if statement2 is False:
        violated.append("vertex_decomposable")
    if not statement3:
        violated.append("reg_equals_induced_matching")
    if not violated:
        return None
    invariants["violated_statements"] = violated
    return Report(
        subject=f"hunt-n{cfg.n}-seed{cfg.seed}-{sample_id}",
        status="VIOLATION",
        chars=DEFAULT_CHARS,
        invariants=invariants,
        certificates=certificates,
        elapsed=time.monotonic() - t0,
    )
