"""Shedding vertices, vertex decomposability, and Reisner's criterion.

The graph recursion works on alive-vertex bitmasks, so deletions G - v and
G - N[v] share one memo table and one cache of maximal independent sets.
Verdicts come with a trace: a DAG keyed by alive mask whose nodes are either
edgeless leaves, decided nodes (a shedding vertex plus two child keys), or
refuted nodes carrying a failure reason for every vertex. Traces can be
replayed against the graph; replay re-checks every claim and reproduces the
verdict or raises.

A budget caps the number of expanded recursion nodes. Exhausting it yields
verdict None, never a guessed bool.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitsets import iter_bits, labels_of, mask_of
from .complexes import (
    SimplicialComplex,
    all_face_masks,
    deletion,
    independence_complex,
    link,
)
from .graphs import Graph, mis_masks
from .homology import DEFAULT_CHARS, check_prime, reduced_homology_dims

MAX_CM_GROUND = 24


@dataclass(frozen=True)
class VdResult:
    verdict: bool | None
    trace: dict


def _mis_cached(adj, alive: int, cache: dict) -> tuple[int, ...]:
    got = cache.get(alive)
    if got is None:
        got = tuple(mis_masks(adj, alive))
        cache[alive] = got
    return got


def _shedding_failure(adj, alive: int, b: int, cache: dict) -> int | None:
    """A maximal independent set of G-v avoiding N(v), or None if v sheds.

    b is the 0-based vertex; everything is restricted to the alive mask.
    """
    rest = alive & ~(1 << b)
    nb = adj[b] & alive
    for m in _mis_cached(adj, rest, cache):
        if m & nb == 0:
            return m
    return None


def is_shedding_vertex(g: Graph, v: int) -> bool:
    """True iff every maximal independent set of G-v meets N(v)."""
    g._check_vertex(v)
    return _shedding_failure(g.adj, g.full_mask, v - 1, {}) is None


def is_shedding_vertex_complex(delta: SimplicialComplex, v: int) -> bool:
    """True iff no face of lk(v) is a facet of del(v); v must lie in some face."""
    lk = link(delta, (v,))
    de = deletion(delta, (v,))
    return not any(lk.has_face(f) for f in de.facet_masks)


def _edgeless(adj, alive: int) -> bool:
    return all(adj[b] & alive == 0 for b in iter_bits(alive))


def is_vertex_decomposable(g: Graph, budget: int | None = None) -> VdResult:
    """Exact verdict with a replayable trace; None when the budget runs out.

    A graph is vertex decomposable when it has no edges, or when some
    shedding vertex v leaves both G-v and G-N[v] vertex decomposable.
    """
    adj = g.adj
    mis_cache: dict[int, tuple[int, ...]] = {}
    memo: dict[int, bool | None] = {}
    nodes: dict[str, dict] = {}
    expanded = 0

    def vd(alive: int) -> bool | None:
        nonlocal expanded
        if alive in memo:
            return memo[alive]
        key = f"{alive:#x}"
        if _edgeless(adj, alive):
            memo[alive] = True
            nodes[key] = {"kind": "edgeless", "vertices": list(labels_of(alive))}
            return True
        if budget is not None and expanded >= budget:
            memo[alive] = None
            nodes[key] = {"kind": "inconclusive", "why": "budget", "tried": []}
            return None
        expanded += 1
        tried: list[dict] = []
        undecided = False
        for b in iter_bits(alive):
            v = b + 1
            witness = _shedding_failure(adj, alive, b, mis_cache)
            if witness is not None:
                tried.append(
                    {
                        "vertex": v,
                        "why": "not_shedding",
                        "witness": list(labels_of(witness)),
                    }
                )
                continue
            lk_alive = alive & ~(adj[b] | (1 << b))
            dl_alive = alive & ~(1 << b)
            r = vd(lk_alive)
            if r is False:
                tried.append({"vertex": v, "why": "link_fails", "link": f"{lk_alive:#x}"})
                continue
            if r is None:
                tried.append({"vertex": v, "why": "unknown", "link": f"{lk_alive:#x}"})
                undecided = True
                continue
            r = vd(dl_alive)
            if r is False:
                tried.append(
                    {"vertex": v, "why": "deletion_fails", "deletion": f"{dl_alive:#x}"}
                )
                continue
            if r is None:
                tried.append(
                    {"vertex": v, "why": "unknown", "deletion": f"{dl_alive:#x}"}
                )
                undecided = True
                continue
            memo[alive] = True
            nodes[key] = {
                "kind": "decided",
                "vertex": v,
                "link": f"{lk_alive:#x}",
                "deletion": f"{dl_alive:#x}",
            }
            return True
        if undecided:
            memo[alive] = None
            nodes[key] = {"kind": "inconclusive", "why": "budget", "tried": tried}
            return None
        memo[alive] = False
        nodes[key] = {"kind": "refuted", "tried": tried}
        return False

    verdict = vd(g.full_mask)
    trace = {
        "type": "vd_trace",
        "n": g.n,
        "budget": budget,
        "expanded": expanded,
        "verdict": verdict,
        "root": f"{g.full_mask:#x}",
        "nodes": nodes,
    }
    return VdResult(verdict, trace)


_VISITING = object()


def replay_vd_trace(g: Graph, trace: dict) -> bool | None:
    """Re-check every node claim of a trace against the graph.

    Returns the reproduced verdict (None for inconclusive traces) and raises
    ValueError on any claim that does not hold.
    """
    adj = g.adj
    if trace.get("n") != g.n:
        raise ValueError("trace was recorded for a different vertex count")
    nodes = trace["nodes"]
    mis_cache: dict[int, tuple[int, ...]] = {}
    memo: dict[str, object] = {}

    def child_mask(alive: int, node: dict, field: str, expect: int) -> str:
        key = node.get(field)
        if not isinstance(key, str) or int(key, 16) != expect:
            raise ValueError(f"node {alive:#x}: {field} child key mismatch")
        return key

    def rep(key: str) -> bool | None:
        got = memo.get(key)
        if got is _VISITING:
            raise ValueError("trace is cyclic")
        if key in memo:
            return got
        memo[key] = _VISITING
        node = nodes.get(key)
        if node is None:
            raise ValueError(f"trace has no node {key}")
        alive = int(key, 16)
        if alive & ~g.full_mask:
            raise ValueError(f"node {key} leaves the vertex set")
        kind = node.get("kind")
        if kind == "edgeless":
            if not _edgeless(adj, alive):
                raise ValueError(f"node {key}: claimed edgeless but has an edge")
            out: bool | None = True
        elif kind == "decided":
            v = node.get("vertex")
            if not isinstance(v, int):
                raise ValueError(f"node {key}: decided node without a vertex")
            b = v - 1
            if not alive >> b & 1:
                raise ValueError(f"node {key}: decision vertex {v} not alive")
            if _shedding_failure(adj, alive, b, mis_cache) is not None:
                raise ValueError(f"node {key}: vertex {v} is not shedding")
            lk = child_mask(alive, node, "link", alive & ~(adj[b] | (1 << b)))
            dl = child_mask(alive, node, "deletion", alive & ~(1 << b))
            if rep(lk) is not True or rep(dl) is not True:
                raise ValueError(f"node {key}: decided but a child is not decomposable")
            out = True
        elif kind == "refuted":
            tried = node.get("tried", [])
            verts = [t.get("vertex") for t in tried]
            if any(not isinstance(u, int) for u in verts) or sorted(verts) != list(
                labels_of(alive)
            ):
                raise ValueError(f"node {key}: refutation must cover every vertex")
            for t in tried:
                b = t["vertex"] - 1
                why = t.get("why")
                if why == "not_shedding":
                    w = mask_of(t.get("witness", ()), g.n)
                    _check_shedding_witness(adj, alive, b, w)
                elif why == "link_fails":
                    lk = child_mask(alive, t, "link", alive & ~(adj[b] | (1 << b)))
                    if rep(lk) is not False:
                        raise ValueError(
                            f"node {key}: link of {t['vertex']} does not replay false"
                        )
                elif why == "deletion_fails":
                    dl = child_mask(alive, t, "deletion", alive & ~(1 << b))
                    if rep(dl) is not False:
                        raise ValueError(
                            f"node {key}: deletion of {t['vertex']} does not replay false"
                        )
                else:
                    raise ValueError(f"node {key}: reason {why!r} cannot refute")
            out = False
        elif kind == "inconclusive":
            out = None
        else:
            raise ValueError(f"node {key}: unknown kind {kind!r}")
        memo[key] = out
        return out

    verdict = rep(trace["root"])
    if verdict is not trace.get("verdict"):
        raise ValueError("replayed verdict differs from the recorded one")
    return verdict


def _check_shedding_witness(adj, alive: int, b: int, w: int):
    """w must be a maximal independent set of alive-b avoiding N(b)."""
    rest = alive & ~(1 << b)
    if w & ~rest:
        raise ValueError("witness leaves the deleted-vertex subgraph")
    if w & adj[b]:
        raise ValueError("witness meets the neighborhood it must avoid")
    for u in iter_bits(w):
        if adj[u] & w:
            raise ValueError("witness is not independent")
    for u in iter_bits(rest & ~w):
        if adj[u] & w == 0:
            raise ValueError("witness is not maximal")


def is_vertex_decomposable_complex(
    delta: SimplicialComplex, budget: int | None = None
) -> VdResult:
    """Complex-level recursion: simplex, or a shedding vertex with both
    del(v) and lk(v) decomposable. Trace nodes are indexed facet lists."""
    nodes: list[dict] = []
    ids: dict[tuple[int, ...], int] = {}
    memo: dict[tuple[int, ...], bool | None] = {}
    expanded = 0

    def emit(facs: tuple[int, ...], payload: dict) -> int:
        nid = len(nodes)
        ids[facs] = nid
        payload["facets"] = [list(labels_of(m)) for m in facs]
        nodes.append(payload)
        return nid

    def vd(dl: SimplicialComplex) -> tuple[bool | None, int]:
        nonlocal expanded
        facs = dl.facet_masks
        if facs in ids:
            return memo[facs], ids[facs]
        if len(facs) <= 1:
            memo[facs] = True
            return True, emit(facs, {"kind": "simplex"})
        if budget is not None and expanded >= budget:
            memo[facs] = None
            return None, emit(facs, {"kind": "inconclusive", "why": "budget", "tried": []})
        expanded += 1
        tried: list[dict] = []
        undecided = False
        for v in labels_of(dl.vertices_mask()):
            lk = link(dl, (v,))
            de = deletion(dl, (v,))
            bad = [f for f in de.facet_masks if lk.has_face(f)]
            if bad:
                tried.append(
                    {
                        "vertex": v,
                        "why": "not_shedding",
                        "witness": list(labels_of(bad[0])),
                    }
                )
                continue
            r, lk_id = vd(lk)
            if r is False:
                tried.append({"vertex": v, "why": "link_fails", "link": lk_id})
                continue
            if r is None:
                tried.append({"vertex": v, "why": "unknown", "link": lk_id})
                undecided = True
                continue
            r, de_id = vd(de)
            if r is False:
                tried.append({"vertex": v, "why": "deletion_fails", "deletion": de_id})
                continue
            if r is None:
                tried.append({"vertex": v, "why": "unknown", "deletion": de_id})
                undecided = True
                continue
            memo[facs] = True
            return True, emit(
                facs, {"kind": "decided", "vertex": v, "link": lk_id, "deletion": de_id}
            )
        if undecided:
            memo[facs] = None
            return None, emit(
                facs, {"kind": "inconclusive", "why": "budget", "tried": tried}
            )
        memo[facs] = False
        return False, emit(facs, {"kind": "refuted", "tried": tried})

    verdict, root = vd(delta)
    trace = {
        "type": "vd_complex_trace",
        "ground_n": delta.ground_n,
        "budget": budget,
        "expanded": expanded,
        "verdict": verdict,
        "root": root,
        "nodes": nodes,
    }
    return VdResult(verdict, trace)


def cm_witness(delta: SimplicialComplex, char: int) -> dict | None:
    """First Reisner violation: a face whose link has homology below its
    dimension. None when the complex is Cohen-Macaulay over F_char."""
    check_prime(char)
    if delta.is_void:
        raise ValueError("the void complex is not graded here")
    if delta.ground_n > MAX_CM_GROUND:
        raise ValueError(
            f"ground set {delta.ground_n} exceeds {MAX_CM_GROUND}; face enumeration"
        )
    for f in all_face_masks(delta):
        lk_facets = [t & ~f for t in delta.facet_masks if t & f == f]
        lk = SimplicialComplex(delta.ground_n, tuple(_antichain(lk_facets)))
        top = lk.dimension
        for d, h in reduced_homology_dims(lk, char).items():
            if h and d < top:
                return {
                    "face": list(labels_of(f)),
                    "degree": d,
                    "homology_dim": h,
                    "link_dim": top,
                }
    return None


def _antichain(masks) -> list[int]:
    from .bitsets import antichain_max

    return antichain_max(masks)


def is_cohen_macaulay(delta: SimplicialComplex, char: int = 2) -> bool:
    """Reisner's criterion over F_char, checked on the link of every face."""
    return cm_witness(delta, char) is None


def refute_vd_counterexample26(g26: Graph, generic_budget: int = 4000) -> dict:
    """Per-vertex proof that the bundled 26-vertex independence complex is
    not vertex decomposable.

    The vertex set splits in two. For v in the 13 vertices outside the join
    base, del(Ind(G), v) acquires a facet that is not a facet of Ind(G)
    itself; such a facet is a face of lk(v), so v is not a shedding vertex
    and cannot open a decomposition. A budgeted run of the generic complex
    recursion corroborates by refuting the deletion outright. For v in the
    13 join-base vertices, the deletion inside the 16-vertex circulant core
    is pure yet fails Reisner's criterion over both default characteristics,
    so it is not shellable and the full deletion cannot be vertex
    decomposable.
    """
    from .fixtures import counterexample26, counterexample26_shelling_order

    expected = counterexample26()
    if g26.n != expected.n or g26.adj != expected.adj:
        raise ValueError("input graph does not match the bundled 26-vertex fixture")

    ind = independence_complex(g26)
    listed = [mask_of(f, 26) for f in counterexample26_shelling_order()]
    if sorted(listed) != list(ind.facet_masks):
        raise ValueError("facet set does not match the bundled fixture table")
    listed_set = set(listed)

    core = g26.induced_subgraph(range(1, 17))
    core_ind = independence_complex(core)
    join_base = sorted(labels_of(listed[0] ^ ((1 << 26) - 1)) )
    case_b = [v for v in range(1, 17) if v in join_base]
    case_a = [v for v in range(1, 27) if v not in case_b]

    per_vertex: dict[str, dict] = {}
    ok = True
    for v in case_a:
        dele = deletion(ind, (v,))
        outside = sorted(m for m in dele.facet_masks if m not in listed_set)
        rec: dict = {"case": "A"}
        if outside:
            rec["outside_facet"] = list(labels_of(outside[0]))
            rec["outside_facet_count"] = len(outside)
        generic = is_vertex_decomposable_complex(dele, budget=generic_budget)
        rec["generic_verdict"] = generic.verdict
        rec["generic_expanded"] = generic.trace["expanded"]
        if outside:
            rec["justification"] = "outside_facet_blocks_shedding"
        elif generic.verdict is False:
            rec["justification"] = "deletion_not_vd_by_recursion"
        else:
            rec["justification"] = "none"
            ok = False
        per_vertex[str(v)] = rec
    for v in case_b:
        core_del = deletion(core_ind, (v,))
        sizes = {m.bit_count() for m in core_del.facet_masks}
        pure = len(sizes) == 1
        rec = {
            "case": "B",
            "core_deletion_pure": pure,
            "core_deletion_facets": len(core_del.facet_masks),
            "reisner_failures": {},
        }
        for p in DEFAULT_CHARS:
            rec["reisner_failures"][str(p)] = cm_witness(core_del, p)
        failed_all = all(w is not None for w in rec["reisner_failures"].values())
        if pure and failed_all:
            rec["justification"] = "core_deletion_pure_but_not_cm"
        else:
            rec["justification"] = "none"
            ok = False
        per_vertex[str(v)] = rec

    return {
        "type": "vd_refutation",
        "n": 26,
        "facet_count": len(ind.facet_masks),
        "case_a_vertices": case_a,
        "case_b_vertices": case_b,
        "per_vertex": per_vertex,
        "verdict": False if ok else None,
    }
