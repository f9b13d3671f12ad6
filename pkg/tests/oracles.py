"""Independent brute-force reference implementations for the test suite.

Everything here works on plain Python sets and dense lists, with hand-rolled
modular elimination. Nothing is imported from the package under test, so a
disagreement always points at exactly one side.
"""

from __future__ import annotations

from itertools import combinations, permutations


# ---------------------------------------------------------------- graphs

def brute_maximal_independent_sets(n: int, edges) -> list[frozenset[int]]:
    edge_sets = [frozenset(e) for e in edges]
    verts = range(1, n + 1)

    def independent(s):
        return not any(e <= s for e in edge_sets)

    out = []
    for r in range(n + 1):
        for combo in combinations(verts, r):
            s = frozenset(combo)
            if not independent(s):
                continue
            if any(independent(s | {v}) for v in verts if v not in s):
                continue
            out.append(s)
    return out


def brute_induced_matching_number(n: int, edges) -> int:
    edge_list = [tuple(sorted(e)) for e in edges]
    edge_sets = set(map(frozenset, edge_list))

    def pair_ok(e, f):
        if set(e) & set(f):
            return False
        return not any(
            frozenset((a, b)) in edge_sets for a in e for b in f
        )

    best = 0
    for r in range(1, len(edge_list) + 1):
        hit = False
        for combo in combinations(edge_list, r):
            if all(pair_ok(e, f) for e, f in combinations(combo, 2)):
                best = r
                hit = True
                break
        if not hit:
            break
    return best


# ---------------------------------------------------------------- transversals

def brute_minimal_transversals(n: int, sets) -> list[frozenset[int]]:
    targets = [frozenset(s) for s in sets]
    if any(not t for t in targets):
        return []
    if not targets:
        return [frozenset()]
    verts = range(1, n + 1)

    def hits_all(s):
        return all(s & t for t in targets)

    out = []
    for r in range(n + 1):
        for combo in combinations(verts, r):
            s = frozenset(combo)
            if not hits_all(s):
                continue
            if any(hits_all(s - {v}) for v in s):
                continue
            out.append(s)
    return out


# ---------------------------------------------------------------- complexes

def faces_of_ideal(n: int, gens) -> list[frozenset[int]]:
    """All faces of the complex whose non-faces are the monomial supports."""
    gen_sets = [frozenset(g) for g in gens]
    out = []
    for r in range(n + 1):
        for combo in combinations(range(1, n + 1), r):
            s = frozenset(combo)
            if not any(g <= s for g in gen_sets):
                out.append(s)
    return out


def downward_closure(facets) -> list[frozenset[int]]:
    seen = set()
    for f in facets:
        f = frozenset(f)
        for r in range(len(f) + 1):
            for combo in combinations(sorted(f), r):
                seen.add(frozenset(combo))
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def minimal_nonfaces(n: int, facets) -> list[frozenset[int]]:
    faces = set(downward_closure(facets))
    out = []
    for r in range(n + 1):
        for combo in combinations(range(1, n + 1), r):
            s = frozenset(combo)
            if s in faces:
                continue
            if all(s - {v} in faces for v in s):
                out.append(s)
    return out


# ---------------------------------------------------------------- homology

def _rank_dense_mod_p(rows: list[list[int]], p: int) -> int:
    """Row-reduction rank of a dense matrix over F_p, no numpy."""
    mat = [[x % p for x in row] for row in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    row_at = 0
    for c in range(cols):
        piv = next((r for r in range(row_at, len(mat)) if mat[r][c] % p), None)
        if piv is None:
            continue
        mat[row_at], mat[piv] = mat[piv], mat[row_at]
        inv = pow(mat[row_at][c], p - 2, p)
        mat[row_at] = [(x * inv) % p for x in mat[row_at]]
        for r in range(len(mat)):
            if r != row_at and mat[r][c]:
                factor = mat[r][c]
                mat[r] = [
                    (a - factor * b) % p for a, b in zip(mat[r], mat[row_at])
                ]
        row_at += 1
        rank += 1
    return rank


def naive_reduced_homology(faces, p: int) -> dict[int, int]:
    """Reduced homology dims over F_p from an explicit face list.

    `faces` must be a downward-closed family of frozensets including the
    empty set. Returns {d: dim H~_d} for -1 <= d <= top dimension.
    """
    faces = sorted(set(map(frozenset, faces)), key=lambda s: (len(s), sorted(s)))
    assert frozenset() in faces, "face list must contain the empty face"
    by_dim: dict[int, list[frozenset]] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    top = max(by_dim)
    index = {d: {f: i for i, f in enumerate(fs)} for d, fs in by_dim.items()}

    def boundary_rank(d: int) -> int:
        # rank of d_d: C_d -> C_{d-1}
        if d - 1 not in by_dim or d not in by_dim:
            return 0
        rows = []
        for f in by_dim[d]:
            row = [0] * len(by_dim[d - 1])
            for k, v in enumerate(sorted(f)):
                sub = f - {v}
                row[index[d - 1][sub]] = (-1) ** k
            rows.append(row)
        return _rank_dense_mod_p(rows, p)

    out = {}
    for d in range(-1, top + 1):
        dim_cd = len(by_dim.get(d, []))
        out[d] = dim_cd - boundary_rank(d) - boundary_rank(d + 1)
    return out


def naive_betti_table(n: int, gens, p: int) -> dict[tuple[int, int], int]:
    """Hochster's formula for the quotient by a square-free ideal, computed
    entirely from this module's primitives."""
    all_faces = faces_of_ideal(n, gens)
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    for r in range(1, n + 1):
        for w in combinations(range(1, n + 1), r):
            wset = frozenset(w)
            local = [f for f in all_faces if f <= wset]
            if not local:
                continue
            hom = naive_reduced_homology(local, p)
            j = len(wset)
            for d, h in hom.items():
                if h:
                    i = j - d - 1
                    entries[(i, j)] = entries.get((i, j), 0) + h
    return entries


def naive_regularity_quotient(n: int, gens, p: int) -> int:
    table = naive_betti_table(n, gens, p)
    return max(j - i for (i, j), v in table.items() if v)


# ---------------------------------------------------------------- shellability

def _is_shelling(order) -> bool:
    for j in range(1, len(order)):
        fj = order[j]
        for fi in order[:j]:
            # need x in fj - fi and k < j with fj - fk == {x}
            if not any(
                any(fj - fk == {x} for fk in order[:j]) for x in fj - fi
            ):
                return False
    return True


def brute_shellable(facets) -> bool:
    facets = [frozenset(f) for f in facets]
    if len(facets) <= 1:
        return True
    return any(_is_shelling(list(perm)) for perm in permutations(facets))


# ---------------------------------------------------------------- vertex decomposability

def naive_vd_complex(facets) -> bool:
    """Definition-chasing recursion on facet lists of frozensets."""
    facets = _antichain([frozenset(f) for f in facets])
    if len(facets) <= 1:
        return True
    verts = sorted(set().union(*facets))
    for v in verts:
        link = _antichain([f - {v} for f in facets if v in f])
        dele = _antichain([f - {v} for f in facets])
        # shedding: no facet of the deletion is a face of the link
        if any(any(d <= l for l in link) for d in dele):
            continue
        if naive_vd_complex(link) and naive_vd_complex(dele):
            return True
    return False


def naive_vd_graph(n: int, edges) -> bool:
    facets = brute_maximal_independent_sets(n, edges)
    return naive_vd_complex(facets)


def _antichain(sets) -> list[frozenset]:
    out = []
    for s in sets:
        if any(s < t for t in sets):
            continue
        if s not in out:
            out.append(s)
    return out


# ---------------------------------------------------------------- generators

def pruefer_tree_edges(n: int, seq) -> list[tuple[int, int]]:
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


def random_chordal_edges(n: int, rng) -> list[tuple[int, int]]:
    """Grow a chordal graph by gluing each new vertex onto a clique."""
    edges: list[tuple[int, int]] = []
    cliques: list[list[int]] = [[1]]
    for v in range(2, n + 1):
        base = rng.choice(cliques)
        k = rng.randint(0, len(base))
        attach = sorted(rng.sample(base, k))
        for u in attach:
            edges.append((u, v))
        cliques.append(attach + [v])
    return edges
