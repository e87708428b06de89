"""Independent brute-force oracles used to pin expected values.

Everything here deliberately avoids the library's search strategies:
models come from full assignment enumeration, chromatic numbers from an
independent-set cover DP, connectivity from cut enumeration, and
isomorphism classes from permutation-orbit closure over labeled graphs.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

from minorkit.graph import Graph, bit_indices, closure, connected_components


def random_graph(rng, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def _bags_valid(g: Graph, pat: Graph, bags: list[int]) -> bool:
    for b in bags:
        if not b or closure(g.adj, b, b & -b) != b:
            return False
    for i in range(pat.n):
        for j in bit_indices(pat.adj[i] >> (i + 1) << (i + 1)):
            acc = 0
            for v in bit_indices(bags[i]):
                acc |= g.adj[v]
            if not acc & bags[j]:
                return False
    return True


def oracle_has_minor(g: Graph, pat: Graph) -> bool:
    """Enumerate every map of host vertices into pattern bags or 'unused'."""
    p = pat.n
    if p == 0:
        return True
    for assign in product(range(p + 1), repeat=g.n):
        bags = [0] * p
        for v, b in enumerate(assign):
            if b < p:
                bags[b] |= 1 << v
        if all(bags) and _bags_valid(g, pat, bags):
            return True
    return False


def oracle_has_rooted_minor(g: Graph, pat: Graph, root_positions, z) -> bool:
    """As oracle_has_minor, with the roots z landing bijectively (in any
    order) on the given root positions of the pattern."""
    p = pat.n
    roots = set(root_positions)
    for assign in product(range(p + 1), repeat=g.n):
        hit = {}
        ok = True
        for v in z:
            b = assign[v]
            if b not in roots or b in hit:
                ok = False
                break
            hit[b] = v
        if not ok or len(hit) != len(z):
            continue
        bags = [0] * p
        for v, b in enumerate(assign):
            if b < p:
                bags[b] |= 1 << v
        if all(bags) and _bags_valid(g, pat, bags):
            return True
    return False


def oracle_chromatic(g: Graph) -> int:
    """Minimum independent-set cover via subset DP (3^n-ish, n <= 10)."""
    n = g.n
    if n == 0:
        return 0
    full = (1 << n) - 1
    independent = [True] * (1 << n)
    for m in range(1, 1 << n):
        low = m & -m
        v = low.bit_length() - 1
        rest = m ^ low
        independent[m] = independent[rest] and not (g.adj[v] & rest)
    best = {0: 0}
    frontier = {0}
    rounds = 0
    while full not in best:
        rounds += 1
        nxt = set()
        for covered in frontier:
            free = full & ~covered
            low = free & -free
            # enumerate independent subsets of `free` containing its lowest vertex
            sub = free
            while sub:
                if sub & low and independent[sub]:
                    new = covered | sub
                    if new not in best:
                        best[new] = rounds
                        nxt.add(new)
                sub = (sub - 1) & free
        frontier = nxt
    return best[full]


def oracle_is_k_connected(g: Graph, k: int) -> bool:
    """Brute-force: no vertex cut of size < k, and n >= k+1."""
    if g.n < k + 1:
        return False
    for size in range(0, k):
        for cut in combinations(range(g.n), size):
            keep = g.full_mask()
            for v in cut:
                keep &= ~(1 << v)
            if len(connected_components(g, keep)) > 1:
                return False
    return True


def all_simple_paths(g: Graph, s: int, t: int, banned: int) -> list[int]:
    """Vertex masks of every simple s..t path avoiding `banned`."""
    out = []

    def walk(v: int, used: int) -> None:
        if v == t:
            out.append(used)
            return
        for w in bit_indices(g.adj[v] & ~used & ~banned):
            walk(w, used | (1 << w))

    if not (banned >> s & 1 or banned >> t & 1):
        walk(s, 1 << s)
    return out


def oracle_two_paths_exist(g: Graph, s1: int, t1: int, s2: int, t2: int) -> bool:
    p1s = all_simple_paths(g, s1, t1, (1 << s2) | (1 << t2))
    p2s = all_simple_paths(g, s2, t2, (1 << s1) | (1 << t1))
    return any(a & b == 0 for a in p1s for b in p2s)


def oracle_separations(g: Graph, max_order: int, z=()) -> set[frozenset]:
    """All unordered non-trivial separations of (g, Z), by brute force over
    every (A, B) subset pair."""
    n = g.n
    full = (1 << n) - 1
    zmask = 0
    for v in z:
        zmask |= 1 << v
    edges = g.edges()
    out = set()
    for amask in range(1 << n):
        if zmask & ~amask:
            continue
        for bmask in range(1 << n):
            if amask | bmask != full or not bmask & ~amask or not amask & ~bmask:
                continue
            if (amask & bmask).bit_count() > max_order:
                continue
            if any((amask >> u & 1) and not (bmask >> u & 1) and
                   (bmask >> v & 1) and not (amask >> v & 1) for u, v in edges):
                continue
            if any((amask >> v & 1) and not (bmask >> v & 1) and
                   (bmask >> u & 1) and not (amask >> u & 1) for u, v in edges):
                continue
            out.add(frozenset((amask, bmask)))
    return out


def labeled_orbit_classes(n: int):
    """Isomorphism classes of n-vertex graphs by permutation-orbit closure
    over all labeled graphs; returns one labeled edge-mask per class."""
    import numpy as np

    pairs = list(combinations(range(n), 2))
    index = {pair: i for i, pair in enumerate(pairs)}
    perm_maps = []
    for perm in permutations(range(n)):
        perm_maps.append([index[tuple(sorted((perm[u], perm[v])))] for u, v in pairs])
    perm_arr = np.array(perm_maps, dtype=np.int64)
    weights = 1 << np.arange(len(pairs), dtype=np.int64)
    seen = np.zeros(1 << len(pairs), dtype=bool)
    reps = []
    for mask in range(1 << len(pairs)):
        if seen[mask]:
            continue
        reps.append(mask)
        bits = np.array([(mask >> i) & 1 for i in range(len(pairs))], dtype=np.int64)
        orbit = (bits[perm_arr] * weights).sum(axis=1)
        seen[orbit] = True
    return pairs, reps


def graph_from_edge_mask(n: int, pairs, mask: int) -> Graph:
    return Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
