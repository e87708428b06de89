"""Exact minor-model search with certificates, plus subgraph embedding and
the two-disjoint-paths decision.

A model assigns to each pattern vertex a nonempty connected "bag" of host
vertices; bags are pairwise disjoint, every pattern edge is realized by a
host edge between the corresponding bags, and bound roots lie in their
bags.  Searches are complete: absence answers are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .graph import Graph, automorphisms, bit_indices, closure, induced_subgraph
from .patterns import Pattern


@dataclass(frozen=True, slots=True)
class Model:
    """A bag map witnessing that the pattern is a (rooted) minor of host."""

    host: Graph
    pattern: Pattern
    bags: tuple[frozenset[int], ...]
    root_binding: tuple[tuple[int, int], ...] = ()  # (pattern vertex, host vertex)

    @property
    def binding_map(self) -> dict[int, int]:
        return dict(self.root_binding)


def model_violation(m: Model) -> str | None:
    """First violated model requirement, or None when the model is valid."""
    host, pat = m.host, m.pattern.graph
    if len(m.bags) != pat.n:
        return f"model carries {len(m.bags)} bags for a {pat.n}-vertex pattern"
    seen = 0
    masks = []
    for i, bag in enumerate(m.bags):
        mask = 0
        for v in bag:
            if not 0 <= v < host.n:
                return f"bag {i} contains vertex {v} outside the host"
            mask |= 1 << v
        if mask & seen:
            return "bags are not pairwise disjoint"
        seen |= mask
        masks.append(mask)
    for i, mask in enumerate(masks):
        if not mask:
            return f"bag {i} is empty"
        if closure(host.adj, mask, mask & -mask) != mask:
            return f"bag {i} does not induce a connected subgraph"
    for i in range(pat.n):
        for j in bit_indices(pat.adj[i] >> (i + 1) << (i + 1)):
            joined = 0
            for v in bit_indices(masks[i]):
                joined |= host.adj[v]
            if not joined & masks[j]:
                return f"pattern edge ({i},{j}) has no host edge between its bags"
    for pv, hv in m.root_binding:
        if not 0 <= pv < pat.n:
            return f"root binding names pattern vertex {pv} out of range"
        if not masks[pv] >> hv & 1:
            return f"root {hv} does not lie in bag {pv}"
    return None


def validate_model(m: Model) -> bool:
    return model_violation(m) is None


@lru_cache(maxsize=128)
def _auts_of(g: Graph) -> tuple[tuple[int, ...], ...]:
    return tuple(automorphisms(g))


def _search_model(host: Graph, pat: Graph, binding: dict[int, int]) -> list[int] | None:
    """Complete search for bag bitsets realizing `pat` in `host`.

    Branches on host vertices: each undecided vertex is discarded or joins a
    bag it can still reach.  Pruning is sound only: not enough vertices left
    for the unfilled bags, a bag whose pieces can no longer be reconnected
    through undecided vertices, a pattern edge whose two sides can no longer
    be joined, and growth of a bag that is already connected with all its
    pattern edges realized (such a bag never needs another vertex).  Empty
    interchangeable bags (equivalent under pattern automorphisms fixing all
    started bags) are entered only through their lowest index.
    """
    p = pat.n
    if p == 0:
        return []
    hadj = host.adj
    full = host.full_mask()
    pat_edges = [(i, j) for i in range(p) for j in bit_indices(pat.adj[i] >> (i + 1) << (i + 1))]

    if host.n <= 16:
        table = [0] * (1 << host.n)
        for m in range(1, 1 << host.n):
            low = m & -m
            table[m] = table[m ^ low] | hadj[low.bit_length() - 1]
        nbrs = table.__getitem__
    else:
        def nbrs(mask: int) -> int:
            acc = 0
            while mask:
                low = mask & -mask
                acc |= hadj[low.bit_length() - 1]
                mask ^= low
            return acc

    def span(inside: int, seed: int) -> int:
        comp = seed & inside
        while True:
            nxt = nbrs(comp) & inside & ~comp
            if not nxt:
                return comp
            comp |= nxt

    bags = [0] * p
    bag_nbrs = [0] * p  # union of host adjacency over each bag
    connected = [False] * p
    decided = 0
    for pv, hv in binding.items():
        bags[pv] = 1 << hv
        bag_nbrs[pv] = hadj[hv]
        connected[pv] = True
        decided |= 1 << hv

    auts = _auts_of(pat)
    orbit_reps: dict[int, int] = {}

    def empty_rep_mask(nonempty: int) -> int:
        """Bitmask over pattern indices: lowest index of each class of
        interchangeable empty bags."""
        cached = orbit_reps.get(nonempty)
        if cached is not None:
            return cached
        fixed = [a for a in auts if all(a[i] == i for i in range(p) if nonempty >> i & 1)]
        parent = list(range(p))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in fixed:
            for i in range(p):
                if not nonempty >> i & 1:
                    ra, rb = find(i), find(a[i])
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
        mask = 0
        for i in range(p):
            if not nonempty >> i & 1 and find(i) == i:
                mask |= 1 << i
        orbit_reps[nonempty] = mask
        return mask

    def rec(unsat: tuple[tuple[int, int], ...]) -> list[int] | None:
        nonlocal decided
        undecided = full & ~decided
        nonempty = 0
        empties = 0
        for i in range(p):
            if bags[i]:
                nonempty |= 1 << i
            else:
                empties += 1
        if undecided.bit_count() < empties:
            return None
        still = tuple((i, j) for i, j in unsat if not bag_nbrs[i] & bags[j])
        open_edge = 0
        for i, j in still:
            open_edge |= (1 << i) | (1 << j)
        reach = [0] * p
        for i in range(p):
            b = bags[i]
            if not b:
                reach[i] = undecided
            elif connected[i] and not open_edge >> i & 1:
                reach[i] = 0  # closed: never grows
            else:
                comp = span(b | undecided, b & -b)
                if b & ~comp:
                    return None
                reach[i] = comp
        for i, j in still:
            if not nbrs(reach[i]) & reach[j]:
                return None
        if not undecided:
            return list(bags)

        reps = empty_rep_mask(nonempty)
        empty_opts = [i for i in range(p) if not bags[i] and reps >> i & 1]
        grow = [i for i in range(p) if bags[i] and reach[i]]
        best_v = -1
        best_opts: list[int] = []
        scan = undecided
        while scan:
            low = scan & -scan
            scan ^= low
            v = low.bit_length() - 1
            opts = [i for i in grow if reach[i] & low]
            opts += empty_opts
            opts.sort()
            if best_v < 0 or len(opts) < len(best_opts):
                best_v, best_opts = v, opts
                if not opts:
                    break
        bit = 1 << best_v
        saved = decided
        decided = saved | bit  # discard first: minimal bags come out first
        got = rec(still)
        if got is not None:
            decided = saved
            return got
        for i in best_opts:
            was_nbrs, was_conn = bag_nbrs[i], connected[i]
            old = bags[i]
            if not old:
                connected[i] = True
            elif not hadj[best_v] & old:
                connected[i] = False
            elif not was_conn:  # v may bridge the pieces; recompute exactly
                newbag = old | bit
                connected[i] = span(newbag, bit) == newbag
            bags[i] = old | bit
            bag_nbrs[i] |= hadj[best_v]
            decided = saved | bit
            got = rec(still)
            bags[i] = old
            bag_nbrs[i], connected[i] = was_nbrs, was_conn
            if got is not None:
                decided = saved
                return got
        decided = saved
        return None

    return rec(tuple(pat_edges))


def _binding_candidates(pattern: Pattern, host_roots: tuple[int, ...]) -> list[dict[int, int]]:
    spec = pattern.roots
    if spec.mode == "none":
        if host_roots:
            raise ValueError(f"pattern {pattern.name} takes no roots")
        return [{}]
    if len(host_roots) != len(spec.indices):
        raise ValueError(f"pattern {pattern.name} needs {len(spec.indices)} roots, "
                         f"got {len(host_roots)}")
    if len(set(host_roots)) != len(host_roots):
        raise ValueError("host roots must be distinct")
    xs = spec.indices
    if spec.mode == "sequence":
        return [dict(zip(xs, host_roots))]
    # unordered roots: any assignment of Z onto the root positions works, so
    # quotient the orderings by pattern automorphisms stabilizing the root set
    xset = set(xs)
    stab = [a for a in _auts_of(pattern.graph) if all(a[x] in xset for x in xs)]
    reps: dict[tuple[int, ...], dict[int, int]] = {}
    for assign in permutations(host_roots):
        b = dict(zip(xs, assign))
        orbit_min = min(tuple(b[a[x]] for x in xs) for a in stab)
        if orbit_min not in reps:
            reps[orbit_min] = dict(zip(xs, orbit_min))
    return [reps[key] for key in sorted(reps)]


def _as_model(host: Graph, pattern: Pattern, bags: list[int],
              binding: dict[int, int]) -> Model:
    return Model(host, pattern,
                 tuple(frozenset(bit_indices(b)) for b in bags),
                 tuple(sorted(binding.items())))


def find_model(g: Graph, pattern: Pattern) -> Model | None:
    """Exact unrooted minor test; returns a valid model or None."""
    if pattern.graph.n == 0:
        return Model(g, pattern, ())
    emb = has_subgraph(g, pattern.graph)
    if emb is not None:
        bags = [0] * pattern.graph.n
        for pv, hv in emb.items():
            bags[pv] = 1 << hv
        return _as_model(g, pattern, bags, {})
    bags = _search_model(g, pattern.graph, {})
    if bags is None:
        return None
    return _as_model(g, pattern, bags, {})


def find_rooted_model(g: Graph, pattern: Pattern, host_roots) -> Model | None:
    """Like find_model but the pattern roots must land on `host_roots`
    (in the given order for cycle patterns, any order otherwise)."""
    roots = tuple(host_roots)
    for hv in roots:
        if not 0 <= hv < g.n:
            raise ValueError(f"root {hv} outside host")
    for binding in _binding_candidates(pattern, roots):
        bags = _search_model(g, pattern.graph, binding)
        if bags is not None:
            return _as_model(g, pattern, bags, binding)
    return None


def has_subgraph(g: Graph, h: Graph) -> dict[int, int] | None:
    """Exact subgraph-isomorphism decision; returns an embedding h -> g."""
    if h.n > g.n or h.edge_count() > g.edge_count():
        return None
    gdeg = [g.degree(v) for v in range(g.n)]
    hdeg = [h.degree(u) for u in range(h.n)]
    deg_ok = [0] * h.n
    for u in range(h.n):
        for v in range(g.n):
            if gdeg[v] >= hdeg[u]:
                deg_ok[u] |= 1 << v
    # order pattern vertices so each has as many placed neighbors as possible
    order: list[int] = []
    remaining = set(range(h.n))
    while remaining:
        u = max(remaining,
                key=lambda x: (sum(1 for w in order if h.has_edge(x, w)), hdeg[x], -x))
        order.append(u)
        remaining.remove(u)
    placed_nbrs = [[w for w in order[:k] if h.has_edge(order[k], w)] for k in range(h.n)]

    image = [-1] * h.n
    used = 0

    def rec(k: int) -> bool:
        nonlocal used
        if k == h.n:
            return True
        u = order[k]
        cands = deg_ok[u] & ~used
        for w in placed_nbrs[k]:
            cands &= g.adj[image[w]]
        for v in bit_indices(cands):
            image[u] = v
            used |= 1 << v
            if rec(k + 1):
                return True
            used &= ~(1 << v)
        image[u] = -1
        return False

    if rec(0):
        return {u: image[u] for u in range(h.n)}
    return None


def two_disjoint_paths(g: Graph, s1: int, t1: int, s2: int, t2: int):
    """Vertex-disjoint paths s1-t1 and s2-t2 sharing no vertices at all,
    or None if no such pair exists.  Exact decision by backtracking over
    the first path with reachability pruning."""
    terminals = (s1, t1, s2, t2)
    if len(set(terminals)) != 4:
        raise ValueError("the four terminals must be distinct")
    for v in terminals:
        if not 0 <= v < g.n:
            raise ValueError(f"terminal {v} outside the graph")
    adj = g.adj
    full = g.full_mask()
    blocked = (1 << s2) | (1 << t2)
    path = [s1]
    used = 1 << s1

    def second_path(avoid: int):
        avail = full & ~avoid
        prev = {s2: -1}
        queue = [s2]
        while queue:
            nxt = []
            for v in queue:
                for w in bit_indices(adj[v] & avail):
                    if w not in prev:
                        prev[w] = v
                        nxt.append(w)
            queue = nxt
        if t2 not in prev:
            return None
        out = [t2]
        while out[-1] != s2:
            out.append(prev[out[-1]])
        out.reverse()
        return tuple(out)

    def rec(v: int):
        nonlocal used
        if v == t1:
            return second_path(used)
        for w in bit_indices(adj[v] & ~used & ~blocked):
            wbit = 1 << w
            # both goals must stay reachable once w is committed
            if not closure(adj, full & ~used & ~blocked, wbit) >> t1 & 1:
                continue
            if not closure(adj, full & ~used & ~wbit, 1 << s2) >> t2 & 1:
                continue
            path.append(w)
            used |= wbit
            got = rec(w)
            if got is not None:
                return got
            path.pop()
            used &= ~wbit
        return None

    p2 = rec(s1)
    if p2 is None:
        return None
    return tuple(path), p2
