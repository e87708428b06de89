"""Immutable bitset-backed simple graphs and exact structural primitives.

Vertices are labeled 0..n-1 and adjacency rows are machine integers, so
every set operation used by the searches (intersection, closure, split)
is a single int op.  All operations are pure: they return new graphs and
never mutate, which makes values safe to share across worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

MAX_VERTICES = 64


def bit_indices(mask: int) -> list[int]:
    """Positions of set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple graph on n <= 64 vertices; adj[v] is the neighbor bitset of v.

    Adjacency must be symmetric and irreflexive.  The public constructors
    enforce this; graph operations preserve it by construction.
    """

    n: int
    adj: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bit_indices(self.adj[u] >> (u + 1) << (u + 1))]

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(r.bit_count() for r in self.adj))

    def __repr__(self) -> str:  # pragma: no cover
        return f"Graph(n={self.n}, m={self.edge_count()})"


# ---------------------------------------------------------------------------
# basic constructions


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_multipartite(*part_sizes: int) -> Graph:
    n = sum(part_sizes)
    edges = []
    start = 0
    bounds = []
    for size in part_sizes:
        bounds.append((start, start + size))
        start += size
    for (a0, a1), (b0, b1) in combinations(bounds, 2):
        edges.extend((u, v) for u in range(a0, a1) for v in range(b0, b1))
    return Graph.from_edges(n, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    n = sum(g.n for g in graphs)
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# local operations


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"bad edge ({u},{v})")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def add_clique(g: Graph, vertices) -> Graph:
    rows = list(g.adj)
    vs = list(vertices)
    for u, v in combinations(vs, 2):
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def _drop_label(row: int, r: int) -> int:
    """Remove bit position r, shifting higher bits down."""
    return (row & ((1 << r) - 1)) | (row >> (r + 1) << r)


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    rows = [_drop_label(g.adj[u] & ~(1 << v), v) for u in range(g.n) if u != v]
    return Graph(g.n - 1, tuple(rows))


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Contract edge uv; the merged vertex sits in min(u,v)'s slot and the
    labels above max(u,v) compact down by one."""
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge; cannot contract")
    a, b = min(u, v), max(u, v)
    merged = (g.adj[a] | g.adj[b]) & ~(1 << a) & ~(1 << b)
    rows = []
    for w in range(g.n):
        if w == b:
            continue
        if w == a:
            rows.append(_drop_label(merged, b))
            continue
        row = g.adj[w]
        if row >> b & 1:
            row |= 1 << a
        rows.append(_drop_label(row & ~(1 << b), b))
    return Graph(g.n - 1, tuple(rows))


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Subgraph induced by `vertices`; labels compact to 0..|X|-1 in sorted order."""
    vs = sorted(set(vertices))
    if vs and not (0 <= vs[0] and vs[-1] < g.n):
        raise ValueError("vertex out of range")
    index = {v: i for i, v in enumerate(vs)}
    rows = [0] * len(vs)
    for v in vs:
        for w in bit_indices(g.adj[v]):
            if w in index:
                rows[index[v]] |= 1 << index[w]
    return Graph(len(vs), tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.full_mask()
    return Graph(g.n, tuple((full & ~r & ~(1 << v)) for v, r in enumerate(g.adj)))


def common_neighbors(g: Graph, u: int, v: int) -> frozenset[int]:
    if u == v:
        raise ValueError("common_neighbors needs distinct vertices")
    return frozenset(bit_indices(g.adj[u] & g.adj[v]))


# ---------------------------------------------------------------------------
# connectivity


def closure(adj: tuple[int, ...], inside: int, seed: int) -> int:
    """Vertices reachable from `seed` staying inside the `inside` mask."""
    comp = seed & inside
    frontier = comp
    while frontier:
        nxt = 0
        for v in bit_indices(frontier):
            nxt |= adj[v]
        nxt &= inside & ~comp
        comp |= nxt
        frontier = nxt
    return comp


def connected_components(g: Graph, inside: int | None = None) -> list[int]:
    """Component masks of the subgraph induced by `inside` (default all)."""
    left = g.full_mask() if inside is None else inside
    comps = []
    while left:
        seed = left & -left
        comp = closure(g.adj, left, seed)
        comps.append(comp)
        left &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return closure(g.adj, g.full_mask(), 1) == g.full_mask()


def _disjoint_path_count(g: Graph, s: int, t: int, cap: int) -> int:
    """Number of internally vertex-disjoint s-t paths, counted up to `cap`.

    Unit-capacity max flow on the split digraph: vertex w becomes w_in=2w,
    w_out=2w+1 with a capacity-one arc between them (uncapped for s and t).
    """
    n = g.n
    succ: list[set[int]] = [set() for _ in range(2 * n)]
    for w in range(n):
        succ[2 * w].add(2 * w + 1)
        for x in bit_indices(g.adj[w]):
            succ[2 * w + 1].add(2 * x)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        # BFS for an augmenting path in the residual digraph
        prev = {source: -1}
        queue = [source]
        while queue and sink not in prev:
            nxt = []
            for node in queue:
                for other in succ[node]:
                    if other not in prev:
                        prev[other] = node
                        nxt.append(other)
            queue = nxt
        if sink not in prev:
            break
        node = sink
        while node != source:
            p = prev[node]
            succ[p].discard(node)
            succ[node].add(p)
            node = p
        flow += 1
    return flow


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff n >= k+1 and no vertex cut of size < k exists.

    Decided by Menger disjoint-path counting between nonadjacent pairs;
    a complete graph has no such pair and no cut at all.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return g.n >= 1
    if g.n < k + 1:
        return False
    if min(g.degree(v) for v in range(g.n)) < k:
        return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v) and _disjoint_path_count(g, u, v, k) < k:
                return False
    return True


def cut_components(g: Graph, max_cut: int) -> list[int]:
    """Inclusion-minimal component masks of g - S over all cuts |S| <= max_cut.

    A pair (g, Z) admits a separation (A,B) with Z in A, B-A nonempty and
    order <= max_cut exactly when one of these components avoids Z, so this
    list is the whole obstruction set for internal connectivity queries.
    """
    verts = range(g.n)
    seen: set[int] = set()
    for size in range(0, min(max_cut, g.n) + 1):
        for cut in combinations(verts, size):
            inside = g.full_mask() & ~mask_of(cut)
            seen.update(connected_components(g, inside))
    minimal = []
    for c in sorted(seen, key=lambda m: (m.bit_count(), m)):
        if not any(m & c == m for m in minimal):
            minimal.append(c)
    return minimal


def is_internally_k_connected(g: Graph, z, k: int) -> bool:
    """No separation (A,B) with Z in A, order < k, and B-A nonempty."""
    if k <= 0:
        return True
    zmask = mask_of(z)
    for size in range(0, min(k - 1, g.n) + 1):
        for cut in combinations(range(g.n), size):
            inside = g.full_mask() & ~mask_of(cut)
            for comp in connected_components(g, inside):
                if not comp & zmask:
                    return False
    return True


# ---------------------------------------------------------------------------
# separations


@dataclass(frozen=True, slots=True)
class Separation:
    """Vertex cover pair (A,B) with no edge joining A-B to B-A."""

    A: frozenset[int]
    B: frozenset[int]

    @property
    def order(self) -> int:
        return len(self.A & self.B)

    def nontrivial(self, g: Graph) -> bool:
        return len(self.A) != g.n and len(self.B) != g.n


def enumerate_separations(g: Graph, max_order: int, z=()):
    """Yield each non-trivial separation (A,B) of (g,Z) with order at most
    max_order, once per unordered {A,B} pair.  Non-trivial means both A-B
    and B-A are nonempty; the trivial (A, V) separations carry no witness
    value and are suppressed.

    Every such separation has S = A&B and B-A a nonempty union of
    components of g-S avoiding Z, so the enumeration walks cuts S and
    subsets of the Z-avoiding components.
    """
    if max_order > g.n:
        raise ValueError("max_order exceeds vertex count")
    zmask = mask_of(z)
    full = g.full_mask()
    emitted: set[frozenset[int]] = set()
    for size in range(0, max_order + 1):
        for cut in combinations(range(g.n), size):
            smask = mask_of(cut)
            free = [c for c in connected_components(g, full & ~smask) if not c & zmask]
            for r in range(1, len(free) + 1):
                for chosen in combinations(free, r):
                    bside = smask
                    for c in chosen:
                        bside |= c
                    amask = full & ~(bside & ~smask)
                    if not amask & ~smask:
                        continue  # A-B empty: trivial (A, V) shape
                    key = frozenset((amask, bside))
                    if key in emitted:
                        continue
                    emitted.add(key)
                    yield Separation(frozenset(bit_indices(amask)), frozenset(bit_indices(bside)))


# ---------------------------------------------------------------------------
# cliques and independent sets


def clique_number(g: Graph) -> int:
    adj = g.adj
    best = 0

    def expand(cand: int, size: int) -> None:
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if not cand:
            best = max(best, size)
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(cand & adj[v], size + 1)

    expand(g.full_mask(), 0)
    return best


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))


# ---------------------------------------------------------------------------
# canonical forms


def _equitable_cells(adj: tuple[int, ...], n: int) -> list[int]:
    """Stable ordered partition refined by neighbor-cell degree counts."""
    cells = [mask_of(vs) for _, vs in sorted(
        _group_by(range(n), lambda v: adj[v].bit_count()).items())]
    while True:
        sigs = {v: tuple((adj[v] & c).bit_count() for c in cells) for v in range(n)}
        new_cells = []
        for cell in cells:
            groups = _group_by(bit_indices(cell), sigs.__getitem__)
            for _, vs in sorted(groups.items()):
                new_cells.append(mask_of(vs))
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _group_by(items, key):
    out: dict = {}
    for x in items:
        out.setdefault(key(x), []).append(x)
    return out


def _twin_cell(adj: tuple[int, ...], cell: int, vs: list[int]) -> bool:
    """True when all cell members are exchangeable by a transposition:
    identical rows outside the cell, and the cell induces K_t or its complement."""
    v0 = vs[0]
    outside_row = adj[v0] & ~cell
    inner0 = adj[v0] & cell
    if inner0 == 0:
        want_complete = False
    elif inner0 == cell ^ (1 << v0):
        want_complete = True
    else:
        return False
    for v in vs[1:]:
        if adj[v] & ~cell != outside_row:
            return False
        inner = adj[v] & cell
        if want_complete:
            if inner != cell ^ (1 << v):
                return False
        elif inner:
            return False
    return True


def canonical_labeling(g: Graph) -> tuple[bytes, tuple[int, ...]]:
    """Canonical byte form plus one vertex ordering achieving it.

    Backtracks over orderings compatible with iterated refinement, keeping
    the lexicographically least adjacency bit string.  The candidate set at
    each step is label-independent, so isomorphic graphs map to identical
    byte strings.
    """
    n, adj = g.n, g.adj
    if n == 0:
        return bytes([0]), ()
    best: list = [None, None]  # [chunks tuple, perm tuple]
    placed: list[int] = []
    chunks: list[int] = []

    def rec(cells: list[int]) -> None:
        if best[0] is not None:
            t = tuple(chunks)
            if t > best[0][: len(t)]:
                return
        if not cells:
            t = tuple(chunks)
            if best[0] is None or t < best[0]:
                best[0] = t
                best[1] = tuple(placed)
            return
        head = cells[0]
        vs = bit_indices(head)
        if len(vs) > 1 and _twin_cell(adj, head, vs):
            vs = vs[:1]
        for v in vs:
            chunk = 0
            row = adj[v]
            for u in placed:
                chunk = chunk << 1 | (row >> u & 1)
            placed.append(v)
            chunks.append(chunk)
            nxt = []
            rest = head ^ (1 << v)
            for cell in ([rest] if rest else []) + cells[1:]:
                non = cell & ~row
                if non:
                    nxt.append(non)
                hit = cell & row
                if hit:
                    nxt.append(hit)
            rec(nxt)
            placed.pop()
            chunks.pop()

    rec(_equitable_cells(adj, n))
    bitbuf = 0
    nbits = 0
    for i, chunk in enumerate(best[0]):
        bitbuf = bitbuf << i | chunk
        nbits += i
    pad = -nbits % 8
    bitbuf <<= pad
    payload = bitbuf.to_bytes((nbits + pad) // 8, "big") if nbits + pad else b""
    return bytes([n]) + payload, best[1]


def canonical_form(g: Graph) -> bytes:
    return canonical_labeling(g)[0]


def isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)


def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All adjacency-preserving permutations, found by backtracking."""
    n, adj = g.n, g.adj
    degs = [adj[v].bit_count() for v in range(n)]
    out: list[tuple[int, ...]] = []
    image = [-1] * n
    used = [False] * n

    def rec(v: int) -> None:
        if v == n:
            out.append(tuple(image))
            return
        for w in range(n):
            if used[w] or degs[w] != degs[v]:
                continue
            ok = True
            for u in range(v):
                if (adj[v] >> u & 1) != (adj[w] >> image[u] & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                rec(v + 1)
                used[w] = False
        image[v] = -1

    rec(0)
    return out
