"""Exact coloring, Kempe-chain machinery, and the chain-to-cycle-model builder."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bit_indices, clique_number, closure, induced_subgraph, mask_of
from .minors import Model, find_rooted_model
from .patterns import cycle_pattern


@dataclass(frozen=True, slots=True)
class Coloring:
    """Proper coloring: colors[v] < k for every vertex, no monochromatic edge."""

    colors: tuple[int, ...]
    k: int

    def color_class(self, c: int) -> int:
        return mask_of(v for v, cv in enumerate(self.colors) if cv == c)


def is_proper(g: Graph, c: Coloring) -> bool:
    if len(c.colors) != g.n or any(x < 0 or x >= c.k for x in c.colors):
        return False
    return all(c.colors[u] != c.colors[v] for u, v in g.edges())


def find_coloring(g: Graph, k: int) -> Coloring | None:
    """A proper k-coloring if one exists, else None.

    Branch and bound in DSATUR order (most saturated vertex first); at most
    one fresh color is tried per vertex, which kills color-permutation
    symmetry.
    """
    if k < 0:
        raise ValueError("palette size must be nonnegative")
    n = g.n
    if n == 0:
        return Coloring((), k)
    if k == 0:
        return None
    adj = g.adj
    colors = [-1] * n
    nbr_colors: list[set[int]] = [set() for _ in range(n)]

    def rec(assigned: int, used: int) -> bool:
        if assigned == n:
            return True
        v = max((x for x in range(n) if colors[x] < 0),
                key=lambda x: (len(nbr_colors[x]), adj[x].bit_count(), -x))
        limit = min(k, used + 1)
        for c in range(limit):
            if c in nbr_colors[v]:
                continue
            colors[v] = c
            touched = []
            for w in bit_indices(adj[v]):
                if colors[w] < 0 and c not in nbr_colors[w]:
                    nbr_colors[w].add(c)
                    touched.append(w)
            if rec(assigned + 1, max(used, c + 1)):
                return True
            for w in touched:
                nbr_colors[w].discard(c)
            colors[v] = -1
        return False

    if rec(0, 0):
        return Coloring(tuple(colors), k)
    return None


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    lo = clique_number(g)
    for k in range(lo, g.n + 1):
        if find_coloring(g, k) is not None:
            return k
    raise AssertionError("unreachable: n colors always suffice")


def canonical_colors(c: Coloring) -> Coloring:
    """Renumber colors by first occurrence so reported colorings are stable."""
    seen: dict[int, int] = {}
    out = []
    for x in c.colors:
        if x not in seen:
            seen[x] = len(seen)
        out.append(seen[x])
    return Coloring(tuple(out), c.k)


@dataclass(frozen=True, slots=True)
class KempeChain:
    """Connected component of two color classes, anchored at one vertex."""

    pair: tuple[int, int]
    members: frozenset[int]
    anchor: int


def kempe_chain(g: Graph, c: Coloring, v: int, s2: int) -> KempeChain:
    s1 = c.colors[v]
    if s2 == s1:
        raise ValueError("second color must differ from the anchor's color")
    if not 0 <= s2 < c.k:
        raise ValueError(f"color {s2} outside palette of size {c.k}")
    inside = c.color_class(s1) | c.color_class(s2)
    comp = closure(g.adj, inside, 1 << v)
    return KempeChain((s1, s2), frozenset(bit_indices(comp)), v)


def kempe_swap(g: Graph, c: Coloring, chain: KempeChain) -> Coloring:
    """Exchange the chain's two colors inside the chain; elsewhere unchanged."""
    s1, s2 = chain.pair
    swap = {s1: s2, s2: s1}
    out = list(c.colors)
    for v in chain.members:
        out[v] = swap[out[v]]
    return Coloring(tuple(out), c.k)


def cycle_model_from_kempe(g: Graph, c: Coloring, roots) -> Model:
    """Rooted cycle model through roots with pairwise distinct colors, one
    Kempe chain linking each consecutive pair.

    The search runs inside the union of the linking chains, widening to the
    union of the root color classes and then the whole graph only if the
    narrower hosts unexpectedly fail; every produced model is validated by
    construction against the rooted cycle pattern.
    """
    vs = tuple(roots)
    k = len(vs)
    if k < 3:
        raise ValueError("need at least three roots for a cycle model")
    if not is_proper(g, c):
        raise ValueError("coloring is not proper")
    if len({c.colors[v] for v in vs}) != k:
        raise ValueError("root colors must be pairwise distinct")
    chain_union = 0
    for i in range(k):
        a, b = vs[i], vs[(i + 1) % k]
        chain = kempe_chain(g, c, a, c.colors[b])
        if b not in chain.members:
            raise ValueError(f"no Kempe chain of the coloring contains roots "
                             f"{a} and {b} (pair index {i})")
        chain_union |= mask_of(chain.members)
    class_union = 0
    for v in vs:
        class_union |= c.color_class(c.colors[v])
    pattern = cycle_pattern(k)
    for inside in (chain_union, class_union, g.full_mask()):
        verts = bit_indices(inside)
        sub = induced_subgraph(g, verts)
        back = dict(enumerate(verts))
        fwd = {v: i for i, v in back.items()}
        found = find_rooted_model(sub, pattern, [fwd[v] for v in vs])
        if found is not None:
            bags = tuple(frozenset(back[x] for x in bag) for bag in found.bags)
            binding = tuple((pv, back[hv]) for pv, hv in found.root_binding)
            return Model(g, pattern, bags, binding)
    raise AssertionError("chain conditions held but no rooted cycle model "
                         "was found; this contradicts the guarantee")
