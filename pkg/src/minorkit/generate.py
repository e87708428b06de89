"""Canonical small-graph enumeration: one representative per isomorphism class.

Generation is orderly: a graph on k+1 vertices is accepted only when
deleting its canonical low-degree vertex lands back on the parent that
produced it, so each class appears exactly once without cross-level
bookkeeping.  Filters prune as early as monotonicity allows; predicates and
exact connectivity run on the finished level.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .graph import Graph, canonical_labeling, delete_vertex, is_connected, is_k_connected

MAX_GENERATION_N = 11


@dataclass(frozen=True, slots=True)
class _Predicate:
    name: str
    final: Callable[[Graph], bool]
    min_degree: int = 0
    max_degree: int | None = None


def _resolve_predicate(name: str) -> _Predicate:
    if name == "connected":
        return _Predicate(name, is_connected)
    if ":" in name:
        head, arg = name.split(":", 1)
        if head == "mindeg" and arg.isdigit():
            d = int(arg)
            return _Predicate(name, lambda g: g.n == 0 or min(g.degree(v) for v in range(g.n)) >= d,
                              min_degree=d)
        if head == "maxdeg" and arg.isdigit():
            d = int(arg)
            return _Predicate(name, lambda g: g.n == 0 or max(g.degree(v) for v in range(g.n)) <= d,
                              max_degree=d)
    raise ValueError(f"unknown graph predicate {name!r}")


@dataclass(frozen=True, slots=True)
class GraphFilter:
    """Describes one enumeration sweep; predicate names compose conjunctively."""

    n: int
    min_edges: int = 0
    max_edges: int | None = None
    min_connectivity: int = 0
    predicates: tuple[str, ...] = ()

    def __post_init__(self):
        if not 0 <= self.n <= MAX_GENERATION_N:
            raise ValueError(f"generation supports 0 <= n <= {MAX_GENERATION_N}, got {self.n}")
        cap = self.n * (self.n - 1) // 2
        hi = cap if self.max_edges is None else self.max_edges
        if not 0 <= self.min_edges <= hi <= cap:
            raise ValueError(f"inconsistent edge bounds for n={self.n}: "
                             f"min {self.min_edges}, max {hi}, cap {cap}")
        for name in self.predicates:
            _resolve_predicate(name)


def _canonical_delete_vertex(g: Graph, perm: tuple[int, ...]) -> int:
    """Min-degree vertex at the latest canonical position: the vertex whose
    deletion defines the canonical parent of g."""
    degs = [g.degree(v) for v in range(g.n)]
    lo = min(degs)
    for pos in range(g.n - 1, -1, -1):
        if degs[perm[pos]] == lo:
            return perm[pos]
    raise AssertionError("unreachable")


def _generate_with_forms(filt: GraphFilter) -> list[tuple[Graph, bytes]]:
    n = filt.n
    preds = [_resolve_predicate(name) for name in filt.predicates]
    need_deg = max([filt.min_connectivity] + [p.min_degree for p in preds])
    deg_cap = min((p.max_degree for p in preds if p.max_degree is not None),
                  default=None)
    cap_total = n * (n - 1) // 2
    max_edges = cap_total if filt.max_edges is None else filt.max_edges

    def final_ok(g: Graph) -> bool:
        m = g.edge_count()
        if not filt.min_edges <= m <= max_edges:
            return False
        if filt.min_connectivity and not is_k_connected(g, filt.min_connectivity):
            return False
        return all(p.final(g) for p in preds)

    if n == 0:
        g0 = Graph(0, ())
        return [(g0, canonical_labeling(g0)[0])] if final_ok(g0) else []

    out: list[tuple[Graph, bytes]] = []

    def expand(g: Graph, form: bytes) -> None:
        k = g.n
        if k == n:
            if final_ok(g):
                out.append((g, form))
            return
        left_after = n - k - 1  # vertices still to add after this child
        edges_now = g.edge_count()
        degs = [g.degree(v) for v in range(k)]
        # vertices that would otherwise be unable to reach the degree floor
        force = 0
        allowed = (1 << k) - 1
        for v in range(k):
            if degs[v] + 1 + left_after < need_deg:
                return  # even joining every future vertex cannot save v
            if degs[v] + left_after < need_deg:
                force |= 1 << v
            if deg_cap is not None and degs[v] >= deg_cap:
                allowed &= ~(1 << v)
        if force & ~allowed:
            return
        free = allowed & ~force
        seen_forms: set[bytes] = set()
        sub = free
        while True:
            smask = sub | force
            size = smask.bit_count()
            child_edges = edges_now + size
            capacity = cap_total - (k + 1) * k // 2
            ok = (child_edges <= max_edges
                  and child_edges + capacity >= filt.min_edges
                  and size + left_after >= need_deg
                  and (deg_cap is None or size <= deg_cap)
                  and all(degs[v] + (smask >> v & 1) >= size for v in range(k)))
            if ok:
                rows = [g.adj[v] | (1 << k) if smask >> v & 1 else g.adj[v]
                        for v in range(k)]
                rows.append(smask)
                child = Graph(k + 1, tuple(rows))
                cform, perm = canonical_labeling(child)
                if cform not in seen_forms:
                    seen_forms.add(cform)
                    ustar = _canonical_delete_vertex(child, perm)
                    if ustar == k:
                        expand(child, cform)
                    else:
                        pform, _ = canonical_labeling(delete_vertex(child, ustar))
                        if pform == form:
                            expand(child, cform)
            if sub == 0:
                break
            sub = (sub - 1) & free
        return

    k1 = Graph(1, (0,))
    expand(k1, canonical_labeling(k1)[0])
    out.sort(key=lambda pair: pair[1])
    return out


def generate_graphs(filt: GraphFilter):
    """Yield one representative per isomorphism class matching the filter,
    in canonical-form order."""
    for g, _ in _generate_with_forms(filt):
        yield g
