"""Named target graphs and their root designations.

Every family has a fixed, documented labeling so certificates that mention
pattern vertices stay stable across runs:

* ``kt_minus_cherry(t)`` (K_t minus two edges at a common end): the
  degree-(t-3) vertex is vertex 0, its two non-neighbors are 1 and 2.
* ``kt_minus_matching(t)``: the deleted matching is {0,1}, {2,3}.
* ``kt_minus_edge(t)``: the deleted edge is {0,1}.
* bipartite-style patterns put the independent root side first
  (vertices 0..k-1), the other side after it.
* ``cycle(k)``: vertices 0..k-1 in cycle order, roots ordered the same way.
* the spindle uses the outer 5-cycle 0..4 (in cycle order 0,2,4,1,3)
  followed by the two hub vertices 5 and 6.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from . import graph6
from .graph import (Graph, complete_graph, complete_multipartite, cycle_graph,
                    delete_edge)


@dataclass(frozen=True, slots=True)
class RootSpec:
    """Which pattern vertices are roots: none, an unordered set, or an
    ordered sequence (used exactly for cycle patterns)."""

    mode: str  # "none" | "set" | "sequence"
    indices: tuple[int, ...] = ()

    def __post_init__(self):
        if self.mode not in ("none", "set", "sequence"):
            raise ValueError(f"bad root mode {self.mode!r}")
        if self.mode == "none" and self.indices:
            raise ValueError("rootless spec cannot carry indices")
        if len(set(self.indices)) != len(self.indices):
            raise ValueError("root indices must be distinct")


@dataclass(frozen=True, slots=True)
class Pattern:
    name: str
    graph: Graph
    roots: RootSpec = RootSpec("none")

    def __post_init__(self):
        for i in self.roots.indices:
            if not 0 <= i < self.graph.n:
                raise ValueError(f"root index {i} outside pattern {self.name}")


def kt_minus_cherry(t: int) -> Graph:
    if t < 4:
        raise ValueError("needs t >= 4")
    g = complete_graph(t)
    return delete_edge(delete_edge(g, 0, 1), 0, 2)


def kt_minus_matching(t: int) -> Graph:
    if t < 4:
        raise ValueError("needs t >= 4")
    g = complete_graph(t)
    return delete_edge(delete_edge(g, 0, 1), 2, 3)


def kt_minus_edge(t: int) -> Graph:
    if t < 2:
        raise ValueError("needs t >= 2")
    return delete_edge(complete_graph(t), 0, 1)


def rooted_biclique(k: int, m: int, clique_side: bool) -> Graph:
    """k independent roots, each adjacent to all of an m-vertex side; the
    side is a clique when clique_side is set, independent otherwise."""
    edges = [(i, k + j) for i in range(k) for j in range(m)]
    if clique_side:
        edges.extend((k + a, k + b) for a, b in combinations(range(m), 2))
    return Graph.from_edges(k + m, edges)


def moser_spindle() -> Graph:
    # outer 5-cycle 0-2-4-1-3, hub 5 over {0,2,4}, hub 6 over {0,1,3}
    return Graph.from_edges(7, [(0, 3), (0, 2), (0, 6), (0, 5), (2, 4), (2, 5),
                                (4, 1), (4, 5), (1, 3), (1, 6), (3, 6)])


def universal_four_matching(n: int) -> Graph:
    """Four vertices adjacent to everything, plus a maximum matching on the
    other n-4.  Dense and 4-connected, yet every minor loses all its edges
    but a matching after deleting four vertices."""
    if n < 5:
        raise ValueError("needs n >= 5")
    edges = list(combinations(range(4), 2))
    edges.extend((a, b) for a in range(4) for b in range(4, n))
    edges.extend((b, b + 1) for b in range(4, n - 1, 2))
    return Graph.from_edges(n, edges)


def _families():
    def cherry(t):
        return Pattern(f"k{t}v", kt_minus_cherry(t))

    def matching(t):
        return Pattern(f"k{t}mm", kt_minus_matching(t))

    def minus_edge(t):
        return Pattern(f"k{t}m", kt_minus_edge(t))

    return cherry, matching, minus_edge


def cycle_pattern(k: int) -> Pattern:
    return Pattern(f"c{k}", cycle_graph(k), RootSpec("sequence", tuple(range(k))))


_cherry, _matching, _minus_edge = _families()

_ALL_ROOTS4 = RootSpec("set", (0, 1, 2, 3))


def pattern_roster() -> list[Pattern]:
    """Stable-ordered registry of every named pattern the harness uses."""
    return [
        Pattern("k4", complete_graph(4), _ALL_ROOTS4),
        Pattern("k4m", kt_minus_edge(4), _ALL_ROOTS4),
        cycle_pattern(3),
        cycle_pattern(4),
        cycle_pattern(5),
        cycle_pattern(6),
        cycle_pattern(7),
        Pattern("k42", rooted_biclique(4, 2, clique_side=False), _ALL_ROOTS4),
        Pattern("k42s", rooted_biclique(4, 2, clique_side=True), _ALL_ROOTS4),
        _cherry(6),
        Pattern("k7", complete_graph(7)),
        _minus_edge(7),
        _matching(7),
        _cherry(7),
        Pattern("spindle", moser_spindle()),
        Pattern("k44", rooted_biclique(4, 4, clique_side=False)),
        Pattern("k2222", complete_multipartite(2, 2, 2, 2)),
    ]


_ROSTER_BY_NAME = {p.name: p for p in pattern_roster()}


def pattern_from_name(text: str) -> Pattern:
    """Resolve a CLI pattern string: a roster name, a family name such as
    k6 / k8v / k8mm / k8m, c<k>, or g6:<graph6>."""
    if text in _ROSTER_BY_NAME:
        return _ROSTER_BY_NAME[text]
    if text.startswith("g6:"):
        return Pattern(text, graph6.parse_graph6(text[3:]))
    if text.startswith("c") and text[1:].isdigit():
        return cycle_pattern(int(text[1:]))
    m = re.fullmatch(r"k(\d+)(v|mm|m)?", text)
    if m:
        t, kind = int(m.group(1)), m.group(2)
        builder = {None: complete_graph, "v": kt_minus_cherry,
                   "mm": kt_minus_matching, "m": kt_minus_edge}[kind]
        return Pattern(text, builder(t))
    raise ValueError(f"unknown pattern {text!r}")
