"""Claim-verification sweeps: enumerate every graph satisfying a claim's
hypothesis, search for the guaranteed object, and report absences as
violation certificates (expected: none).

Each sweep is a single enumeration producer feeding a worker pool; workers
emit (canonical form, result) pairs and the reducer orders by canonical
form, so reports are byte-identical for any worker count.
"""

from __future__ import annotations

import json
import multiprocessing
import os
import time
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations

from . import __version__
from .coloring import find_coloring
from .generate import GraphFilter, generate_graphs
from .graph import (Graph, canonical_form, clique_number, cut_components,
                    independence_number, is_k_connected, isomorphic, mask_of)
from .graph6 import emit_graph6, parse_graph6
from .minors import find_model, find_rooted_model, has_subgraph, validate_model
from .patterns import Pattern, pattern_from_name

DEFAULT_JOBS_ENV = "MF_JOBS"


def default_jobs() -> int:
    raw = os.environ.get(DEFAULT_JOBS_ENV, "")
    return int(raw) if raw.isdigit() and int(raw) > 0 else 1


@dataclass
class Report:
    """Outcome of one sweep.  Wall time and worker count are diagnostics for
    the operator and stay out of the serialized report, which must be
    byte-identical across worker counts."""

    claim: str
    n: int | None
    params: dict
    examined: int
    violations: list[dict] = field(default_factory=list)
    exceptions: list[dict] = field(default_factory=list)
    candidates: list[dict] = field(default_factory=list)
    version: str = __version__
    wall_time: float = 0.0
    jobs: int = 1

    @property
    def verified(self) -> bool:
        return not self.violations

    def to_payload(self) -> dict:
        return {
            "claim": self.claim,
            "n": self.n,
            "params": self.params,
            "examined": self.examined,
            "violations": self.violations,
            "exceptions": self.exceptions,
            "candidates": self.candidates,
            "version": self.version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_payload(), sort_keys=True, indent=2) + "\n"

    def summary(self) -> str:
        return (f"{self.claim} n={self.n}: examined={self.examined} "
                f"violations={len(self.violations)} exceptions={len(self.exceptions)} "
                f"candidates={len(self.candidates)} "
                f"[{self.wall_time:.1f}s, {self.jobs} worker(s)]")


def _run_workers(worker, items: list, jobs: int) -> list:
    if jobs > 1 and len(items) > 1:
        with multiprocessing.get_context().Pool(jobs) as pool:
            chunk = max(1, len(items) // (jobs * 4))
            return list(pool.imap_unordered(worker, items, chunksize=chunk))
    return [worker(x) for x in items]


def _reduce(results: list[dict]) -> list[dict]:
    """Order worker results canonically and drop duplicate graphs."""
    seen: set[str] = set()
    out = []
    for r in sorted(results, key=lambda r: r["canon"]):
        if r["canon"] not in seen:
            seen.add(r["canon"])
            out.append(r)
    return out


def _input_stream(graphs, n: int) -> list[Graph]:
    out = [g for g in graphs if g.n == n]
    return out


# ---------------------------------------------------------------------------
# extremal sweep: 4-connected, m >= 4n-8  ==>  k7v minor (one known exception)


def _extremal_worker(g6: str, pattern_name: str, exception_tag: str) -> dict:
    g = parse_graph6(g6)
    res: dict = {"canon": canonical_form(g).hex(), "g6": g6}
    m = find_model(g, pattern_from_name(pattern_name))
    if m is not None:
        assert validate_model(m)
        res["status"] = "model"
    elif isomorphic(g, pattern_from_name(exception_tag).graph):
        res["status"] = "exception"
        res["cert"] = {"kind": "exception", "graph": g6, "isomorphic_to": exception_tag}
    else:
        res["status"] = "violation"
        res["cert"] = {"kind": "none-found", "graph": g6, "pattern": pattern_name,
                       "note": "hypothesis held but no minor model exists"}
    return res


def verify_extremal(n: int, jobs: int | None = None, graphs=None) -> Report:
    """Every 4-connected n-vertex graph with at least 4n-8 edges either has a
    k7v minor or is the known 8-vertex exception."""
    if not 5 <= n <= 11:
        raise ValueError("verify_extremal supports 5 <= n <= 11")
    jobs = jobs or default_jobs()
    t0 = time.perf_counter()
    min_edges = 4 * n - 8
    if graphs is None:
        stream = generate_graphs(GraphFilter(n, min_edges=min_edges, min_connectivity=4))
    else:
        stream = (g for g in _input_stream(graphs, n)
                  if g.edge_count() >= min_edges and is_k_connected(g, 4))
    items = [emit_graph6(g) for g in stream]
    worker = partial(_extremal_worker, pattern_name="k7v", exception_tag="k2222")
    results = _reduce(_run_workers(worker, items, jobs))
    report = Report(
        claim="extremal-k7v", n=n,
        params={"min_edges": min_edges, "min_connectivity": 4, "pattern": "k7v",
                "exception": "k2222"},
        examined=len(results),
        violations=[r["cert"] for r in results if r["status"] == "violation"],
        exceptions=[r["cert"] for r in results if r["status"] == "exception"],
        jobs=jobs)
    report.wall_time = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# coloring sweep: chromatic number >= 7  ==>  k7v minor


def _chromatic_at_least_7(g: Graph) -> bool:
    if g.edge_count() < 21:
        return False
    if clique_number(g) >= 7:
        return True
    return find_coloring(g, 6) is None


def _main_worker(g6: str, pattern_name: str) -> dict:
    g = parse_graph6(g6)
    res: dict = {"canon": canonical_form(g).hex(), "g6": g6}
    if not _chromatic_at_least_7(g):
        res["status"] = "six-colorable"
        return res
    m = find_model(g, pattern_from_name(pattern_name))
    if m is not None:
        assert validate_model(m)
        res["status"] = "model"
    else:
        res["status"] = "violation"
        res["cert"] = {"kind": "none-found", "graph": g6, "pattern": pattern_name,
                       "note": "chromatic number is at least 7 but no minor model exists"}
    return res


def _min_degree_six_levels(n: int) -> list[str]:
    """graph6 of every graph with 7 <= |V| <= n and minimum degree >= 6.

    A graph needing 7 colors always contains an induced subgraph that still
    needs 7 and whose every vertex has degree >= 6, so sweeping these levels
    decides the coloring claim for all graphs with at most n vertices.
    """
    items: list[str] = []
    for m in range(7, n + 1):
        for g in generate_graphs(GraphFilter(m, predicates=("mindeg:6",))):
            items.append(emit_graph6(g))
    return items


def verify_main(n: int, jobs: int | None = None, graphs=None) -> Report:
    """Every graph on at most n vertices with chromatic number >= 7 has a
    k7v minor.  Internally sweeps the minimum-degree-6 kernel of the claim;
    an explicit graph stream is checked directly instead."""
    if not 7 <= n <= 10:
        raise ValueError("verify_main supports 7 <= n <= 10")
    jobs = jobs or default_jobs()
    t0 = time.perf_counter()
    if graphs is None:
        items = _min_degree_six_levels(n)
        scope = "min-degree-6 kernel, levels 7..%d" % n
    else:
        items = [emit_graph6(g) for g in _input_stream(graphs, n)]
        scope = "explicit input stream"
    worker = partial(_main_worker, pattern_name="k7v")
    results = _reduce(_run_workers(worker, items, jobs))
    hits = sum(1 for r in results if r["status"] in ("model", "violation"))
    report = Report(
        claim="coloring-k7v", n=n,
        params={"pattern": "k7v", "scope": scope, "chromatic_hits": hits},
        examined=len(results),
        violations=[r["cert"] for r in results if r["status"] == "violation"],
        jobs=jobs)
    report.wall_time = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# rooted-model sweeps over all internally 4-connected (G, Z) pairs


def _rooted_worker(g6: str, pattern_name: str, cross_check: str | None = None) -> dict:
    g = parse_graph6(g6)
    pattern = pattern_from_name(pattern_name)
    weaker = pattern_from_name(cross_check) if cross_check else None
    res: dict = {"canon": canonical_form(g).hex(), "g6": g6,
                 "pairs": 0, "status": "ok", "certs": []}
    blockers = cut_components(g, 3)
    for z in combinations(range(g.n), 4):
        zmask = mask_of(z)
        if not all(c & zmask for c in blockers):
            continue
        res["pairs"] += 1
        m = find_rooted_model(g, pattern, z)
        if m is None:
            res["status"] = "violation"
            res["certs"].append({"kind": "none-found", "graph": g6,
                                 "pattern": pattern_name,
                                 "note": f"no model rooted at {sorted(z)}"})
            continue
        assert validate_model(m)
        if weaker is not None:
            from .minors import Model
            downgraded = Model(g, weaker, m.bags, m.root_binding)
            assert validate_model(downgraded), "stronger model failed as weaker model"
            if find_rooted_model(g, weaker, z) is None:
                res["status"] = "violation"
                res["certs"].append({"kind": "none-found", "graph": g6,
                                     "pattern": cross_check,
                                     "note": f"no model rooted at {sorted(z)}"})
    return res


def _rooted_sweep(claim: str, n: int, pattern_name: str, min_edges: int,
                  jobs: int, graphs, cross_check: str | None = None) -> Report:
    t0 = time.perf_counter()
    if graphs is None:
        stream = generate_graphs(GraphFilter(n, min_edges=min_edges))
    else:
        stream = (g for g in _input_stream(graphs, n) if g.edge_count() >= min_edges)
    items = [emit_graph6(g) for g in stream]
    worker = partial(_rooted_worker, pattern_name=pattern_name, cross_check=cross_check)
    results = _reduce(_run_workers(worker, items, jobs))
    report = Report(
        claim=claim, n=n,
        params={"pattern": pattern_name, "min_edges": min_edges,
                "root_size": 4, "internal_connectivity": 4,
                "pairs_examined": sum(r["pairs"] for r in results),
                **({"cross_check": cross_check} if cross_check else {})},
        examined=len(results),
        violations=[c for r in results for c in r["certs"]],
        jobs=jobs)
    report.wall_time = time.perf_counter() - t0
    return report


def verify_lemma_k4(n: int, jobs: int | None = None, graphs=None) -> Report:
    """Internally 4-connected (G,Z) with |E| >= 3n-6 has a Z-rooted K4 model."""
    if not 4 <= n <= 8:
        raise ValueError("verify_lemma_k4 supports 4 <= n <= 8")
    return _rooted_sweep("rooted-k4-edge-bound", n, "k4", 3 * n - 6,
                         jobs or default_jobs(), graphs)


def verify_lemma_k4minus(n: int, jobs: int | None = None, graphs=None) -> Report:
    """Internally 4-connected (G,Z) with n >= 6 has a Z-rooted K4-minus-edge model."""
    if not 6 <= n <= 8:
        raise ValueError("verify_lemma_k4minus supports 6 <= n <= 8")
    return _rooted_sweep("rooted-k4minus-presence", n, "k4m", 0,
                         jobs or default_jobs(), graphs)


def verify_lemma_k42star(n: int, jobs: int | None = None, graphs=None) -> Report:
    """Internally 4-connected (G,Z) with |E| >= 4n-9 has a Z-rooted model of
    the 4-root pattern whose far side is a 2-clique; cross-checks the variant
    with an independent far side."""
    if not 6 <= n <= 8:
        raise ValueError("verify_lemma_k42star supports 6 <= n <= 8")
    return _rooted_sweep("rooted-k42star-edge-bound", n, "k42s", 4 * n - 9,
                         jobs or default_jobs(), graphs, cross_check="k42")


# ---------------------------------------------------------------------------
# fixed 7-vertex case sweeps


def _spindle_worker(g6: str) -> dict:
    g = parse_graph6(g6)
    res: dict = {"canon": canonical_form(g).hex(), "g6": g6}
    if independence_number(g) <= 2 and clique_number(g) <= 3:
        if has_subgraph(g, pattern_from_name("spindle").graph) is not None:
            res["status"] = "contains"
        else:
            res["status"] = "violation"
            res["cert"] = {"kind": "none-found", "graph": g6, "pattern": "spindle",
                           "note": "independence <= 2 and clique <= 3 but no "
                                   "spindle subgraph"}
    else:
        res["status"] = "skipped"
    return res


def verify_spindle_claim(jobs: int | None = None, graphs=None) -> Report:
    """Every 7-vertex graph with independence number <= 2 and clique number
    <= 3 contains the Moser spindle as a subgraph."""
    jobs = jobs or default_jobs()
    t0 = time.perf_counter()
    stream = generate_graphs(GraphFilter(7)) if graphs is None else _input_stream(graphs, 7)
    items = [emit_graph6(g) for g in stream]
    results = _reduce(_run_workers(_spindle_worker, items, jobs))
    report = Report(
        claim="spindle-cover", n=7,
        params={"independence_at_most": 2, "clique_at_most": 3, "pattern": "spindle",
                "qualifying": sum(1 for r in results if r["status"] != "skipped")},
        examined=len(results),
        violations=[r["cert"] for r in results if r["status"] == "violation"],
        jobs=jobs)
    report.wall_time = time.perf_counter() - t0
    return report


_MAXDEG2_TARGETS = ("c7", "c6+k1", "c5+k2", "c4+c3", "c3+c3+k1")


def _maxdeg2_targets() -> list[tuple[str, Graph]]:
    from .graph import cycle_graph, disjoint_union, empty_graph, path_graph
    c, k1, k2 = cycle_graph, empty_graph(1), path_graph(2)
    return [("c7", c(7)),
            ("c6+k1", disjoint_union(c(6), k1)),
            ("c5+k2", disjoint_union(c(5), k2)),
            ("c4+c3", disjoint_union(c(4), c(3))),
            ("c3+c3+k1", disjoint_union(c(3), c(3), k1))]


def _maxdeg2_worker(g6: str) -> dict:
    g = parse_graph6(g6)
    res: dict = {"canon": canonical_form(g).hex(), "g6": g6}
    for name, target in _maxdeg2_targets():
        if has_subgraph(target, g) is not None:
            res["status"] = "embeds"
            res["target"] = name
            return res
    res["status"] = "violation"
    res["cert"] = {"kind": "none-found", "graph": g6, "pattern": "maxdeg2-targets",
                   "note": "max degree <= 2 but embeds in none of the five targets"}
    return res


def verify_maxdeg2_cases(jobs: int | None = None, graphs=None) -> Report:
    """Every 7-vertex graph with maximum degree <= 2 embeds into one of the
    five cycle/path unions covering that shape."""
    jobs = jobs or default_jobs()
    t0 = time.perf_counter()
    if graphs is None:
        stream = generate_graphs(GraphFilter(7, predicates=("maxdeg:2",)))
    else:
        stream = (g for g in _input_stream(graphs, 7)
                  if all(g.degree(v) <= 2 for v in range(g.n)))
    items = [emit_graph6(g) for g in stream]
    results = _reduce(_run_workers(_maxdeg2_worker, items, jobs))
    report = Report(
        claim="maxdeg2-cover", n=7,
        params={"targets": list(_MAXDEG2_TARGETS)},
        examined=len(results),
        violations=[r["cert"] for r in results if r["status"] == "violation"],
        jobs=jobs)
    report.wall_time = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# exploratory sweeps (no verification claim)


EXPLORE_NAMES = ("k7mm-extremal", "k7mm-color", "k7m-color")


def _explore_extremal_worker(g6: str, pattern_name: str, exception_tag: str) -> dict:
    g = parse_graph6(g6)
    res: dict = {"canon": canonical_form(g).hex(), "g6": g6}
    if find_model(g, pattern_from_name(pattern_name)) is not None:
        res["status"] = "model"
    elif isomorphic(g, pattern_from_name(exception_tag).graph):
        res["status"] = "exception"
        res["cert"] = {"kind": "exception", "graph": g6, "isomorphic_to": exception_tag}
    else:
        res["status"] = "candidate"
        res["cert"] = {"kind": "none-found", "graph": g6, "pattern": pattern_name,
                       "note": "candidate counterexample; exploratory only"}
    return res


def _explore_color_worker(g6: str, pattern_name: str) -> dict:
    g = parse_graph6(g6)
    res: dict = {"canon": canonical_form(g).hex(), "g6": g6}
    if not _chromatic_at_least_7(g):
        res["status"] = "six-colorable"
    elif find_model(g, pattern_from_name(pattern_name)) is not None:
        res["status"] = "model"
    else:
        res["status"] = "candidate"
        res["cert"] = {"kind": "none-found", "graph": g6, "pattern": pattern_name,
                       "note": "candidate counterexample; exploratory only"}
    return res


def explore_conjecture(name: str, n: int, jobs: int | None = None) -> Report:
    """Exploratory counterexample scan; reports candidates, asserts nothing."""
    if name not in EXPLORE_NAMES:
        raise ValueError(f"unknown exploration {name!r}; options: {EXPLORE_NAMES}")
    if not 5 <= n <= 10:
        raise ValueError("explore_conjecture supports 5 <= n <= 10")
    jobs = jobs or default_jobs()
    t0 = time.perf_counter()
    params: dict = {}
    if name == "k7mm-extremal":
        min_edges = 4 * n - 9
        cap = n * (n - 1) // 2
        items = [] if min_edges > cap else [
            emit_graph6(g) for g in
            generate_graphs(GraphFilter(n, min_edges=min_edges, min_connectivity=5))]
        worker = partial(_explore_extremal_worker, pattern_name="k7mm",
                         exception_tag="k6")
        params.update({"pattern": "k7mm", "min_edges": min_edges,
                       "min_connectivity": 5, "exception": "k6"})
        if n >= 6:
            from .patterns import universal_four_matching
            fam = universal_four_matching(n)
            params["family_graph"] = emit_graph6(fam)
            params["family_minor_free"] = find_model(fam, pattern_from_name("k7mm")) is None
    else:
        pattern_name = "k7mm" if name == "k7mm-color" else "k7m"
        items = _min_degree_six_levels(n) if n >= 7 else []
        worker = partial(_explore_color_worker, pattern_name=pattern_name)
        params.update({"pattern": pattern_name,
                       "scope": "min-degree-6 kernel, levels 7..%d" % n})
    results = _reduce(_run_workers(worker, items, jobs))
    report = Report(
        claim=f"explore-{name}", n=n, params=params,
        examined=len(results),
        exceptions=[r["cert"] for r in results if r["status"] == "exception"],
        candidates=[r["cert"] for r in results if r["status"] == "candidate"],
        jobs=jobs)
    report.wall_time = time.perf_counter() - t0
    return report
