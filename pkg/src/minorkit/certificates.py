"""JSON certificates: machine-checkable witnesses emitted by the searches.

Four kinds exist.  A ``model`` certificate carries bags indexed by pattern
vertex plus the root binding; ``coloring`` carries a palette size and one
color per vertex; ``exception`` names the pattern class a swept graph is
isomorphic to; ``none-found`` records an exact negative search answer.
Reading a certificate revalidates its payload against the host graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .coloring import Coloring, canonical_colors, is_proper
from .graph import Graph, isomorphic
from .graph6 import emit_graph6, parse_graph6
from .minors import Model, model_violation
from .patterns import Pattern, pattern_from_name

KINDS = ("model", "coloring", "exception", "none-found")


class CertificateError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Certificate:
    kind: str
    graph: Graph
    pattern: str | None = None
    bags: tuple[tuple[int, ...], ...] | None = None
    roots: tuple[tuple[int, int], ...] = ()
    k: int | None = None
    colors: tuple[int, ...] | None = None
    tag: str | None = None
    note: str | None = None

    def to_payload(self) -> dict:
        out: dict = {"kind": self.kind, "graph": emit_graph6(self.graph)}
        if self.pattern is not None:
            out["pattern"] = self.pattern
        if self.bags is not None:
            out["bags"] = [sorted(b) for b in self.bags]
        if self.roots:
            out["roots"] = {str(pv): hv for pv, hv in self.roots}
        if self.k is not None:
            out["k"] = self.k
        if self.colors is not None:
            out["colors"] = list(self.colors)
        if self.tag is not None:
            out["isomorphic_to"] = self.tag
        if self.note is not None:
            out["note"] = self.note
        return out


def model_certificate(m: Model) -> Certificate:
    return Certificate("model", m.host, pattern=m.pattern.name,
                       bags=tuple(tuple(sorted(b)) for b in m.bags),
                       roots=m.root_binding)


def coloring_certificate(g: Graph, c: Coloring) -> Certificate:
    canon = canonical_colors(c)
    return Certificate("coloring", g, k=canon.k, colors=canon.colors)


def exception_certificate(g: Graph, tag: str) -> Certificate:
    return Certificate("exception", g, tag=tag)


def none_found_certificate(g: Graph, pattern: str | None = None,
                           k: int | None = None, note: str | None = None,
                           roots: tuple[tuple[int, int], ...] = ()) -> Certificate:
    return Certificate("none-found", g, pattern=pattern, k=k, note=note, roots=roots)


def write_certificate(cert: Certificate) -> str:
    return json.dumps(cert.to_payload(), sort_keys=True)


def _require(payload: dict, key: str):
    if key not in payload:
        raise CertificateError(f"certificate is missing field {key!r}")
    return payload[key]


def certificate_model(cert: Certificate) -> Model:
    pattern = pattern_from_name(cert.pattern)
    return Model(cert.graph, pattern,
                 tuple(frozenset(b) for b in cert.bags or ()),
                 cert.roots)


def read_certificate(text: str) -> Certificate:
    """Parse and revalidate one JSON certificate."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateError(f"not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise CertificateError("certificate must be a JSON object")
    kind = _require(payload, "kind")
    if kind not in KINDS:
        raise CertificateError(f"unknown certificate kind {kind!r}")
    try:
        graph = parse_graph6(_require(payload, "graph"))
    except ValueError as exc:
        raise CertificateError(str(exc)) from exc

    if kind == "model":
        bags = tuple(tuple(int(v) for v in bag) for bag in _require(payload, "bags"))
        roots = tuple(sorted((int(pv), int(hv))
                             for pv, hv in payload.get("roots", {}).items()))
        cert = Certificate("model", graph, pattern=_require(payload, "pattern"),
                           bags=bags, roots=roots)
        try:
            model = certificate_model(cert)
        except ValueError as exc:
            raise CertificateError(str(exc)) from exc
        reason = model_violation(model)
        if reason is not None:
            raise CertificateError(f"model payload rejected: {reason}")
        return cert

    if kind == "coloring":
        k = int(_require(payload, "k"))
        colors = tuple(int(x) for x in _require(payload, "colors"))
        coloring = Coloring(colors, k)
        if not is_proper(graph, coloring):
            raise CertificateError("coloring payload rejected: not a proper "
                                   f"{k}-coloring of the host")
        return Certificate("coloring", graph, k=k, colors=colors)

    if kind == "exception":
        tag = _require(payload, "isomorphic_to")
        try:
            target = pattern_from_name(tag)
        except ValueError as exc:
            raise CertificateError(str(exc)) from exc
        if not isomorphic(graph, target.graph):
            raise CertificateError(f"exception payload rejected: host is not "
                                   f"isomorphic to {tag}")
        return Certificate("exception", graph, tag=tag)

    return Certificate("none-found", graph, pattern=payload.get("pattern"),
                       k=payload.get("k"), note=payload.get("note"),
                       roots=tuple(sorted((int(pv), int(hv)) for pv, hv in
                                          payload.get("roots", {}).items())))
