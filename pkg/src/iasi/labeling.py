"""Vertex labelings, induced edge labels, and verification predicates.

A labeling assigns an IntSet to every vertex of a graph; each edge uv
inherits the sumset of its endpoint labels.  ``verify`` computes, in one
pass, every predicate the rest of the package relies on: injectivity of
the vertex and edge maps, per-edge set-indexing numbers, k-uniformity,
weakness, and weak k-uniformity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import ParseError
from .graphs import Edge, Graph, is_subgraph
from .intset import IntSet, parse_intset, sumset

# Collision reporting stops here so adversarial inputs cannot blow up reports.
MAX_WITNESSES = 32


@dataclass(frozen=True)
class Labeling:
    """Total map from the vertices of ``graph`` to IntSets."""

    graph: Graph
    labels: tuple[IntSet, ...]

    def __init__(self, graph: Graph, labels: Iterable[IntSet]):
        labels = tuple(labels)
        if len(labels) != graph.vertex_count:
            raise ValueError(
                f"labeling covers {len(labels)} vertices, graph has {graph.vertex_count}"
            )
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "labels", labels)

    def label_of(self, v: int) -> IntSet:
        return self.labels[v]


@dataclass(frozen=True)
class VerificationReport:
    """Everything ``verify`` can say about one labeling.

    Conventions for degenerate inputs, applied uniformly:

    * ``uniform_k`` on an edgeless graph is the largest vertex-label size
      (an edgeless graph is vacuously k-uniform for every k; the reported
      value makes constructor round-trips well-defined).
    * size constraints for weak k-uniformity are imposed on vertices with
      at least one incident edge; isolated vertices only need label
      injectivity.
    """

    vertex_injective: bool
    edge_injective: bool
    edge_sizes: Mapping[Edge, int]
    is_iasi: bool
    uniform_k: int | None
    is_weak: bool
    is_weakly_uniform: int | None
    witnesses: tuple[str, ...]


def induced_edge_label(labeling: Labeling, u: int, v: int) -> IntSet:
    """Sumset label of the edge uv; raises if uv is not an edge."""
    if not labeling.graph.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge of the labeled graph")
    return sumset(labeling.labels[u], labeling.labels[v])


def verify(g: Graph, labeling: Labeling) -> VerificationReport:
    """Check every set-indexer predicate for ``labeling`` on ``g``.

    Pure function: identical inputs yield identical reports, witnesses
    listed in ascending vertex/edge order (capped at MAX_WITNESSES).
    """
    if len(labeling.labels) != g.vertex_count:
        raise ValueError("labeling does not cover the graph's vertices")
    labels = labeling.labels
    witnesses: list[str] = []

    seen_labels: dict[IntSet, int] = {}
    vertex_injective = True
    for v in g.vertices():
        lab = labels[v]
        if lab in seen_labels:
            vertex_injective = False
            if len(witnesses) < MAX_WITNESSES:
                witnesses.append(f"vertex {seen_labels[lab]} and vertex {v} share label {lab}")
        else:
            seen_labels[lab] = v

    edge_sizes: dict[Edge, int] = {}
    seen_edge_labels: dict[IntSet, Edge] = {}
    edge_injective = True
    for u, v in g.edges:
        lab = sumset(labels[u], labels[v])
        edge_sizes[(u, v)] = len(lab)
        if lab in seen_edge_labels:
            edge_injective = False
            if len(witnesses) < MAX_WITNESSES:
                p, q = seen_edge_labels[lab]
                witnesses.append(f"edge ({p},{q}) and edge ({u},{v}) share label {lab}")
        else:
            seen_edge_labels[lab] = (u, v)

    is_iasi = vertex_injective and edge_injective

    uniform_k: int | None = None
    if is_iasi:
        if edge_sizes:
            sizes = set(edge_sizes.values())
            if len(sizes) == 1:
                uniform_k = sizes.pop()
        else:
            uniform_k = max((len(lab) for lab in labels), default=None)

    is_weak = is_iasi and all(
        edge_sizes[(u, v)] == max(len(labels[u]), len(labels[v])) for u, v in g.edges
    )

    is_weakly_uniform: int | None = None
    if uniform_k is not None:
        non_isolated_ok = all(
            len(labels[v]) in (1, uniform_k) for v in g.vertices() if g.degree(v) > 0
        )
        if non_isolated_ok:
            is_weakly_uniform = uniform_k

    return VerificationReport(
        vertex_injective=vertex_injective,
        edge_injective=edge_injective,
        edge_sizes=edge_sizes,
        is_iasi=is_iasi,
        uniform_k=uniform_k,
        is_weak=is_weak,
        is_weakly_uniform=is_weakly_uniform,
        witnesses=tuple(witnesses),
    )


def restrict(labeling: Labeling, h: Graph, embed: Mapping[int, int]) -> Labeling:
    """Pull the labeling back along a subgraph embedding of ``h``.

    Uniformity survives restriction: every edge of ``h`` keeps the
    set-indexing number it had in the parent graph.
    """
    if not is_subgraph(h, labeling.graph, embed):
        raise ValueError("embed is not a subgraph embedding into the labeled graph")
    return Labeling(h, tuple(labeling.labels[embed[v]] for v in h.vertices()))


_LABEL_LINE_RE = re.compile(r"^(\d+):\s(\S+)$")


def parse_labeling(text: str, g: Graph) -> Labeling:
    """Parse the labeling format: one ``v: {a,b,c}`` line per vertex, ids ascending."""
    labels: list[IntSet] = []
    expected = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _LABEL_LINE_RE.match(line)
        if not m:
            raise ParseError(f"expected 'v: {{a,b,c}}', got {line!r}", line_no)
        v = int(m.group(1))
        if v != expected:
            raise ParseError(f"expected vertex {expected}, got {v} (ids must ascend from 0)", line_no)
        try:
            labels.append(parse_intset(m.group(2)))
        except ParseError as exc:
            raise ParseError(str(exc), line_no) from None
        expected += 1
    if expected != g.vertex_count:
        raise ParseError(f"labeling lists {expected} vertices, graph has {g.vertex_count}")
    return Labeling(g, labels)


def render_labeling(labeling: Labeling) -> str:
    return "\n".join(f"{v}: {labeling.labels[v]}" for v in labeling.graph.vertices()) + "\n"
