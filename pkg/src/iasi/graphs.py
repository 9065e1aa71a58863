"""Finite simple undirected graphs, standard families, bipartiteness.

Vertices are the integers 0..vertex_count-1.  Edges are unordered pairs
with no loops or duplicates.  Two-coloring is breadth-first per component
with the lowest-id vertex of each component colored left, so bipartitions
and odd-cycle certificates are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import ParseError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[Edge, ...]

    def __init__(self, vertex_count: int, edges: Iterable[Edge] = ()):
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{vertex_count - 1}")
            normalized.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        neighbors: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in neighbors)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def vertices(self) -> range:
        return range(self.vertex_count)


@dataclass(frozen=True)
class Bipartition:
    """A proper 2-coloring: side_of[v] is 0 (left) or 1 (right)."""

    side_of: tuple[int, ...]

    @property
    def left(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.side_of) if s == 0)

    @property
    def right(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.side_of) if s == 1)

    def separates(self, g: Graph) -> bool:
        return all(self.side_of[u] != self.side_of[v] for u, v in g.edges)


def _two_color(g: Graph) -> tuple[tuple[int, ...] | None, tuple[int, ...] | None]:
    """BFS 2-coloring. Returns (sides, None) or (None, odd_cycle)."""
    side = [-1] * g.vertex_count
    parent = [-1] * g.vertex_count
    for root in range(g.vertex_count):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if side[v] == -1:
                    side[v] = 1 - side[u]
                    parent[v] = u
                    queue.append(v)
                elif side[v] == side[u]:
                    return None, _extract_odd_cycle(parent, u, v)
    return tuple(side), None


def _extract_odd_cycle(parent: list[int], u: int, v: int) -> tuple[int, ...]:
    up_u = [u]
    while parent[up_u[-1]] != -1:
        up_u.append(parent[up_u[-1]])
    ancestors = {w: i for i, w in enumerate(up_u)}
    up_v = [v]
    while up_v[-1] not in ancestors:
        up_v.append(parent[up_v[-1]])
    meet = up_v[-1]
    cycle = up_u[: ancestors[meet] + 1] + up_v[-2::-1]
    return _normalize_cycle(cycle)


def _normalize_cycle(cycle: list[int]) -> tuple[int, ...]:
    # Rotate the smallest vertex to the front, then pick the direction whose
    # second vertex is smaller, so certificates are unique per cycle.
    i = cycle.index(min(cycle))
    rotated = cycle[i:] + cycle[:i]
    if rotated[1] > rotated[-1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


def bipartition(g: Graph) -> Bipartition | None:
    """2-color ``g`` if possible; None iff the graph has an odd cycle."""
    sides, _ = _two_color(g)
    if sides is None:
        return None
    return Bipartition(side_of=sides)


def find_odd_cycle(g: Graph) -> tuple[int, ...] | None:
    """An odd cycle of ``g`` in traversal-deterministic form, or None."""
    _, cycle = _two_color(g)
    return cycle


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path requires n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle requires n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete requires n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("complete_bipartite requires m, n >= 1")
    return Graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def tree_from_parent_array(parents: Sequence[int | None]) -> Graph:
    """Build a forest from ``parents`` where parents[i] is i's parent or None.

    Raises ValueError when the array contains an out-of-range parent or a
    cycle (an entry chain that never reaches a root).
    """
    n = len(parents)
    edges = []
    for child, par in enumerate(parents):
        if par is None:
            continue
        if not (0 <= par < n):
            raise ValueError(f"parent {par} of vertex {child} is out of range")
        if par == child:
            raise ValueError(f"vertex {child} is its own parent")
        edges.append((child, par))
    state = [0] * n  # 0 unseen, 1 on current chain, 2 done
    for start in range(n):
        v: int | None = start
        chain = []
        while v is not None and state[v] == 0:
            state[v] = 1
            chain.append(v)
            v = parents[v]
        if v is not None and state[v] == 1:
            raise ValueError(f"parent array contains a cycle through vertex {v}")
        for w in chain:
            state[w] = 2
    return Graph(n, edges)


def is_subgraph(h: Graph, g: Graph, embed: Mapping[int, int]) -> bool:
    """True iff ``embed`` maps ``h`` injectively into ``g`` edge-preservingly."""
    try:
        images = [embed[v] for v in h.vertices()]
    except KeyError:
        return False
    if any(not (0 <= w < g.vertex_count) for w in images):
        return False
    if len(set(images)) != len(images):
        return False
    return all(g.has_edge(embed[u], embed[v]) for u, v in h.edges)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: one ``u v`` pair per line.

    ``#`` starts a comment, blank lines are ignored, and an optional
    ``p <n>`` line fixes the vertex count (otherwise max id + 1).
    """
    declared: int | None = None
    pairs: list[tuple[int, int, int]] = []  # (u, v, line_no)
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if declared is not None:
                raise ParseError("duplicate 'p' header", line_no)
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise ParseError("malformed 'p' header, expected 'p <n>'", line_no)
            declared = int(tokens[1])
            continue
        if len(tokens) != 2 or not all(t.isdigit() for t in tokens):
            raise ParseError(f"expected 'u v', got {line!r}", line_no)
        pairs.append((int(tokens[0]), int(tokens[1]), line_no))

    n = declared if declared is not None else (max((max(u, v) for u, v, _ in pairs), default=-1) + 1)
    seen: set[Edge] = set()
    edges: list[Edge] = []
    for u, v, line_no in pairs:
        if u == v:
            raise ParseError(f"self-loop {u} {v}", line_no)
        if max(u, v) >= n:
            raise ParseError(f"vertex {max(u, v)} out of range for p {n}", line_no)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError(f"duplicate edge {u} {v}", line_no)
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def render_edge_list(g: Graph) -> str:
    """Render a graph in the edge-list format (with a ``p`` header)."""
    lines = [f"p {g.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
