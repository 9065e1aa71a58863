"""Shared test fixtures and independent brute-force oracles.

The oracles here are deliberately dumb (double loops, permutation scans)
so they stay independent of the code paths they check.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

import pytest

from iasi.graphs import Graph


def brute_sumset(a, b) -> tuple[int, ...]:
    """Sumset by plain double loop over element iterables."""
    return tuple(sorted({x + y for x in a for y in b}))


def brute_has_odd_cycle(g: Graph) -> bool:
    """Scan all odd-length vertex sequences for a cycle."""
    n = g.vertex_count
    for length in range(3, n + 1, 2):
        for verts in itertools.permutations(range(n), length):
            if verts[0] != min(verts):
                continue
            closed = all(g.has_edge(verts[i], verts[i + 1]) for i in range(length - 1))
            if closed and g.has_edge(verts[-1], verts[0]):
                return True
    return False


def brute_pairwise_sums_distinct(seq) -> bool:
    """Sidon check: all multiset pair sums (doubles included) distinct."""
    sums = [seq[p] + seq[q] for p in range(len(seq)) for q in range(p, len(seq))]
    return len(sums) == len(set(sums))


def assert_valid_odd_cycle(g: Graph, cyc) -> None:
    assert len(cyc) >= 3 and len(cyc) % 2 == 1
    assert len(set(cyc)) == len(cyc)
    for i, u in enumerate(cyc):
        assert g.has_edge(u, cyc[(i + 1) % len(cyc)])


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """Every labeled simple graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    out = []
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        out.append(Graph(n, edges))
    return tuple(out)


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """Every labeled connected simple graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    out = []
    for mask in range(1 << len(pairs)):
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        components = n
        edges = []
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                edges.append((u, v))
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    components -= 1
        if components == 1:
            out.append(Graph(n, edges))
    return tuple(out)


def random_tree(rng: random.Random, n: int) -> Graph:
    parents = [None] + [rng.randrange(i) for i in range(1, n)]
    return Graph(n, [(i, parents[i]) for i in range(1, n)])


def random_bipartite_graph(rng: random.Random, max_n: int = 20) -> Graph:
    n = rng.randint(1, max_n)
    sides = [rng.randint(0, 1) for _ in range(n)]
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if sides[u] != sides[v] and rng.random() < 0.4
    ]
    return Graph(n, edges)


def random_nonbipartite_graph(rng: random.Random, max_n: int = 12) -> Graph:
    """Random graph with a planted triangle, so an odd cycle is guaranteed."""
    n = rng.randint(3, max_n)
    tri = rng.sample(range(n), 3)
    edges = {(min(a, b), max(a, b)) for a, b in itertools.combinations(tri, 2)}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.3:
                edges.add((u, v))
    return Graph(n, sorted(edges))


@pytest.fixture(scope="session")
def connected_upto_4() -> list[Graph]:
    return [g for n in range(1, 5) for g in connected_graphs(n)]


@pytest.fixture(scope="session")
def connected_upto_5() -> list[Graph]:
    return [g for n in range(1, 6) for g in connected_graphs(n)]
