"""Constructions of weakly k-uniform and k-uniform labelings.

The label shapes are arithmetic progressions: a left vertex gets a
length-m AP and a right vertex a length-n AP with a common difference d,
so every edge label fuses into an AP of length m+n-1.  Assigning all AP
start points from one Sidon sequence makes every s_u + s_v distinct
across edges, hence all edge labels distinct.  Start points 1..n, by
contrast, collide as soon as two edges share an endpoint sum; see the
regression tests for the concrete K4 counterexample.

Isolated vertices get fresh k-element APs so that the advertised
uniformity also holds on graphs with no edges at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .errors import NotBipartiteError
from .graphs import Graph, bipartition, find_odd_cycle
from .intset import ApDescriptor, IntSet, sidon_sequence
from .labeling import Labeling

Mode = Literal["weakly", "bipartite", "odd"]

# AP start points begin here; any positive base works, 1 keeps labels small.
_START_MINIMUM = 1


@dataclass(frozen=True)
class UniformParams:
    """AP-shape parameters: side lengths m, n, common difference d, target k."""

    k: int
    m: int
    n: int
    d: int

    def __post_init__(self):
        if min(self.k, self.m, self.n, self.d) < 1:
            raise ValueError("k, m, n, d must all be positive")


def params_for_k(k: int, mode: Mode) -> UniformParams:
    """Canonical AP parameters achieving uniformity k in the given mode.

    weakly/bipartite invert k = m + n - 1 as (m, n) = (1, k); odd inverts
    k = 2m - 1 and therefore rejects even k.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if mode == "odd":
        if k % 2 == 0:
            raise ValueError(f"k={k}: only odd k admit the all-vertices-alike construction")
        m = (k + 1) // 2
        return UniformParams(k=k, m=m, n=m, d=1)
    if mode in ("weakly", "bipartite"):
        return UniformParams(k=k, m=1, n=k, d=1)
    raise ValueError(f"unknown mode {mode!r}")


def resolve_params(
    mode: Mode,
    k: int | None = None,
    m: int | None = None,
    n: int | None = None,
    d: int | None = None,
) -> UniformParams:
    """Combine a target k with optional m/n/d overrides into UniformParams.

    Overrides must stay consistent with k (k = m + n - 1 for bipartite,
    k = 2m - 1 for odd); the weakly construction takes no overrides.
    """
    if mode == "weakly":
        if any(x is not None for x in (m, n, d)):
            raise ValueError("weakly mode takes only k; m/n/d do not apply")
        if k is None:
            raise ValueError("k is required")
        return params_for_k(k, "weakly")
    if mode == "bipartite":
        d = 1 if d is None else d
        if m is None and n is None:
            if k is None:
                raise ValueError("k is required when m and n are not given")
            base = params_for_k(k, "bipartite")
            return UniformParams(k=base.k, m=base.m, n=base.n, d=d)
        m = 1 if m is None else m
        n = 1 if n is None else n
        if k is not None and k != m + n - 1:
            raise ValueError(f"inconsistent parameters: k={k} but m+n-1={m + n - 1}")
        return UniformParams(k=m + n - 1, m=m, n=n, d=d)
    if mode == "odd":
        if n is not None:
            raise ValueError("odd mode takes m and d only; n does not apply")
        d = 1 if d is None else d
        if m is None:
            if k is None:
                raise ValueError("k is required when m is not given")
            base = params_for_k(k, "odd")
            return UniformParams(k=base.k, m=base.m, n=base.n, d=d)
        if k is not None and k != 2 * m - 1:
            raise ValueError(f"inconsistent parameters: k={k} but 2m-1={2 * m - 1}")
        return UniformParams(k=2 * m - 1, m=m, n=m, d=d)
    raise ValueError(f"unknown mode {mode!r}")


def _ap(start: int, d: int, length: int) -> IntSet:
    return ApDescriptor(start=start, difference=d, length=length).as_intset()


def construct_weakly_uniform(g: Graph, k: int) -> Labeling:
    """Weakly k-uniform labeling: singletons on one side, k-element sets on the other.

    For k > 1 the graph must be bipartite; the raised error carries the
    odd cycle otherwise.  Singletons go to the side containing the
    lowest-id vertex of each component.  All values are drawn from one
    Sidon sequence, which is what makes the induced edge labels distinct.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    starts = sidon_sequence(g.vertex_count, _START_MINIMUM)
    if k == 1:
        return Labeling(g, tuple(IntSet([s]) for s in starts))
    sides = bipartition(g)
    if sides is None:
        cycle = find_odd_cycle(g)
        assert cycle is not None
        raise NotBipartiteError(f"no weakly {k}-uniform labeling exists", cycle)
    labels = []
    for v in g.vertices():
        if g.degree(v) == 0 or sides.side_of[v] == 1:
            labels.append(_ap(starts[v], 1, k))
        else:
            labels.append(IntSet([starts[v]]))
    return Labeling(g, tuple(labels))


def construct_uniform_bipartite(g: Graph, m: int, n: int, d: int = 1) -> Labeling:
    """(m+n-1)-uniform labeling of a bipartite graph via same-difference APs."""
    if min(m, n, d) < 1:
        raise ValueError("m, n, d must all be positive")
    sides = bipartition(g)
    if sides is None:
        cycle = find_odd_cycle(g)
        assert cycle is not None
        raise NotBipartiteError(f"no AP-sided {m + n - 1}-uniform labeling exists", cycle)
    k = m + n - 1
    starts = sidon_sequence(g.vertex_count, _START_MINIMUM)
    labels = []
    for v in g.vertices():
        if g.degree(v) == 0:
            labels.append(_ap(starts[v], d, k))
        elif sides.side_of[v] == 0:
            labels.append(_ap(starts[v], d, m))
        else:
            labels.append(_ap(starts[v], d, n))
    return Labeling(g, tuple(labels))


def construct_uniform_odd(g: Graph, m: int, d: int = 1) -> Labeling:
    """(2m-1)-uniform labeling of an arbitrary graph: every vertex a length-m AP."""
    if m < 1 or d < 1:
        raise ValueError("m and d must be positive")
    k = 2 * m - 1
    starts = sidon_sequence(g.vertex_count, _START_MINIMUM)
    labels = []
    for v in g.vertices():
        length = k if g.degree(v) == 0 else m
        labels.append(_ap(starts[v], d, length))
    return Labeling(g, tuple(labels))
